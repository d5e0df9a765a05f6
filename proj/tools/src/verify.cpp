#include "bisplit/tool/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "bisplit/error.hpp"
#include "bisplit/io.hpp"
#include "bisplit/oracle/ideal.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/sampling.hpp"
#include "bisplit/splitting.hpp"

namespace bisplit::tool {

namespace {

using nlohmann::json;
using sampling::Rng;

// Thrown by a trial to report a counterexample.
struct TrialFailed {
  std::string message;
  json counterexample;
};

struct Context {
  const VerifyOptions& opts;
  const Hooks& hooks;
  int rows() const { return opts.bounds.a; }
  int cols() const { return opts.bounds.b; }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Bidegree rulings_of(const GridPointSet& x) {
  return {static_cast<int>(x.h_labels().size()), static_cast<int>(x.v_labels().size())};
}

json sides_json(const SplitPartition& s) {
  json a = json::array();
  for (std::size_t i = 0; i < s.sides().size(); ++i)
    if (s.sides()[i] == Side::A) a.push_back(i + 1);
  return a;
}

SplitPartition random_bipartition(Rng& rng, const GeneratorSet& g) {
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << (g.size() - 1)) - 2);
  const std::uint64_t mask = pick(rng);
  std::vector<Side> sides(g.size(), Side::B);
  sides[0] = Side::A;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (mask >> (i - 1) & 1) sides[i] = Side::A;
  return SplitPartition(g, std::move(sides));
}

// Arrangements with at most six generators (four drops) and up to two lines
// of each kind, inside the row/column bounds.
Arrangement sample_arrangement(Rng& rng, const Context& ctx, std::size_t min_gens) {
  for (;;) {
    Arrangement w = sampling::random_arrangement(rng, 2, ctx.rows(), ctx.cols(), 4);
    if (w.generators().size() >= min_gens) return w;
  }
}

Arrangement on_rulings_of(const Arrangement& shape, const Arrangement& w) {
  return Arrangement(shape.line_h(), shape.line_v(), shape.alpha(), w.h_rulings(), w.v_rulings());
}

void conjugate_involution(Rng& rng, const Context& ctx) {
  const Partition p = sampling::random_partition(rng, ctx.rows(), ctx.cols());
  const Partition c = p.conjugate();
  // Column counts of the Ferrers cells, read directly.
  std::vector<int> cols(static_cast<std::size_t>(p.first()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  if (c.conjugate() != p || c != Partition::normalize(cols) || c.sum() != p.sum())
    throw TrialFailed{"conjugate is not the transpose", {{"partition", io::to_json(p)}}};
}

void acm_classification(Rng& rng, const Context& ctx) {
  const GridPointSet x = sampling::random_grid_subset(rng, ctx.rows(), ctx.cols(), 1, ctx.rows() * ctx.cols());
  auto [alpha, beta] = alpha_beta(x);
  const auto b0 = oracle::beta0_box(oracle::IdealPieces::vanishing(ctx.opts.field, x), oracle::default_box(rulings_of(x)));
  oracle::DegreeCounts predicted;
  for (Bidegree g : cx_vx(alpha).generators) predicted[g] += 1;
  if (is_acm(x) != (b0 == predicted))
    throw TrialFailed{"ACM verdict disagrees with the oracle generator scan",
                      {{"points", io::to_json(x)}, {"acm", is_acm(x)}}};
}

void cut_theorem(Rng& rng, const Context& ctx) {
  const Arrangement w = sample_arrangement(rng, ctx, 2);
  const GeneratorSet g = w.generators();
  for_each_bipartition(g, [&](const SplitPartition& s) {
    const Arrangement j = on_rulings_of(recognize(s.side_a()), w);
    const Arrangement k = on_rulings_of(recognize(s.side_b()), w);
    const std::size_t count = min_gen_count(ctx.hooks.intersect(j, k));
    if (count != cut_number(s))
      throw TrialFailed{"J cap K has " + std::to_string(count) + " generators but the cut number is " +
                            std::to_string(cut_number(s)),
                        {{"arrangement", io::to_json(w)}, {"A", sides_json(s)}}};
  });
  // One bipartition per trial also goes through the oracle.
  const SplitPartition s = random_bipartition(rng, g);
  const auto cap = oracle::IdealPieces::intersection(oracle::generated_ideal(ctx.opts.field, s.side_a(), w),
                                                     oracle::generated_ideal(ctx.opts.field, s.side_b(), w));
  int total = 0;
  for (const auto& [d, m] : oracle::beta0_box(cap, oracle::default_box(w.ambient()))) total += m;
  if (static_cast<std::size_t>(total) != cut_number(s))
    throw TrialFailed{"oracle finds " + std::to_string(total) + " generators of J cap K, cut number is " +
                          std::to_string(cut_number(s)),
                      {{"arrangement", io::to_json(w)}, {"A", sides_json(s)}}};
}

void betti_additivity(Rng& rng, const Context& ctx) {
  const Arrangement w = sample_arrangement(rng, ctx, 2);
  const SplitPartition s = random_bipartition(rng, w.generators());
  const auto& f = ctx.opts.field;
  const oracle::Box box = oracle::default_box(w.ambient());
  const auto j = oracle::generated_ideal(f, s.side_a(), w);
  const auto k = oracle::generated_ideal(f, s.side_b(), w);
  const BettiTable ti = oracle::oracle_betti_table(oracle::vanishing_ideal(f, w), box);
  const BettiTable tj = oracle::oracle_betti_table(j, box);
  const BettiTable tk = oracle::oracle_betti_table(k, box);
  const BettiTable tjk = oracle::oracle_betti_table(oracle::IdealPieces::intersection(j, k), box);
  const bool additive = check_betti_splitting_numeric(ti, tj, tk, tjk);
  const bool structural = is_betti_splitting_structural(s);
  if (additive != structural || structural != (cut_number(s) == 1))
    throw TrialFailed{"numeric additivity " + str(additive) + " but cut number " + std::to_string(cut_number(s)),
                      {{"arrangement", io::to_json(w)}, {"A", sides_json(s)}}};
}

void no_split_bidegrees(Rng& rng, const Context& ctx) {
  const int cells = ctx.rows() * ctx.cols();
  const GridPointSet x = sampling::random_grid_subset(rng, ctx.rows(), ctx.cols(), std::min(3, cells), cells);
  const auto b0 = oracle::beta0_box(oracle::IdealPieces::vanishing(ctx.opts.field, x), oracle::default_box(rulings_of(x)));
  int pure_h = 0;
  int pure_v = 0;
  for (const auto& [d, m] : b0) {
    if (d.b == 0) pure_h += m;
    if (d.a == 0) pure_v += m;
  }
  if (pure_h != 1 || pure_v != 1)
    throw TrialFailed{"expected one generator of bidegree (a,0) and one of (0,b)", {{"points", io::to_json(x)}}};
}

void product_equality(Rng& rng, const Context& ctx) {
  const auto& f = ctx.opts.field;
  const Arrangement w = sample_arrangement(rng, ctx, 1);
  const oracle::Box box = oracle::default_box(w.ambient());
  if (!oracle::ideals_equal_on_box(oracle::generated_ideal(f, w), oracle::vanishing_ideal(f, w), box))
    throw TrialFailed{"closed-form generators do not generate the ideal of the arrangement",
                      {{"arrangement", io::to_json(w)}}};
  const GeneratorSet g = w.generators();
  std::vector<bool> mask(g.size());
  std::bernoulli_distribution coin(0.5);
  do {
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
  } while (std::none_of(mask.begin(), mask.end(), [](bool b) { return b; }));
  const GeneratorSet sub = g.subset(mask);
  const Arrangement r = on_rulings_of(recognize(sub), w);
  if (!oracle::ideals_equal_on_box(oracle::generated_ideal(f, sub, w), oracle::vanishing_ideal(f, r), box))
    throw TrialFailed{"<S> differs from the ideal of recognize(S)",
                      {{"arrangement", io::to_json(w)}, {"subset", io::to_json(sub)}}};
}

using Suite = void (*)(Rng&, const Context&);

const std::vector<Suite>& suites() {
  static const std::vector<Suite> s{conjugate_involution, acm_classification, cut_theorem,
                                    betti_additivity,     no_split_bidegrees, product_equality};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"conjugate_involution", "acm_classification", "cut_theorem",
                                              "betti_additivity",     "no_split_bidegrees", "product_equality"};
  return names;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t suite, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return std::uint64_t{out[0]} << 32 | out[1];
}

bool CampaignReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

CampaignReport run_campaign(const VerifyOptions& opts, const Hooks& hooks) {
  if (opts.trials < 1) throw InvalidInput("trials must be at least 1");
  if (opts.bounds.a < 1 || opts.bounds.b < 1) throw InvalidInput("size bounds must be positive");
  const Context ctx{opts, hooks};
  CampaignReport report;
  for (std::size_t i = 0; i < suites().size(); ++i) {
    SuiteResult r;
    r.name = suite_names()[i];
    const auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < opts.trials && !r.failure; ++t) {
      const std::uint64_t ts = trial_seed(opts.seed, i, t);
      Rng rng(ts);
      ++r.trials;
      try {
        suites()[i](rng, ctx);
      } catch (const TrialFailed& f) {
        r.failure = Failure{t, ts, f.message, f.counterexample};
      } catch (const Error& e) {
        r.failure = Failure{t, ts, e.what(), json::object()};
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.suites.push_back(std::move(r));
  }
  return report;
}

json to_json(const CampaignReport& r) {
  json suites = json::array();
  for (const SuiteResult& s : r.suites) {
    json e{{"name", s.name}, {"trials", s.trials}, {"passed", s.passed()}};
    if (s.failure)
      e["failure"] = {{"trial", s.failure->trial},
                      {"trial_seed", s.failure->trial_seed},
                      {"message", s.failure->message},
                      {"counterexample", s.failure->counterexample}};
    suites.push_back(std::move(e));
  }
  return {{"passed", r.passed()}, {"suites", suites}};
}

}  // namespace bisplit::tool
