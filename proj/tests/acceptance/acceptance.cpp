// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Closed-form answers are checked against the linear-algebra oracle, which
// shares no code with the staircase combinatorics.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bisplit/oracle/ideal.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/sampling.hpp"
#include "bisplit/splitting.hpp"

namespace {

using namespace bisplit;
using Gens = std::vector<Bidegree>;
using sampling::Rng;

const oracle::PrimeField kField;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Keeps the first failure message.
  void require(bool ok, const std::string& what) {
    if (ok || !pass) return;
    pass = false;
    detail = what;
  }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(const Gens& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + str(g[i]);
  return s + "}";
}

std::string str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
  return s + ")";
}

Bidegree rulings_of(const GridPointSet& x) {
  return {static_cast<int>(x.h_labels().size()), static_cast<int>(x.v_labels().size())};
}

int total(const oracle::DegreeCounts& c) {
  int n = 0;
  for (const auto& [d, m] : c) n += m;
  return n;
}

Arrangement on_rulings_of(const Arrangement& shape, const Arrangement& w) {
  return Arrangement(shape.line_h(), shape.line_v(), shape.alpha(), w.h_rulings(), w.v_rulings());
}

// Oracle tables of I, J, K and the subspace intersection J cap K.
bool oracle_additive(const Arrangement& w, const SplitPartition& s) {
  const oracle::Box box = oracle::default_box(w.ambient());
  const auto j = oracle::generated_ideal(kField, s.side_a(), w);
  const auto k = oracle::generated_ideal(kField, s.side_b(), w);
  return check_betti_splitting_numeric(oracle::oracle_betti_table(oracle::vanishing_ideal(kField, w), box),
                                       oracle::oracle_betti_table(j, box), oracle::oracle_betti_table(k, box),
                                       oracle::oracle_betti_table(oracle::IdealPieces::intersection(j, k), box));
}

std::size_t oracle_cap_count(const Arrangement& w, const SplitPartition& s) {
  const auto cap = oracle::IdealPieces::intersection(oracle::generated_ideal(kField, s.side_a(), w),
                                                     oracle::generated_ideal(kField, s.side_b(), w));
  return static_cast<std::size_t>(total(oracle::beta0_box(cap, oracle::default_box(w.ambient()))));
}

Outcome running_example() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const AcmConfig c = acm_from_partition(Partition{5, 4, 3, 3, 2, 2, 1});
  const auto [alpha, beta] = alpha_beta(c.to_grid());
  const bool acm = is_acm(c.to_grid());
  const GeneratorSet g = min_gens(c);
  const auto drops = c.alpha().drops();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  o.require(beta == Partition{7, 6, 4, 2, 1}, "beta = " + str(beta));
  o.require(acm, "not recognized as ACM");
  o.require(g.gens() == Gens{{0, 5}, {1, 4}, {2, 3}, {4, 2}, {6, 1}, {7, 0}}, "generators " + str(g.gens()));
  o.require(drops == std::vector<std::size_t>{1, 2, 4, 6}, "unexpected drops");
  o.require(ms < 1000.0, "took " + str(ms) + " ms");
  if (o.pass)
    o.detail = "beta=" + str(beta) + " gens=" + str(g.gens()) + " drops=[1,2,4,6] in " + str(ms) + " ms";
  return o;
}

std::vector<AcmConfig> random_configs(std::uint64_t seed, int n, std::size_t min_drops) {
  Rng rng(seed);
  std::vector<AcmConfig> out;
  while (static_cast<int>(out.size()) < n) {
    const AcmConfig c = sampling::random_acm(rng, 6, 6, 9);
    if (c.alpha().drops().size() >= min_drops) out.push_back(c);
  }
  return out;
}

// Criteria 2 and 3 share the sample.
const std::vector<AcmConfig>& closed_form_sample() {
  static const std::vector<AcmConfig> s = random_configs(2002, 200, 0);
  return s;
}

Outcome closed_form_tables() {
  Outcome o;
  for (const AcmConfig& c : closed_form_sample()) {
    const BettiTable closed = betti_table(attach_lines(c, 0, 0));
    const BettiTable oracle = oracle::oracle_betti_table(oracle::IdealPieces::vanishing(kField, c.to_grid()),
                                                         oracle::default_box(rulings_of(c.to_grid())));
    o.require(closed == oracle, "alpha " + str(c.alpha()) + ": closed form\n" + closed.render() + "oracle\n" +
                                    oracle.render());
  }
  if (o.pass) o.detail = "200 configurations, tables identical";
  return o;
}

Outcome generator_syzygy_count() {
  Outcome o;
  for (const AcmConfig& c : closed_form_sample()) {
    const auto [b0, b1] = total_betti(betti_table(attach_lines(c, 0, 0)));
    const BettiTable oracle = oracle::oracle_betti_table(oracle::IdealPieces::vanishing(kField, c.to_grid()),
                                                         oracle::default_box(rulings_of(c.to_grid())));
    o.require(b0 == b1 + 1 && oracle.total(0) == oracle.total(1) + 1,
              "alpha " + str(c.alpha()) + ": beta0 " + str(b0) + ", beta1 " + str(b1));
  }
  if (o.pass) o.detail = "200 configurations";
  return o;
}

Outcome cut_theorem() {
  Outcome o;
  Rng rng(4004);
  int arrangements = 0;
  int bipartitions = 0;
  while (arrangements < 60) {
    const Arrangement w = sampling::random_arrangement(rng, 2, 6, 6, 4);
    if (w.generators().size() < 2) continue;
    ++arrangements;
    for_each_bipartition(w.generators(), [&](const SplitPartition& s) {
      ++bipartitions;
      const Arrangement j = on_rulings_of(recognize(s.side_a()), w);
      const Arrangement k = on_rulings_of(recognize(s.side_b()), w);
      const std::size_t structural = min_gen_count(intersect(j, k));
      const std::size_t oracle = oracle_cap_count(w, s);
      o.require(structural == cut_number(s) && oracle == cut_number(s),
                "cut " + str(cut_number(s)) + ", intersect " + str(structural) + ", oracle " + str(oracle));
    });
  }
  if (o.pass) o.detail = str(arrangements) + " arrangements, " + str(bipartitions) + " bipartitions";
  return o;
}

Outcome running_example_betti_splittings() {
  Outcome o;
  const Arrangement w = attach_lines(acm_from_partition(Partition{5, 4, 3, 3, 2, 2, 1}), 0, 0);
  int count = 0;
  int structural = 0;
  int additive = 0;
  int mismatched = 0;
  for_each_bipartition(w.generators(), [&](const SplitPartition& s) {
    ++count;
    const bool one_cut = cut_number(s) == 1;
    const bool betti = is_betti_splitting_structural(s);
    const bool numeric = oracle_additive(w, s);
    structural += betti;
    additive += numeric;
    if (betti != one_cut || numeric != one_cut) ++mismatched;
  });
  o.require(count == 31, str(count) + " bipartitions");
  o.require(structural == 5, str(structural) + " structural Betti splittings");
  o.require(additive == 5, str(additive) + " numerically additive");
  o.require(mismatched == 0, str(mismatched) + " bipartitions where the verdicts disagree with cut 1");
  if (o.pass) o.detail = "31 bipartitions, 5 Betti splittings (all cut 1), 26 fail additivity";
  return o;
}

Outcome alternating_partition() {
  Outcome o;
  const Gens tau{{0, 5}, {1, 4}, {2, 3}, {4, 2}, {6, 1}};
  const Bidegree omega{7, 0};
  const Bidegree ambient{7, 5};
  const Arrangement w = attach_lines(acm_from_partition(Partition{5, 4, 3, 3, 2, 2, 1}), 0, 0);

  const GeneratorSet five(tau, ambient);
  const SplitPartition s = SplitPartition::from_generators(five, {tau[0], tau[2], tau[4]});
  const Arrangement j = recognize(s.side_a());
  const Arrangement k = recognize(s.side_b());
  const Arrangement jk = intersect(j, k);
  o.require(cut_number(s) == 4, "cut " + str(cut_number(s)));
  o.require(min_gen_count(jk) == 4, "J cap K has " + str(min_gen_count(jk)) + " generators");
  o.require(oracle_cap_count(w, s) == 4, "oracle count " + str(oracle_cap_count(w, s)));

  // The intersection is the ideal of the arrangement the staircase predicts.
  const auto cap = oracle::IdealPieces::intersection(oracle::generated_ideal(kField, s.side_a(), w),
                                                     oracle::generated_ideal(kField, s.side_b(), w));
  const oracle::Box box = oracle::default_box(ambient);
  o.require(jk.line_h() == 1 && jk.line_v() == 2, "lines of J cap K");
  o.require(jk.alpha() == Partition{3, 2, 2, 1, 1}, "alpha of J cap K " + str(jk.alpha()));
  o.require(oracle::ideals_equal_on_box(oracle::vanishing_ideal(kField, on_rulings_of(jk, w)), cap, box),
            "oracle disagrees with the computed J cap K");
  const Arrangement alt(1, 2, Partition{3, 2, 1, 1, 1}, w.h_rulings(), w.v_rulings());
  const bool alt_matches = oracle::ideals_equal_on_box(oracle::vanishing_ideal(kField, alt), cap, box);
  o.require(!alt_matches, "alpha (3,2,1,1,1) also matches the oracle");

  const GeneratorSet six(Gens{tau[0], tau[1], tau[2], tau[3], tau[4], omega}, ambient);
  const std::size_t with_a = cut_number(SplitPartition::from_generators(six, {tau[0], tau[2], tau[4], omega}));
  const std::size_t with_b = cut_number(SplitPartition::from_generators(six, {tau[0], tau[2], tau[4]}));
  o.require(with_a == 4, "omega in A gives cut " + str(with_a));
  o.require(with_b == 5, "omega in B gives cut " + str(with_b));
  const SplitPartition sb = SplitPartition::from_generators(six, {tau[0], tau[2], tau[4]});
  o.require(oracle_cap_count(w, sb) == 5, "oracle count with omega in B");
  if (o.pass)
    o.detail = "cut 4, J cap K = lines (1,2) + alpha " + str(jk.alpha()) +
               " (oracle-checked; (3,2,1,1,1) rejected), omega in A: 4, omega in B: 5";
  return o;
}

Outcome point_splittings_not_betti() {
  Outcome o;
  int splittings = 0;
  for (const AcmConfig& c : random_configs(7007, 50, 1)) {
    const Arrangement w = attach_lines(c, 0, 0);
    for (const AcmPointSplitting& p : acm_point_splittings(c)) {
      ++splittings;
      o.require(is_point_splitting(p.partition), "not detected as a point splitting");
      o.require(cut_number(p.partition) >= 2, "alpha " + str(c.alpha()) + ": point splitting with cut 1");
      o.require(!oracle_additive(w, p.partition), "alpha " + str(c.alpha()) + ": point splitting is additive");
    }
    const CiPointSplitting ci = complete_intersection_point_splitting(c.to_grid(), kField);
    o.require(ci.proper(), "alpha " + str(c.alpha()) + ": complete intersection splitting not proper");
  }
  if (o.pass) o.detail = "50 configurations, " + str(splittings) + " point splittings, all cut >= 2 and non-additive";
  return o;
}

Outcome pure_generators() {
  Outcome o;
  Rng rng(8008);
  std::uniform_int_distribution<int> side(1, 5);
  for (int t = 0; t < 100; ++t) {
    int rows = 0;
    int cols = 0;
    do {
      rows = side(rng);
      cols = side(rng);
    } while (rows * cols < 3);
    const GridPointSet x = sampling::random_grid_subset(rng, rows, cols, 3, std::min(15, rows * cols));
    const auto b0 = oracle::beta0_box(oracle::IdealPieces::vanishing(kField, x), oracle::default_box(rulings_of(x)));
    int pure_h = 0;
    int pure_v = 0;
    for (const auto& [d, m] : b0) {
      if (d.b == 0) pure_h += m;
      if (d.a == 0) pure_v += m;
    }
    o.require(pure_h == 1 && pure_v == 1, "trial " + str(t) + ": " + str(pure_h) + " (a,0) and " + str(pure_v) +
                                              " (0,b) generators");
  }
  const GridPointSet six({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 4}});
  Gens pure;
  for (const auto& [d, m] :
       oracle::beta0_box(oracle::IdealPieces::vanishing(kField, six), oracle::default_box(rulings_of(six))))
    if (d.a == 0 || d.b == 0) pure.push_back(d);
  o.require(pure == Gens{{0, 4}, {3, 0}}, "six-point set " + str(pure));
  if (o.pass) o.detail = "100 grid sets; six-point set gives " + str(pure);
  return o;
}

Outcome product_equality() {
  Outcome o;
  Rng rng(9009);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 100; ++t) {
    const Arrangement w = sampling::random_arrangement(rng, 2, 6, 6, 4);
    const oracle::Box box = oracle::default_box(w.ambient());
    o.require(oracle::ideals_equal_on_box(oracle::generated_ideal(kField, w), oracle::vanishing_ideal(kField, w), box),
              "trial " + str(t) + ": I_W differs from the line product times I of the points");
    const GeneratorSet g = w.generators();
    std::vector<bool> mask(g.size());
    do {
      for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
    } while (std::none_of(mask.begin(), mask.end(), [](bool b) { return b; }));
    const GeneratorSet sub = g.subset(mask);
    const Arrangement r = on_rulings_of(recognize(sub), w);
    o.require(oracle::ideals_equal_on_box(oracle::generated_ideal(kField, sub, w), oracle::vanishing_ideal(kField, r), box),
              "trial " + str(t) + ": <S> differs from the ideal of recognize(S) " + str(sub.gens()));
  }
  if (o.pass) o.detail = "100 arrangements with random generator subsets";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"running example shape and generators", running_example},
      {"closed-form Betti tables match the oracle", closed_form_tables},
      {"beta0 = beta1 + 1", generator_syzygy_count},
      {"cut number counts generators of J cap K", cut_theorem},
      {"running example Betti splittings are the 1-cut ones", running_example_betti_splittings},
      {"alternating partition of five generators", alternating_partition},
      {"point splittings are never Betti splittings", point_splittings_not_betti},
      {"one pure generator in each direction", pure_generators},
      {"product and recognition ideals agree", product_equality},
  };
  int failures = 0;
  const auto all_start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s  criterion %zu: %s  [%.0f ms]\n      %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, ms, o.detail.c_str());
  }
  const double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - all_start).count();
  std::printf("%d of %zu criteria passed in %.0f ms\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total_ms);
  return failures == 0 ? 0 : 1;
}
