#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bisplit/error.hpp"
#include "bisplit/io.hpp"
#include "bisplit/oracle/ideal.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/sampling.hpp"
#include "bisplit/splitting.hpp"
#include "bisplit/tool/cli.hpp"
#include "bisplit/tool/experiment.hpp"
#include "bisplit/tool/verify.hpp"

namespace bisplit::tool {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string format = "text";
  std::uint32_t prime = oracle::PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = 0;  // 0: command default
  std::vector<int> box;
  bool oracle_check = false;
  std::vector<std::size_t> part;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// A parsed --input document. Generator-set documents are recognized into
// arrangements on the way in.
using Input = io::Configuration;

Input load_input(const Options& o, std::istream& in) {
  if (o.input.empty()) throw InvalidInput("--input is required");
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (o.input.front() == '{') {
    text = o.input;
  } else {
    std::ifstream f(o.input);
    if (!f) throw InvalidInput("cannot open " + o.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("input is not valid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("gens")) return recognize(io::generators_from_json(j));
  return io::parse_configuration(j);
}

GridPointSet points_of(const Input& in) {
  if (auto* x = std::get_if<GridPointSet>(&in)) return *x;
  if (auto* c = std::get_if<AcmConfig>(&in)) return c->to_grid();
  return std::get<Arrangement>(in).points().to_grid();
}

std::optional<Arrangement> arrangement_of(const Input& in) {
  if (auto* w = std::get_if<Arrangement>(&in)) return *w;
  if (auto* c = std::get_if<AcmConfig>(&in)) return attach_lines(*c, 0, 0);
  if (auto c = as_acm(std::get<GridPointSet>(in))) return attach_lines(*c, 0, 0);
  return std::nullopt;
}

int max_label(const Input& in) {
  int m = 0;
  if (auto* w = std::get_if<Arrangement>(&in)) {
    for (int l : w->h_rulings()) m = std::max(m, l);
    for (int l : w->v_rulings()) m = std::max(m, l);
    return m;
  }
  return points_of(in).max_label();
}

oracle::PrimeField field_for(const Options& o, const Input* in) {
  const oracle::PrimeField f(o.prime);
  if (in && static_cast<std::uint32_t>(max_label(*in)) >= f.prime())
    throw InvalidInput("--prime must exceed every ruling label (largest label " + std::to_string(max_label(*in)) + ")");
  return f;
}

std::optional<oracle::Box> box_option(const Options& o) {
  if (o.box.empty()) return std::nullopt;
  return oracle::Box{{o.box[0], o.box[1]}};
}

std::string label_product(Bidegree d, const std::vector<int>& h, const std::vector<int>& v) {
  if (d.a == 0 && d.b == 0) return "1";
  std::string s;
  for (int i = 0; i < d.a; ++i) s += "H" + std::to_string(h[static_cast<std::size_t>(i)]);
  for (int j = 0; j < d.b; ++j) s += "V" + std::to_string(v[static_cast<std::size_t>(j)]);
  return s;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string positions(const SplitPartition& s, Side side) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.sides().size(); ++i) {
    if (s.sides()[i] != side) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

json position_list(const SplitPartition& s, Side side) {
  json out = json::array();
  for (std::size_t i = 0; i < s.sides().size(); ++i)
    if (s.sides()[i] == side) out.push_back(i + 1);
  return out;
}

void emit(const Io& io, const json& j) { io.out << j.dump(2) << '\n'; }

// analyze ---------------------------------------------------------------

int cmd_analyze(const Options& o, const Io& io) {
  const Input in = load_input(o, io.in);
  const GridPointSet x = points_of(in);
  auto [alpha, beta] = alpha_beta(x);
  const auto* w = std::get_if<Arrangement>(&in);
  const std::string picture = w ? render_ferrers(*w) : render_ferrers(x);

  if (o.format == "json") {
    json j{{"points", x.size()},
           {"alpha", io::to_json(alpha)},
           {"beta", io::to_json(beta)},
           {"alpha_star", io::to_json(alpha.conjugate())},
           {"acm", is_acm(x)},
           {"ferrers", lines_of(picture)}};
    if (w) {
      j["line_h"] = w->line_h();
      j["line_v"] = w->line_v();
      j["ambient"] = io::to_json(w->ambient());
    }
    emit(io, j);
    return kOk;
  }
  if (w)
    io.out << "lines: " << w->line_h() << " horizontal, " << w->line_v() << " vertical; ambient "
           << w->ambient() << '\n';
  io.out << "points: " << x.size() << '\n'
         << "alpha:  " << alpha << '\n'
         << "beta:   " << beta << '\n'
         << "alpha*: " << alpha.conjugate() << '\n'
         << "ACM:    " << (is_acm(x) ? "yes" : "no") << '\n';
  if (!picture.empty()) io.out << '\n' << picture;
  return kOk;
}

// gens ------------------------------------------------------------------

Arrangement require_arrangement(const Input& in, const char* what) {
  auto w = arrangement_of(in);
  if (!w)
    throw InvalidInput(std::string("the point set is not ACM, so ") + what +
                       " has no closed form; `bisplit betti` runs the oracle generator scan instead");
  return *w;
}

int cmd_gens(const Options& o, const Io& io) {
  const Arrangement w = require_arrangement(load_input(o, io.in), "its generating set");
  const GeneratorSet g = w.generators();
  if (o.format == "json") {
    json gens = json::array();
    for (Bidegree d : g.gens())
      gens.push_back({{"a", d.a}, {"b", d.b}, {"product", label_product(d, w.h_rulings(), w.v_rulings())}});
    emit(io, {{"ambient", io::to_json(w.ambient())},
              {"line_h", w.line_h()},
              {"line_v", w.line_v()},
              {"generators", gens}});
    return kOk;
  }
  io.out << g.size() << " minimal generator" << (g.size() == 1 ? "" : "s") << ", ambient " << w.ambient() << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Bidegree d = g.gens()[i];
    io.out << "tau_" << i + 1 << "  " << d << "  " << label_product(d, w.h_rulings(), w.v_rulings()) << '\n';
  }
  return kOk;
}

// betti -----------------------------------------------------------------

int cmd_betti(const Options& o, const Io& io) {
  const Input in = load_input(o, io.in);
  const oracle::PrimeField field = field_for(o, &in);
  const auto w = arrangement_of(in);

  if (!w) {
    // Non-ACM points: generators only, from the oracle.
    const GridPointSet x = std::get<GridPointSet>(in);
    const Bidegree rulings{static_cast<int>(x.h_labels().size()), static_cast<int>(x.v_labels().size())};
    const oracle::Box box = box_option(o).value_or(oracle::default_box(rulings));
    const auto b0 = oracle::beta0_box(oracle::IdealPieces::vanishing(field, x), box);
    BettiTable t;
    for (const auto& [d, m] : b0) t.add(0, d, m);
    if (o.format == "json") {
      emit(io, {{"acm", false}, {"beta0", io::to_json(t)}, {"beta0_total", t.total(0)}, {"prime", field.prime()}});
    } else {
      io.out << "not ACM: beta_0 from the oracle scan (p=" << field.prime() << "); higher Betti numbers are not computed\n";
      for (const auto& [d, m] : b0) io.out << "  " << d << (m == 1 ? "" : "^" + std::to_string(m)) << '\n';
      io.out << "total " << t.total(0) << '\n';
    }
    return kOk;
  }

  const BettiTable t = betti_table(*w);
  json check;
  if (o.oracle_check) {
    const oracle::Box box = box_option(o).value_or(oracle::default_box(w->ambient()));
    const BettiTable numeric = oracle::oracle_betti_table(oracle::vanishing_ideal(field, *w), box);
    if (!(numeric == t)) {
      io.err << "oracle cross-check failed (p=" << field.prime() << ", box " << box.corner << ")\nclosed form:\n"
             << t.render() << "oracle:\n" << numeric.render();
      return kCrossCheck;
    }
    check = {{"prime", field.prime()}, {"box", io::to_json(box.corner)}, {"agrees", true}};
  }
  const auto [b0, b1] = total_betti(t);
  if (o.format == "json") {
    json j{{"table", io::to_json(t)}, {"beta0_total", b0}, {"beta1_total", b1}};
    if (o.oracle_check) j["oracle_check"] = check;
    emit(io, j);
    return kOk;
  }
  io.out << t.render();
  if (o.oracle_check)
    io.out << "oracle check: agrees (p=" << field.prime() << ", box " << check["box"].dump() << ")\n";
  return kOk;
}

// splits ----------------------------------------------------------------

struct SplitRow {
  SplitPartition s;
  SplitAnalysis a;
  std::optional<bool> additive;  // oracle numeric check, when requested
};

// Oracle tables of I, J, K and J cap K; throws CrossCheckFailure when the
// numbers contradict the structural verdict.
bool oracle_additivity(const oracle::PrimeField& f, const Arrangement& w, const SplitRow& r, oracle::Box box) {
  const auto j = oracle::generated_ideal(f, r.s.side_a(), w);
  const auto k = oracle::generated_ideal(f, r.s.side_b(), w);
  const auto jk = oracle::IdealPieces::intersection(j, k);
  const BettiTable tjk = oracle::oracle_betti_table(jk, box);
  if (static_cast<std::size_t>(tjk.total(0)) != min_gen_count(r.a.jk))
    throw CrossCheckFailure("A=" + positions(r.s, Side::A) + ": oracle finds " + std::to_string(tjk.total(0)) +
                            " generators of J cap K, the staircase gives " + std::to_string(min_gen_count(r.a.jk)));
  const bool additive = check_betti_splitting_numeric(oracle::oracle_betti_table(oracle::vanishing_ideal(f, w), box),
                                                      oracle::oracle_betti_table(j, box),
                                                      oracle::oracle_betti_table(k, box), tjk);
  if (additive != r.a.betti_splitting)
    throw CrossCheckFailure("A=" + positions(r.s, Side::A) + ": numeric additivity is " + str(additive) +
                            " but the cut number is " + std::to_string(r.a.cut));
  return additive;
}

std::vector<SplitPartition> chosen_partitions(const Options& o, const GeneratorSet& g) {
  if (!o.part.empty()) return {SplitPartition::from_positions(g, o.part)};
  if (g.size() <= 16) return enumerate_bipartitions(g);
  // Too many to list: sample distinct bipartitions.
  sampling::Rng rng(o.seed);
  const int want = o.trials > 0 ? o.trials : 1000;
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << (g.size() - 1)) - 2);
  std::set<std::uint64_t> masks;
  while (static_cast<int>(masks.size()) < want) masks.insert(pick(rng));
  std::vector<SplitPartition> out;
  for (std::uint64_t mask : masks) {
    std::vector<Side> sides(g.size(), Side::B);
    sides[0] = Side::A;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (mask >> (i - 1) & 1) sides[i] = Side::A;
    out.emplace_back(g, std::move(sides));
  }
  return out;
}

int splits_non_acm(const Options& o, const Io& io, const GridPointSet& x, const oracle::PrimeField& field) {
  const CiPointSplitting ci = complete_intersection_point_splitting(x, field);
  if (o.format == "json") {
    json k = json::array();
    for (Bidegree d : ci.k) k.push_back(io::to_json(d));
    emit(io, {{"acm", false},
              {"ci_point_splitting", {{"J", io::to_json(ci.j)}, {"K_degrees", k}, {"proper", ci.proper()}}}});
    return kOk;
  }
  io.out << "not ACM: only the complete-intersection point splitting is constructed\n"
         << "J: all " << ci.j.rows() << "x" << ci.j.cols() << " grid points on the rulings of X\n"
         << "K: " << ci.k.size() << " generator" << (ci.k.size() == 1 ? "" : "s");
  for (Bidegree d : ci.k) io.out << ' ' << d;
  io.out << '\n' << (ci.proper() ? "proper point splitting\n" : "K is empty: no proper point splitting\n");
  return kOk;
}

int cmd_splits(const Options& o, const Io& io) {
  const Input in = load_input(o, io.in);
  const oracle::PrimeField field = field_for(o, &in);
  const auto w = arrangement_of(in);
  if (!w) return splits_non_acm(o, io, std::get<GridPointSet>(in), field);

  const GeneratorSet g = w->generators();
  if (g.size() < 2) throw NotSplittable("the ideal has a single minimal generator " + str(g.gens().front()));
  const oracle::Box box = box_option(o).value_or(oracle::default_box(w->ambient()));

  std::vector<SplitRow> rows;
  for (const SplitPartition& s : chosen_partitions(o, g)) {
    SplitRow r{s, analyze_split(*w, s), std::nullopt};
    if (o.oracle_check) r.additive = oracle_additivity(field, *w, r, box);
    rows.push_back(std::move(r));
  }

  std::map<std::size_t, int> cuts;
  int betti = 0;
  int point = 0;
  for (const SplitRow& r : rows) {
    ++cuts[r.a.cut];
    betti += r.a.betti_splitting;
    point += r.a.point_splitting;
  }
  const bool exhaustive = o.part.empty() && g.size() <= 16;

  if (o.format == "json") {
    json parts = json::array();
    for (const SplitRow& r : rows) {
      json e{{"A", position_list(r.s, Side::A)},
             {"B", position_list(r.s, Side::B)},
             {"jk_generators", min_gen_count(r.a.jk)},
             {"report",
              {{"cut", r.a.cut},
               {"point_splitting", r.a.point_splitting},
               {"betti_splitting", r.a.betti_splitting},
               {"J", io::to_json(r.a.j)},
               {"K", io::to_json(r.a.k)},
               {"JcapK", io::to_json(r.a.jk)}}}};
      if (r.additive) e["oracle_additivity"] = *r.additive;
      parts.push_back(std::move(e));
    }
    json hist = json::object();
    for (const auto& [c, n] : cuts) hist[std::to_string(c)] = n;
    json gens = json::array();
    for (Bidegree d : g.gens()) gens.push_back(io::to_json(d));
    emit(io, {{"generators", gens},
              {"partitions", parts},
              {"summary",
               {{"bipartitions", rows.size()},
                {"exhaustive", exhaustive},
                {"betti_splittings", betti},
                {"point_splittings", point},
                {"cut_histogram", hist}}}});
    return kOk;
  }

  io.out << "tau:";
  for (Bidegree d : g.gens()) io.out << ' ' << d;
  io.out << '\n';
  for (const SplitRow& r : rows) {
    io.out << "A=" << positions(r.s, Side::A) << "  B=" << positions(r.s, Side::B) << "  cut=" << r.a.cut
           << "  point=" << (r.a.point_splitting ? "yes" : "no") << "  betti=" << (r.a.betti_splitting ? "yes" : "no")
           << "  JcapK=" << min_gen_count(r.a.jk) << " gens";
    if (r.additive) io.out << "  oracle=" << (*r.additive ? "additive" : "not additive");
    io.out << '\n';
  }
  io.out << "bipartitions: " << rows.size() << (exhaustive ? " (all)" : "") << '\n'
         << "betti splittings: " << betti << '\n'
         << "point splittings: " << point << '\n';
  for (const auto& [c, n] : cuts) io.out << "cut " << c << ": " << n << '\n';
  return kOk;
}

// verify ----------------------------------------------------------------

int cmd_verify(const Options& o, const Io& io) {
  VerifyOptions v;
  v.seed = o.seed;
  v.trials = o.trials > 0 ? o.trials : 100;
  if (!o.box.empty()) v.bounds = {o.box[0], o.box[1]};
  v.field = field_for(o, nullptr);
  if (static_cast<std::uint32_t>(std::max(v.bounds.a, v.bounds.b) + 2) >= v.field.prime())
    throw InvalidInput("--prime must exceed every ruling label the campaign can draw");
  const CampaignReport r = run_campaign(v);

  if (o.format == "json") {
    emit(io, to_json(r));
  } else {
    for (const SuiteResult& s : r.suites) {
      io.out << (s.passed() ? "PASS  " : "FAIL  ") << s.name << "  " << s.trials << " trial"
             << (s.trials == 1 ? "" : "s") << "  " << static_cast<long long>(s.seconds * 1000) << " ms\n";
      if (s.failure)
        io.out << "  trial " << s.failure->trial << " (trial seed " << s.failure->trial_seed
               << "): " << s.failure->message << "\n  counterexample: " << s.failure->counterexample.dump() << '\n';
    }
    io.out << (r.passed() ? "all suites passed" : "FAILED") << " (seed " << v.seed << ", " << v.trials
           << " trials, bounds " << v.bounds.a << "x" << v.bounds.b << ")\n";
  }
  return r.passed() ? kOk : kCrossCheck;
}

// experiment ------------------------------------------------------------

int cmd_experiment(const Options& o, const Io& io) {
  std::vector<GridPointSet> sets;
  const oracle::PrimeField field = field_for(o, nullptr);
  if (!o.input.empty()) {
    const Input in = load_input(o, io.in);
    if (std::holds_alternative<Arrangement>(in)) throw InvalidInput("the product experiment takes a point set");
    field_for(o, &in);
    sets.push_back(points_of(in));
  } else {
    const Bidegree bounds = o.box.empty() ? Bidegree{5, 5} : Bidegree{o.box[0], o.box[1]};
    if (bounds.a < 1 || bounds.b < 1) throw InvalidInput("--box bounds must be positive");
    if (static_cast<std::uint32_t>(std::max(bounds.a, bounds.b)) >= field.prime())
      throw InvalidInput("--prime must exceed every ruling label the experiment can draw");
    const int cells = bounds.a * bounds.b;
    sampling::Rng rng(o.seed);
    const int n = o.trials > 0 ? o.trials : 50;
    for (int t = 0; t < n; ++t)
      sets.push_back(sampling::random_grid_subset(rng, bounds.a, bounds.b, std::min(3, cells), cells));
  }

  std::vector<ProductPartition> results;
  for (const GridPointSet& x : sets) results.push_back(ruling_product_partition(x, field));
  int points_ideal = 0;
  int b_empty = 0;
  int acm = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    points_ideal += results[i].point_ideal;
    b_empty += results[i].b_empty;
    acm += is_acm(sets[i]);
  }

  if (o.format == "json") {
    json inst = json::array();
    for (std::size_t i = 0; i < sets.size(); ++i)
      inst.push_back({{"points", io::to_json(sets[i])}, {"acm", is_acm(sets[i])}, {"result", to_json(results[i])}});
    emit(io, {{"instances", inst},
              {"summary",
               {{"instances", sets.size()},
                {"acm", acm},
                {"A_is_point_ideal", points_ideal},
                {"B_empty", b_empty}}}});
    return kOk;
  }
  io.out << "ruling-product partition: A = every minimal generator that is a product of ruling forms\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const ProductPartition& r = results[i];
    io.out << "#" << i << "  points=" << sets[i].size() << (is_acm(sets[i]) ? " ACM" : " non-ACM")
           << "  gens=" << r.generators << "  |A|=" << r.a.size() << "  <A> ideal of points: "
           << (r.point_ideal ? "yes (" + std::to_string(r.zero_set.size()) + " points)" : "no")
           << (r.b_empty ? "  B empty" : "") << '\n';
    if (sets.size() == 1) {
      for (const RulingProduct& p : r.a) io.out << "  " << to_json(p)["product"].get<std::string>() << "  " << p.degree() << '\n';
      if (!r.zero_set.empty()) io.out << render_ferrers(r.zero_set);
    }
  }
  io.out << "instances: " << sets.size() << "  ACM: " << acm << "  <A> ideal of points: " << points_ideal
         << "  B empty: " << b_empty << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Splittings of ideals of points and lines in P1 x P1", "bisplit"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--input", o.input, "configuration JSON: a path, - for stdin, or an inline document");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_prime = [&](CLI::App* c) {
    c->add_option("--prime", o.prime, "prime for the oracle's finite field")->capture_default_str();
  };
  auto add_box = [&](CLI::App* c, const std::string& help) {
    c->add_option("--box", o.box, help)->delimiter(',')->expected(2)->check(CLI::NonNegativeNumber);
  };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "random seed")->capture_default_str(); };
  auto add_trials = [&](CLI::App* c) {
    c->add_option("--trials", o.trials, "number of random trials")->check(CLI::Range(1, 1000000));
  };

  auto* analyze = app.add_subcommand("analyze", "alpha, beta, ACM verdict and Ferrers picture");
  add_input(analyze, true);
  add_format(analyze);

  auto* gens = app.add_subcommand("gens", "minimal generators in standard order");
  add_input(gens, true);
  add_format(gens);

  auto* betti = app.add_subcommand("betti", "bigraded Betti table");
  add_input(betti, true);
  add_format(betti);
  add_prime(betti);
  add_box(betti, "oracle box corner A,B");
  betti->add_flag("--oracle-check", o.oracle_check, "recompute numerically and compare");

  auto* splits = app.add_subcommand("splits", "classify bipartitions of the minimal generators");
  add_input(splits, true);
  add_format(splits);
  add_prime(splits);
  add_box(splits, "oracle box corner A,B");
  add_seed(splits);
  add_trials(splits);
  splits->add_flag("--oracle-check", o.oracle_check, "check Betti additivity numerically for every partition");
  splits->add_option("--part", o.part, "1-based positions of side A, e.g. 1,3,5")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "randomized property campaign");
  add_format(verify);
  add_prime(verify);
  add_seed(verify);
  add_trials(verify);
  add_box(verify, "row and column bounds A,B for sampled configurations");

  auto* experiment = app.add_subcommand("experiment", "put every ruling-product generator on one side");
  add_input(experiment, false);
  add_format(experiment);
  add_prime(experiment);
  add_seed(experiment);
  add_trials(experiment);
  add_box(experiment, "row and column bounds A,B for sampled point sets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Io io{in, out, err};
  try {
    if (*analyze) return cmd_analyze(o, io);
    if (*gens) return cmd_gens(o, io);
    if (*betti) return cmd_betti(o, io);
    if (*splits) return cmd_splits(o, io);
    if (*verify) return cmd_verify(o, io);
    return cmd_experiment(o, io);
  } catch (const NotSplittable& e) {
    err << "not splittable: " << e.what() << '\n';
    return kUsage;
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kCrossCheck;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace bisplit::tool
