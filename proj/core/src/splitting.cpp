#include "bisplit/splitting.hpp"

#include <algorithm>

#include "bisplit/error.hpp"
#include "bisplit/oracle/ideal.hpp"

namespace bisplit {

namespace {

Arrangement on_rulings(const Arrangement& r, const std::vector<int>& h, const std::vector<int>& v) {
  return Arrangement(r.line_h(), r.line_v(), r.alpha(), h, v);
}

}  // namespace

SplitPartition::SplitPartition(GeneratorSet tau, std::vector<Side> sides)
    : tau_(std::move(tau)), sides_(std::move(sides)) {
  if (tau_.size() < 2) throw NotSplittable("an ideal with fewer than two minimal generators has no proper bipartition");
  if (sides_.size() != tau_.size()) throw InvalidInput("side assignment does not match the generator count");
  const auto in_a = std::count(sides_.begin(), sides_.end(), Side::A);
  if (in_a == 0 || in_a == static_cast<std::ptrdiff_t>(sides_.size()))
    throw InvalidInput("0-partition: both sides must be nonempty");
}

SplitPartition SplitPartition::from_positions(GeneratorSet tau, const std::vector<std::size_t>& a_positions) {
  std::vector<Side> sides(tau.size(), Side::B);
  for (std::size_t p : a_positions) {
    if (p < 1 || p > sides.size()) throw InvalidInput("position " + std::to_string(p) + " is outside tau");
    sides[p - 1] = Side::A;
  }
  return SplitPartition(std::move(tau), std::move(sides));
}

SplitPartition SplitPartition::from_generators(GeneratorSet tau, const std::vector<Bidegree>& a_side) {
  std::vector<Side> sides(tau.size(), Side::B);
  for (Bidegree d : a_side) {
    auto it = std::find(tau.gens().begin(), tau.gens().end(), d);
    if (it == tau.gens().end()) throw InvalidInput("generator is not in the minimal generating set");
    sides[static_cast<std::size_t>(it - tau.gens().begin())] = Side::A;
  }
  return SplitPartition(std::move(tau), std::move(sides));
}

SplitPartition SplitPartition::swapped() const {
  std::vector<Side> flipped = sides_;
  for (Side& s : flipped) s = s == Side::A ? Side::B : Side::A;
  return SplitPartition(tau_, std::move(flipped));
}

GeneratorSet SplitPartition::side(Side s) const {
  std::vector<bool> mask(sides_.size());
  for (std::size_t i = 0; i < sides_.size(); ++i) mask[i] = sides_[i] == s;
  std::vector<Bidegree> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(tau_.gens()[i]);
  return GeneratorSet(std::move(out), tau_.ambient());
}

std::size_t cut_number(const SplitPartition& s) {
  std::size_t cuts = 0;
  for (std::size_t i = 0; i + 1 < s.sides().size(); ++i)
    if (s.sides()[i] != s.sides()[i + 1]) ++cuts;
  return cuts;
}

void for_each_bipartition(const GeneratorSet& g, const std::function<void(const SplitPartition&)>& fn) {
  const std::size_t n = g.size();
  if (n < 2) throw NotSplittable("an ideal with fewer than two minimal generators has no proper bipartition");
  if (n > 62) throw InvalidInput("too many generators to enumerate bipartitions");
  const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    std::vector<Side> sides(n, Side::B);
    sides[0] = Side::A;
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) sides[i] = Side::A;
    fn(SplitPartition(g, std::move(sides)));
  }
}

std::vector<SplitPartition> enumerate_bipartitions(const GeneratorSet& g) {
  std::vector<SplitPartition> out;
  for_each_bipartition(g, [&](const SplitPartition& s) { out.push_back(s); });
  return out;
}

CiPointSplitting complete_intersection_point_splitting(const GridPointSet& x,
                                                       const std::vector<Bidegree>& generator_degrees) {
  if (x.empty()) throw InvalidInput("the empty configuration has no point splitting");
  const int h = static_cast<int>(x.h_labels().size());
  const int v = static_cast<int>(x.v_labels().size());
  std::vector<Bidegree> rest = generator_degrees;
  for (Bidegree pure : {Bidegree{h, 0}, Bidegree{0, v}}) {
    auto it = std::find(rest.begin(), rest.end(), pure);
    if (it == rest.end()) throw CrossCheckFailure("generator degrees lack the ruling product of bidegree " +
                                                  std::to_string(pure.a) + "," + std::to_string(pure.b));
    rest.erase(it);
  }
  std::sort(rest.begin(), rest.end(), [](Bidegree l, Bidegree r) { return l.b > r.b || (l.b == r.b && l.a < r.a); });
  CiPointSplitting out;
  out.j = acm_from_partition(Partition(std::vector<int>(static_cast<std::size_t>(h), v)), x.h_labels(),
                             x.v_labels());
  out.k = std::move(rest);
  return out;
}

std::vector<Bidegree> generator_degrees(const GridPointSet& x, const oracle::PrimeField& field) {
  if (x.empty()) throw InvalidInput("the empty configuration has no generators to scan");
  if (auto c = as_acm(x)) return min_gens(*c).gens();
  const auto ideal = oracle::IdealPieces::vanishing(field, x);
  const Bidegree rulings{static_cast<int>(x.h_labels().size()), static_cast<int>(x.v_labels().size())};
  std::vector<Bidegree> out;
  for (const auto& [d, mult] : oracle::beta0_box(ideal, oracle::default_box(rulings)))
    out.insert(out.end(), static_cast<std::size_t>(mult), d);
  return out;
}

CiPointSplitting complete_intersection_point_splitting(const GridPointSet& x, const oracle::PrimeField& field) {
  return complete_intersection_point_splitting(x, generator_degrees(x, field));
}

AcmPointSplitting acm_point_splitting(const AcmConfig& c, const std::vector<Bidegree>& a_prime) {
  if (c.empty()) throw InvalidInput("the empty configuration has no point splitting");
  const Arrangement base = attach_lines(c, 0, 0);
  const GeneratorSet gens = min_gens(c);
  const Bidegree f1{static_cast<int>(c.rows()), 0};
  const Bidegree f2{0, c.alpha().first()};
  std::vector<Bidegree> a_side{f1, f2};
  for (Bidegree d : a_prime) {
    if (d == f1 || d == f2 || std::find(gens.gens().begin(), gens.gens().end(), d) == gens.gens().end())
      throw InvalidInput("a_prime may only contain drop generators");
    a_side.push_back(d);
  }
  if (a_side.size() >= gens.size())
    throw InvalidInput("B is empty: a_prime holds every drop generator, so this is not a proper splitting");

  SplitPartition part = SplitPartition::from_generators(gens, a_side);
  const Arrangement j = on_rulings(recognize(part.side_a()), base.h_rulings(), base.v_rulings());
  const Arrangement k = on_rulings(recognize(part.side_b()), base.h_rulings(), base.v_rulings());
  if (j.line_h() != 0 || j.line_v() != 0)
    throw CrossCheckFailure("point side picked up a line factor");
  return {j.points(), k, std::move(part)};
}

std::vector<AcmPointSplitting> acm_point_splittings(const AcmConfig& c) {
  std::vector<Bidegree> drop_gens;
  const Bidegree f1{static_cast<int>(c.rows()), 0};
  const Bidegree f2{0, c.alpha().first()};
  const GeneratorSet all = min_gens(c);
  for (Bidegree d : all.gens())
    if (d != f1 && d != f2) drop_gens.push_back(d);
  std::vector<AcmPointSplitting> out;
  const std::uint64_t full = std::uint64_t{1} << drop_gens.size();
  for (std::uint64_t mask = 0; mask + 1 < full; ++mask) {
    std::vector<Bidegree> a_prime;
    for (std::size_t i = 0; i < drop_gens.size(); ++i)
      if (mask >> i & 1) a_prime.push_back(drop_gens[i]);
    out.push_back(acm_point_splitting(c, a_prime));
  }
  return out;
}

bool is_point_splitting(const SplitPartition& s) {
  const Arrangement j = recognize(s.side_a());
  return j.line_h() == 0 && j.line_v() == 0 && !j.pure_lines();
}

bool is_betti_splitting_structural(const SplitPartition& s) {
  const bool one_cut = cut_number(s) == 1;
  const bool principal = min_gen_count(intersect(recognize(s.side_a()), recognize(s.side_b()))) == 1;
  if (one_cut != principal)
    throw CrossCheckFailure("cut number and generator count of J cap K disagree");
  return one_cut;
}

bool check_no_two_point_ideal_partition(const GridPointSet& x, const oracle::PrimeField& field) {
  int pure_h = 0;
  int pure_v = 0;
  for (Bidegree d : generator_degrees(x, field)) {
    if (d.b == 0) ++pure_h;
    if (d.a == 0) ++pure_v;
  }
  if (pure_h != 1 || pure_v != 1)
    throw CrossCheckFailure("expected exactly one generator of bidegree (a,0) and one of (0,b), found " +
                            std::to_string(pure_h) + " and " + std::to_string(pure_v));
  return true;
}

SplitAnalysis analyze_split(const Arrangement& w, const SplitPartition& s) {
  if (!(s.tau() == w.generators())) throw InvalidInput("partition does not split this arrangement's generators");
  SplitAnalysis out;
  out.j = on_rulings(recognize(s.side_a()), w.h_rulings(), w.v_rulings());
  out.k = on_rulings(recognize(s.side_b()), w.h_rulings(), w.v_rulings());
  out.jk = intersect(out.j, out.k);
  out.cut = cut_number(s);
  out.point_splitting = is_point_splitting(s);
  out.betti_splitting = is_betti_splitting_structural(s);
  return out;
}

}  // namespace bisplit
