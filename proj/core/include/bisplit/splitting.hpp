#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bisplit/grid.hpp"
#include "bisplit/oracle/field.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit {

enum class Side : std::uint8_t { A, B };

/// A bipartition of a minimal generating set listed in standard order.
/// Side A is the designated side for point splittings (J = <A>).
class SplitPartition {
 public:
  /// Throws NotSplittable for fewer than two generators and InvalidInput
  /// when one side is empty or the sizes disagree.
  SplitPartition(GeneratorSet tau, std::vector<Side> sides);

  /// Side A holds the given 1-based positions of tau.
  static SplitPartition from_positions(GeneratorSet tau, const std::vector<std::size_t>& a_positions);

  /// Side A holds exactly the listed generators.
  static SplitPartition from_generators(GeneratorSet tau, const std::vector<Bidegree>& a_side);

  const GeneratorSet& tau() const noexcept { return tau_; }
  const std::vector<Side>& sides() const noexcept { return sides_; }
  GeneratorSet side_a() const { return side(Side::A); }
  GeneratorSet side_b() const { return side(Side::B); }

  /// Same partition with A and B exchanged.
  SplitPartition swapped() const;

 private:
  GeneratorSet side(Side s) const;
  GeneratorSet tau_;
  std::vector<Side> sides_;
};

/// Number of adjacent positions in tau that sit on different sides.
std::size_t cut_number(const SplitPartition& s);

/// All 2^(n-1) - 1 unordered bipartitions, each emitted once with tau_1 on
/// side A. Masks run in increasing order over positions 2..n (bit set means
/// side A). Throws NotSplittable for fewer than two generators.
void for_each_bipartition(const GeneratorSet& g, const std::function<void(const SplitPartition&)>& fn);
std::vector<SplitPartition> enumerate_bipartitions(const GeneratorSet& g);

/// The splitting that sends the two pure-product generators to A. J is the
/// full grid on the point set's rulings; k lists the remaining generator
/// bidegrees (with multiplicity).
struct CiPointSplitting {
  AcmConfig j;
  std::vector<Bidegree> k;
  /// False when K would be empty (one point): no proper point splitting.
  bool proper() const noexcept { return !k.empty(); }
};

/// generator_degrees are the minimal generator bidegrees of I_X. Throws
/// CrossCheckFailure when they lack (h,0) or (0,v).
CiPointSplitting complete_intersection_point_splitting(const GridPointSet& x,
                                                       const std::vector<Bidegree>& generator_degrees);

/// Minimal generator bidegrees of I_X: closed form when x is ACM, the
/// oracle's beta_0 scan otherwise.
std::vector<Bidegree> generator_degrees(const GridPointSet& x, const oracle::PrimeField& field);

CiPointSplitting complete_intersection_point_splitting(const GridPointSet& x,
                                                       const oracle::PrimeField& field);

struct AcmPointSplitting {
  AcmConfig j;         // ACM points cut out by A
  Arrangement k;       // <B>, on the configuration's rulings
  SplitPartition partition;
};

/// A = {(h,0), (0,alpha_1)} plus a_prime, B the rest. a_prime must consist of
/// drop generators. Throws InvalidInput when B would be empty.
AcmPointSplitting acm_point_splitting(const AcmConfig& c, const std::vector<Bidegree>& a_prime);

/// Every proper point splitting of that form, a_prime running over the
/// proper subsets of the drop generators.
std::vector<AcmPointSplitting> acm_point_splittings(const AcmConfig& c);

/// <A> is an ideal of points: the common factor of A is trivial.
bool is_point_splitting(const SplitPartition& s);

/// cut_number == 1, checked against the generator count of the combinatorial
/// intersection. Throws CrossCheckFailure if the two disagree.
bool is_betti_splitting_structural(const SplitPartition& s);

/// Verifies that I_X has exactly one minimal generator of bidegree (a,0) and
/// one of bidegree (0,b), so no bipartition yields two point ideals. Returns
/// true; throws CrossCheckFailure if the scan says otherwise.
bool check_no_two_point_ideal_partition(const GridPointSet& x, const oracle::PrimeField& field);

/// J, K and J cap K of a bipartition of an arrangement's generators, all on
/// the arrangement's rulings.
struct SplitAnalysis {
  Arrangement j;
  Arrangement k;
  Arrangement jk;
  std::size_t cut = 0;
  bool point_splitting = false;
  bool betti_splitting = false;
};

SplitAnalysis analyze_split(const Arrangement& w, const SplitPartition& s);

}  // namespace bisplit
