#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "bisplit/grid.hpp"
#include "bisplit/oracle/biform.hpp"
#include "bisplit/oracle/field.hpp"
#include "bisplit/oracle/linalg.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit::oracle {

/// Cells (0,0)..(corner.a, corner.b) inclusive.
struct Box {
  Bidegree corner;
};

/// (ambient + (1,1)): every generator and syzygy of an arrangement ideal on
/// that ambient lies strictly inside.
Box default_box(Bidegree ambient);

/// Bigraded Hilbert-function values of an ideal, dim I_(a,b).
using DimTable = std::map<Bidegree, std::size_t>;
/// Per-bidegree multiplicities (generators or syzygies).
using DegreeCounts = std::map<Bidegree, int>;

/// Lazily computed graded pieces I_(a,b) of an ideal, each held as a reduced
/// row echelon basis in the monomial basis of R_(a,b). Copies share the
/// cache.
class IdealPieces {
 public:
  using Builder = std::function<Matrix(Bidegree)>;

  IdealPieces(PrimeField field, Builder builder);

  /// Ideal generated by the given forms.
  static IdealPieces generated(const PrimeField& field, std::vector<BiForm> gens);
  /// Vanishing ideal of a reduced point set; label n is the point [n:1].
  static IdealPieces vanishing(const PrimeField& field, const GridPointSet& x);
  /// Intersection of two ideals over the same field.
  static IdealPieces intersection(IdealPieces a, IdealPieces b);

  const PrimeField& field() const noexcept { return state_->field; }
  const Matrix& basis(Bidegree d) const;
  std::size_t dim(Bidegree d) const { return basis(d).rows(); }

 private:
  struct State {
    PrimeField field;
    Builder builder;
    std::map<Bidegree, Matrix> cache;
  };
  std::shared_ptr<State> state_;
};

/// dim (I_X)_(a,b): the kernel dimension of the point evaluation matrix.
std::size_t pointset_piece_dim(const PrimeField& field, const GridPointSet& x, Bidegree d);

/// Rank of the stacked multiples of every generator in bidegree d.
std::size_t generated_piece_dim(const PrimeField& field, const std::vector<BiForm>& gens,
                                Bidegree d);

DimTable dim_table(const IdealPieces& ideal, Box box);

/// Rows spanning R_(1,0) I_(d-(1,0)) + R_(0,1) I_(d-(0,1)), unreduced. Its
/// complement in I_d is where minimal generators of bidegree d live.
Matrix lower_degree_span(const IdealPieces& ideal, Bidegree d);

/// beta_0 at each cell: dim I_d minus the dimension of
/// R_(1,0) I_(d-(1,0)) + R_(0,1) I_(d-(0,1)). Throws InvalidInput when a
/// generator sits on the far edge of the box (the box is too small).
DegreeCounts beta0_box(const IdealPieces& ideal, Box box);

/// beta_1 for an ideal with a length-one resolution, solved cell by cell in
/// increasing order from the Hilbert function and beta_0. Throws
/// InvalidInput if a negative count appears, which means the length-one
/// assumption does not hold.
DegreeCounts beta1_box(const DimTable& dims, const DegreeCounts& beta0, Box box);

/// beta_0 and beta_1 assembled into a table.
BettiTable oracle_betti_table(const IdealPieces& ideal, Box box);

struct SumIntersectionDims {
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t sum = 0;
  std::size_t cap = 0;  // j + k - sum
};

SumIntersectionDims sum_and_intersection_dims(const PrimeField& field,
                                              const std::vector<BiForm>& jgens,
                                              const std::vector<BiForm>& kgens, Bidegree d);

/// Same dimension at every cell and mutual containment (the stacked bases
/// do not grow the span).
bool ideals_equal_on_box(const IdealPieces& g1, const IdealPieces& g2, Box box);

/// Prefix products of a generator set, realized on the given ruling labels.
std::vector<BiForm> generator_forms(const PrimeField& field, const GeneratorSet& g,
                                    const std::vector<int>& h_labels,
                                    const std::vector<int>& v_labels);

/// Ideal generated by an arrangement's closed-form minimal generators.
IdealPieces generated_ideal(const PrimeField& field, const Arrangement& w);

/// Ideal generated by a subset of prefix products on w's rulings.
IdealPieces generated_ideal(const PrimeField& field, const GeneratorSet& g, const Arrangement& w);

/// Vanishing ideal of the union of lines and points, built without the
/// staircase formulas: <product of lines> intersected with I(points).
IdealPieces vanishing_ideal(const PrimeField& field, const Arrangement& w);

}  // namespace bisplit::oracle
