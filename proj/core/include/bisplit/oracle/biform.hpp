#pragma once

#include <cstddef>
#include <vector>

#include "bisplit/oracle/field.hpp"
#include "bisplit/oracle/linalg.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit::oracle {

/// dim R_(a,b) = (a+1)(b+1); zero for negative bidegrees.
std::size_t space_dim(Bidegree d) noexcept;

/// Position of x0^(a-i) x1^i y0^(b-j) y1^j in the row-major (i, j) basis.
inline std::size_t monomial_index(Bidegree d, int i, int j) noexcept {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(d.b + 1) +
         static_cast<std::size_t>(j);
}

/// Bihomogeneous polynomial in R = k[x0,x1,y0,y1] with deg x = (1,0),
/// deg y = (0,1). The zero form is allowed.
struct BiForm {
  Bidegree degree;
  std::vector<Element> coeffs;  // size space_dim(degree)

  static BiForm one() { return {{0, 0}, {1}}; }
  bool is_zero() const;
};

enum class Orientation { Horizontal, Vertical };

/// Label n stands for the point [n:1] of P^1: horizontal n gives x0 - n x1,
/// vertical n gives y0 - n y1. Throws InvalidInput unless 0 < n < p.
BiForm ruling_form(const PrimeField& field, Orientation o, int label);

BiForm multiply(const PrimeField& field, const BiForm& f, const BiForm& g);

/// Value at the point ([h:1], [v:1]).
Element evaluate(const PrimeField& field, const BiForm& f, int h, int v);

/// Rows f * m for every monomial m of bidegree target - deg f, written in
/// the basis of R_target. Empty when deg f does not divide target.
Matrix multiples_in(const PrimeField& field, const BiForm& f, Bidegree target);

/// Product of the first d.a horizontal and first d.b vertical ruling forms.
BiForm prefix_product(const PrimeField& field, Bidegree d, const std::vector<int>& h_labels,
                      const std::vector<int>& v_labels);

}  // namespace bisplit::oracle
