#include "bisplit/oracle/biform.hpp"

#include <algorithm>
#include <string>

#include "bisplit/error.hpp"

namespace bisplit::oracle {

std::size_t space_dim(Bidegree d) noexcept {
  if (d.a < 0 || d.b < 0) return 0;
  return static_cast<std::size_t>(d.a + 1) * static_cast<std::size_t>(d.b + 1);
}

bool BiForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Element c) { return c == 0; });
}

BiForm ruling_form(const PrimeField& field, Orientation o, int label) {
  if (label <= 0 || static_cast<std::uint64_t>(label) >= field.prime())
    throw InvalidInput("ruling label " + std::to_string(label) + " must lie in (0, " +
                       std::to_string(field.prime()) + ")");
  const Element minus_n = field.neg(field.from_int(label));
  if (o == Orientation::Horizontal) return {{1, 0}, {1, minus_n}};
  return {{0, 1}, {1, minus_n}};
}

BiForm multiply(const PrimeField& field, const BiForm& f, const BiForm& g) {
  BiForm out{f.degree + g.degree, {}};
  out.coeffs.assign(space_dim(out.degree), 0);
  for (int i1 = 0; i1 <= f.degree.a; ++i1)
    for (int j1 = 0; j1 <= f.degree.b; ++j1) {
      const Element c1 = f.coeffs[monomial_index(f.degree, i1, j1)];
      if (c1 == 0) continue;
      for (int i2 = 0; i2 <= g.degree.a; ++i2)
        for (int j2 = 0; j2 <= g.degree.b; ++j2) {
          const Element c2 = g.coeffs[monomial_index(g.degree, i2, j2)];
          if (c2 == 0) continue;
          Element& slot = out.coeffs[monomial_index(out.degree, i1 + i2, j1 + j2)];
          slot = field.add(slot, field.mul(c1, c2));
        }
    }
  return out;
}

Element evaluate(const PrimeField& field, const BiForm& f, int h, int v) {
  // x0 = h, x1 = 1, y0 = v, y1 = 1.
  const Element hx = field.from_int(h);
  const Element vy = field.from_int(v);
  Element sum = 0;
  for (int i = 0; i <= f.degree.a; ++i)
    for (int j = 0; j <= f.degree.b; ++j) {
      const Element c = f.coeffs[monomial_index(f.degree, i, j)];
      if (c == 0) continue;
      const Element term = field.mul(
          c, field.mul(field.pow(hx, static_cast<std::uint64_t>(f.degree.a - i)),
                       field.pow(vy, static_cast<std::uint64_t>(f.degree.b - j))));
      sum = field.add(sum, term);
    }
  return sum;
}

Matrix multiples_in(const PrimeField& field, const BiForm& f, Bidegree target) {
  (void)field;
  Matrix out(space_dim(target));
  if (!f.degree.divides(target)) return out;
  const Bidegree co = target - f.degree;
  std::vector<Element> row(space_dim(target));
  for (int mi = 0; mi <= co.a; ++mi)
    for (int mj = 0; mj <= co.b; ++mj) {
      std::fill(row.begin(), row.end(), 0);
      for (int i = 0; i <= f.degree.a; ++i)
        for (int j = 0; j <= f.degree.b; ++j)
          row[monomial_index(target, i + mi, j + mj)] = f.coeffs[monomial_index(f.degree, i, j)];
      out.append_row(row);
    }
  return out;
}

BiForm prefix_product(const PrimeField& field, Bidegree d, const std::vector<int>& h_labels,
                      const std::vector<int>& v_labels) {
  if (d.a > static_cast<int>(h_labels.size()) || d.b > static_cast<int>(v_labels.size()))
    throw InvalidInput("prefix product exceeds the available rulings");
  BiForm out = BiForm::one();
  for (int i = 0; i < d.a; ++i)
    out = multiply(field, out, ruling_form(field, Orientation::Horizontal,
                                           h_labels[static_cast<std::size_t>(i)]));
  for (int j = 0; j < d.b; ++j)
    out = multiply(field, out, ruling_form(field, Orientation::Vertical,
                                           v_labels[static_cast<std::size_t>(j)]));
  return out;
}

}  // namespace bisplit::oracle
