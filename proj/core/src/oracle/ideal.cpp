#include "bisplit/oracle/ideal.hpp"

#include <string>

#include "bisplit/error.hpp"

namespace bisplit::oracle {

namespace {

bool on_far_edge(Bidegree d, Box box) { return d.a == box.corner.a || d.b == box.corner.b; }

std::string cell_name(Bidegree d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

template <typename Fn>
void for_each_cell(Box box, Fn&& fn) {
  for (int a = 0; a <= box.corner.a; ++a)
    for (int b = 0; b <= box.corner.b; ++b) fn(Bidegree{a, b});
}

}  // namespace

Box default_box(Bidegree ambient) { return {ambient + Bidegree{1, 1}}; }

IdealPieces::IdealPieces(PrimeField field, Builder builder)
    : state_(std::make_shared<State>(State{field, std::move(builder), {}})) {}

const Matrix& IdealPieces::basis(Bidegree d) const {
  auto it = state_->cache.find(d);
  if (it != state_->cache.end()) return it->second;
  Matrix m = (d.a < 0 || d.b < 0) ? Matrix(0) : state_->builder(d);
  return state_->cache.emplace(d, std::move(m)).first->second;
}

IdealPieces IdealPieces::generated(const PrimeField& field, std::vector<BiForm> gens) {
  return IdealPieces(field, [field, gens = std::move(gens)](Bidegree d) {
    Matrix stacked(space_dim(d));
    for (const BiForm& g : gens) stacked.append_rows(multiples_in(field, g, d));
    return row_basis(field, std::move(stacked));
  });
}

IdealPieces IdealPieces::vanishing(const PrimeField& field, const GridPointSet& x) {
  if (static_cast<std::uint64_t>(x.max_label()) >= field.prime())
    throw InvalidInput("point labels must be smaller than the field characteristic");
  return IdealPieces(field, [field, x](Bidegree d) {
    Matrix eval(x.size(), space_dim(d));
    std::size_t r = 0;
    for (const Cell& c : x.cells()) {
      const Element h = field.from_int(c.h);
      const Element v = field.from_int(c.v);
      for (int i = 0; i <= d.a; ++i) {
        const Element hx = field.pow(h, static_cast<std::uint64_t>(d.a - i));
        for (int j = 0; j <= d.b; ++j)
          eval.at(r, monomial_index(d, i, j)) =
              field.mul(hx, field.pow(v, static_cast<std::uint64_t>(d.b - j)));
      }
      ++r;
    }
    return row_basis(field, kernel(field, eval));
  });
}

IdealPieces IdealPieces::intersection(IdealPieces a, IdealPieces b) {
  if (!(a.field() == b.field())) throw InvalidInput("intersection over different fields");
  const PrimeField field = a.field();
  return IdealPieces(field, [field, a = std::move(a), b = std::move(b)](Bidegree d) {
    return intersect_row_spaces(field, a.basis(d), b.basis(d));
  });
}

std::size_t pointset_piece_dim(const PrimeField& field, const GridPointSet& x, Bidegree d) {
  return IdealPieces::vanishing(field, x).dim(d);
}

std::size_t generated_piece_dim(const PrimeField& field, const std::vector<BiForm>& gens,
                                Bidegree d) {
  Matrix stacked(space_dim(d));
  for (const BiForm& g : gens) stacked.append_rows(multiples_in(field, g, d));
  return rank(field, std::move(stacked));
}

DimTable dim_table(const IdealPieces& ideal, Box box) {
  DimTable out;
  for_each_cell(box, [&](Bidegree d) { out[d] = ideal.dim(d); });
  return out;
}

Matrix lower_degree_span(const IdealPieces& ideal, Bidegree d) {
  Matrix lower(space_dim(d));
  std::vector<Element> row(space_dim(d));
  if (d.a > 0) {
    const Bidegree s{d.a - 1, d.b};
    const Matrix& base = ideal.basis(s);
    for (std::size_t r = 0; r < base.rows(); ++r)
      for (int shift = 0; shift <= 1; ++shift) {  // x0, x1
        std::fill(row.begin(), row.end(), 0);
        for (int i = 0; i <= s.a; ++i)
          for (int j = 0; j <= s.b; ++j)
            row[monomial_index(d, i + shift, j)] = base.at(r, monomial_index(s, i, j));
        lower.append_row(row);
      }
  }
  if (d.b > 0) {
    const Bidegree s{d.a, d.b - 1};
    const Matrix& base = ideal.basis(s);
    for (std::size_t r = 0; r < base.rows(); ++r)
      for (int shift = 0; shift <= 1; ++shift) {  // y0, y1
        std::fill(row.begin(), row.end(), 0);
        for (int i = 0; i <= s.a; ++i)
          for (int j = 0; j <= s.b; ++j)
            row[monomial_index(d, i, j + shift)] = base.at(r, monomial_index(s, i, j));
        lower.append_row(row);
      }
  }
  return lower;
}

DegreeCounts beta0_box(const IdealPieces& ideal, Box box) {
  DegreeCounts out;
  for_each_cell(box, [&](Bidegree d) {
    const std::size_t dim = ideal.dim(d);
    if (dim == 0) return;
    const std::size_t fresh = dim - rank(ideal.field(), lower_degree_span(ideal, d));
    if (fresh == 0) return;
    if (on_far_edge(d, box))
      throw InvalidInput("box too small: minimal generator at " + cell_name(d));
    out[d] = static_cast<int>(fresh);
  });
  return out;
}

DegreeCounts beta1_box(const DimTable& dims, const DegreeCounts& beta0, Box box) {
  DegreeCounts out;
  for_each_cell(box, [&](Bidegree d) {
    auto it = dims.find(d);
    if (it == dims.end()) throw InvalidInput("dimension table misses cell " + cell_name(d));
    long long value = -static_cast<long long>(it->second);
    for (const auto& [c, mult] : beta0)
      value += static_cast<long long>(mult) * static_cast<long long>(space_dim(d - c));
    for (const auto& [v, mult] : out)
      if (v != d) value -= static_cast<long long>(mult) * static_cast<long long>(space_dim(d - v));
    if (value < 0)
      throw InvalidInput("negative syzygy count at " + cell_name(d) +
                         ": the resolution is not of length one");
    if (value == 0) return;
    if (on_far_edge(d, box)) throw InvalidInput("box too small: syzygy at " + cell_name(d));
    out[d] = static_cast<int>(value);
  });
  return out;
}

BettiTable oracle_betti_table(const IdealPieces& ideal, Box box) {
  const DegreeCounts b0 = beta0_box(ideal, box);
  const DegreeCounts b1 = beta1_box(dim_table(ideal, box), b0, box);
  BettiTable t;
  for (const auto& [d, m] : b0) t.add(0, d, m);
  for (const auto& [d, m] : b1) t.add(1, d, m);
  return t;
}

SumIntersectionDims sum_and_intersection_dims(const PrimeField& field,
                                              const std::vector<BiForm>& jgens,
                                              const std::vector<BiForm>& kgens, Bidegree d) {
  std::vector<BiForm> both = jgens;
  both.insert(both.end(), kgens.begin(), kgens.end());
  SumIntersectionDims out;
  out.j = generated_piece_dim(field, jgens, d);
  out.k = generated_piece_dim(field, kgens, d);
  out.sum = generated_piece_dim(field, both, d);
  out.cap = out.j + out.k - out.sum;
  return out;
}

bool ideals_equal_on_box(const IdealPieces& g1, const IdealPieces& g2, Box box) {
  bool equal = true;
  for_each_cell(box, [&](Bidegree d) {
    if (!equal) return;
    const Matrix& b1 = g1.basis(d);
    const Matrix& b2 = g2.basis(d);
    if (b1.rows() != b2.rows()) {
      equal = false;
      return;
    }
    Matrix stacked = b1;
    stacked.append_rows(b2);
    equal = rank(g1.field(), std::move(stacked)) == b1.rows();
  });
  return equal;
}

std::vector<BiForm> generator_forms(const PrimeField& field, const GeneratorSet& g,
                                    const std::vector<int>& h_labels,
                                    const std::vector<int>& v_labels) {
  std::vector<BiForm> out;
  out.reserve(g.size());
  for (Bidegree d : g.gens()) out.push_back(prefix_product(field, d, h_labels, v_labels));
  return out;
}

IdealPieces generated_ideal(const PrimeField& field, const Arrangement& w) {
  return generated_ideal(field, w.generators(), w);
}

IdealPieces generated_ideal(const PrimeField& field, const GeneratorSet& g, const Arrangement& w) {
  return IdealPieces::generated(field, generator_forms(field, g, w.h_rulings(), w.v_rulings()));
}

IdealPieces vanishing_ideal(const PrimeField& field, const Arrangement& w) {
  const BiForm lines = prefix_product(field, w.lines(), w.h_rulings(), w.v_rulings());
  if (w.pure_lines()) return IdealPieces::generated(field, {lines});
  IdealPieces points = IdealPieces::vanishing(field, w.points().to_grid());
  if (w.line_h() == 0 && w.line_v() == 0) return points;
  return IdealPieces::intersection(IdealPieces::generated(field, {lines}), std::move(points));
}

}  // namespace bisplit::oracle
