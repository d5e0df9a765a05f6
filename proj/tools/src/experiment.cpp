#include "bisplit/tool/experiment.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bisplit/error.hpp"
#include "bisplit/io.hpp"
#include "bisplit/oracle/ideal.hpp"
#include "bisplit/splitting.hpp"

namespace bisplit::tool {

namespace {

using oracle::BiForm;
using oracle::Orientation;

BiForm product_form(const oracle::PrimeField& field, const RulingProduct& p) {
  BiForm f = BiForm::one();
  for (int l : p.h) f = oracle::multiply(field, f, oracle::ruling_form(field, Orientation::Horizontal, l));
  for (int l : p.v) f = oracle::multiply(field, f, oracle::ruling_form(field, Orientation::Vertical, l));
  return f;
}

bool vanishes_at(const RulingProduct& p, Cell c) {
  return std::find(p.h.begin(), p.h.end(), c.h) != p.h.end() ||
         std::find(p.v.begin(), p.v.end(), c.v) != p.v.end();
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// For each set S of horizontal rulings the vertical rulings must cover the
// points off S; keep the pairs no other pair sits inside.
std::vector<RulingProduct> minimal_vanishing_products(const GridPointSet& x) {
  std::vector<int> hs = x.h_labels();
  std::sort(hs.begin(), hs.end());
  if (hs.size() > 20) throw InvalidInput("too many horizontal rulings for the product experiment");
  std::vector<RulingProduct> all;
  for (std::uint32_t mask = 0; mask < (1u << hs.size()); ++mask) {
    RulingProduct p;
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (mask >> i & 1) p.h.push_back(hs[i]);
    std::set<int> v;
    for (const Cell& c : x.cells())
      if (!std::binary_search(p.h.begin(), p.h.end(), c.h)) v.insert(c.v);
    p.v.assign(v.begin(), v.end());
    all.push_back(std::move(p));
  }
  std::vector<RulingProduct> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < all.size() && minimal; ++j) {
      if (i == j) continue;
      const bool inside = contains_all(all[i].h, all[j].h) && contains_all(all[i].v, all[j].v);
      const bool equal = all[i].h == all[j].h && all[i].v == all[j].v;
      if (inside && !equal) minimal = false;
    }
    if (minimal) out.push_back(all[i]);
  }
  std::stable_sort(out.begin(), out.end(), [](const RulingProduct& l, const RulingProduct& r) {
    return l.degree() < r.degree();
  });
  return out;
}

}  // namespace

ProductPartition ruling_product_partition(const GridPointSet& x, const oracle::PrimeField& field) {
  if (x.empty()) throw InvalidInput("the product experiment needs at least one point");
  const auto ideal = oracle::IdealPieces::vanishing(field, x);

  ProductPartition out;
  out.generators = generator_degrees(x, field).size();

  // Keep a product when it is new modulo R_1 I and the products already kept
  // in its bidegree.
  std::map<Bidegree, oracle::Matrix> span;
  std::vector<BiForm> forms;
  for (const RulingProduct& p : minimal_vanishing_products(x)) {
    const Bidegree d = p.degree();
    auto it = span.find(d);
    if (it == span.end()) it = span.emplace(d, oracle::lower_degree_span(ideal, d)).first;
    oracle::Matrix& m = it->second;
    const std::size_t before = oracle::rank(field, m);
    const BiForm f = product_form(field, p);
    m.append_row(f.coeffs);
    if (oracle::rank(field, m) == before) {
      m.truncate_rows(m.rows() - 1);
      continue;
    }
    out.a.push_back(p);
    forms.push_back(f);
  }
  out.b_empty = out.a.size() == out.generators;

  std::vector<Cell> zeros;
  for (int h : x.h_labels())
    for (int v : x.v_labels()) {
      const Cell c{h, v};
      if (std::all_of(out.a.begin(), out.a.end(), [&](const RulingProduct& p) { return vanishes_at(p, c); }))
        zeros.push_back(c);
    }
  out.zero_set = GridPointSet(std::move(zeros));

  // <A> holds the products of all horizontal and all vertical rulings, so
  // its zeros lie on the grid; it is an ideal of points exactly when it
  // agrees with the vanishing ideal of those zeros.
  const Bidegree rulings{static_cast<int>(x.h_labels().size()), static_cast<int>(x.v_labels().size())};
  out.point_ideal = oracle::ideals_equal_on_box(oracle::IdealPieces::generated(field, forms),
                                                oracle::IdealPieces::vanishing(field, out.zero_set),
                                                oracle::default_box(rulings));
  return out;
}

nlohmann::json to_json(const RulingProduct& p) {
  std::string name;
  for (int l : p.h) name += "H" + std::to_string(l);
  for (int l : p.v) name += "V" + std::to_string(l);
  return {{"h", p.h}, {"v", p.v}, {"degree", io::to_json(p.degree())}, {"product", name}};
}

nlohmann::json to_json(const ProductPartition& r) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : r.a) a.push_back(to_json(p));
  return {{"generators", r.generators},
          {"A", a},
          {"B_empty", r.b_empty},
          {"point_ideal", r.point_ideal},
          {"zero_set", io::to_json(r.zero_set)}};
}

}  // namespace bisplit::tool
