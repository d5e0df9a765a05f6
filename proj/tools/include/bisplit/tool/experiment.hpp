#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "bisplit/grid.hpp"
#include "bisplit/oracle/field.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit::tool {

/// H_{h_1}...H_{h_s} V_{v_1}...V_{v_t} on the labels of a point set.
struct RulingProduct {
  std::vector<int> h;
  std::vector<int> v;
  Bidegree degree() const { return {static_cast<int>(h.size()), static_cast<int>(v.size())}; }
};

/// Outcome of putting every ruling-product generator on side A.
struct ProductPartition {
  std::size_t generators = 0;       // beta_0 of I_X
  std::vector<RulingProduct> a;     // ruling products that extend to a minimal generating set
  bool b_empty = false;             // every minimal generator is a ruling product
  bool point_ideal = false;         // <A> is the ideal of its zero set
  GridPointSet zero_set;            // zeros of <A> on the rulings of X
};

/// Collects the inclusion-minimal ruling products vanishing on x, keeps the
/// ones independent modulo R_1 I in their bidegree, and tests whether they
/// generate an ideal of points. Reports what it finds and asserts nothing.
ProductPartition ruling_product_partition(const GridPointSet& x, const oracle::PrimeField& field);

nlohmann::json to_json(const RulingProduct& p);
nlohmann::json to_json(const ProductPartition& r);

}  // namespace bisplit::tool
