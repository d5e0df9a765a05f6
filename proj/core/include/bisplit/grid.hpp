#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisplit/partition.hpp"

namespace bisplit {

/// One reduced point A x B, addressed by the labels of its horizontal and
/// vertical rulings.
struct Cell {
  int h = 0;
  int v = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A finite reduced set of points on a grid of rulings.
///
/// Labels are opaque positive integers. Ruling order is canonical: rulings
/// are sorted by descending number of points, ties by ascending label, so
/// the first horizontal ruling carries the most points.
class GridPointSet {
 public:
  GridPointSet() = default;

  /// Throws InvalidInput on non-positive labels or duplicate cells.
  explicit GridPointSet(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::vector<int>& h_labels() const noexcept { return h_labels_; }
  const std::vector<int>& v_labels() const noexcept { return v_labels_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(Cell c) const;
  int max_label() const noexcept;

  friend bool operator==(const GridPointSet&, const GridPointSet&) = default;

 private:
  std::vector<Cell> cells_;  // sorted
  std::vector<int> h_labels_;
  std::vector<int> v_labels_;
};

/// A Ferrers-shaped point set: row i (1-based) holds the points
/// h_labels[i] x v_labels[j] for j <= alpha(i).
class AcmConfig {
 public:
  AcmConfig() = default;

  const Partition& alpha() const noexcept { return alpha_; }
  const std::vector<int>& h_labels() const noexcept { return h_labels_; }
  const std::vector<int>& v_labels() const noexcept { return v_labels_; }
  bool empty() const noexcept { return alpha_.empty(); }
  std::size_t rows() const noexcept { return alpha_.length(); }
  std::size_t cols() const noexcept {
    return static_cast<std::size_t>(alpha_.first());
  }

  GridPointSet to_grid() const;

  friend bool operator==(const AcmConfig&, const AcmConfig&) = default;

 private:
  friend AcmConfig acm_from_partition(const Partition&, std::vector<int>,
                                      std::vector<int>);
  Partition alpha_;
  std::vector<int> h_labels_;
  std::vector<int> v_labels_;
};

/// Row and column counts, each normalized: (alpha_X, beta_X).
std::pair<Partition, Partition> alpha_beta(const GridPointSet& x);

/// ACM exactly when conjugate(alpha_X) == beta_X.
bool is_acm(const GridPointSet& x);

/// Places the Ferrers diagram of alpha on the given rulings. Needs exactly
/// length(alpha) horizontal labels and at least alpha(1) vertical labels;
/// surplus vertical labels are ignored. Labels must be positive and distinct.
AcmConfig acm_from_partition(const Partition& alpha, std::vector<int> h_labels,
                             std::vector<int> v_labels);

/// Same with labels 1..length(alpha) and 1..alpha(1).
AcmConfig acm_from_partition(const Partition& alpha);

/// Reads an ACM grid back as a Ferrers configuration in canonical ruling
/// order. Returns nullopt when x is not ACM.
std::optional<AcmConfig> as_acm(const GridPointSet& x);

/// ASCII picture: one line per horizontal ruling in ascending label order,
/// '*' for a point and '.' for an empty grid cell.
std::string render_ferrers(const GridPointSet& x);

}  // namespace bisplit
