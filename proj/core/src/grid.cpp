#include "bisplit/grid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bisplit/error.hpp"

namespace bisplit {

namespace {

// Canonical ruling order: descending count, ties by ascending label.
std::vector<int> canonical_order(const std::map<int, int>& counts) {
  std::vector<std::pair<int, int>> items(counts.begin(), counts.end());
  std::stable_sort(items.begin(), items.end(), [](auto& l, auto& r) {
    return l.second > r.second;
  });
  std::vector<int> labels;
  labels.reserve(items.size());
  for (auto& [label, count] : items) labels.push_back(label);
  return labels;
}

void check_distinct_positive(const std::vector<int>& labels,
                             const char* what) {
  std::set<int> seen;
  for (int l : labels) {
    if (l < 1) throw InvalidInput(std::string(what) + " labels must be positive");
    if (!seen.insert(l).second)
      throw InvalidInput(std::string("duplicate ") + what + " label " +
                         std::to_string(l));
  }
}

}  // namespace

GridPointSet::GridPointSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw InvalidInput("duplicate cell in point set");
  std::map<int, int> rows;
  std::map<int, int> cols;
  for (const Cell& c : cells_) {
    if (c.h < 1 || c.v < 1)
      throw InvalidInput("ruling labels must be positive integers");
    ++rows[c.h];
    ++cols[c.v];
  }
  h_labels_ = canonical_order(rows);
  v_labels_ = canonical_order(cols);
}

bool GridPointSet::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

int GridPointSet::max_label() const noexcept {
  int m = 0;
  for (const Cell& c : cells_) m = std::max({m, c.h, c.v});
  return m;
}

GridPointSet AcmConfig::to_grid() const {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < alpha_.length(); ++i)
    for (int j = 0; j < alpha_.parts()[i]; ++j)
      cells.push_back({h_labels_[i], v_labels_[static_cast<std::size_t>(j)]});
  return GridPointSet(std::move(cells));
}

std::pair<Partition, Partition> alpha_beta(const GridPointSet& x) {
  std::map<int, int> rows;
  std::map<int, int> cols;
  for (const Cell& c : x.cells()) {
    ++rows[c.h];
    ++cols[c.v];
  }
  std::vector<int> a;
  std::vector<int> b;
  for (auto& [label, n] : rows) a.push_back(n);
  for (auto& [label, n] : cols) b.push_back(n);
  return {Partition::normalize(a), Partition::normalize(b)};
}

bool is_acm(const GridPointSet& x) {
  auto [alpha, beta] = alpha_beta(x);
  return alpha.conjugate() == beta;
}

AcmConfig acm_from_partition(const Partition& alpha, std::vector<int> h_labels,
                             std::vector<int> v_labels) {
  if (h_labels.size() != alpha.length())
    throw InvalidInput("need exactly " + std::to_string(alpha.length()) +
                       " horizontal labels, got " +
                       std::to_string(h_labels.size()));
  const auto cols = static_cast<std::size_t>(alpha.first());
  if (v_labels.size() < cols)
    throw InvalidInput("need at least " + std::to_string(cols) +
                       " vertical labels, got " +
                       std::to_string(v_labels.size()));
  v_labels.resize(cols);
  check_distinct_positive(h_labels, "horizontal");
  check_distinct_positive(v_labels, "vertical");
  AcmConfig c;
  c.alpha_ = alpha;
  c.h_labels_ = std::move(h_labels);
  c.v_labels_ = std::move(v_labels);
  return c;
}

AcmConfig acm_from_partition(const Partition& alpha) {
  std::vector<int> h(alpha.length());
  std::vector<int> v(static_cast<std::size_t>(alpha.first()));
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = static_cast<int>(i) + 1;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = static_cast<int>(j) + 1;
  return acm_from_partition(alpha, std::move(h), std::move(v));
}

std::optional<AcmConfig> as_acm(const GridPointSet& x) {
  if (!is_acm(x)) return std::nullopt;
  auto [alpha, beta] = alpha_beta(x);
  AcmConfig c = acm_from_partition(alpha, x.h_labels(), x.v_labels());
  // Nested rows make the canonical order a Ferrers placement.
  if (c.to_grid() != x) return std::nullopt;
  return c;
}

std::string render_ferrers(const GridPointSet& x) {
  std::vector<int> rows = x.h_labels();
  std::vector<int> cols = x.v_labels();
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::string out;
  for (int r : rows) {
    for (int c : cols) out += x.contains({r, c}) ? '*' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace bisplit
