#include "bisplit/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "bisplit/error.hpp"

namespace bisplit::sampling {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Partition random_partition(Rng& rng, int max_rows, int max_part) {
  if (max_rows < 1 || max_part < 1) throw InvalidInput("partition bounds must be positive");
  std::vector<int> parts(static_cast<std::size_t>(uniform(rng, 1, max_rows)));
  for (int& p : parts) p = uniform(rng, 1, max_part);
  return Partition::normalize(parts);
}

Partition random_partition(Rng& rng, int max_rows, int max_part, std::size_t max_drops) {
  for (;;) {
    Partition p = random_partition(rng, max_rows, max_part);
    if (p.drops().size() <= max_drops) return p;
  }
}

AcmConfig random_acm(Rng& rng, int max_rows, int max_part, int label_pool) {
  const Partition alpha = random_partition(rng, max_rows, max_part);
  if (label_pool < std::max<int>(static_cast<int>(alpha.length()), alpha.first()))
    throw InvalidInput("label pool too small for the sampled shape");
  std::vector<int> pool(static_cast<std::size_t>(label_pool));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> h(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(alpha.length()));
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> v(pool.begin(), pool.begin() + alpha.first());
  return acm_from_partition(alpha, std::move(h), std::move(v));
}

Arrangement random_arrangement(Rng& rng, int max_lines, int max_rows, int max_part,
                               std::size_t max_drops) {
  const int lh = uniform(rng, 0, max_lines);
  const int lv = uniform(rng, 0, max_lines);
  return Arrangement::tight(lh, lv, random_partition(rng, max_rows, max_part, max_drops));
}

GridPointSet random_grid_subset(Rng& rng, int rows, int cols, int min_points, int max_points) {
  const int total = rows * cols;
  if (min_points < 0 || min_points > max_points || max_points > total)
    throw InvalidInput("point count bounds do not fit the grid");
  std::vector<Cell> all;
  for (int h = 1; h <= rows; ++h)
    for (int v = 1; v <= cols; ++v) all.push_back({h, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(uniform(rng, min_points, max_points)));
  return GridPointSet(std::move(all));
}

}  // namespace bisplit::sampling
