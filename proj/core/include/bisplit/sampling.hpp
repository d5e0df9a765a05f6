#pragma once

#include <cstddef>
#include <random>

#include "bisplit/grid.hpp"
#include "bisplit/partition.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit::sampling {

using Rng = std::mt19937_64;

/// Nonempty partition with at most max_rows parts, each at most max_part.
Partition random_partition(Rng& rng, int max_rows, int max_part);

/// Same, rejecting shapes with more than max_drops drops (so the ideal has
/// at most max_drops + 2 generators).
Partition random_partition(Rng& rng, int max_rows, int max_part, std::size_t max_drops);

/// Ferrers configuration on shuffled labels drawn from 1..label_pool.
AcmConfig random_acm(Rng& rng, int max_rows, int max_part, int label_pool);

/// Up to max_lines lines of each orientation in front of a random point
/// part, on the tight ambient.
Arrangement random_arrangement(Rng& rng, int max_lines, int max_rows, int max_part,
                               std::size_t max_drops);

/// min_points..max_points distinct cells of a rows x cols grid, labels
/// 1..rows and 1..cols.
GridPointSet random_grid_subset(Rng& rng, int rows, int cols, int min_points, int max_points);

}  // namespace bisplit::sampling
