#pragma once

#include "bisplit/grid.hpp"
#include "bisplit/staircase.hpp"

namespace bisplit::testing {

// The 20-point running example: rows of 5,4,3,3,2,2,1 points.
inline const Partition kRunexAlpha{5, 4, 3, 3, 2, 2, 1};

inline AcmConfig runex() { return acm_from_partition(kRunexAlpha); }
inline Arrangement runex_arrangement() { return attach_lines(runex(), 0, 0); }

// Six points on H1..H3 x V1..V4 with rows of 3,2,1 points; not ACM.
inline GridPointSet six_points() {
  return GridPointSet({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 4}});
}

}  // namespace bisplit::testing
