#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orthocap/plan.hpp"

namespace orthocap {

/// Per-cell allocation of the covered area to capture circles. Cells are the
/// grid_res x grid_res raster of the bounds, sampled at cell centers;
/// label -1 marks cells inside no circle.
struct LabelGrid {
  Rect bounds;
  int res = 0;
  std::vector<int32_t> labels;  // row-major, row i advances +y

  int32_t label(int i, int j) const {
    return labels[static_cast<size_t>(i) * res + j];
  }
  Vec2 cell_center(int i, int j) const {
    return {bounds.xlo + (j + 0.5) * bounds.width() / res,
            bounds.ylo + (i + 0.5) * bounds.height() / res};
  }
  size_t unassigned_count() const;
};

/// Nearest-containing-center allocation: every cell inside at least one
/// circle goes to the containing circle whose center is closest; exact ties
/// go to the lowest circle index.
LabelGrid assign_points(std::span<const Circle> circles, const Rect& bounds,
                        int grid_res);

/// Perpendicular-bisector separator between two overlapping circles, clipped
/// to their lens.
struct BoundarySegment {
  Vec2 a;
  Vec2 b;
  int first = 0;   // circle indices, first < second
  int second = 0;
};

/// One segment per overlapping pair whose bisector actually crosses the
/// lens; disjoint and concentric pairs emit nothing.
std::vector<BoundarySegment> decision_boundaries(std::span<const Circle> circles);

}  // namespace orthocap
