#include "orthocap/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orthocap {

size_t LabelGrid::unassigned_count() const {
  return static_cast<size_t>(
      std::count(labels.begin(), labels.end(), static_cast<int32_t>(-1)));
}

LabelGrid assign_points(std::span<const Circle> circles, const Rect& bounds,
                        int grid_res) {
  bounds.require_nonempty();
  if (circles.empty()) throw std::invalid_argument("need at least one circle");
  if (grid_res < 1) throw std::invalid_argument("grid_res must be >= 1");

  LabelGrid grid;
  grid.bounds = bounds;
  grid.res = grid_res;
  grid.labels.assign(static_cast<size_t>(grid_res) * grid_res, -1);

  for (int i = 0; i < grid_res; ++i) {
    for (int j = 0; j < grid_res; ++j) {
      const Vec2 p = grid.cell_center(i, j);
      int32_t best = -1;
      double best_d2 = 0.0;
      for (size_t k = 0; k < circles.size(); ++k) {
        const Vec2 delta = p - circles[k].center;
        const double d2 = delta.dot(delta);
        if (d2 > circles[k].radius * circles[k].radius) continue;
        // Strict < keeps the lowest index on exact ties.
        if (best < 0 || d2 < best_d2) {
          best = static_cast<int32_t>(k);
          best_d2 = d2;
        }
      }
      grid.labels[static_cast<size_t>(i) * grid_res + j] = best;
    }
  }
  return grid;
}

std::vector<BoundarySegment> decision_boundaries(
    std::span<const Circle> circles) {
  if (circles.size() < 2)
    throw std::invalid_argument("decision boundaries need >= 2 circles");

  std::vector<BoundarySegment> segments;
  for (size_t i = 0; i < circles.size(); ++i) {
    for (size_t j = i + 1; j < circles.size(); ++j) {
      const Vec2 c1 = circles[i].center, c2 = circles[j].center;
      const double r1 = circles[i].radius, r2 = circles[j].radius;
      const double dist = (c2 - c1).norm();
      if (dist <= 0.0 || dist >= r1 + r2) continue;

      // The bisector line is mid + t * u with u perpendicular to the center
      // segment; a point at parameter t is sqrt((D/2)^2 + t^2) from either
      // center, so it stays inside circle k while t^2 <= rk^2 - (D/2)^2.
      const double half2 = 0.25 * dist * dist;
      const double t2 = std::fmin(r1 * r1, r2 * r2) - half2;
      if (t2 <= 0.0) continue;  // bisector misses the lens entirely

      const double t = std::sqrt(t2);
      const Vec2 mid = (c1 + c2) * 0.5;
      const Vec2 axis = (c2 - c1) * (1.0 / dist);
      const Vec2 perp{-axis.y, axis.x};
      segments.push_back({mid + perp * t, mid - perp * t,
                          static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return segments;
}

}  // namespace orthocap
