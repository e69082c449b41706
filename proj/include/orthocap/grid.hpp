#pragma once

#include <utility>
#include <vector>

#include "orthocap/geometry.hpp"

namespace orthocap {

/// Row-major grid of scalar samples on a uniform lattice. Row i advances +y,
/// column j advances +x, both in steps of `spacing` from `origin`, so the
/// value at (i, j) sits at world point (origin.x + j*spacing,
/// origin.y + i*spacing). Used for elevation fields, gradient fields,
/// curvature maps and density accumulators alike.
struct Grid2D {
  int rows = 0;
  int cols = 0;
  double spacing = 1.0;
  Vec2 origin{0.0, 0.0};
  std::vector<double> data;

  Grid2D() = default;
  Grid2D(int rows_, int cols_, double value = 0.0, double spacing_ = 1.0,
         Vec2 origin_ = {0.0, 0.0});

  double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }

  Vec2 world_point(int i, int j) const {
    return {origin.x + j * spacing, origin.y + i * spacing};
  }

  /// World rectangle spanned by the outermost sample points.
  Rect bounds() const {
    return {origin.x, origin.x + (cols - 1) * spacing, origin.y,
            origin.y + (rows - 1) * spacing};
  }

  std::pair<double, double> min_max() const;

  /// Enforces the structural invariants (dims >= 2, finite data, spacing > 0).
  void validate() const;
};

/// Elevation grid; elevations are in image units [0, 255] when loaded from a
/// DEM but arbitrary finite values are allowed.
using HeightField = Grid2D;

/// Mean filter with an n x n window, n odd. Edges use replicate padding so
/// the output keeps the input dimensions.
HeightField mean_smooth(const HeightField& field, int n);

/// Numerical gradient per axis: central differences at interior samples,
/// single-sided at the edges, divided by the grid spacing. Returns (Gx, Gy).
std::pair<Grid2D, Grid2D> numerical_gradient(const HeightField& field);

}  // namespace orthocap
