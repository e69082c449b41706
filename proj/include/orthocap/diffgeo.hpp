#pragma once

#include <cstdint>
#include <vector>

#include "orthocap/surfaces.hpp"

namespace orthocap {

/// Gaussian curvature K = (fxx fyy - fxy^2) / (1 + p^2 + q^2)^2.
double gaussian_curvature(const SurfaceModel& model, const Vec2& point);

/// Mean curvature H = ((1+p^2) fyy + (1+q^2) fxx - 2 p q fxy)
///                    / (2 (1 + p^2 + q^2)^(3/2)).
double mean_curvature(const SurfaceModel& model, const Vec2& point);

/// Plane-curve curvature |f''| / (1 + f'^2)^(3/2) of the graph (x, f(x)).
double curve_curvature(const Curve1D& curve, double x);

/// Max of |K| over a uniform grid_res x grid_res sample of the bounds.
double max_abs_gaussian_curvature(const SurfaceModel& model, int grid_res = 201);

/// K sampled over the bounds (for contour rendering / export).
Grid2D gaussian_curvature_grid(const SurfaceModel& model, int grid_res);
Grid2D mean_curvature_grid(const SurfaceModel& model, int grid_res);

/// Surface offset at distance d along the upward unit normal:
///   x' = x - d p / s,  y' = y - d q / s,  z' = z + d / s,
/// with s = sqrt(p^2 + q^2 + 1). A point is valid unless it fell below the
/// surface (z' < f(x', y')); offsets that leave the bounds horizontally have
/// nothing to collide with and stay valid.
struct ImagingSurface {
  int rows = 0;
  int cols = 0;
  double d = 0.0;
  Rect source_bounds;
  std::vector<Vec3> points;        // row-major
  std::vector<uint8_t> valid;      // row-major, 0/1
  std::vector<Vec3> sources;       // surface points the offsets started from

  size_t index(int i, int j) const { return static_cast<size_t>(i) * cols + j; }
  size_t invalid_count() const;
};

ImagingSurface imaging_surface(const SurfaceModel& model, double d, int grid_res);

/// 1D analogue: x' = x - d f' / s, y' = f(x) + d / s with s = sqrt(1 + f'^2).
struct ImagingCurve {
  double d = 0.0;
  std::vector<double> source_x;
  std::vector<Vec2> points;
  std::vector<uint8_t> valid;

  bool all_valid() const;
  size_t invalid_count() const;
};

ImagingCurve imaging_curve(const Curve1D& curve, double d, int res = 2000);

/// Upper bound on the imaging height of a curve, found by bisection between
/// 0 and u_cap. "A solution exists" is decided by dense-sampling the imaging
/// curve at `res` points and looking for any invalid one.
struct HeightBound {
  bool bounded = false;
  double value = 0.0;  // meaningful when bounded
};

HeightBound max_valid_height_1d(const Curve1D& curve, double tol = 1e-3,
                                double u_cap = 100.0, int res = 2000);

}  // namespace orthocap
