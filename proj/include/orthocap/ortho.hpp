#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "orthocap/surfaces.hpp"

namespace orthocap {

/// Imaging parameters for the epsilon-orthographic analysis.
struct OrthoParams {
  double d = 3.0;          // imaging height
  double eps = 0.0;        // angular FOV, radians
  double dx = 0.01;        // march resolution, x
  double dy = 0.01;        // march resolution, y
  double m = 5.0;          // max/min radius ratio of the circular model
  bool linearized = false; // use the Hessian linearization for candidate
                           // gradients instead of exact evaluation

  /// Largest boundary radius R = d tan(eps).
  double radius_cap() const;
  void validate() const;
};

/// Exact region as a lattice mask around the query point. Cell (i1, i2)
/// covers the offset (i1 * dx, i2 * dy) from the center; the mask always
/// contains its center cell.
struct RegionMask {
  Vec2 center;
  double dx = 0.0;
  double dy = 0.0;
  int half_nx = 0;  // lattice extent per axis
  int half_ny = 0;
  std::vector<uint8_t> cells;  // (2*half_ny+1) rows x (2*half_nx+1) cols

  int cols() const { return 2 * half_nx + 1; }
  int rows() const { return 2 * half_ny + 1; }
  bool cell(int i1, int i2) const;  // i1 along x, i2 along y
  size_t count() const;
  Vec2 cell_point(int i1, int i2) const {
    return {center.x + i1 * dx, center.y + i2 * dy};
  }
};

struct PolygonBoundary {
  Vec2 center;  // query point the rays started from
  std::vector<Vec2> vertices;
};

struct EllipseBoundary {
  Vec2 center;  // midpoint of the longest diagonal (not the query point)
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double angle = 0.0;  // radians, orientation of the major axis
};

struct CircleBoundary {
  Vec2 center;
  double radius = 0.0;
};

using RegionBoundary =
    std::variant<RegionMask, PolygonBoundary, EllipseBoundary, CircleBoundary>;

/// Orthographic bounds of a curve around x0: marches outward in steps of dx
/// while both the FOV angle theta = atan(|x - x0| / d) and the normal
/// deviation phi stay within eps. Returns (left, right), clamped to the
/// curve domain.
std::pair<double, double> curve_ortho_bounds(const Curve1D& curve, double x0,
                                             const OrthoParams& params);

/// All integer pairs with |n1| + |n2| = n, counter-clockwise from (n, 0).
/// Exactly 4n pairs.
std::vector<std::pair<int, int>> pair_gen(int n);

/// Exact epsilon-orthographic region by expanding lattice rings until four
/// consecutive rings accept nothing.
RegionMask surface_ortho_region(const SurfaceModel& model, const Vec2& p0,
                                const OrthoParams& params);

/// Boundary point in each of n_dirs equiangular directions (last point that
/// passes the theta/phi tests).
PolygonBoundary approx_polygonal(const SurfaceModel& model, const Vec2& p0,
                                 const OrthoParams& params, int n_dirs = 16);

/// Ellipse spanned by the longest and shortest diagonals of an even-sided
/// polygon approximation.
EllipseBoundary approx_elliptical(const PolygonBoundary& polygon);

/// Circle centered at the query point with the mean vertex distance as
/// radius.
CircleBoundary approx_circular_avg(const PolygonBoundary& polygon);

/// Curvature-attenuated circular radius
///   r = R - (|K| / Kmax) * R * (1 - 1/m),  R = d tan(eps),
/// clamped to [R/m, R]; returns R when Kmax = 0 (plane limit).
double radius_from_curvature(double abs_k, double k_max,
                             const OrthoParams& params);

/// radius_from_curvature evaluated with K(point) of the model.
double approx_radius_curvature(const SurfaceModel& model, const Vec2& point,
                               const OrthoParams& params, double k_max);

}  // namespace orthocap
