#include "orthocap/diffgeo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace orthocap {

double gaussian_curvature(const SurfaceModel& model, const Vec2& point) {
  const SurfaceSample s = model.query(point);
  const double w = 1.0 + s.p * s.p + s.q * s.q;
  return (s.fxx * s.fyy - s.fxy * s.fxy) / (w * w);
}

double mean_curvature(const SurfaceModel& model, const Vec2& point) {
  const SurfaceSample s = model.query(point);
  const double w = 1.0 + s.p * s.p + s.q * s.q;
  return ((1.0 + s.p * s.p) * s.fyy + (1.0 + s.q * s.q) * s.fxx -
          2.0 * s.p * s.q * s.fxy) /
         (2.0 * w * std::sqrt(w));
}

double curve_curvature(const Curve1D& curve, double x) {
  const double d1 = curve.deriv(x);
  const double d2 = curve.deriv2(x);
  const double w = 1.0 + d1 * d1;
  return std::fabs(d2) / (w * std::sqrt(w));
}

namespace {

Grid2D curvature_grid(const SurfaceModel& model, int grid_res, bool gaussian) {
  if (grid_res < 2) throw std::invalid_argument("grid_res must be >= 2");
  const Rect b = model.bounds();
  // Uniform sample of the bounds; spacing may differ per axis, so keep the
  // x step as the grid spacing and stretch rows accordingly.
  const double sx = b.width() / (grid_res - 1);
  const double sy = b.height() / (grid_res - 1);
  Grid2D g(grid_res, grid_res, 0.0, sx, {b.xlo, b.ylo});
  for (int i = 0; i < grid_res; ++i) {
    const double y = (i == grid_res - 1) ? b.yhi : b.ylo + i * sy;
    for (int j = 0; j < grid_res; ++j) {
      const double x = (j == grid_res - 1) ? b.xhi : b.xlo + j * sx;
      g.at(i, j) = gaussian ? gaussian_curvature(model, {x, y})
                            : mean_curvature(model, {x, y});
    }
  }
  return g;
}

}  // namespace

Grid2D gaussian_curvature_grid(const SurfaceModel& model, int grid_res) {
  return curvature_grid(model, grid_res, true);
}

Grid2D mean_curvature_grid(const SurfaceModel& model, int grid_res) {
  return curvature_grid(model, grid_res, false);
}

double max_abs_gaussian_curvature(const SurfaceModel& model, int grid_res) {
  const Grid2D g = gaussian_curvature_grid(model, grid_res);
  double kmax = 0.0;
  for (double v : g.data) kmax = std::fmax(kmax, std::fabs(v));
  return kmax;
}

size_t ImagingSurface::invalid_count() const {
  return static_cast<size_t>(
      std::count(valid.begin(), valid.end(), static_cast<uint8_t>(0)));
}

ImagingSurface imaging_surface(const SurfaceModel& model, double d,
                               int grid_res) {
  if (!(d > 0.0)) throw std::invalid_argument("imaging height d must be > 0");
  if (grid_res < 2) throw std::invalid_argument("grid_res must be >= 2");

  const Rect b = model.bounds();
  ImagingSurface out;
  out.rows = grid_res;
  out.cols = grid_res;
  out.d = d;
  out.source_bounds = b;
  out.points.resize(static_cast<size_t>(grid_res) * grid_res);
  out.sources.resize(out.points.size());
  out.valid.assign(out.points.size(), 1);

  const double sx = b.width() / (grid_res - 1);
  const double sy = b.height() / (grid_res - 1);
  for (int i = 0; i < grid_res; ++i) {
    const double y = (i == grid_res - 1) ? b.yhi : b.ylo + i * sy;
    for (int j = 0; j < grid_res; ++j) {
      const double x = (j == grid_res - 1) ? b.xhi : b.xlo + j * sx;
      const SurfaceSample s = model.query({x, y});
      const double inv = 1.0 / std::sqrt(s.p * s.p + s.q * s.q + 1.0);
      const Vec3 img{x - d * s.p * inv, y - d * s.q * inv, s.z + d * inv};
      const size_t k = out.index(i, j);
      out.sources[k] = {x, y, s.z};
      out.points[k] = img;
      // The foot point may leave the bounds; where the surface has no value
      // (NaN) the comparison is false and the point stays valid.
      if (img.z < model.elevation_unbounded({img.x, img.y})) out.valid[k] = 0;
    }
  }
  return out;
}

bool ImagingCurve::all_valid() const {
  return std::all_of(valid.begin(), valid.end(),
                     [](uint8_t v) { return v != 0; });
}

size_t ImagingCurve::invalid_count() const {
  return static_cast<size_t>(
      std::count(valid.begin(), valid.end(), static_cast<uint8_t>(0)));
}

ImagingCurve imaging_curve(const Curve1D& curve, double d, int res) {
  if (!(d > 0.0)) throw std::invalid_argument("imaging height d must be > 0");
  if (res < 2) throw std::invalid_argument("res must be >= 2");
  if (!(curve.lo < curve.hi))
    throw std::invalid_argument("curve domain is empty");

  ImagingCurve out;
  out.d = d;
  out.source_x.resize(res);
  out.points.resize(res);
  out.valid.assign(res, 1);

  const double step = (curve.hi - curve.lo) / (res - 1);
  for (int k = 0; k < res; ++k) {
    const double x = (k == res - 1) ? curve.hi : curve.lo + k * step;
    const double fx = curve.eval(x);
    if (!std::isfinite(fx))
      throw std::invalid_argument("curve is non-finite on its domain");
    const double slope = curve.deriv(x);
    const double inv = 1.0 / std::sqrt(1.0 + slope * slope);
    const Vec2 img{x - d * slope * inv, fx + d * inv};
    out.source_x[k] = x;
    out.points[k] = img;
    // f is evaluated at x' as given, even beyond the sampled range; a
    // non-finite value there means no surface to collide with.
    if (img.y < curve.eval(img.x)) out.valid[k] = 0;
  }
  return out;
}

HeightBound max_valid_height_1d(const Curve1D& curve, double tol, double u_cap,
                                int res) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (!(u_cap > 0.0)) throw std::invalid_argument("u_cap must be > 0");

  auto is_valid = [&](double d) { return imaging_curve(curve, d, res).all_valid(); };

  if (is_valid(u_cap)) return {false, 0.0};

  // Bracket invariant: lo is valid (d = 0 trivially is, the offset vanishes),
  // hi is invalid.
  double lo = 0.0, hi = u_cap;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (is_valid(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {true, 0.5 * (lo + hi)};
}

}  // namespace orthocap
