#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "orthocap/expr.hpp"
#include "orthocap/geometry.hpp"
#include "orthocap/grid.hpp"

namespace orthocap {

/// Bivariate surface z = f(x, y) on a rectangular domain. Closed-form
/// partials are optional; queries fall back to finite differences with a
/// relative step when they are absent.
struct AnalyticSurface {
  std::string name;
  Rect bounds;
  std::function<double(double, double)> f;
  // First partials (p, q); optional.
  std::function<Vec2(double, double)> grad;
  // Second partials (fxx, fxy, fyy); optional.
  std::function<std::array<double, 3>(double, double)> hess;
};

/// Univariate curve y = f(x) on [lo, hi] with optional closed-form
/// derivatives, used by the one-dimensional analyses.
struct Curve1D {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::function<double(double)> f;
  std::function<double(double)> df;    // optional
  std::function<double(double)> ddf;   // optional

  double eval(double x) const { return f(x); }
  double deriv(double x) const;
  double deriv2(double x) const;
};

// Built-in surfaces.
AnalyticSurface make_plane(Rect bounds, double z0 = 0.0);
AnalyticSurface make_cos_cos(Rect bounds, double amplitude = 1.0);
AnalyticSurface make_cos2_cos2(Rect bounds);
/// Upper hemisphere z = sqrt(a^2 - x^2 - y^2); bounds must stay strictly
/// inside the equator circle of radius a.
AnalyticSurface make_sphere(Rect bounds, double a);
/// Tractricoid z = a*asech(rho/a) - sqrt(a^2 - rho^2), rho = hypot(x, y);
/// constant Gaussian curvature -1/a^2. Singular at rho = 0, so bounds must
/// exclude a neighborhood of the axis.
AnalyticSurface make_pseudosphere(Rect bounds, double a);
AnalyticSurface make_expression_surface(const std::string& text, Rect bounds);

// Built-in curves.
Curve1D make_line_curve(double lo, double hi, double slope = 0.0,
                        double intercept = 0.0);
Curve1D make_parabola_curve(double lo, double hi);
Curve1D make_sine_curve(double lo, double hi);
/// g(m, x) = |m x| with the derivative at 0 defined as the one-sided average.
Curve1D make_abs_curve(double lo, double hi, double m);
/// Lower semicircle ("bowl") y = -sqrt(r^2 - x^2) whose normals all pass
/// through the center (0, 0).
Curve1D make_bowl_curve(double radius, double margin = 1e-3);
Curve1D make_expression_curve(const std::string& text, double lo, double hi);

/// Sample of the surface at one point: elevation, gradient and Hessian.
struct SurfaceSample {
  double z = 0.0;
  double p = 0.0;    // df/dx
  double q = 0.0;    // df/dy
  double fxx = 0.0;
  double fxy = 0.0;
  double fyy = 0.0;
};

/// Unified queryable surface over either an analytic function or a
/// heightfield. Immutable after construction; safe to share across threads.
class SurfaceModel {
 public:
  explicit SurfaceModel(AnalyticSurface surface);
  /// Heightfield backing precomputes gradient and second-difference grids;
  /// off-grid queries interpolate bilinearly.
  explicit SurfaceModel(HeightField field);

  const Rect& bounds() const { return bounds_; }
  bool is_heightfield() const;
  const std::string& name() const { return name_; }

  /// Throws std::domain_error when the point is outside the bounds.
  SurfaceSample query(const Vec2& point) const;
  double elevation(const Vec2& point) const;

  /// Elevation without the bounds check, for collision tests whose foot
  /// point may leave the domain: analytic backings evaluate f directly,
  /// heightfields return NaN outside their grid.
  double elevation_unbounded(const Vec2& point) const;

  /// Upward-oriented unit normal [-p, -q, 1] / sqrt(p^2 + q^2 + 1).
  Vec3 unit_normal(const Vec2& point) const;

 private:
  struct FieldBacking {
    HeightField field;
    Grid2D gx, gy, hxx, hxy, hyy;
  };

  void require_inside(const Vec2& point) const;

  std::string name_;
  Rect bounds_;
  std::variant<AnalyticSurface, std::shared_ptr<const FieldBacking>> backing_;
};

}  // namespace orthocap
