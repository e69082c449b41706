#include "orthocap/surfaces.hpp"

#include <cmath>
#include <stdexcept>

namespace orthocap {

namespace {

// Relative finite-difference steps: 1e-5 for first, 1e-4 for second
// derivatives (cancellation limits the second-difference step).
double grad_step(double x) { return 1e-5 * std::fmax(1.0, std::fabs(x)); }
double hess_step(double x) { return 1e-4 * std::fmax(1.0, std::fabs(x)); }

}  // namespace

double Curve1D::deriv(double x) const {
  if (df) return df(x);
  const double h = grad_step(x);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double Curve1D::deriv2(double x) const {
  if (ddf) return ddf(x);
  const double h = hess_step(x);
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

AnalyticSurface make_plane(Rect bounds, double z0) {
  bounds.require_nonempty();
  return {"plane", bounds,
          [z0](double, double) { return z0; },
          [](double, double) { return Vec2{0.0, 0.0}; },
          [](double, double) { return std::array<double, 3>{0.0, 0.0, 0.0}; }};
}

AnalyticSurface make_cos_cos(Rect bounds, double amplitude) {
  bounds.require_nonempty();
  const double a = amplitude;
  return {"coscos", bounds,
          [a](double x, double y) { return a * (std::cos(x) + std::cos(y)); },
          [a](double x, double y) {
            return Vec2{-a * std::sin(x), -a * std::sin(y)};
          },
          [a](double x, double y) {
            return std::array<double, 3>{-a * std::cos(x), 0.0, -a * std::cos(y)};
          }};
}

AnalyticSurface make_cos2_cos2(Rect bounds) {
  bounds.require_nonempty();
  return {"cos2cos2", bounds,
          [](double x, double y) {
            const double cx = std::cos(x), cy = std::cos(y);
            return cx * cx + cy * cy;
          },
          [](double x, double y) {
            return Vec2{-std::sin(2.0 * x), -std::sin(2.0 * y)};
          },
          [](double x, double y) {
            return std::array<double, 3>{-2.0 * std::cos(2.0 * x), 0.0,
                                         -2.0 * std::cos(2.0 * y)};
          }};
}

AnalyticSurface make_sphere(Rect bounds, double a) {
  bounds.require_nonempty();
  if (!(a > 0.0)) throw std::invalid_argument("sphere radius must be > 0");
  const double corner = std::hypot(std::fmax(std::fabs(bounds.xlo), std::fabs(bounds.xhi)),
                                   std::fmax(std::fabs(bounds.ylo), std::fabs(bounds.yhi)));
  if (corner >= a)
    throw std::invalid_argument("sphere bounds must lie strictly inside the equator");
  return {"sphere", bounds,
          [a](double x, double y) { return std::sqrt(a * a - x * x - y * y); },
          [a](double x, double y) {
            const double z = std::sqrt(a * a - x * x - y * y);
            return Vec2{-x / z, -y / z};
          },
          [a](double x, double y) {
            const double z = std::sqrt(a * a - x * x - y * y);
            const double z3 = z * z * z;
            return std::array<double, 3>{-1.0 / z - x * x / z3, -x * y / z3,
                                         -1.0 / z - y * y / z3};
          }};
}

AnalyticSurface make_pseudosphere(Rect bounds, double a) {
  bounds.require_nonempty();
  if (!(a > 0.0)) throw std::invalid_argument("pseudosphere radius must be > 0");
  // asech(u) = log((1 + sqrt(1 - u^2)) / u), 0 < u <= 1
  auto f = [a](double x, double y) {
    const double rho = std::hypot(x, y);
    const double u = rho / a;
    return a * std::log((1.0 + std::sqrt(1.0 - u * u)) / u) -
           std::sqrt(a * a - rho * rho);
  };
  // dz/drho = -sqrt(a^2 - rho^2) / rho; chain rule through rho(x, y).
  auto grad = [a](double x, double y) {
    const double rho = std::hypot(x, y);
    const double s = -std::sqrt(a * a - rho * rho) / rho;
    return Vec2{s * x / rho, s * y / rho};
  };
  return {"pseudosphere", bounds, f, grad, nullptr};
}

AnalyticSurface make_expression_surface(const std::string& text, Rect bounds) {
  bounds.require_nonempty();
  Expr expr = Expr::parse(text);
  return {"expr:" + text, bounds,
          [expr](double x, double y) { return expr.eval(x, y); },
          nullptr, nullptr};
}

Curve1D make_line_curve(double lo, double hi, double slope, double intercept) {
  return {"line", lo, hi,
          [slope, intercept](double x) { return slope * x + intercept; },
          [slope](double) { return slope; },
          [](double) { return 0.0; }};
}

Curve1D make_parabola_curve(double lo, double hi) {
  return {"x^2", lo, hi, [](double x) { return x * x; },
          [](double x) { return 2.0 * x; }, [](double) { return 2.0; }};
}

Curve1D make_sine_curve(double lo, double hi) {
  return {"sin", lo, hi, [](double x) { return std::sin(x); },
          [](double x) { return std::cos(x); },
          [](double x) { return -std::sin(x); }};
}

Curve1D make_abs_curve(double lo, double hi, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("|mx| slope must be > 0");
  return {"abs", lo, hi, [m](double x) { return std::fabs(m * x); },
          [m](double x) { return x == 0.0 ? 0.0 : (x > 0.0 ? m : -m); },
          [](double) { return 0.0; }};
}

Curve1D make_bowl_curve(double radius, double margin) {
  if (!(radius > 0.0)) throw std::invalid_argument("bowl radius must be > 0");
  const double r = radius;
  return {"bowl", -radius + margin, radius - margin,
          [r](double x) { return -std::sqrt(r * r - x * x); },
          [r](double x) { return x / std::sqrt(r * r - x * x); },
          [r](double x) {
            const double w = r * r - x * x;
            return r * r / (w * std::sqrt(w));
          }};
}

Curve1D make_expression_curve(const std::string& text, double lo, double hi) {
  Expr expr = Expr::parse(text);
  return {"expr:" + text, lo, hi,
          [expr](double x) { return expr.eval(x, 0.0); }, nullptr, nullptr};
}

SurfaceModel::SurfaceModel(AnalyticSurface surface)
    : name_(surface.name), bounds_(surface.bounds) {
  bounds_.require_nonempty();
  if (!surface.f) throw std::invalid_argument("analytic surface has no function");
  backing_ = std::move(surface);
}

SurfaceModel::SurfaceModel(HeightField field) {
  field.validate();
  auto backing = std::make_shared<FieldBacking>();
  auto [gx, gy] = numerical_gradient(field);
  // Second differences come from differentiating the gradient grids; fxy is
  // the average of the two mixed estimates to keep the Hessian symmetric.
  auto [gxx, gxy_a] = numerical_gradient(gx);
  auto [gyx_b, gyy] = numerical_gradient(gy);
  Grid2D hxy = gxy_a;
  for (size_t k = 0; k < hxy.data.size(); ++k)
    hxy.data[k] = 0.5 * (gxy_a.data[k] + gyx_b.data[k]);
  backing->field = std::move(field);
  backing->gx = std::move(gx);
  backing->gy = std::move(gy);
  backing->hxx = std::move(gxx);
  backing->hxy = std::move(hxy);
  backing->hyy = std::move(gyy);
  name_ = "heightfield";
  bounds_ = backing->field.bounds();
  backing_ = std::move(backing);
}

bool SurfaceModel::is_heightfield() const {
  return std::holds_alternative<std::shared_ptr<const FieldBacking>>(backing_);
}

void SurfaceModel::require_inside(const Vec2& point) const {
  if (!bounds_.contains(point))
    throw std::domain_error("surface query outside bounds");
}

namespace {

double bilinear(const Grid2D& g, const Vec2& p) {
  // Clamp the cell so queries on the high edge interpolate inside the last
  // cell with weight 1.
  double fx = (p.x - g.origin.x) / g.spacing;
  double fy = (p.y - g.origin.y) / g.spacing;
  int j = std::min(static_cast<int>(std::floor(fx)), g.cols - 2);
  int i = std::min(static_cast<int>(std::floor(fy)), g.rows - 2);
  j = std::max(j, 0);
  i = std::max(i, 0);
  const double u = fx - j;
  const double v = fy - i;
  return (1.0 - u) * (1.0 - v) * g.at(i, j) + u * (1.0 - v) * g.at(i, j + 1) +
         (1.0 - u) * v * g.at(i + 1, j) + u * v * g.at(i + 1, j + 1);
}

}  // namespace

SurfaceSample SurfaceModel::query(const Vec2& point) const {
  require_inside(point);
  SurfaceSample s;
  if (const auto* analytic = std::get_if<AnalyticSurface>(&backing_)) {
    const double x = point.x, y = point.y;
    s.z = analytic->f(x, y);
    if (analytic->grad) {
      const Vec2 g = analytic->grad(x, y);
      s.p = g.x;
      s.q = g.y;
    } else {
      const double hx = grad_step(x), hy = grad_step(y);
      s.p = (analytic->f(x + hx, y) - analytic->f(x - hx, y)) / (2.0 * hx);
      s.q = (analytic->f(x, y + hy) - analytic->f(x, y - hy)) / (2.0 * hy);
    }
    if (analytic->hess) {
      const auto h = analytic->hess(x, y);
      s.fxx = h[0];
      s.fxy = h[1];
      s.fyy = h[2];
    } else {
      const double hx = hess_step(x), hy = hess_step(y);
      const double f0 = s.z;
      s.fxx = (analytic->f(x + hx, y) - 2.0 * f0 + analytic->f(x - hx, y)) / (hx * hx);
      s.fyy = (analytic->f(x, y + hy) - 2.0 * f0 + analytic->f(x, y - hy)) / (hy * hy);
      s.fxy = (analytic->f(x + hx, y + hy) - analytic->f(x + hx, y - hy) -
               analytic->f(x - hx, y + hy) + analytic->f(x - hx, y - hy)) /
              (4.0 * hx * hy);
    }
    return s;
  }
  const auto& fb = **std::get_if<std::shared_ptr<const FieldBacking>>(&backing_);
  s.z = bilinear(fb.field, point);
  s.p = bilinear(fb.gx, point);
  s.q = bilinear(fb.gy, point);
  s.fxx = bilinear(fb.hxx, point);
  s.fxy = bilinear(fb.hxy, point);
  s.fyy = bilinear(fb.hyy, point);
  return s;
}

double SurfaceModel::elevation(const Vec2& point) const {
  require_inside(point);
  if (const auto* analytic = std::get_if<AnalyticSurface>(&backing_))
    return analytic->f(point.x, point.y);
  const auto& fb = **std::get_if<std::shared_ptr<const FieldBacking>>(&backing_);
  return bilinear(fb.field, point);
}

double SurfaceModel::elevation_unbounded(const Vec2& point) const {
  if (const auto* analytic = std::get_if<AnalyticSurface>(&backing_))
    return analytic->f(point.x, point.y);
  if (!bounds_.contains(point)) return std::nan("");
  const auto& fb = **std::get_if<std::shared_ptr<const FieldBacking>>(&backing_);
  return bilinear(fb.field, point);
}

Vec3 SurfaceModel::unit_normal(const Vec2& point) const {
  const SurfaceSample s = query(point);
  const double inv = 1.0 / std::sqrt(s.p * s.p + s.q * s.q + 1.0);
  return {-s.p * inv, -s.q * inv, inv};
}

}  // namespace orthocap
