#include "orthocap/ortho.hpp"

#include "orthocap/diffgeo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orthocap {

double OrthoParams::radius_cap() const { return d * std::tan(eps); }

void OrthoParams::validate() const {
  if (!(d > 0.0)) throw std::invalid_argument("imaging height d must be > 0");
  if (!(eps > 0.0 && eps < kPi / 2.0))
    throw std::invalid_argument("eps must lie in (0, pi/2)");
  if (!(dx > 0.0 && dy > 0.0))
    throw std::invalid_argument("march resolutions must be > 0");
  if (!(m >= 1.0)) throw std::invalid_argument("radius ratio m must be >= 1");
}

bool RegionMask::cell(int i1, int i2) const {
  if (std::abs(i1) > half_nx || std::abs(i2) > half_ny) return false;
  const size_t row = static_cast<size_t>(i2 + half_ny);
  return cells[row * cols() + (i1 + half_nx)] != 0;
}

size_t RegionMask::count() const {
  return static_cast<size_t>(std::count(cells.begin(), cells.end(),
                                        static_cast<uint8_t>(1)));
}

namespace {

double clamped_acos(double c) {
  return std::acos(std::fmin(1.0, std::fmax(-1.0, c)));
}

// Angle between curve normals with slopes p and p_cand.
double curve_phi(double p, double p_cand) {
  const double c = (p * p_cand + 1.0) /
                   (std::sqrt(p * p + 1.0) * std::sqrt(p_cand * p_cand + 1.0));
  return clamped_acos(c);
}

// Angle between surface normals with gradients (p,q) and (pc,qc).
double surface_phi(double p, double q, double pc, double qc) {
  const double c = (p * pc + q * qc + 1.0) /
                   (std::sqrt(p * p + q * q + 1.0) *
                    std::sqrt(pc * pc + qc * qc + 1.0));
  return clamped_acos(c);
}

}  // namespace

std::pair<double, double> curve_ortho_bounds(const Curve1D& curve, double x0,
                                             const OrthoParams& params) {
  params.validate();
  if (x0 < curve.lo || x0 > curve.hi)
    throw std::domain_error("x0 outside the curve domain");

  const double p0 = curve.deriv(x0);
  const double curv0 = params.linearized ? curve.deriv2(x0) : 0.0;

  auto march = [&](int dir) {
    double last = x0;
    double x = x0 + dir * params.dx;
    while (x >= curve.lo && x <= curve.hi) {
      const double p = params.linearized ? p0 + (x - x0) * curv0
                                         : curve.deriv(x);
      const double phi = curve_phi(p0, p);
      const double theta = std::atan(std::fabs(x - x0) / params.d);
      if (phi > params.eps || theta > params.eps) break;
      last = x;
      x += dir * params.dx;
    }
    return last;
  };

  return {march(-1), march(+1)};
}

std::vector<std::pair<int, int>> pair_gen(int n) {
  if (n < 1) throw std::invalid_argument("pair_gen needs n >= 1");
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(4) * n);
  for (int t = 0; t < n; ++t) out.emplace_back(n - t, t);
  for (int t = 0; t < n; ++t) out.emplace_back(-t, n - t);
  for (int t = 0; t < n; ++t) out.emplace_back(-(n - t), -t);
  for (int t = 0; t < n; ++t) out.emplace_back(t, -(n - t));
  return out;
}

RegionMask surface_ortho_region(const SurfaceModel& model, const Vec2& p0,
                                const OrthoParams& params) {
  params.validate();
  const Rect b = model.bounds();
  if (!b.contains(p0)) throw std::domain_error("p0 outside surface bounds");

  const SurfaceSample s0 = model.query(p0);

  const int nx = static_cast<int>(std::ceil(b.width() / params.dx));
  const int ny = static_cast<int>(std::ceil(b.height() / params.dy));
  const int max_ring = std::max(nx, ny);

  std::vector<std::pair<int, int>> accepted;
  accepted.emplace_back(0, 0);

  int buff = 0;
  for (int n = 1; n <= max_ring; ++n) {
    int count = 0;
    for (const auto& [n1, n2] : pair_gen(n)) {
      const Vec2 cand{p0.x + n1 * params.dx, p0.y + n2 * params.dy};
      if (!b.contains(cand)) continue;
      double pc, qc;
      if (params.linearized) {
        const double dxw = cand.x - p0.x, dyw = cand.y - p0.y;
        pc = s0.p + s0.fxx * dxw + s0.fxy * dyw;
        qc = s0.q + s0.fxy * dxw + s0.fyy * dyw;
      } else {
        const SurfaceSample sc = model.query(cand);
        pc = sc.p;
        qc = sc.q;
      }
      const double phi = surface_phi(s0.p, s0.q, pc, qc);
      const double theta =
          std::atan(std::hypot(n1 * params.dx, n2 * params.dy) / params.d);
      if (theta <= params.eps && phi <= params.eps) {
        accepted.emplace_back(n1, n2);
        ++count;
      }
    }
    buff = (count == 0) ? buff + 1 : 0;
    if (buff > 3) break;
  }

  RegionMask mask;
  mask.center = p0;
  mask.dx = params.dx;
  mask.dy = params.dy;
  for (const auto& [n1, n2] : accepted) {
    mask.half_nx = std::max(mask.half_nx, std::abs(n1));
    mask.half_ny = std::max(mask.half_ny, std::abs(n2));
  }
  mask.cells.assign(static_cast<size_t>(mask.rows()) * mask.cols(), 0);
  for (const auto& [n1, n2] : accepted) {
    const size_t row = static_cast<size_t>(n2 + mask.half_ny);
    mask.cells[row * mask.cols() + (n1 + mask.half_nx)] = 1;
  }
  return mask;
}

PolygonBoundary approx_polygonal(const SurfaceModel& model, const Vec2& p0,
                                 const OrthoParams& params, int n_dirs) {
  params.validate();
  if (n_dirs < 3) throw std::invalid_argument("polygon needs >= 3 directions");
  const Rect b = model.bounds();
  if (!b.contains(p0)) throw std::domain_error("p0 outside surface bounds");

  const SurfaceSample s0 = model.query(p0);
  const double step = std::fmin(params.dx, params.dy);

  PolygonBoundary poly;
  poly.center = p0;
  poly.vertices.reserve(n_dirs);

  for (int k = 0; k < n_dirs; ++k) {
    const double angle = 2.0 * kPi * k / n_dirs;
    const Vec2 dir{std::cos(angle), std::sin(angle)};
    Vec2 last = p0;
    // theta exceeds eps once the offset passes R = d tan(eps), so the march
    // always terminates.
    for (int t = 1;; ++t) {
      const Vec2 cand = p0 + (t * step) * dir;
      if (!b.contains(cand)) break;
      const double theta = std::atan(t * step / params.d);
      if (theta > params.eps) break;
      double pc, qc;
      if (params.linearized) {
        pc = s0.p + s0.fxx * (cand.x - p0.x) + s0.fxy * (cand.y - p0.y);
        qc = s0.q + s0.fxy * (cand.x - p0.x) + s0.fyy * (cand.y - p0.y);
      } else {
        const SurfaceSample sc = model.query(cand);
        pc = sc.p;
        qc = sc.q;
      }
      if (surface_phi(s0.p, s0.q, pc, qc) > params.eps) break;
      last = cand;
    }
    poly.vertices.push_back(last);
  }
  return poly;
}

EllipseBoundary approx_elliptical(const PolygonBoundary& polygon) {
  const int n = static_cast<int>(polygon.vertices.size());
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("elliptical approximation needs an even polygon (N >= 4)");

  const int half = n / 2;
  int longest = 0;
  double dmax = -1.0, dmin = std::numeric_limits<double>::max();
  for (int i = 0; i < half; ++i) {
    const double len = (polygon.vertices[i] - polygon.vertices[i + half]).norm();
    if (len > dmax) {
      dmax = len;
      longest = i;
    }
    dmin = std::fmin(dmin, len);
  }

  const Vec2 a = polygon.vertices[longest];
  const Vec2 b = polygon.vertices[longest + half];
  EllipseBoundary e;
  e.center = (a + b) * 0.5;
  e.semi_major = 0.5 * dmax;
  e.semi_minor = 0.5 * dmin;
  e.angle = std::atan2(b.y - a.y, b.x - a.x);
  return e;
}

CircleBoundary approx_circular_avg(const PolygonBoundary& polygon) {
  if (polygon.vertices.size() < 3)
    throw std::invalid_argument("circular approximation needs >= 3 vertices");
  double sum = 0.0;
  for (const Vec2& v : polygon.vertices) sum += (v - polygon.center).norm();
  return {polygon.center, sum / static_cast<double>(polygon.vertices.size())};
}

double radius_from_curvature(double abs_k, double k_max,
                             const OrthoParams& params) {
  const double r_cap = params.radius_cap();
  if (!(k_max > 0.0)) return r_cap;
  const double t = std::fmin(std::fabs(abs_k) / k_max, 1.0);
  if (t <= 0.0) return r_cap;
  if (t >= 1.0) return r_cap / params.m;
  return r_cap - t * r_cap * (1.0 - 1.0 / params.m);
}

double approx_radius_curvature(const SurfaceModel& model, const Vec2& point,
                               const OrthoParams& params, double k_max) {
  return radius_from_curvature(std::fabs(gaussian_curvature(model, point)),
                               k_max, params);
}

}  // namespace orthocap
