#include "orthocap/plan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orthocap {

CoverageMetrics coverage_metrics(std::span<const Circle> circles,
                                 const Rect& bounds, int grid_res) {
  bounds.require_nonempty();
  if (grid_res < 50) throw std::invalid_argument("coverage grid_res must be >= 50");

  CoverageMetrics m;
  const double cw = bounds.width() / grid_res;
  const double ch = bounds.height() / grid_res;
  const double cell_area = cw * ch;

  size_t covered = 0;
  size_t excess = 0;
  for (int i = 0; i < grid_res; ++i) {
    const double y = bounds.ylo + (i + 0.5) * ch;
    for (int j = 0; j < grid_res; ++j) {
      const double x = bounds.xlo + (j + 0.5) * cw;
      int hits = 0;
      for (const Circle& c : circles) {
        const double ddx = x - c.center.x, ddy = y - c.center.y;
        if (ddx * ddx + ddy * ddy <= c.radius * c.radius) ++hits;
      }
      if (hits > 0) {
        ++covered;
        excess += static_cast<size_t>(hits - 1);
      }
    }
  }
  m.area_covered = cell_area * static_cast<double>(covered);
  m.percent_covered = 100.0 * m.area_covered / bounds.area();
  m.overlap_grid = cell_area * static_cast<double>(excess);
  for (size_t i = 0; i < circles.size(); ++i)
    for (size_t j = i + 1; j < circles.size(); ++j)
      m.overlap_closed_form += circle_overlap_area(
          circles[i].radius, circles[j].radius,
          (circles[i].center - circles[j].center).norm());
  return m;
}

std::vector<int> CapturePlan::n_history() const {
  std::vector<int> ns;
  ns.reserve(history.size());
  for (const FillStep& s : history) ns.push_back(s.n);
  return ns;
}

void FillConfig::validate() const {
  if (!(coverage_target > 0.0 && coverage_target <= 100.0))
    throw std::invalid_argument("coverage target must be in (0, 100]");
  if (n0 < 1) throw std::invalid_argument("initial circle count must be >= 1");
  if (step_n < 1 || step_n > 3)
    throw std::invalid_argument("sequential step must be in {1, 2, 3}");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

namespace {

// Per-iteration seed stream for the fill loops; keeps every iteration
// deterministic and decoupled from the others.
uint64_t iteration_seed(uint64_t base, int iteration) {
  return base + 0x9E3779B97F4A7C15ull * static_cast<uint64_t>(iteration + 1);
}

std::vector<Circle> to_circles(std::span<const Vec2> centers,
                               const PlanContext& ctx) {
  std::vector<Circle> circles;
  circles.reserve(centers.size());
  for (const Vec2& c : centers) circles.push_back({c, ctx.radius_at(c)});
  return circles;
}

}  // namespace

CapturePlan batch_fill(const PlanContext& ctx, const CostSpec& spec,
                       const SolverConfig& solver, const FillConfig& fill) {
  fill.validate();
  solver.validate();

  CapturePlan plan;
  plan.cost_kind = cost_kind_name(spec.kind);
  plan.algorithm = "batch";
  plan.seed = solver.seed;

  for (int n = fill.n0; n <= fill.n_max; ++n) {
    SolverConfig it_cfg = solver;
    it_cfg.seed = iteration_seed(solver.seed, n - fill.n0);
    const MultistartResult ms = multistart(spec, ctx, it_cfg, n);

    plan.circles = to_circles(ms.best.centers, ctx);
    plan.metrics = coverage_metrics(plan.circles, ctx.bounds(),
                                    fill.coverage_grid_res);
    plan.history.push_back({n, plan.metrics});
    if (plan.metrics.percent_covered >= fill.coverage_target) {
      plan.reached_target = true;
      break;
    }
  }
  return plan;
}

CapturePlan sequential_fill(const PlanContext& ctx, const CostSpec& spec,
                            const SolverConfig& solver,
                            const FillConfig& fill) {
  fill.validate();
  solver.validate();

  CapturePlan plan;
  plan.cost_kind = cost_kind_name(spec.kind);
  plan.algorithm = "sequential";
  plan.seed = solver.seed;

  std::vector<Vec2> frozen;
  int iteration = 0;
  while (static_cast<int>(frozen.size()) < fill.n_max) {
    const int add = std::min(fill.step_n,
                             fill.n_max - static_cast<int>(frozen.size()));
    SolverConfig it_cfg = solver;
    it_cfg.seed = iteration_seed(solver.seed, iteration++);

    std::mt19937_64 rng(it_cfg.seed);
    std::vector<Vec2> fresh(add);
    for (Vec2& p : fresh) p = uniform_point(rng, ctx.bounds());

    CostFunction fn = [&](std::span<const Vec2> x) {
      return evaluate_cost_against(x, frozen, spec, ctx);
    };
    LocalResult local = pattern_search(fn, std::move(fresh), ctx.bounds(), it_cfg);
    frozen.insert(frozen.end(), local.centers.begin(), local.centers.end());

    plan.circles = to_circles(frozen, ctx);
    plan.metrics = coverage_metrics(plan.circles, ctx.bounds(),
                                    fill.coverage_grid_res);
    plan.history.push_back({static_cast<int>(frozen.size()), plan.metrics});
    if (plan.metrics.percent_covered >= fill.coverage_target) {
      plan.reached_target = true;
      break;
    }
  }
  return plan;
}

std::vector<ParetoPoint> nondominated_filter(std::vector<ParetoPoint> points) {
  std::vector<ParetoPoint> kept;
  for (size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < points.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool le = points[j].f1 <= points[i].f1 && points[j].f2 <= points[i].f2;
      const bool lt = points[j].f1 < points[i].f1 || points[j].f2 < points[i].f2;
      if (le && lt) dominated = true;
    }
    if (!dominated) kept.push_back(points[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    return a.f1 < b.f1 || (a.f1 == b.f1 && a.f2 < b.f2);
  });
  // Equal objective pairs from different lambdas are duplicates on the front.
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const ParetoPoint& a, const ParetoPoint& b) {
                           return a.f1 == b.f1 && a.f2 == b.f2;
                         }),
             kept.end());
  return kept;
}

std::vector<ParetoPoint> pareto_front(const PlanContext& ctx, int n_circles,
                                      const SolverConfig& solver,
                                      int n_points) {
  if (n_points < 2) throw std::invalid_argument("pareto sweep needs >= 2 points");

  std::vector<ParetoPoint> raw;
  raw.reserve(n_points);
  for (int k = 0; k < n_points; ++k) {
    const double lambda = static_cast<double>(k) / (n_points - 1);
    CostFunction fn = [&ctx, lambda](std::span<const Vec2> x) {
      const CostComponents c = cost_components(x, ctx);
      const double f1 = c.overlap_linear;
      const double f2 = c.overlap_linear - c.coverage_rel;
      return lambda * f1 + (1.0 - lambda) * f2;
    };
    SolverConfig it_cfg = solver;
    it_cfg.seed = iteration_seed(solver.seed, k);
    const MultistartResult ms =
        multistart_custom(fn, ctx.bounds(), it_cfg, n_circles);

    const CostComponents c = cost_components(ms.best.centers, ctx);
    ParetoPoint pt;
    pt.centers = ms.best.centers;
    pt.f1 = c.overlap_linear;
    pt.f2 = c.overlap_linear - c.coverage_rel;
    pt.lambda = lambda;
    raw.push_back(std::move(pt));
  }
  return nondominated_filter(std::move(raw));
}

namespace {

// Marches a ray through a uniform cell grid (2D), incrementing each crossed
// cell once. Standard DDA; the ray is (ox, oz) + t * (dx, dz), t >= 0.
template <typename Visit>
void traverse_2d(double ox, double oz, double dx, double dz, double x0,
                 double z0, double step_x, double step_z, int nx, int nz,
                 Visit&& visit) {
  // Clip to the box first.
  double t0 = 0.0, t1 = std::numeric_limits<double>::infinity();
  const double xhi = x0 + nx * step_x, zhi = z0 + nz * step_z;
  for (int axis = 0; axis < 2; ++axis) {
    const double o = axis == 0 ? ox : oz;
    const double d = axis == 0 ? dx : dz;
    const double lo = axis == 0 ? x0 : z0;
    const double hi = axis == 0 ? xhi : zhi;
    if (d == 0.0) {
      if (o < lo || o > hi) return;
    } else {
      double ta = (lo - o) / d, tb = (hi - o) / d;
      if (ta > tb) std::swap(ta, tb);
      t0 = std::fmax(t0, ta);
      t1 = std::fmin(t1, tb);
    }
  }
  if (t0 > t1) return;

  const double eps = 1e-12 * (std::fabs(t1) + 1.0);
  double px = ox + (t0 + eps) * dx;
  double pz = oz + (t0 + eps) * dz;
  int ix = std::clamp(static_cast<int>((px - x0) / step_x), 0, nx - 1);
  int iz = std::clamp(static_cast<int>((pz - z0) / step_z), 0, nz - 1);

  const int sx = dx > 0.0 ? 1 : -1;
  const int sz = dz > 0.0 ? 1 : -1;
  const double t_dx = dx != 0.0 ? std::fabs(step_x / dx)
                                : std::numeric_limits<double>::infinity();
  const double t_dz = dz != 0.0 ? std::fabs(step_z / dz)
                                : std::numeric_limits<double>::infinity();
  double t_next_x =
      dx != 0.0 ? (x0 + (ix + (sx > 0 ? 1 : 0)) * step_x - ox) / dx
                : std::numeric_limits<double>::infinity();
  double t_next_z =
      dz != 0.0 ? (z0 + (iz + (sz > 0 ? 1 : 0)) * step_z - oz) / dz
                : std::numeric_limits<double>::infinity();

  double t = t0;
  while (t <= t1) {
    visit(ix, iz);
    if (t_next_x < t_next_z) {
      t = t_next_x;
      t_next_x += t_dx;
      ix += sx;
      if (ix < 0 || ix >= nx) break;
    } else {
      t = t_next_z;
      t_next_z += t_dz;
      iz += sz;
      if (iz < 0 || iz >= nz) break;
    }
  }
}

}  // namespace

CurveDensity normal_density_curve(const Curve1D& curve, double z_lo,
                                  double z_hi, int res, int n_rays) {
  if (res < 2) throw std::invalid_argument("density resolution must be >= 2");
  if (!(z_lo < z_hi)) throw std::invalid_argument("z range is empty");
  if (n_rays <= 0) n_rays = 4 * res;

  CurveDensity out;
  out.step_x = (curve.hi - curve.lo) / res;
  out.step_z = (z_hi - z_lo) / res;
  out.counts = Grid2D(res, res, 0.0, out.step_x, {curve.lo, z_lo});

  const double span = curve.hi - curve.lo;
  for (int k = 0; k < n_rays; ++k) {
    const double x = curve.lo + (k + 0.5) * span / n_rays;
    const double fx = curve.eval(x);
    const double slope = curve.deriv(x);
    const double inv = 1.0 / std::sqrt(1.0 + slope * slope);
    traverse_2d(x, fx, -slope * inv, inv, curve.lo, z_lo, out.step_x,
                out.step_z, res, res,
                [&](int ix, int iz) { out.counts.at(iz, ix) += 1.0; });
  }

  // Strict local maxima of the counts (8-neighborhood, interior cells).
  struct Peak {
    double count;
    int ix, iz;
  };
  std::vector<Peak> peaks;
  for (int iz = 1; iz < res - 1; ++iz) {
    for (int ix = 1; ix < res - 1; ++ix) {
      const double c = out.counts.at(iz, ix);
      if (c <= 0.0) continue;
      bool is_max = true;
      for (int a = -1; a <= 1 && is_max; ++a)
        for (int b = -1; b <= 1 && is_max; ++b)
          if ((a || b) && out.counts.at(iz + a, ix + b) >= c) is_max = false;
      if (is_max) peaks.push_back({c, ix, iz});
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.iz != b.iz ? a.iz < b.iz : a.ix < b.ix;
  });
  for (const Peak& p : peaks)
    out.suggested.push_back({curve.lo + (p.ix + 0.5) * out.step_x,
                             z_lo + (p.iz + 0.5) * out.step_z});
  return out;
}

SurfaceDensity normal_density_surface(const SurfaceModel& model, double z_lo,
                                      double z_hi, int res, int n_rays) {
  if (res < 2) throw std::invalid_argument("density resolution must be >= 2");
  if (!(z_lo < z_hi)) throw std::invalid_argument("z range is empty");
  if (n_rays <= 0) n_rays = 2 * res;

  const Rect b = model.bounds();
  SurfaceDensity out;
  out.nx = out.ny = out.nz = res;
  out.bounds = b;
  out.z_lo = z_lo;
  out.z_hi = z_hi;
  out.counts.assign(static_cast<size_t>(res) * res * res, 0);

  const double sx = b.width() / res;
  const double sy = b.height() / res;
  const double sz = (z_hi - z_lo) / res;

  // Rays from an n_rays x n_rays sample of the surface; each ray is clipped
  // to the box and walked with a conservative fixed step (half the smallest
  // cell edge), deduplicating consecutive cells.
  const double walk = 0.5 * std::fmin(sz, std::fmin(sx, sy));
  for (int ky = 0; ky < n_rays; ++ky) {
    const double y = b.ylo + (ky + 0.5) * b.height() / n_rays;
    for (int kx = 0; kx < n_rays; ++kx) {
      const double x = b.xlo + (kx + 0.5) * b.width() / n_rays;
      const Vec3 n = model.unit_normal({x, y});
      const double z = model.elevation({x, y});
      // Longest possible chord through the box.
      const double t_max = std::hypot(b.width(), b.height()) + (z_hi - z_lo) +
                           std::fabs(z_hi - z);
      int last = -1;
      for (double t = 0.0; t <= t_max; t += walk) {
        const double px = x + t * n.x, py = y + t * n.y, pz = z + t * n.z;
        if (pz > z_hi) break;
        if (px < b.xlo || px > b.xhi || py < b.ylo || py > b.yhi || pz < z_lo)
          continue;
        const int ix = std::min(static_cast<int>((px - b.xlo) / sx), res - 1);
        const int iy = std::min(static_cast<int>((py - b.ylo) / sy), res - 1);
        const int iz = std::min(static_cast<int>((pz - z_lo) / sz), res - 1);
        const int idx = static_cast<int>(out.index(ix, iy, iz));
        if (idx != last) {
          ++out.counts[idx];
          last = idx;
        }
      }
    }
  }

  struct Peak {
    uint32_t count;
    int ix, iy, iz;
  };
  std::vector<Peak> peaks;
  for (int iz = 1; iz < res - 1; ++iz)
    for (int iy = 1; iy < res - 1; ++iy)
      for (int ix = 1; ix < res - 1; ++ix) {
        const uint32_t c = out.counts[out.index(ix, iy, iz)];
        if (c == 0) continue;
        bool is_max = true;
        for (int a = -1; a <= 1 && is_max; ++a)
          for (int bb = -1; bb <= 1 && is_max; ++bb)
            for (int cc = -1; cc <= 1 && is_max; ++cc)
              if ((a || bb || cc) &&
                  out.counts[out.index(ix + a, iy + bb, iz + cc)] >= c)
                is_max = false;
        if (is_max) peaks.push_back({c, ix, iy, iz});
      }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.iz != b.iz) return a.iz < b.iz;
    return a.iy != b.iy ? a.iy < b.iy : a.ix < b.ix;
  });
  for (const Peak& p : peaks)
    out.suggested.push_back({b.xlo + (p.ix + 0.5) * sx,
                             b.ylo + (p.iy + 0.5) * sy,
                             z_lo + (p.iz + 0.5) * sz});
  return out;
}

}  // namespace orthocap
