#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "orthocap/cost.hpp"
#include "orthocap/solver.hpp"

using namespace orthocap;

namespace {

PlanContext plane_ctx(const SurfaceModel& model, double d = 3.0,
                      double eps_deg = 10.0) {
  OrthoParams p{d, deg_to_rad(eps_deg), 0.05, 0.05, 5.0, false};
  return PlanContext::make(model, p, 51);
}

/// Monte-Carlo lens area: rejection sampling over the intersection of the
/// two circles' bounding boxes. Returns (estimate, sigma).
std::pair<double, double> mc_overlap(double r1, double r2, double dist,
                                     size_t samples, uint64_t seed) {
  const double xlo = std::fmax(-r1, dist - r2);
  const double xhi = std::fmin(r1, dist + r2);
  const double yhi = std::fmin(r1, r2);
  if (xhi <= xlo) return {0.0, 0.0};
  const double area_box = (xhi - xlo) * 2.0 * yhi;

  std::mt19937_64 rng(seed);
  size_t hits = 0;
  for (size_t k = 0; k < samples; ++k) {
    const double x = xlo + uniform01(rng) * (xhi - xlo);
    const double y = -yhi + uniform01(rng) * 2.0 * yhi;
    const bool in1 = x * x + y * y <= r1 * r1;
    const double dx = x - dist;
    const bool in2 = dx * dx + y * y <= r2 * r2;
    if (in1 && in2) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double est = area_box * p;
  // Binomial sigma with a +1/n floor so zero-hit draws keep a finite band
  // (rule-of-three regime near tangency).
  const double sigma = area_box * std::sqrt((p * (1.0 - p) + 1.0 / n) / n);
  return {est, sigma};
}

}  // namespace

TEST_SUITE("cost") {

TEST_CASE("circle overlap: disjoint, contained, half-shifted lens") {
  CHECK(circle_overlap_area(1.0, 1.0, 3.0) == 0.0);
  CHECK(circle_overlap_area(2.0, 1.0, 0.5) == doctest::Approx(kPi));
  CHECK(circle_overlap_area(1.0, 2.0, 0.5) == doctest::Approx(kPi));
  // Frozen against the closed form 2 acos(1/2) - sqrt(3)/2 and verified by
  // the Monte-Carlo oracle below.
  CHECK(circle_overlap_area(1.0, 1.0, 1.0) ==
        doctest::Approx(1.2283696986087568).epsilon(1e-12));
  CHECK_THROWS_AS(circle_overlap_area(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(circle_overlap_area(1.0, 1.0, -0.5), std::invalid_argument);
}

TEST_CASE("circle overlap agrees with the Monte-Carlo oracle") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 12; ++trial) {
    const double r1 = 0.2 + 2.0 * uniform01(rng);
    const double r2 = 0.2 + 2.0 * uniform01(rng);
    const double dist = uniform01(rng) * (r1 + r2) * 1.05;
    const double exact = circle_overlap_area(r1, r2, dist);
    const auto [est, sigma] = mc_overlap(r1, r2, dist, 1000000, 99 + trial);
    if (sigma == 0.0) {
      CHECK(exact == 0.0);  // empty bounding box: certainly disjoint
    } else {
      CHECK(std::fabs(exact - est) <= 3.0 * sigma);
    }
  }
}

TEST_CASE("circle overlap is continuous at the piecewise seams") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const double r1 = 0.3 + 2.0 * uniform01(rng);
    const double r2 = 0.3 + 2.0 * uniform01(rng);
    const double touch = r1 + r2;
    CHECK(std::fabs(circle_overlap_area(r1, r2, touch * (1.0 - 1e-9))) <= 1e-6);
    CHECK(circle_overlap_area(r1, r2, touch * (1.0 + 1e-9)) == 0.0);

    const double inner = std::fabs(r1 - r2);
    const double contained = kPi * std::fmin(r1, r2) * std::fmin(r1, r2);
    if (inner > 1e-6) {
      CHECK(std::fabs(circle_overlap_area(r1, r2, inner * (1.0 + 1e-9)) -
                      contained) <= 1e-6);
      CHECK(std::fabs(circle_overlap_area(r1, r2, inner * (1.0 - 1e-9)) -
                      contained) <= 1e-6);
    }
  }
}

TEST_CASE("F1 vanishes for separated circles and is never negative") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = plane_ctx(plane);
  const double r = ctx.params.radius_cap();

  const std::vector<Vec2> apart{{-3, -3}, {3, 3}, {3, -3}};
  CHECK(evaluate_cost(apart, {CostKind::F1}, ctx) == 0.0);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec2> pts;
    for (int k = 0; k < 6; ++k) pts.push_back(uniform_point(rng, ctx.bounds()));
    CHECK(evaluate_cost(pts, {CostKind::F1}, ctx) >= 0.0);
  }
  // Two overlapping circles: penalty equals the radius deficit.
  const std::vector<Vec2> close{{0, 0}, {r, 0}};
  CHECK(evaluate_cost(close, {CostKind::F1}, ctx) == doctest::Approx(r));
}

TEST_CASE("single circle on a plane: F2 = -pi exactly") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = plane_ctx(plane);
  CHECK(ctx.k_max == 0.0);
  const std::vector<Vec2> one{{0.7, -1.1}};
  CHECK(evaluate_cost(one, {CostKind::F2}, ctx) == -kPi);
}

TEST_CASE("disjoint circles: F5 = -sum(pi r^2)") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = plane_ctx(plane);
  const double r = ctx.params.radius_cap();
  const std::vector<Vec2> pts{{-3, -3}, {3, 3}};
  CHECK(evaluate_cost(pts, {CostKind::F5}, ctx) ==
        doctest::Approx(-2.0 * kPi * r * r).epsilon(1e-15));
}

TEST_CASE("F3 coefficient identity and F4(1,1) = F2, exact") {
  const SurfaceModel surf(make_cos_cos(Rect::square(-5, 5)));
  const PlanContext ctx = plane_ctx(surf);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec2> pts;
    for (int k = 0; k < 8; ++k) pts.push_back(uniform_point(rng, ctx.bounds()));
    const CostComponents c = cost_components(pts, ctx);
    CHECK(evaluate_cost(pts, {CostKind::F3}, ctx) ==
          5.0 * c.overlap_linear - 0.5 * c.coverage_rel);
    CHECK(evaluate_cost(pts, {CostKind::F1}, ctx) == c.overlap_linear);
    CostSpec f4{CostKind::F4};
    f4.w1 = 1.0;
    f4.w2 = 1.0;
    CHECK(evaluate_cost(pts, f4, ctx) ==
          evaluate_cost(pts, {CostKind::F2}, ctx));
    CHECK(evaluate_cost(pts, {CostKind::G2}, ctx) ==
          5.0 * c.overlap_linear - 0.5 * c.coverage_abs);
    CHECK(evaluate_cost(pts, {CostKind::G1}, ctx) ==
          c.overlap_linear - c.coverage_abs);
  }
}

TEST_CASE("out-of-bounds centers are rejected") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = plane_ctx(plane);
  const std::vector<Vec2> bad{{0, 0}, {5.5, 0}};
  CHECK_THROWS_AS(evaluate_cost(bad, {CostKind::F1}, ctx), std::domain_error);
}

TEST_CASE("radius model feeds the cost: radii shrink with curvature") {
  const SurfaceModel surf(make_cos_cos(Rect::square(-5, 5)));
  const PlanContext ctx = plane_ctx(surf);
  const double r_cap = ctx.params.radius_cap();
  // |K| = Kmax = 1 at the peak, so the planner radius collapses to R/m.
  CHECK(ctx.radius_at({0, 0}) == doctest::Approx(r_cap / 5.0).epsilon(1e-9));
  // Low-curvature point: K = cos(x)cos(y)/(...)^2 ~ 0 at x = pi/2.
  CHECK(ctx.radius_at({kPi / 2.0, 0.0}) ==
        doctest::Approx(r_cap).epsilon(1e-9));
}

TEST_CASE("frozen-set evaluation counts cross overlap, not frozen coverage") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = plane_ctx(plane);
  const double r = ctx.params.radius_cap();

  const std::vector<Vec2> frozen{{0, 0}};
  const std::vector<Vec2> fresh{{r, 0.0}};  // overlaps the frozen circle
  // G1: overlap(2r - r) - coverage(new only) = r - pi r^2.
  CHECK(evaluate_cost_against(fresh, frozen, {CostKind::G1}, ctx) ==
        doctest::Approx(r - kPi * r * r).epsilon(1e-12));
  // Far away: no overlap term left.
  const std::vector<Vec2> far{{4, 4}};
  CHECK(evaluate_cost_against(far, frozen, {CostKind::G1}, ctx) ==
        doctest::Approx(-kPi * r * r).epsilon(1e-12));
}

TEST_CASE("weights_for: fixed, variable and scheduled") {
  CostSpec fixed{CostKind::F4};
  fixed.w1 = 2.0;
  fixed.w2 = 3.0;
  CHECK(fixed.weights_for(10) == std::array<double, 2>{2.0, 3.0});

  CostSpec variable{CostKind::F4};
  variable.variable_weights = true;
  CHECK(variable.weights_for(10) == std::array<double, 2>{5.0, 0.05});
  CHECK(variable.weights_for(25) == std::array<double, 2>{5.0, 0.02});

  CostSpec scheduled{CostKind::F4};
  scheduled.schedule[1] = {1.0, 9.0};
  scheduled.schedule[20] = {7.0, 0.5};
  CHECK(scheduled.weights_for(5) == std::array<double, 2>{1.0, 9.0});
  CHECK(scheduled.weights_for(20) == std::array<double, 2>{7.0, 0.5});
  CHECK(scheduled.weights_for(50) == std::array<double, 2>{7.0, 0.5});
}

TEST_CASE("cost kind names round-trip") {
  for (CostKind k : {CostKind::F1, CostKind::F2, CostKind::F3, CostKind::F4,
                     CostKind::F5, CostKind::G1, CostKind::G2}) {
    CHECK(cost_kind_from_name(cost_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(cost_kind_from_name("F9"), std::invalid_argument);
}

}  // TEST_SUITE
