#include <doctest.h>

#include <cmath>

#include "orthocap/solver.hpp"

using namespace orthocap;

namespace {

PlanContext make_ctx(const SurfaceModel& model) {
  OrthoParams p{3.0, deg_to_rad(10.0), 0.05, 0.05, 5.0, false};
  return PlanContext::make(model, p, 51);
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("pattern search trace is monotone nonincreasing") {
  const SurfaceModel surf(make_cos_cos(Rect::square(-5, 5)));
  const PlanContext ctx = make_ctx(surf);
  SolverConfig cfg;
  cfg.max_iters = 300;

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Vec2> start;
    for (int k = 0; k < 5; ++k) start.push_back(uniform_point(rng, ctx.bounds()));
    const LocalResult res = local_optimize({CostKind::F3}, start, ctx, cfg);
    for (size_t k = 1; k < res.trace.size(); ++k)
      CHECK(res.trace[k] <= res.trace[k - 1]);
    for (const Vec2& p : res.centers) CHECK(ctx.bounds().contains(p));
    CHECK(res.cost <= res.trace.front());
  }
}

TEST_CASE("an isolated single circle has no improving move under F1") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = make_ctx(plane);
  SolverConfig cfg;
  const std::vector<Vec2> start{{1.0, -2.0}};
  const LocalResult res = local_optimize({CostKind::F1}, start, ctx, cfg);
  CHECK(res.cost == 0.0);
  CHECK(res.centers[0].x == 1.0);
  CHECK(res.centers[0].y == -2.0);
}

TEST_CASE("two overlapping circles separate to zero F1 cost") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = make_ctx(plane);
  SolverConfig cfg;
  cfg.step_init = 0.5;
  cfg.step_tol = 1e-4;
  const std::vector<Vec2> start{{0.0, 0.0}, {0.1, 0.05}};
  const LocalResult res = local_optimize({CostKind::F1}, start, ctx, cfg);
  CHECK(res.cost == 0.0);
  const double dist = (res.centers[0] - res.centers[1]).norm();
  CHECK(dist >= 2.0 * ctx.params.radius_cap());
}

TEST_CASE("infeasible starts are rejected") {
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = make_ctx(plane);
  CHECK_THROWS_AS(
      local_optimize({CostKind::F1}, {{0.0, 0.0}, {9.0, 0.0}}, ctx, {}),
      std::domain_error);
}

TEST_CASE("multistart with one start equals local_optimize on that seed") {
  const SurfaceModel surf(make_cos_cos(Rect::square(-5, 5)));
  const PlanContext ctx = make_ctx(surf);
  SolverConfig cfg;
  cfg.n_starts = 1;
  cfg.seed = 77;
  cfg.max_iters = 200;

  const MultistartResult ms = multistart({CostKind::F2}, ctx, cfg, 4);

  std::mt19937_64 rng(cfg.seed);
  std::vector<Vec2> start;
  for (int k = 0; k < 4; ++k) start.push_back(uniform_point(rng, ctx.bounds()));
  const LocalResult direct = local_optimize({CostKind::F2}, start, ctx, cfg);

  CHECK(ms.best.cost == direct.cost);
  REQUIRE(ms.best.centers.size() == direct.centers.size());
  for (size_t k = 0; k < direct.centers.size(); ++k) {
    CHECK(ms.best.centers[k].x == direct.centers[k].x);
    CHECK(ms.best.centers[k].y == direct.centers[k].y);
  }
}

TEST_CASE("multistart best never exceeds any stored cost") {
  const SurfaceModel surf(make_cos_cos(Rect::square(-5, 5)));
  const PlanContext ctx = make_ctx(surf);
  SolverConfig cfg;
  cfg.n_starts = 6;
  cfg.max_iters = 150;
  const MultistartResult ms = multistart({CostKind::F5}, ctx, cfg, 6);
  CHECK(ms.all.size() == 6);
  for (const LocalResult& r : ms.all) CHECK(ms.best.cost <= r.cost);
  // Best equals stored result at best_index, and the first start of the
  // stream is the single-start answer, so best <= single-start.
  CHECK(ms.best.cost == ms.all[ms.best_index].cost);
  CHECK(ms.best.cost <= ms.all[0].cost);
}

TEST_CASE("multistart ties break to the earliest start index") {
  // Flat cost: every start ends where it began with identical cost 0.
  const SurfaceModel plane(make_plane(Rect::square(-5, 5)));
  const PlanContext ctx = make_ctx(plane);
  SolverConfig cfg;
  cfg.n_starts = 4;
  const MultistartResult ms = multistart({CostKind::F1}, ctx, cfg, 1);
  CHECK(ms.best_index == 0);
}

TEST_CASE("solver config validation") {
  SolverConfig bad;
  bad.max_iters = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SolverConfig{};
  bad.step_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SolverConfig{};
  bad.n_starts = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

}  // TEST_SUITE
