#include "orthocap/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace orthocap {

void SolverConfig::validate() const {
  if (max_iters < 1 || n_starts < 1)
    throw std::invalid_argument("solver iteration/start counts must be positive");
  if (!(step_init > 0.0) || !(step_tol > 0.0))
    throw std::invalid_argument("solver steps must be positive");
}

LocalResult pattern_search(const CostFunction& cost, std::vector<Vec2> start,
                           const Rect& bounds, const SolverConfig& cfg) {
  cfg.validate();
  bounds.require_nonempty();
  const size_t n = start.size();
  for (Vec2& p : start) p = bounds.clamp(p);

  LocalResult res;
  res.centers = std::move(start);
  res.cost = cost(res.centers);
  res.trace.push_back(res.cost);

  double step = cfg.step_init;
  for (int iter = 0; iter < cfg.max_iters && step >= cfg.step_tol; ++iter) {
    double best_cost = res.cost;
    size_t best_point = 0;
    Vec2 best_value{};
    bool improved = false;

    for (size_t i = 0; i < n; ++i) {
      const Vec2 old = res.centers[i];
      const Vec2 moves[4] = {{old.x + step, old.y},
                             {old.x - step, old.y},
                             {old.x, old.y + step},
                             {old.x, old.y - step}};
      for (const Vec2& mv : moves) {
        const Vec2 cand = bounds.clamp(mv);
        if (cand.x == old.x && cand.y == old.y) continue;
        res.centers[i] = cand;
        const double c = cost(res.centers);
        if (c < best_cost) {
          best_cost = c;
          best_point = i;
          best_value = cand;
          improved = true;
        }
      }
      res.centers[i] = old;
    }

    if (improved) {
      res.centers[best_point] = best_value;
      res.cost = best_cost;
    } else {
      step *= 0.5;
    }
    res.trace.push_back(res.cost);
    res.iters = iter + 1;
  }
  return res;
}

LocalResult local_optimize(const CostSpec& spec, std::vector<Vec2> start,
                           const PlanContext& ctx, const SolverConfig& cfg) {
  const Rect b = ctx.bounds();
  for (const Vec2& p : start)
    if (!b.contains(p))
      throw std::domain_error("infeasible start: point outside bounds");
  CostFunction fn = [&spec, &ctx](std::span<const Vec2> x) {
    return evaluate_cost(x, spec, ctx);
  };
  return pattern_search(fn, std::move(start), b, cfg);
}

MultistartResult multistart_custom(const CostFunction& cost,
                                   const Rect& bounds, const SolverConfig& cfg,
                                   int n_circles) {
  cfg.validate();
  if (n_circles < 1)
    throw std::invalid_argument("multistart needs at least one circle");

  std::mt19937_64 rng(cfg.seed);
  MultistartResult out;
  out.all.reserve(cfg.n_starts);

  for (int s = 0; s < cfg.n_starts; ++s) {
    std::vector<Vec2> start(n_circles);
    for (Vec2& p : start) p = uniform_point(rng, bounds);
    out.all.push_back(pattern_search(cost, std::move(start), bounds, cfg));
  }

  out.best_index = 0;
  for (int s = 1; s < cfg.n_starts; ++s)
    if (out.all[s].cost < out.all[out.best_index].cost) out.best_index = s;
  out.best = out.all[out.best_index];
  return out;
}

MultistartResult multistart(const CostSpec& spec, const PlanContext& ctx,
                            const SolverConfig& cfg, int n_circles) {
  CostFunction fn = [&spec, &ctx](std::span<const Vec2> x) {
    return evaluate_cost(x, spec, ctx);
  };
  return multistart_custom(fn, ctx.bounds(), cfg, n_circles);
}

}  // namespace orthocap
