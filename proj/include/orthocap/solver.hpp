#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "orthocap/cost.hpp"

namespace orthocap {

/// Portable uniform double in [0, 1) from the top 53 bits of the generator.
/// std::uniform_real_distribution is implementation-defined, which would
/// break byte-identical reproducibility.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Vec2 uniform_point(std::mt19937_64& rng, const Rect& b) {
  return {b.xlo + uniform01(rng) * b.width(),
          b.ylo + uniform01(rng) * b.height()};
}

struct SolverConfig {
  int max_iters = 2000;      // pattern-search iterations (one sweep each)
  double step_init = 0.5;    // initial move length, world units
  double step_tol = 1e-3;    // stop once the move length shrinks below this
  int n_starts = 8;          // multistart count
  uint64_t seed = 1;

  void validate() const;
};

using CostFunction = std::function<double(std::span<const Vec2>)>;

struct LocalResult {
  std::vector<Vec2> centers;
  double cost = 0.0;
  std::vector<double> trace;  // cost after every iteration, nonincreasing
  int iters = 0;
};

/// Compass pattern search over the capture points with box projection onto
/// the bounds: each iteration tries +-step moves per coordinate and applies
/// the best improving one; the step halves when no move improves. The cost
/// trace is monotone nonincreasing by construction and the search is
/// deterministic.
LocalResult pattern_search(const CostFunction& cost, std::vector<Vec2> start,
                           const Rect& bounds, const SolverConfig& cfg);

/// pattern_search on evaluate_cost. Throws when the start is infeasible.
LocalResult local_optimize(const CostSpec& spec, std::vector<Vec2> start,
                           const PlanContext& ctx, const SolverConfig& cfg);

struct MultistartResult {
  LocalResult best;
  int best_index = 0;
  std::vector<LocalResult> all;  // one per start, in seed order
};

/// cfg.n_starts uniform starts of n_circles points each, locally optimized;
/// the best cost wins, ties broken by the earliest start index.
MultistartResult multistart(const CostSpec& spec, const PlanContext& ctx,
                            const SolverConfig& cfg, int n_circles);

/// Multistart over an arbitrary cost (used by the Pareto scalarization).
MultistartResult multistart_custom(const CostFunction& cost, const Rect& bounds,
                                   const SolverConfig& cfg, int n_circles);

}  // namespace orthocap
