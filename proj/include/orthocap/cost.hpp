#pragma once

#include <array>
#include <map>
#include <span>
#include <string>

#include "orthocap/ortho.hpp"
#include "orthocap/surfaces.hpp"

namespace orthocap {

/// Area of the intersection of two circles with radii r1, r2 whose centers
/// are `dist` apart: 0 when disjoint, the smaller disk when contained, the
/// two-segment lens otherwise.
double circle_overlap_area(double r1, double r2, double dist);

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

enum class CostKind { F1, F2, F3, F4, F5, G1, G2 };

const char* cost_kind_name(CostKind kind);
CostKind cost_kind_from_name(const std::string& name);

/// Cost selection. F4 uses (w1, w2); the other kinds ignore the weights.
/// With `variable_weights`, F4 re-derives (5, 0.5/N) from the circle count;
/// an explicit schedule (keyed by N, nearest key below applies) wins over
/// both.
struct CostSpec {
  CostKind kind = CostKind::F3;
  double w1 = 1.0;
  double w2 = 1.0;
  bool variable_weights = false;
  std::map<int, std::array<double, 2>> schedule;

  std::array<double, 2> weights_for(int n_circles) const;
  void validate() const;
};

/// Shared evaluation context: the surface, the imaging parameters and the
/// precomputed curvature ceiling that fixes the radius model.
struct PlanContext {
  const SurfaceModel* model = nullptr;
  OrthoParams params;
  double k_max = 0.0;

  static PlanContext make(const SurfaceModel& model, const OrthoParams& params,
                          int k_max_grid_res = 201);

  const Rect& bounds() const { return model->bounds(); }
  /// Circular-model radius at a capture point; throws when out of bounds.
  double radius_at(const Vec2& point) const;
};

/// The raw sums every cost kind is assembled from. Keeping them separate
/// makes the F3 = 5*overlap - 0.5*coverage identity exact and feeds the
/// Pareto objectives.
struct CostComponents {
  double overlap_linear = 0.0;  // sum of [r_i + r_j - |Xi - Xj|]+
  double overlap_area = 0.0;    // sum of pairwise lens areas
  double coverage_rel = 0.0;    // sum of pi (r_i / R)^2
  double coverage_abs = 0.0;    // sum of pi r_i^2
};

CostComponents cost_components(std::span<const Vec2> centers,
                               const PlanContext& ctx);

double combine_cost(const CostComponents& c, const CostSpec& spec,
                    int n_circles);

double evaluate_cost(std::span<const Vec2> centers, const CostSpec& spec,
                     const PlanContext& ctx);

/// Cost of `centers` optimized against a frozen set: overlap terms include
/// frozen-vs-new pairs, coverage terms count only the new circles.
double evaluate_cost_against(std::span<const Vec2> centers,
                             std::span<const Vec2> frozen,
                             const CostSpec& spec, const PlanContext& ctx);

}  // namespace orthocap
