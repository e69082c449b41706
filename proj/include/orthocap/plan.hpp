#pragma once

#include <string>
#include <vector>

#include "orthocap/solver.hpp"

namespace orthocap {

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

struct CoverageMetrics {
  double area_covered = 0.0;       // union of the circles clipped to bounds
  double percent_covered = 0.0;    // relative to the bound rectangle area
  double overlap_closed_form = 0.0;  // sum of pairwise lens areas
  double overlap_grid = 0.0;         // cell_area * sum(multiplicity - 1)
};

/// Rasterizes the bounds at grid_res x grid_res cell centers and measures
/// covered area and overlap. Cells outside every circle count nothing.
CoverageMetrics coverage_metrics(std::span<const Circle> circles,
                                 const Rect& bounds, int grid_res = 400);

struct FillStep {
  int n = 0;
  CoverageMetrics metrics;
};

struct CapturePlan {
  std::vector<Circle> circles;
  CoverageMetrics metrics;
  bool reached_target = false;
  // Provenance.
  std::string cost_kind;
  std::string algorithm;   // "batch" or "sequential"
  std::string solver = "pattern-search";
  uint64_t seed = 0;
  std::vector<FillStep> history;

  std::vector<int> n_history() const;
};

struct FillConfig {
  double coverage_target = 90.0;  // percent, in (0, 100]
  int n0 = 1;                     // batch: initial circle count
  int step_n = 1;                 // sequential: circles added per iteration
  int n_max = 200;                // hard cap; exceeded -> reached_target=false
  int coverage_grid_res = 400;

  void validate() const;
};

/// Batch filling: optimize all N circles jointly from a fresh random start,
/// then grow N by one until the coverage target is met or N exceeds n_max.
CapturePlan batch_fill(const PlanContext& ctx, const CostSpec& spec,
                       const SolverConfig& solver, const FillConfig& fill);

/// Sequential filling: repeatedly optimize only step_n new circles against
/// the frozen set, then append them, until the target is met or the cap is
/// exceeded.
CapturePlan sequential_fill(const PlanContext& ctx, const CostSpec& spec,
                            const SolverConfig& solver, const FillConfig& fill);

struct ParetoPoint {
  std::vector<Vec2> centers;
  double f1 = 0.0;  // apparent-overlap objective
  double f2 = 0.0;  // overlap minus relative coverage
  double lambda = 0.0;
};

/// Weighted-sum sweep lambda*f1 + (1-lambda)*f2 over n_points values of
/// lambda in [0, 1], each solved by multistart; returns the nondominated
/// subset sorted by f1 ascending.
std::vector<ParetoPoint> pareto_front(const PlanContext& ctx, int n_circles,
                                      const SolverConfig& solver, int n_points);

/// Keeps the points not dominated by any other (minimization in both
/// coordinates), sorted by f1 ascending.
std::vector<ParetoPoint> nondominated_filter(std::vector<ParetoPoint> points);

/// Normal-ray density above a curve: rays start at n_rays samples of the
/// curve and march along the upward normal through a res x res cell grid
/// spanning the domain times [z_lo, z_hi]. Each ray increments every cell it
/// crosses once. Suggested points are strict local maxima of the counts.
struct CurveDensity {
  Grid2D counts;  // origin at (lo, z_lo); spacing differs per axis, see steps
  double step_x = 0.0;
  double step_z = 0.0;
  std::vector<Vec2> suggested;  // (x, z), best count first
};

CurveDensity normal_density_curve(const Curve1D& curve, double z_lo,
                                  double z_hi, int res, int n_rays = 0);

/// 3D analogue over a surface; cells span bounds x [z_lo, z_hi].
struct SurfaceDensity {
  int nx = 0, ny = 0, nz = 0;
  Rect bounds;
  double z_lo = 0.0, z_hi = 0.0;
  std::vector<uint32_t> counts;  // x-major within row, then y, then z
  std::vector<Vec3> suggested;

  size_t index(int ix, int iy, int iz) const {
    return (static_cast<size_t>(iz) * ny + iy) * nx + ix;
  }
};

SurfaceDensity normal_density_surface(const SurfaceModel& model, double z_lo,
                                      double z_hi, int res, int n_rays = 0);

}  // namespace orthocap
