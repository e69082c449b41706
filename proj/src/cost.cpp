#include "orthocap/cost.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "orthocap/diffgeo.hpp"

namespace orthocap {

double circle_overlap_area(double r1, double r2, double dist) {
  if (!(r1 > 0.0) || !(r2 > 0.0))
    throw std::invalid_argument("circle radii must be > 0");
  if (dist < 0.0) throw std::invalid_argument("center distance must be >= 0");

  if (dist >= r1 + r2) return 0.0;
  const double rmin = std::fmin(r1, r2);
  if (dist <= std::fabs(r1 - r2)) return kPi * rmin * rmin;

  // Two-segment lens; the acos arguments are clamped against floating-point
  // drift at the tangency seams.
  auto clamped_acos = [](double c) {
    return std::acos(std::fmin(1.0, std::fmax(-1.0, c)));
  };
  const double theta =
      2.0 * clamped_acos((r2 * r2 + dist * dist - r1 * r1) / (2.0 * dist * r2));
  const double phi =
      2.0 * clamped_acos((r1 * r1 + dist * dist - r2 * r2) / (2.0 * dist * r1));
  return 0.5 * r2 * r2 * (theta - std::sin(theta)) +
         0.5 * r1 * r1 * (phi - std::sin(phi));
}

const char* cost_kind_name(CostKind kind) {
  switch (kind) {
    case CostKind::F1: return "F1";
    case CostKind::F2: return "F2";
    case CostKind::F3: return "F3";
    case CostKind::F4: return "F4";
    case CostKind::F5: return "F5";
    case CostKind::G1: return "G1";
    case CostKind::G2: return "G2";
  }
  return "?";
}

CostKind cost_kind_from_name(const std::string& name) {
  if (name == "F1") return CostKind::F1;
  if (name == "F2") return CostKind::F2;
  if (name == "F3") return CostKind::F3;
  if (name == "F4") return CostKind::F4;
  if (name == "F5") return CostKind::F5;
  if (name == "G1") return CostKind::G1;
  if (name == "G2") return CostKind::G2;
  throw std::invalid_argument("unknown cost kind: " + name);
}

std::array<double, 2> CostSpec::weights_for(int n_circles) const {
  if (!schedule.empty()) {
    auto it = schedule.upper_bound(n_circles);
    if (it != schedule.begin()) --it;
    return it->second;
  }
  if (variable_weights && n_circles > 0)
    return {5.0, 0.5 / static_cast<double>(n_circles)};
  return {w1, w2};
}

void CostSpec::validate() const {
  if (kind == CostKind::F4 && !variable_weights && schedule.empty()) {
    if (!(w1 >= 0.0) || !(w2 >= 0.0))
      throw std::invalid_argument("F4 weights must be set and nonnegative");
  }
}

PlanContext PlanContext::make(const SurfaceModel& model,
                              const OrthoParams& params, int k_max_grid_res) {
  params.validate();
  return {&model, params, max_abs_gaussian_curvature(model, k_max_grid_res)};
}

double PlanContext::radius_at(const Vec2& point) const {
  return approx_radius_curvature(*model, point, params, k_max);
}

CostComponents cost_components(std::span<const Vec2> centers,
                               const PlanContext& ctx) {
  const Rect b = ctx.bounds();
  const double r_cap = ctx.params.radius_cap();
  const size_t n = centers.size();

  std::vector<double> radii(n);
  for (size_t i = 0; i < n; ++i) {
    if (!b.contains(centers[i]))
      throw std::domain_error("capture point outside bounds");
    radii[i] = ctx.radius_at(centers[i]);
  }

  CostComponents c;
  for (size_t i = 0; i < n; ++i) {
    const double rel = radii[i] / r_cap;
    c.coverage_rel += kPi * rel * rel;
    c.coverage_abs += kPi * radii[i] * radii[i];
    for (size_t j = i + 1; j < n; ++j) {
      const double dist = (centers[i] - centers[j]).norm();
      c.overlap_linear += positive_part(radii[i] + radii[j] - dist);
      c.overlap_area += circle_overlap_area(radii[i], radii[j], dist);
    }
  }
  return c;
}

double combine_cost(const CostComponents& c, const CostSpec& spec,
                    int n_circles) {
  switch (spec.kind) {
    case CostKind::F1: return c.overlap_linear;
    case CostKind::F2: return c.overlap_linear - c.coverage_rel;
    case CostKind::F3: return 5.0 * c.overlap_linear - 0.5 * c.coverage_rel;
    case CostKind::F4: {
      const auto w = spec.weights_for(n_circles);
      return w[0] * c.overlap_linear - w[1] * c.coverage_rel;
    }
    case CostKind::F5: return c.overlap_area - c.coverage_abs;
    case CostKind::G1: return c.overlap_linear - c.coverage_abs;
    case CostKind::G2: return 5.0 * c.overlap_linear - 0.5 * c.coverage_abs;
  }
  return 0.0;
}

double evaluate_cost(std::span<const Vec2> centers, const CostSpec& spec,
                     const PlanContext& ctx) {
  spec.validate();
  return combine_cost(cost_components(centers, ctx), spec,
                      static_cast<int>(centers.size()));
}

double evaluate_cost_against(std::span<const Vec2> centers,
                             std::span<const Vec2> frozen,
                             const CostSpec& spec, const PlanContext& ctx) {
  spec.validate();
  const Rect b = ctx.bounds();
  const double r_cap = ctx.params.radius_cap();
  const size_t n = centers.size();

  std::vector<double> radii(n);
  for (size_t i = 0; i < n; ++i) {
    if (!b.contains(centers[i]))
      throw std::domain_error("capture point outside bounds");
    radii[i] = ctx.radius_at(centers[i]);
  }
  std::vector<double> frozen_radii(frozen.size());
  for (size_t k = 0; k < frozen.size(); ++k)
    frozen_radii[k] = ctx.radius_at(frozen[k]);

  CostComponents c;
  for (size_t i = 0; i < n; ++i) {
    const double rel = radii[i] / r_cap;
    c.coverage_rel += kPi * rel * rel;
    c.coverage_abs += kPi * radii[i] * radii[i];
    for (size_t j = i + 1; j < n; ++j) {
      const double dist = (centers[i] - centers[j]).norm();
      c.overlap_linear += positive_part(radii[i] + radii[j] - dist);
      c.overlap_area += circle_overlap_area(radii[i], radii[j], dist);
    }
    for (size_t k = 0; k < frozen.size(); ++k) {
      const double dist = (centers[i] - frozen[k]).norm();
      c.overlap_linear += positive_part(radii[i] + frozen_radii[k] - dist);
      c.overlap_area += circle_overlap_area(radii[i], frozen_radii[k], dist);
    }
  }
  const int total = static_cast<int>(n + frozen.size());
  return combine_cost(c, spec, total);
}

}  // namespace orthocap
