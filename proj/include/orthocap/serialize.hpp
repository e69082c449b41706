#pragma once

#include <json.hpp>

#include "orthocap/diffgeo.hpp"
#include "orthocap/partition.hpp"
#include "orthocap/plan.hpp"

namespace orthocap {

using nlohmann::json;

// Grid schema shared by heightfields, curvature fields and density maps:
// {rows, cols, spacing, origin, data(row-major)}.
void to_json(json& j, const Grid2D& g);
void from_json(const json& j, Grid2D& g);

void to_json(json& j, const Vec2& v);
void from_json(const json& j, Vec2& v);
void to_json(json& j, const Rect& r);
void from_json(const json& j, Rect& r);

// Imaging surface: grid schema for z' plus x'/y' arrays and the validity
// bitmask.
json imaging_surface_to_json(const ImagingSurface& s);

void to_json(json& j, const HeightBound& hb);

// Region boundaries serialize with a "kind" discriminator.
json region_to_json(const RegionBoundary& boundary);

void to_json(json& j, const Circle& c);
void from_json(const json& j, Circle& c);
void to_json(json& j, const CoverageMetrics& m);
void to_json(json& j, const CapturePlan& p);
CapturePlan capture_plan_from_json(const json& j);

void to_json(json& j, const LabelGrid& g);
void to_json(json& j, const BoundarySegment& s);
void to_json(json& j, const ParetoPoint& p);

std::string metrics_csv(const CapturePlan& plan);
std::string pareto_csv(const std::vector<ParetoPoint>& points);

}  // namespace orthocap
