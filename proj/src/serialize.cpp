#include "orthocap/serialize.hpp"

#include <sstream>

namespace orthocap {

void to_json(json& j, const Grid2D& g) {
  j = json{{"rows", g.rows},
           {"cols", g.cols},
           {"spacing", g.spacing},
           {"origin", {g.origin.x, g.origin.y}},
           {"data", g.data}};
}

void from_json(const json& j, Grid2D& g) {
  g.rows = j.at("rows").get<int>();
  g.cols = j.at("cols").get<int>();
  g.spacing = j.at("spacing").get<double>();
  g.origin = {j.at("origin").at(0).get<double>(),
              j.at("origin").at(1).get<double>()};
  g.data = j.at("data").get<std::vector<double>>();
  g.validate();
}

void to_json(json& j, const Vec2& v) { j = json{v.x, v.y}; }

void from_json(const json& j, Vec2& v) {
  v.x = j.at(0).get<double>();
  v.y = j.at(1).get<double>();
}

void to_json(json& j, const Rect& r) {
  j = json{{"xlo", r.xlo}, {"xhi", r.xhi}, {"ylo", r.ylo}, {"yhi", r.yhi}};
}

void from_json(const json& j, Rect& r) {
  r.xlo = j.at("xlo").get<double>();
  r.xhi = j.at("xhi").get<double>();
  r.ylo = j.at("ylo").get<double>();
  r.yhi = j.at("yhi").get<double>();
}

json imaging_surface_to_json(const ImagingSurface& s) {
  std::vector<double> xs(s.points.size()), ys(s.points.size()),
      zs(s.points.size());
  std::vector<int> valid(s.valid.begin(), s.valid.end());
  for (size_t k = 0; k < s.points.size(); ++k) {
    xs[k] = s.points[k].x;
    ys[k] = s.points[k].y;
    zs[k] = s.points[k].z;
  }
  return json{{"rows", s.rows},
              {"cols", s.cols},
              {"d", s.d},
              {"source_bounds", s.source_bounds},
              {"x", xs},
              {"y", ys},
              {"data", zs},
              {"valid", valid}};
}

void to_json(json& j, const HeightBound& hb) {
  j = json{{"bounded", hb.bounded}};
  if (hb.bounded) j["D"] = hb.value;
}

json region_to_json(const RegionBoundary& boundary) {
  json j;
  if (const auto* mask = std::get_if<RegionMask>(&boundary)) {
    std::vector<int> cells(mask->cells.begin(), mask->cells.end());
    j = json{{"kind", "mask"},
             {"center", mask->center},
             {"dx", mask->dx},
             {"dy", mask->dy},
             {"half_nx", mask->half_nx},
             {"half_ny", mask->half_ny},
             {"cells", cells},
             {"count", mask->count()}};
  } else if (const auto* poly = std::get_if<PolygonBoundary>(&boundary)) {
    j = json{{"kind", "polygon"},
             {"center", poly->center},
             {"vertices", poly->vertices}};
  } else if (const auto* ell = std::get_if<EllipseBoundary>(&boundary)) {
    j = json{{"kind", "ellipse"},
             {"center", ell->center},
             {"semi_major", ell->semi_major},
             {"semi_minor", ell->semi_minor},
             {"angle", ell->angle}};
  } else if (const auto* circ = std::get_if<CircleBoundary>(&boundary)) {
    j = json{{"kind", "circle"},
             {"center", circ->center},
             {"radius", circ->radius}};
  }
  return j;
}

void to_json(json& j, const Circle& c) {
  j = json{{"x", c.center.x}, {"y", c.center.y}, {"r", c.radius}};
}

void from_json(const json& j, Circle& c) {
  c.center.x = j.at("x").get<double>();
  c.center.y = j.at("y").get<double>();
  c.radius = j.at("r").get<double>();
}

void to_json(json& j, const CoverageMetrics& m) {
  j = json{{"area_covered", m.area_covered},
           {"percent_covered", m.percent_covered},
           {"overlap_closed_form", m.overlap_closed_form},
           {"overlap_grid", m.overlap_grid}};
}

void to_json(json& j, const CapturePlan& p) {
  json history = json::array();
  for (const FillStep& s : p.history)
    history.push_back(json{{"n", s.n}, {"metrics", s.metrics}});
  j = json{{"circles", p.circles},
           {"metrics", p.metrics},
           {"reached_target", p.reached_target},
           {"provenance",
            {{"cost", p.cost_kind},
             {"algorithm", p.algorithm},
             {"solver", p.solver},
             {"seed", p.seed},
             {"n_history", p.n_history()}}},
           {"history", history}};
}

CapturePlan capture_plan_from_json(const json& j) {
  CapturePlan p;
  p.circles = j.at("circles").get<std::vector<Circle>>();
  p.reached_target = j.value("reached_target", true);
  if (j.contains("provenance")) {
    const json& prov = j.at("provenance");
    p.cost_kind = prov.value("cost", "");
    p.algorithm = prov.value("algorithm", "");
    p.solver = prov.value("solver", "");
    p.seed = prov.value("seed", 0ull);
  }
  return p;
}

void to_json(json& j, const LabelGrid& g) {
  j = json{{"bounds", g.bounds},
           {"res", g.res},
           {"labels", g.labels},
           {"unassigned", g.unassigned_count()}};
}

void to_json(json& j, const BoundarySegment& s) {
  j = json{{"a", s.a}, {"b", s.b}, {"circles", {s.first, s.second}}};
}

void to_json(json& j, const ParetoPoint& p) {
  j = json{{"lambda", p.lambda},
           {"f1", p.f1},
           {"f2", p.f2},
           {"centers", p.centers}};
}

namespace {

std::string csv_num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string metrics_csv(const CapturePlan& plan) {
  std::string out =
      "n,area_covered,percent_covered,overlap_closed_form,overlap_grid\n";
  for (const FillStep& s : plan.history) {
    out += std::to_string(s.n) + "," + csv_num(s.metrics.area_covered) + "," +
           csv_num(s.metrics.percent_covered) + "," +
           csv_num(s.metrics.overlap_closed_form) + "," +
           csv_num(s.metrics.overlap_grid) + "\n";
  }
  return out;
}

std::string pareto_csv(const std::vector<ParetoPoint>& points) {
  std::string out = "lambda,f1,f2\n";
  for (const ParetoPoint& p : points)
    out += csv_num(p.lambda) + "," + csv_num(p.f1) + "," + csv_num(p.f2) + "\n";
  return out;
}

}  // namespace orthocap
