#include "orthocap/run_config.hpp"

#include <stdexcept>

#include "orthocap/image_io.hpp"

namespace orthocap {

SurfaceModel build_surface(const SurfaceSpec& spec) {
  if (spec.kind == "builtin") {
    if (spec.name == "plane") return SurfaceModel(make_plane(spec.bounds, spec.z0));
    if (spec.name == "coscos")
      return SurfaceModel(make_cos_cos(spec.bounds, spec.amplitude));
    if (spec.name == "cos2cos2") return SurfaceModel(make_cos2_cos2(spec.bounds));
    if (spec.name == "sphere")
      return SurfaceModel(make_sphere(spec.bounds, spec.radius));
    if (spec.name == "pseudosphere")
      return SurfaceModel(make_pseudosphere(spec.bounds, spec.radius));
    throw std::invalid_argument("unknown builtin surface: " + spec.name);
  }
  if (spec.kind == "expr") {
    if (spec.expr.empty()) throw std::invalid_argument("empty surface expression");
    return SurfaceModel(make_expression_surface(spec.expr, spec.bounds));
  }
  if (spec.kind == "dem") {
    HeightField field = load_dem(spec.dem_path);
    if (spec.smooth_n > 0) field = mean_smooth(field, spec.smooth_n);
    field.spacing = spec.dem_spacing;
    return SurfaceModel(std::move(field));
  }
  throw std::invalid_argument("unknown surface kind: " + spec.kind);
}

void RunConfig::validate() const {
  ortho.validate();
  cost.validate();
  solver.validate();
  fill.validate();
  if (algorithm != "batch" && algorithm != "sequential")
    throw std::invalid_argument("algorithm must be batch or sequential");
  if (grid_res < 2) throw std::invalid_argument("grid_res must be >= 2");
}

void to_json(json& j, const SurfaceSpec& s) {
  j = json{{"kind", s.kind},         {"name", s.name},
           {"amplitude", s.amplitude}, {"radius", s.radius},
           {"z0", s.z0},             {"expr", s.expr},
           {"dem_path", s.dem_path}, {"smooth_n", s.smooth_n},
           {"dem_spacing", s.dem_spacing}, {"bounds", s.bounds}};
}

void from_json(const json& j, SurfaceSpec& s) {
  SurfaceSpec d;
  s.kind = j.value("kind", d.kind);
  s.name = j.value("name", d.name);
  s.amplitude = j.value("amplitude", d.amplitude);
  s.radius = j.value("radius", d.radius);
  s.z0 = j.value("z0", d.z0);
  s.expr = j.value("expr", d.expr);
  s.dem_path = j.value("dem_path", d.dem_path);
  s.smooth_n = j.value("smooth_n", d.smooth_n);
  s.dem_spacing = j.value("dem_spacing", d.dem_spacing);
  if (j.contains("bounds")) s.bounds = j.at("bounds").get<Rect>();
}

void to_json(json& j, const OrthoParams& p) {
  j = json{{"d", p.d},   {"eps_deg", rad_to_deg(p.eps)},
           {"dx", p.dx}, {"dy", p.dy},
           {"m", p.m},   {"linearized", p.linearized}};
}

void from_json(const json& j, OrthoParams& p) {
  OrthoParams d;
  p.d = j.value("d", d.d);
  p.eps = deg_to_rad(j.value("eps_deg", rad_to_deg(d.eps)));
  p.dx = j.value("dx", d.dx);
  p.dy = j.value("dy", d.dy);
  p.m = j.value("m", d.m);
  p.linearized = j.value("linearized", d.linearized);
}

void to_json(json& j, const CostSpec& s) {
  j = json{{"kind", cost_kind_name(s.kind)},
           {"w1", s.w1},
           {"w2", s.w2},
           {"variable_weights", s.variable_weights}};
  if (!s.schedule.empty()) {
    json sched = json::object();
    for (const auto& [n, w] : s.schedule)
      sched[std::to_string(n)] = json{w[0], w[1]};
    j["schedule"] = sched;
  }
}

void from_json(const json& j, CostSpec& s) {
  CostSpec d;
  s.kind = cost_kind_from_name(j.value("kind", std::string("F3")));
  s.w1 = j.value("w1", d.w1);
  s.w2 = j.value("w2", d.w2);
  s.variable_weights = j.value("variable_weights", d.variable_weights);
  s.schedule.clear();
  if (j.contains("schedule")) {
    for (const auto& [key, val] : j.at("schedule").items())
      s.schedule[std::stoi(key)] = {val.at(0).get<double>(),
                                    val.at(1).get<double>()};
  }
}

void to_json(json& j, const SolverConfig& c) {
  j = json{{"max_iters", c.max_iters},
           {"step_init", c.step_init},
           {"step_tol", c.step_tol},
           {"n_starts", c.n_starts},
           {"seed", c.seed}};
}

void from_json(const json& j, SolverConfig& c) {
  SolverConfig d;
  c.max_iters = j.value("max_iters", d.max_iters);
  c.step_init = j.value("step_init", d.step_init);
  c.step_tol = j.value("step_tol", d.step_tol);
  c.n_starts = j.value("n_starts", d.n_starts);
  c.seed = j.value("seed", d.seed);
}

void to_json(json& j, const FillConfig& c) {
  j = json{{"coverage_target", c.coverage_target},
           {"n0", c.n0},
           {"step_n", c.step_n},
           {"n_max", c.n_max},
           {"coverage_grid_res", c.coverage_grid_res}};
}

void from_json(const json& j, FillConfig& c) {
  FillConfig d;
  c.coverage_target = j.value("coverage_target", d.coverage_target);
  c.n0 = j.value("n0", d.n0);
  c.step_n = j.value("step_n", d.step_n);
  c.n_max = j.value("n_max", d.n_max);
  c.coverage_grid_res = j.value("coverage_grid_res", d.coverage_grid_res);
}

void to_json(json& j, const RunConfig& c) {
  j = json{{"surface", c.surface},
           {"ortho", c.ortho},
           {"cost", c.cost},
           {"solver", c.solver},
           {"fill", c.fill},
           {"algorithm", c.algorithm},
           {"grid_res", c.grid_res},
           {"seed", c.seed},
           {"out_dir", c.out_dir}};
}

void from_json(const json& j, RunConfig& c) {
  RunConfig d;
  if (j.contains("surface")) c.surface = j.at("surface").get<SurfaceSpec>();
  if (j.contains("ortho")) c.ortho = j.at("ortho").get<OrthoParams>();
  if (j.contains("cost")) c.cost = j.at("cost").get<CostSpec>();
  if (j.contains("solver")) c.solver = j.at("solver").get<SolverConfig>();
  if (j.contains("fill")) c.fill = j.at("fill").get<FillConfig>();
  c.algorithm = j.value("algorithm", d.algorithm);
  c.grid_res = j.value("grid_res", d.grid_res);
  c.seed = j.value("seed", d.seed);
  c.out_dir = j.value("out_dir", d.out_dir);
}

}  // namespace orthocap
