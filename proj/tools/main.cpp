// Terrain-capture planning CLI: ingest -> analyze -> plan -> divide.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "orthocap/image_io.hpp"
#include "orthocap/run_config.hpp"
#include "orthocap/svg.hpp"

namespace fs = std::filesystem;
using namespace orthocap;

namespace {

struct TargetUnreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
  write_file_bytes(path.string(), text);
}

void write_json_file(const fs::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  return dir;
}

void emit_run_config(const RunConfig& cfg, const fs::path& dir) {
  write_json_file(dir / "run_config.json", json(cfg));
}

Grid2D sample_elevation(const SurfaceModel& model, int res) {
  const Rect b = model.bounds();
  const double sx = b.width() / (res - 1);
  const double sy = b.height() / (res - 1);
  Grid2D g(res, res, 0.0, sx, {b.xlo, b.ylo});
  for (int i = 0; i < res; ++i) {
    const double y = (i == res - 1) ? b.yhi : b.ylo + i * sy;
    for (int j = 0; j < res; ++j) {
      const double x = (j == res - 1) ? b.xhi : b.xlo + j * sx;
      g.at(i, j) = model.elevation({x, y});
    }
  }
  return g;
}

int cmd_ingest(const RunConfig& cfg) {
  const fs::path dir = ensure_out_dir(cfg);
  HeightField field = load_dem(cfg.surface.dem_path);
  if (cfg.surface.smooth_n > 0) field = mean_smooth(field, cfg.surface.smooth_n);
  field.spacing = cfg.surface.dem_spacing;

  write_json_file(dir / "heightfield.json", json(field));
  write_pgm(field, (dir / "heightfield.pgm").string());

  SvgCanvas svg(field.bounds());
  svg.contours(field, 12);
  svg.save((dir / "contours.svg").string());
  emit_run_config(cfg, dir);
  std::cout << "ingested " << field.rows << "x" << field.cols
            << " heightfield\n";
  return 0;
}

int cmd_curvature(const RunConfig& cfg) {
  const fs::path dir = ensure_out_dir(cfg);
  const SurfaceModel model = build_surface(cfg.surface);
  const Grid2D kg = gaussian_curvature_grid(model, cfg.grid_res);
  const Grid2D hg = mean_curvature_grid(model, cfg.grid_res);
  double k_max = 0.0;
  for (double v : kg.data) k_max = std::fmax(k_max, std::fabs(v));

  write_json_file(dir / "gaussian.json", json(kg));
  write_json_file(dir / "mean.json", json(hg));
  write_json_file(dir / "kmax.json", json{{"k_max", k_max}});

  SvgCanvas svg(model.bounds());
  svg.contours(kg, 12);
  svg.save((dir / "gaussian.svg").string());
  SvgCanvas svg_h(model.bounds());
  svg_h.contours(hg, 12);
  svg_h.save((dir / "mean.svg").string());
  emit_run_config(cfg, dir);
  std::cout << "k_max = " << k_max << "\n";
  return 0;
}

int cmd_imaging_surface(const RunConfig& cfg) {
  const fs::path dir = ensure_out_dir(cfg);
  const SurfaceModel model = build_surface(cfg.surface);
  const ImagingSurface s = imaging_surface(model, cfg.ortho.d, cfg.grid_res);
  write_json_file(dir / "imaging_surface.json", imaging_surface_to_json(s));

  // Contours of z' plus the invalid points.
  Grid2D zs(s.rows, s.cols, 0.0,
            model.bounds().width() / (s.cols - 1),
            {model.bounds().xlo, model.bounds().ylo});
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j) zs.at(i, j) = s.points[s.index(i, j)].z;
  SvgCanvas svg(model.bounds());
  svg.contours(zs, 12);
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j)
      if (!s.valid[s.index(i, j)]) {
        const Vec3& src = s.sources[s.index(i, j)];
        svg.dot({src.x, src.y}, 1.5, "#d62728");
      }
  svg.save((dir / "imaging_surface.svg").string());
  emit_run_config(cfg, dir);
  std::cout << "invalid imaging points: " << s.invalid_count() << " / "
            << s.points.size() << "\n";
  return 0;
}

int cmd_height_bound(const RunConfig& cfg, const std::string& f_expr,
                     double lo, double hi, double tol, double cap, int res) {
  const fs::path dir = ensure_out_dir(cfg);
  const Curve1D curve = make_expression_curve(f_expr, lo, hi);
  const HeightBound hb = max_valid_height_1d(curve, tol, cap, res);
  write_json_file(dir / "height_bound.json", json(hb));
  emit_run_config(cfg, dir);
  if (hb.bounded)
    std::cout << "D = " << hb.value << "\n";
  else
    std::cout << "unbounded (valid up to cap " << cap << ")\n";
  return 0;
}

int cmd_region(const RunConfig& cfg, const Vec2& point, const std::string& mode,
               int n_dirs) {
  const fs::path dir = ensure_out_dir(cfg);
  const SurfaceModel model = build_surface(cfg.surface);

  RegionBoundary boundary;
  if (mode == "exact") {
    boundary = surface_ortho_region(model, point, cfg.ortho);
  } else if (mode == "polygon") {
    boundary = approx_polygonal(model, point, cfg.ortho, n_dirs);
  } else if (mode == "ellipse") {
    boundary = approx_elliptical(approx_polygonal(model, point, cfg.ortho, n_dirs));
  } else if (mode == "circle-avg") {
    boundary = approx_circular_avg(approx_polygonal(model, point, cfg.ortho, n_dirs));
  } else if (mode == "circle-curvature") {
    const double k_max = max_abs_gaussian_curvature(model, cfg.grid_res);
    boundary = CircleBoundary{
        point, approx_radius_curvature(model, point, cfg.ortho, k_max)};
  } else {
    throw CLI::ValidationError("--mode", "unknown region mode: " + mode);
  }

  write_json_file(dir / "region.json", region_to_json(boundary));

  SvgCanvas svg(model.bounds());
  svg.contours(sample_elevation(model, std::max(cfg.grid_res, 64)), 10);
  if (const auto* mask = std::get_if<RegionMask>(&boundary))
    svg.region_mask(*mask, "#f5851880");
  else if (const auto* poly = std::get_if<PolygonBoundary>(&boundary))
    svg.polygon(poly->vertices, "#e45756");
  else if (const auto* ell = std::get_if<EllipseBoundary>(&boundary))
    svg.ellipse(*ell, "#e45756");
  else if (const auto* circ = std::get_if<CircleBoundary>(&boundary))
    svg.circle(circ->center, circ->radius, "#e45756");
  svg.dot(point, 3.0, "#d62728");
  svg.save((dir / "region.svg").string());
  emit_run_config(cfg, dir);
  return 0;
}

int cmd_plan(const RunConfig& cfg) {
  const fs::path dir = ensure_out_dir(cfg);
  const SurfaceModel model = build_surface(cfg.surface);
  const PlanContext ctx = PlanContext::make(model, cfg.ortho, cfg.grid_res);

  SolverConfig solver = cfg.solver;
  solver.seed = cfg.seed;
  const CapturePlan plan = cfg.algorithm == "batch"
                               ? batch_fill(ctx, cfg.cost, solver, cfg.fill)
                               : sequential_fill(ctx, cfg.cost, solver, cfg.fill);

  write_json_file(dir / "plan.json", json(plan));
  write_text(dir / "metrics.csv", metrics_csv(plan));

  SvgCanvas svg(model.bounds());
  svg.contours(sample_elevation(model, std::max(cfg.grid_res, 64)), 10);
  svg.circles(plan.circles, "#4c78a8");
  svg.save((dir / "plan.svg").string());
  emit_run_config(cfg, dir);

  std::cout << "N = " << plan.circles.size() << ", coverage = "
            << plan.metrics.percent_covered << "%\n";
  if (!plan.reached_target)
    throw TargetUnreachable("coverage target not reached within n_max");
  return 0;
}

int cmd_pareto(const RunConfig& cfg, int n_circles, int n_points) {
  const fs::path dir = ensure_out_dir(cfg);
  const SurfaceModel model = build_surface(cfg.surface);
  const PlanContext ctx = PlanContext::make(model, cfg.ortho, cfg.grid_res);

  SolverConfig solver = cfg.solver;
  solver.seed = cfg.seed;
  const auto front = pareto_front(ctx, n_circles, solver, n_points);

  write_json_file(dir / "pareto.json", json(front));
  write_text(dir / "pareto.csv", pareto_csv(front));

  double f1_lo = 0.0, f1_hi = 1.0, f2_lo = -1.0, f2_hi = 0.0;
  if (!front.empty()) {
    f1_lo = f1_hi = front.front().f1;
    f2_lo = f2_hi = front.front().f2;
    for (const auto& p : front) {
      f1_lo = std::fmin(f1_lo, p.f1); f1_hi = std::fmax(f1_hi, p.f1);
      f2_lo = std::fmin(f2_lo, p.f2); f2_hi = std::fmax(f2_hi, p.f2);
    }
  }
  const double padx = std::fmax(0.1, 0.05 * (f1_hi - f1_lo));
  const double pady = std::fmax(0.1, 0.05 * (f2_hi - f2_lo));
  SvgCanvas svg({f1_lo - padx, f1_hi + padx, f2_lo - pady, f2_hi + pady});
  std::vector<Vec2> pts;
  for (const auto& p : front) pts.push_back({p.f1, p.f2});
  svg.polyline(pts, "#4c78a8");
  for (const Vec2& p : pts) svg.dot(p, 3.0, "#e45756");
  svg.save((dir / "pareto.svg").string());
  emit_run_config(cfg, dir);
  std::cout << "pareto front: " << front.size() << " points\n";
  return 0;
}

int cmd_divide(const RunConfig& cfg, const std::string& plan_path) {
  const fs::path dir = ensure_out_dir(cfg);
  std::ifstream in(plan_path);
  if (!in) throw std::runtime_error("cannot open plan: " + plan_path);
  const json pj = json::parse(in);
  const CapturePlan plan = capture_plan_from_json(pj);
  if (plan.circles.empty()) throw std::runtime_error("plan has no circles");

  const Rect bounds = cfg.surface.bounds;
  const LabelGrid labels = assign_points(plan.circles, bounds, cfg.grid_res);
  write_json_file(dir / "labels.json", json(labels));
  std::vector<int> raster(labels.labels.begin(), labels.labels.end());
  write_label_pgm(raster, labels.res, labels.res, (dir / "labels.pgm").string());

  SvgCanvas svg(bounds);
  svg.circles(plan.circles, "#54a24b");
  if (plan.circles.size() >= 2)
    svg.segments(decision_boundaries(plan.circles), "#2f2f2f");
  svg.save((dir / "division.svg").string());
  emit_run_config(cfg, dir);
  std::cout << "unassigned cells: " << labels.unassigned_count() << "\n";
  return 0;
}

int cmd_normals(const RunConfig& cfg, const std::string& curve_expr,
                double lo, double hi, double z_lo, double z_hi, int res,
                int rays) {
  const fs::path dir = ensure_out_dir(cfg);
  if (!curve_expr.empty()) {
    const Curve1D curve = make_expression_curve(curve_expr, lo, hi);
    const CurveDensity density = normal_density_curve(curve, z_lo, z_hi, res, rays);
    json j{{"grid", density.counts},
           {"step_x", density.step_x},
           {"step_z", density.step_z},
           {"suggested", json::array()}};
    for (const Vec2& p : density.suggested) j["suggested"].push_back(p);
    write_json_file(dir / "density.json", j);

    SvgCanvas svg({curve.lo, curve.hi, z_lo, z_hi});
    svg.contours(density.counts, 8);
    std::vector<Vec2> curve_pts;
    for (int k = 0; k <= 256; ++k) {
      const double x = curve.lo + (curve.hi - curve.lo) * k / 256.0;
      const double y = curve.eval(x);
      if (y >= z_lo && y <= z_hi) curve_pts.push_back({x, y});
    }
    svg.polyline(curve_pts, "#d62728", 1.5);
    for (size_t k = 0; k < density.suggested.size() && k < 8; ++k)
      svg.dot(density.suggested[k], 4.0, "#2f2f2f");
    svg.save((dir / "density.svg").string());
    emit_run_config(cfg, dir);
    std::cout << "suggested points: " << density.suggested.size() << "\n";
    return 0;
  }
  const SurfaceModel model = build_surface(cfg.surface);
  const SurfaceDensity density =
      normal_density_surface(model, z_lo, z_hi, res, rays);
  json j{{"nx", density.nx}, {"ny", density.ny}, {"nz", density.nz},
         {"bounds", density.bounds}, {"z_lo", density.z_lo},
         {"z_hi", density.z_hi}, {"counts", density.counts},
         {"suggested", json::array()}};
  for (const Vec3& p : density.suggested)
    j["suggested"].push_back(json{p.x, p.y, p.z});
  write_json_file(dir / "density.json", j);

  SvgCanvas svg(model.bounds());
  svg.contours(sample_elevation(model, 101), 10);
  for (size_t k = 0; k < density.suggested.size() && k < 16; ++k)
    svg.dot({density.suggested[k].x, density.suggested[k].y}, 4.0, "#2f2f2f");
  svg.save((dir / "density.svg").string());
  emit_run_config(cfg, dir);
  std::cout << "suggested points: " << density.suggested.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epsilon-orthographic terrain capture planner"};
  app.require_subcommand(1);

  // Options shared across subcommands; explicit flags override --config.
  std::string config_path, out_dir;
  uint64_t seed = 0;
  int grid_res = 0;
  bool seed_set = false, out_set = false, grid_set = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "run configuration JSON");
    sub->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
      seed_set = true;
    });
    sub->add_option("--out-dir", out_dir, "output directory")
        ->each([&](const std::string&) { out_set = true; });
    sub->add_option("--grid-res", grid_res, "sampling resolution")
        ->each([&](const std::string&) { grid_set = true; });
  };

  // Surface selection shared by the analysis/planning subcommands.
  std::string surface_name, expr_text, dem_path;
  std::vector<double> bounds_vals;
  double amplitude = 1.0, radius_a = 2.0, z0 = 0.0;
  int smooth_n = 0;
  bool surf_set = false, expr_set = false, dem_set = false, bounds_set = false;
  bool amp_set = false, rad_set = false, z0_set = false, smooth_set = false;

  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--surface", surface_name,
                    "builtin surface: plane|coscos|cos2cos2|sphere|pseudosphere")
        ->each([&](const std::string&) { surf_set = true; });
    sub->add_option("--expr", expr_text, "surface expression f(x,y)")
        ->each([&](const std::string&) { expr_set = true; });
    sub->add_option("--dem", dem_path, "DEM raster path (PGM/PNG)")
        ->each([&](const std::string&) { dem_set = true; });
    sub->add_option("--bounds", bounds_vals, "bounds: xlo xhi ylo yhi")
        ->expected(4)
        ->each([&](const std::string&) { bounds_set = true; });
    sub->add_option("--amp", amplitude, "coscos amplitude")
        ->each([&](const std::string&) { amp_set = true; });
    sub->add_option("--radius-a", radius_a, "sphere/pseudosphere radius")
        ->each([&](const std::string&) { rad_set = true; });
    sub->add_option("--z0", z0, "plane elevation")
        ->each([&](const std::string&) { z0_set = true; });
    sub->add_option("--smooth", smooth_n, "mean-smoothing window (odd)")
        ->each([&](const std::string&) { smooth_set = true; });
  };

  // Imaging parameters.
  double d_val = 0.0, eps_deg = 0.0, dx = 0.0, dy = 0.0, ratio_m = 0.0;
  bool d_set = false, eps_set = false, dx_set = false, dy_set = false,
       m_set = false, linearized = false;
  auto add_ortho = [&](CLI::App* sub) {
    sub->add_option("--d", d_val, "imaging height")->each([&](const std::string&) {
      d_set = true;
    });
    sub->add_option("--eps", eps_deg, "angular FOV, degrees")
        ->each([&](const std::string&) { eps_set = true; });
    sub->add_option("--dx", dx, "march resolution x")
        ->each([&](const std::string&) { dx_set = true; });
    sub->add_option("--dy", dy, "march resolution y")
        ->each([&](const std::string&) { dy_set = true; });
    sub->add_option("--m", ratio_m, "max/min radius ratio")
        ->each([&](const std::string&) { m_set = true; });
    sub->add_flag("--linearized", linearized,
                  "use Hessian-linearized candidate gradients");
  };

  // ingest
  auto* ingest = app.add_subcommand("ingest", "DEM -> heightfield JSON + contour SVG");
  add_common(ingest);
  std::string ingest_dem;
  int ingest_smooth = 17;
  double ingest_spacing = 1.0;
  ingest->add_option("--dem", ingest_dem, "DEM raster path")->required();
  ingest->add_option("--smooth", ingest_smooth, "mean-smoothing window (odd), 0 = off");
  ingest->add_option("--spacing", ingest_spacing, "grid spacing");

  // curvature
  auto* curvature = app.add_subcommand("curvature", "Gaussian/mean curvature fields");
  add_common(curvature);
  add_surface(curvature);

  // imaging-surface
  auto* imaging = app.add_subcommand("imaging-surface",
                                     "surface offset at height d with validity");
  add_common(imaging);
  add_surface(imaging);
  add_ortho(imaging);

  // height-bound
  auto* hbound = app.add_subcommand("height-bound",
                                    "1D imaging-height upper bound by bisection");
  add_common(hbound);
  std::string hb_expr = "x^2";
  std::vector<double> hb_domain{-2.0, 2.0};
  double hb_tol = 1e-3, hb_cap = 100.0;
  int hb_res = 2000;
  hbound->add_option("--f", hb_expr, "curve expression f(x)");
  hbound->add_option("--domain", hb_domain, "domain: lo hi")->expected(2);
  hbound->add_option("--tol", hb_tol, "bisection tolerance");
  hbound->add_option("--cap", hb_cap, "upper cap for the bound");
  hbound->add_option("--res", hb_res, "validity sampling resolution");

  // region
  auto* region = app.add_subcommand("region", "epsilon-orthographic region at a point");
  add_common(region);
  add_surface(region);
  add_ortho(region);
  std::vector<double> region_point{0.0, 0.0};
  std::string region_mode = "exact";
  int region_dirs = 16;
  region->add_option("--point", region_point, "query point: x y")->expected(2);
  region->add_option("--mode", region_mode,
                     "exact|polygon|ellipse|circle-avg|circle-curvature");
  region->add_option("--dirs", region_dirs, "polygon directions");

  // plan
  auto* plan = app.add_subcommand("plan", "capture-circle filling");
  add_common(plan);
  add_surface(plan);
  add_ortho(plan);
  std::string plan_algo, plan_cost;
  double plan_target = 0.0;
  int plan_n0 = 0, plan_step = 0, plan_nmax = 0, plan_starts = 0, plan_iters = 0;
  double plan_step_init = 0.0, plan_step_tol = 0.0, plan_w1 = -1.0, plan_w2 = -1.0;
  bool plan_variable = false;
  plan->add_option("--algo", plan_algo, "batch|sequential");
  plan->add_option("--cost", plan_cost, "F1|F2|F3|F4|F5|G1|G2");
  plan->add_option("--target", plan_target, "coverage target percent");
  plan->add_option("--n0", plan_n0, "batch: initial N");
  plan->add_option("--step", plan_step, "sequential: circles per iteration");
  plan->add_option("--n-max", plan_nmax, "hard cap on N");
  plan->add_option("--starts", plan_starts, "multistart count");
  plan->add_option("--iters", plan_iters, "pattern-search iterations");
  plan->add_option("--step-init", plan_step_init, "initial step");
  plan->add_option("--step-tol", plan_step_tol, "step tolerance");
  plan->add_option("--w1", plan_w1, "F4 overlap weight");
  plan->add_option("--w2", plan_w2, "F4 coverage weight");
  plan->add_flag("--variable-weights", plan_variable, "F4: w1=5, w2=0.5/N");

  // pareto
  auto* pareto = app.add_subcommand("pareto", "overlap/coverage trade-off front");
  add_common(pareto);
  add_surface(pareto);
  add_ortho(pareto);
  int pareto_n = 20, pareto_points = 9, pareto_starts = 0, pareto_iters = 0;
  pareto->add_option("--n", pareto_n, "number of circles");
  pareto->add_option("--points", pareto_points, "lambda sweep size");
  pareto->add_option("--starts", pareto_starts, "multistart count");
  pareto->add_option("--iters", pareto_iters, "pattern-search iterations");

  // divide
  auto* divide = app.add_subcommand("divide", "surface division of a capture plan");
  add_common(divide);
  add_surface(divide);
  std::string divide_plan;
  divide->add_option("--plan", divide_plan, "plan JSON path")->required();

  // normals
  auto* normals = app.add_subcommand("normals", "normal-ray density map");
  add_common(normals);
  add_surface(normals);
  std::string normals_curve;
  std::vector<double> normals_domain{-2.0, 2.0}, normals_zrange{0.0, 4.0};
  int normals_res = 64, normals_rays = 0;
  normals->add_option("--curve", normals_curve, "curve expression f(x) (1D mode)");
  normals->add_option("--domain", normals_domain, "curve domain: lo hi")->expected(2);
  normals->add_option("--z-range", normals_zrange, "density window: z_lo z_hi")
      ->expected(2);
  normals->add_option("--res", normals_res, "density grid resolution");
  normals->add_option("--rays", normals_rays, "ray count (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    // Assemble the effective config: defaults <- config file <- flags.
    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open config: " + config_path);
      cfg = json::parse(in).get<RunConfig>();
    }
    if (seed_set) cfg.seed = seed;
    if (out_set) cfg.out_dir = out_dir;
    if (grid_set) cfg.grid_res = grid_res;

    if (surf_set) {
      cfg.surface.kind = "builtin";
      cfg.surface.name = surface_name;
    }
    if (expr_set) {
      cfg.surface.kind = "expr";
      cfg.surface.expr = expr_text;
    }
    if (dem_set) {
      cfg.surface.kind = "dem";
      cfg.surface.dem_path = dem_path;
    }
    if (bounds_set)
      cfg.surface.bounds = {bounds_vals[0], bounds_vals[1], bounds_vals[2],
                            bounds_vals[3]};
    if (amp_set) cfg.surface.amplitude = amplitude;
    if (rad_set) cfg.surface.radius = radius_a;
    if (z0_set) cfg.surface.z0 = z0;
    if (smooth_set) cfg.surface.smooth_n = smooth_n;

    if (d_set) cfg.ortho.d = d_val;
    if (eps_set) cfg.ortho.eps = deg_to_rad(eps_deg);
    if (dx_set) cfg.ortho.dx = dx;
    if (dy_set) cfg.ortho.dy = dy;
    if (m_set) cfg.ortho.m = ratio_m;
    if (linearized) cfg.ortho.linearized = true;

    if (app.got_subcommand(ingest)) {
      cfg.surface.kind = "dem";
      cfg.surface.dem_path = ingest_dem;
      cfg.surface.smooth_n = ingest_smooth;
      cfg.surface.dem_spacing = ingest_spacing;
      return cmd_ingest(cfg);
    }
    if (app.got_subcommand(curvature)) return cmd_curvature(cfg);
    if (app.got_subcommand(imaging)) return cmd_imaging_surface(cfg);
    if (app.got_subcommand(hbound))
      return cmd_height_bound(cfg, hb_expr, hb_domain[0], hb_domain[1], hb_tol,
                              hb_cap, hb_res);
    if (app.got_subcommand(region))
      return cmd_region(cfg, {region_point[0], region_point[1]}, region_mode,
                        region_dirs);
    if (app.got_subcommand(plan)) {
      if (!plan_algo.empty()) cfg.algorithm = plan_algo;
      if (!plan_cost.empty()) cfg.cost.kind = cost_kind_from_name(plan_cost);
      if (plan_target > 0.0) cfg.fill.coverage_target = plan_target;
      if (plan_n0 > 0) cfg.fill.n0 = plan_n0;
      if (plan_step > 0) cfg.fill.step_n = plan_step;
      if (plan_nmax > 0) cfg.fill.n_max = plan_nmax;
      if (plan_starts > 0) cfg.solver.n_starts = plan_starts;
      if (plan_iters > 0) cfg.solver.max_iters = plan_iters;
      if (plan_step_init > 0.0) cfg.solver.step_init = plan_step_init;
      if (plan_step_tol > 0.0) cfg.solver.step_tol = plan_step_tol;
      if (plan_w1 >= 0.0) cfg.cost.w1 = plan_w1;
      if (plan_w2 >= 0.0) cfg.cost.w2 = plan_w2;
      if (plan_variable) cfg.cost.variable_weights = true;
      cfg.validate();
      return cmd_plan(cfg);
    }
    if (app.got_subcommand(pareto)) {
      if (pareto_starts > 0) cfg.solver.n_starts = pareto_starts;
      if (pareto_iters > 0) cfg.solver.max_iters = pareto_iters;
      return cmd_pareto(cfg, pareto_n, pareto_points);
    }
    if (app.got_subcommand(divide)) return cmd_divide(cfg, divide_plan);
    if (app.got_subcommand(normals))
      return cmd_normals(cfg, normals_curve, normals_domain[0],
                         normals_domain[1], normals_zrange[0],
                         normals_zrange[1], normals_res, normals_rays);
    return 2;
  } catch (const TargetUnreachable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
