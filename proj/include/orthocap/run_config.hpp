#pragma once

#include <string>

#include "orthocap/serialize.hpp"

namespace orthocap {

/// Which surface a run operates on. Builtins take their parameters from the
/// dedicated fields; "expr" compiles the expression text; "dem" loads and
/// optionally smooths an elevation raster.
struct SurfaceSpec {
  std::string kind = "builtin";  // builtin | expr | dem
  std::string name = "coscos";   // plane | coscos | cos2cos2 | sphere | pseudosphere
  double amplitude = 1.0;        // coscos scale
  double radius = 2.0;           // sphere / pseudosphere radius
  double z0 = 0.0;               // plane elevation
  std::string expr;
  std::string dem_path;
  int smooth_n = 0;              // 0 disables smoothing, otherwise odd window
  double dem_spacing = 1.0;
  Rect bounds = Rect::square(-5.0, 5.0);
};

SurfaceModel build_surface(const SurfaceSpec& spec);

/// Everything a run needs; fully serializable so a run is reproducible from
/// its config alone.
struct RunConfig {
  SurfaceSpec surface;
  OrthoParams ortho{3.0, deg_to_rad(10.0), 0.05, 0.05, 5.0, false};
  CostSpec cost;
  SolverConfig solver;
  FillConfig fill;
  std::string algorithm = "batch";  // batch | sequential
  int grid_res = 201;
  uint64_t seed = 1;
  std::string out_dir = ".";

  void validate() const;
};

void to_json(json& j, const SurfaceSpec& s);
void from_json(const json& j, SurfaceSpec& s);
void to_json(json& j, const OrthoParams& p);   // eps stored in degrees
void from_json(const json& j, OrthoParams& p);
void to_json(json& j, const CostSpec& s);
void from_json(const json& j, CostSpec& s);
void to_json(json& j, const SolverConfig& c);
void from_json(const json& j, SolverConfig& c);
void to_json(json& j, const FillConfig& c);
void from_json(const json& j, FillConfig& c);
void to_json(json& j, const RunConfig& c);
void from_json(const json& j, RunConfig& c);

}  // namespace orthocap
