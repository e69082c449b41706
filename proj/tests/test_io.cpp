#include <doctest.h>

#include <cmath>

#include "orthocap/image_io.hpp"
#include "orthocap/run_config.hpp"
#include "orthocap/serialize.hpp"
#include "orthocap/svg.hpp"
#include "test_util.hpp"

using namespace orthocap;

namespace {

std::vector<uint8_t> bytes_of(const std::string& s) {
  return {s.begin(), s.end()};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("PGM P2: constant 3x3 image reads back as 128 everywhere") {
  const auto field = decode_dem(bytes_of("P2\n3 3\n255\n"
                                         "128 128 128\n128 128 128\n128 128 128\n"));
  CHECK(field.rows == 3);
  CHECK(field.cols == 3);
  for (double v : field.data) CHECK(v == 128.0);
}

TEST_CASE("PGM P5: 2x2 raster reads the exact byte values") {
  std::vector<uint8_t> payload = bytes_of("P5\n2 2\n255\n");
  payload.push_back(0);
  payload.push_back(255);
  payload.push_back(0);
  payload.push_back(255);
  const auto field = decode_dem(payload);
  CHECK(field.data == std::vector<double>{0.0, 255.0, 0.0, 255.0});
}

TEST_CASE("PGM header comments are skipped") {
  const auto field = decode_dem(bytes_of("P2\n# a comment\n2 2\n# more\n255\n"
                                         "1 2\n3 4\n"));
  CHECK(field.at(0, 1) == 2.0);
  CHECK(field.at(1, 0) == 3.0);
}

TEST_CASE("malformed DEM payloads are rejected") {
  CHECK_THROWS_AS(decode_dem(bytes_of("P2\n2 2\n")), std::runtime_error);
  CHECK_THROWS_AS(decode_dem(bytes_of("P5\n2 2\n65535\n....")),
                  std::runtime_error);
  CHECK_THROWS_AS(decode_dem(bytes_of("P2\n0 0\n255\n")), std::runtime_error);
  CHECK_THROWS_AS(decode_dem(bytes_of("P7\n2 2\n255\n1 2 3 4")),
                  std::runtime_error);
  std::vector<uint8_t> truncated = bytes_of("P5\n2 2\n255\n");
  truncated.push_back(1);
  CHECK_THROWS_AS(decode_dem(truncated), std::runtime_error);
}

TEST_CASE("pure-red RGB PNG converts by BT.601 luminance") {
  test_util::TempDir tmp("png");
  std::vector<uint8_t> pixels;
  for (int k = 0; k < 100; ++k) {
    pixels.push_back(255);
    pixels.push_back(0);
    pixels.push_back(0);
  }
  write_png_rgb(pixels, 10, 10, tmp.file("red.png"));
  const HeightField field = load_dem(tmp.file("red.png"));
  CHECK(field.rows == 10);
  CHECK(field.cols == 10);
  for (double v : field.data)
    CHECK(v == doctest::Approx(76.245).epsilon(1e-9));
}

TEST_CASE("grayscale PNG reads back exact sample values") {
  test_util::TempDir tmp("png_gray");
  const std::vector<uint8_t> pixels{0, 50, 100, 150, 200, 250};
  write_png_gray(pixels, 3, 2, tmp.file("g.png"));
  const HeightField field = load_dem(tmp.file("g.png"));
  CHECK(field.rows == 2);
  CHECK(field.cols == 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(field.at(i, j) == static_cast<double>(pixels[i * 3 + j]));
}

TEST_CASE("PGM round-trip preserves 8-bit fields, clamped") {
  test_util::TempDir tmp("pgm");
  HeightField field(3, 4, 0.0);
  for (size_t k = 0; k < field.data.size(); ++k)
    field.data[k] = static_cast<double>(20 * k);
  field.data[0] = -5.0;   // clamps to 0
  field.data[1] = 300.0;  // clamps to 255
  write_pgm(field, tmp.file("f.pgm"), true);
  const HeightField back = load_dem(tmp.file("f.pgm"));
  CHECK(back.at(0, 0) == 0.0);
  CHECK(back.at(0, 1) == 255.0);
  for (size_t k = 2; k < field.data.size(); ++k)
    CHECK(back.data[k] == std::fmin(field.data[k], 255.0));

  write_pgm(field, tmp.file("f2.pgm"), false);  // ASCII route
  const HeightField back2 = load_dem(tmp.file("f2.pgm"));
  CHECK(back2.data == back.data);
}

TEST_CASE("grid JSON round trip") {
  Grid2D g(3, 2, 0.0, 0.25, {1.0, -2.0});
  for (size_t k = 0; k < g.data.size(); ++k) g.data[k] = 0.5 * k;
  const json j = g;
  const Grid2D back = j.get<Grid2D>();
  CHECK(back.rows == g.rows);
  CHECK(back.cols == g.cols);
  CHECK(back.spacing == g.spacing);
  CHECK(back.origin.x == g.origin.x);
  CHECK(back.data == g.data);
}

TEST_CASE("run config JSON round trip preserves every field") {
  RunConfig cfg;
  cfg.surface.kind = "builtin";
  cfg.surface.name = "sphere";
  cfg.surface.radius = 2.5;
  cfg.surface.bounds = {-1.5, 1.5, -1.0, 1.0};
  cfg.ortho.d = 4.0;
  cfg.ortho.eps = deg_to_rad(12.5);
  cfg.ortho.dx = 0.02;
  cfg.cost.kind = CostKind::F4;
  cfg.cost.w1 = 5.0;
  cfg.cost.w2 = 0.125;
  cfg.cost.schedule[10] = {4.0, 0.25};
  cfg.solver.seed = 99;
  cfg.solver.n_starts = 3;
  cfg.fill.coverage_target = 75.0;
  cfg.algorithm = "sequential";
  cfg.grid_res = 101;
  cfg.seed = 42;
  cfg.out_dir = "/tmp/somewhere";

  const json j = cfg;
  const RunConfig back = j.get<RunConfig>();
  CHECK(json(back).dump() == j.dump());
  CHECK(back.ortho.eps == doctest::Approx(deg_to_rad(12.5)).epsilon(1e-12));
  CHECK(back.cost.schedule.at(10) == std::array<double, 2>{4.0, 0.25});
  CHECK(back.surface.name == "sphere");
}

TEST_CASE("region boundary JSON carries the kind discriminator") {
  const json jc = region_to_json(CircleBoundary{{1.0, 2.0}, 0.5});
  CHECK(jc.at("kind") == "circle");
  CHECK(jc.at("radius") == 0.5);

  PolygonBoundary poly;
  poly.center = {0, 0};
  poly.vertices = {{1, 0}, {0, 1}, {-1, 0}};
  CHECK(region_to_json(poly).at("kind") == "polygon");

  RegionMask mask;
  mask.center = {0, 0};
  mask.dx = mask.dy = 0.1;
  mask.half_nx = mask.half_ny = 1;
  mask.cells = {0, 1, 0, 1, 1, 1, 0, 1, 0};
  const json jm = region_to_json(mask);
  CHECK(jm.at("kind") == "mask");
  CHECK(jm.at("count") == 5);
}

TEST_CASE("metrics CSV lists one row per fill step") {
  CapturePlan plan;
  plan.history.push_back({1, {1.0, 10.0, 0.0, 0.0}});
  plan.history.push_back({2, {2.0, 20.0, 0.5, 0.45}});
  const std::string csv = metrics_csv(plan);
  CHECK(csv ==
        "n,area_covered,percent_covered,overlap_closed_form,overlap_grid\n"
        "1,1,10,0,0\n"
        "2,2,20,0.5,0.45\n");
}

TEST_CASE("SVG canvas renders deterministically; flat grids draw nothing") {
  Grid2D flat(10, 10, 3.0);
  SvgCanvas a(flat.bounds());
  a.contours(flat, 10);
  CHECK(a.str().find("<line") == std::string::npos);

  Grid2D slope(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) slope.at(i, j) = i + 0.3 * j;
  SvgCanvas b(slope.bounds());
  b.contours(slope, 5);
  SvgCanvas c(slope.bounds());
  c.contours(slope, 5);
  CHECK(b.str() == c.str());
  CHECK(b.str().find("<line") != std::string::npos);
}

TEST_CASE("marching squares traces a linear field level exactly") {
  // f(x, y) = x on a coarse grid: the 0.5 level is the vertical line x=0.5.
  Grid2D g(3, 3, 0.0, 0.5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.at(i, j) = g.world_point(i, j).x;
  const auto segs = contour_segments(g, 0.5);
  REQUIRE_FALSE(segs.empty());
  for (const auto& [p, q] : segs) {
    CHECK(p.x == doctest::Approx(0.5));
    CHECK(q.x == doctest::Approx(0.5));
  }
}

TEST_CASE("label PGM writer maps labels onto gray levels") {
  test_util::TempDir tmp("labels");
  const std::vector<int> labels{-1, 0, 1, 2, 2, -1};
  write_label_pgm(labels, 2, 3, tmp.file("l.pgm"));
  const HeightField img = load_dem(tmp.file("l.pgm"));
  CHECK(img.at(0, 0) == 0.0);            // unassigned is black
  CHECK(img.at(0, 1) > 0.0);             // labels get distinct grays
  CHECK(img.at(0, 2) > img.at(0, 1));
  CHECK(img.at(1, 0) == img.at(1, 1));   // equal labels share a level
}

}  // TEST_SUITE
