#include <doctest.h>

#include <cmath>
#include <random>

#include "orthocap/partition.hpp"
#include "orthocap/solver.hpp"

using namespace orthocap;

TEST_SUITE("partition") {

TEST_CASE("single circle: interior labeled 0, exterior unassigned") {
  const Rect bounds = Rect::square(-2, 2);
  const std::vector<Circle> circles{{{0.0, 0.0}, 1.0}};
  const LabelGrid grid = assign_points(circles, bounds, 100);

  size_t inside = 0;
  for (int i = 0; i < grid.res; ++i) {
    for (int j = 0; j < grid.res; ++j) {
      const Vec2 p = grid.cell_center(i, j);
      const bool in_circle = p.norm() <= 1.0;
      if (in_circle) {
        CHECK(grid.label(i, j) == 0);
        ++inside;
      } else {
        CHECK(grid.label(i, j) == -1);
      }
    }
  }
  CHECK(inside > 0);
  CHECK(grid.unassigned_count() == grid.labels.size() - inside);
}

TEST_CASE("overlap cells go to the nearest center") {
  const Rect bounds = Rect::square(-2, 2);
  const std::vector<Circle> circles{{{-0.5, 0.0}, 1.0}, {{0.5, 0.0}, 1.0}};
  const LabelGrid grid = assign_points(circles, bounds, 200);
  for (int i = 0; i < grid.res; ++i) {
    for (int j = 0; j < grid.res; ++j) {
      const int32_t label = grid.label(i, j);
      if (label < 0) continue;
      const Vec2 p = grid.cell_center(i, j);
      const double d0 = (p - circles[0].center).norm();
      const double d1 = (p - circles[1].center).norm();
      if (label == 0) CHECK(d0 <= d1);
      if (label == 1) CHECK(d1 <= d0);
    }
  }
}

TEST_CASE("exact equidistant ties take the lower index") {
  // Exactly representable geometry: cells at 0.25 + k/2, centers on cell
  // columns 1.25 and 3.25, so the midline x = 2.25 ties exactly.
  const Rect bounds{0.0, 4.0, 0.0, 4.0};
  const std::vector<Circle> circles{{{1.25, 2.25}, 1.5}, {{3.25, 2.25}, 1.5}};
  const LabelGrid grid = assign_points(circles, bounds, 8);

  bool saw_tie = false;
  for (int i = 0; i < grid.res; ++i) {
    for (int j = 0; j < grid.res; ++j) {
      const Vec2 p = grid.cell_center(i, j);
      const double d0 = (p - circles[0].center).norm();
      const double d1 = (p - circles[1].center).norm();
      const bool in0 = d0 <= circles[0].radius;
      const bool in1 = d1 <= circles[1].radius;
      if (in0 && in1 && d0 == d1) {
        saw_tie = true;
        CHECK(grid.label(i, j) == 0);
      }
    }
  }
  CHECK(saw_tie);
}

TEST_CASE("brute-force re-check over random circles agrees exactly") {
  const Rect bounds = Rect::square(-5, 5);
  std::mt19937_64 rng(31);
  std::vector<Circle> circles;
  for (int k = 0; k < 9; ++k)
    circles.push_back({uniform_point(rng, bounds), 0.8 + uniform01(rng)});

  const LabelGrid grid = assign_points(circles, bounds, 200);
  for (int i = 0; i < grid.res; ++i) {
    for (int j = 0; j < grid.res; ++j) {
      const Vec2 p = grid.cell_center(i, j);
      int32_t expect = -1;
      double best = 0.0;
      for (size_t k = 0; k < circles.size(); ++k) {
        const Vec2 d = p - circles[k].center;
        const double d2 = d.dot(d);
        if (d2 > circles[k].radius * circles[k].radius) continue;
        if (expect < 0 || d2 < best) {
          expect = static_cast<int32_t>(k);
          best = d2;
        }
      }
      CHECK(grid.label(i, j) == expect);
    }
  }
}

TEST_CASE("assign_points validates inputs") {
  CHECK_THROWS_AS(assign_points({}, Rect::square(-1, 1), 10),
                  std::invalid_argument);
  const std::vector<Circle> one{{{0, 0}, 1.0}};
  CHECK_THROWS_AS(assign_points(one, Rect::square(-1, 1), 0),
                  std::invalid_argument);
}

TEST_CASE("decision boundary of two equal circles is the midline chord") {
  const std::vector<Circle> circles{{{0.0, 0.0}, 1.0}, {{1.0, 0.0}, 1.0}};
  const auto segs = decision_boundaries(circles);
  REQUIRE(segs.size() == 1);
  const BoundarySegment& s = segs[0];
  CHECK(s.first == 0);
  CHECK(s.second == 1);
  CHECK(s.a.x == doctest::Approx(0.5));
  CHECK(s.b.x == doctest::Approx(0.5));
  CHECK(std::fabs(s.a.y) == doctest::Approx(std::sqrt(0.75)));
  CHECK(std::fabs(s.b.y) == doctest::Approx(std::sqrt(0.75)));
  CHECK(s.a.y * s.b.y < 0.0);  // opposite chord ends
}

TEST_CASE("disjoint and degenerate pairs emit no boundary") {
  const std::vector<Circle> disjoint{{{0, 0}, 1.0}, {{5, 0}, 1.0}};
  CHECK(decision_boundaries(disjoint).empty());

  const std::vector<Circle> concentric{{{0, 0}, 1.0}, {{0, 0}, 2.0}};
  CHECK(decision_boundaries(concentric).empty());

  // Overlapping but the bisector misses the small circle's lens.
  const std::vector<Circle> lopsided{{{0, 0}, 3.0}, {{3.2, 0}, 0.5}};
  CHECK(decision_boundaries(lopsided).empty());

  CHECK_THROWS_AS(decision_boundaries(std::vector<Circle>{{{0, 0}, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("segment endpoints lie on the smaller circle, inside the larger") {
  std::mt19937_64 rng(41);
  const Rect bounds = Rect::square(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Circle> pair{{uniform_point(rng, bounds), 0.5 + uniform01(rng)},
                             {uniform_point(rng, bounds), 0.5 + uniform01(rng)}};
    const auto segs = decision_boundaries(pair);
    for (const BoundarySegment& s : segs) {
      const double rmin = std::fmin(pair[0].radius, pair[1].radius);
      for (const Vec2 endpoint : {s.a, s.b}) {
        const double d0 = (endpoint - pair[0].center).norm();
        const double d1 = (endpoint - pair[1].center).norm();
        CHECK(std::fmin(d0, d1) == doctest::Approx(rmin).epsilon(1e-9));
        CHECK(d0 <= pair[0].radius + 1e-9);
        CHECK(d1 <= pair[1].radius + 1e-9);
      }
    }
  }
}

TEST_CASE("raster labels flip across the decision boundary") {
  const Rect bounds = Rect::square(-2, 2);
  const std::vector<Circle> circles{{{-0.4, 0.1}, 1.2}, {{0.7, -0.2}, 1.0}};
  const int res = 200;
  const LabelGrid grid = assign_points(circles, bounds, res);
  const auto segs = decision_boundaries(circles);
  REQUIRE(segs.size() == 1);
  const BoundarySegment& seg = segs[0];

  // Sample points along the segment, then step two cells toward either
  // center; the labels there must match the respective circles.
  const double cell = bounds.width() / res;
  const Vec2 axis = (circles[1].center - circles[0].center) *
                    (1.0 / (circles[1].center - circles[0].center).norm());
  std::mt19937_64 rng(55);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const double t = uniform01(rng);
    const Vec2 mid{seg.a.x + t * (seg.b.x - seg.a.x),
                   seg.a.y + t * (seg.b.y - seg.a.y)};
    const Vec2 toward0 = mid - axis * (2.0 * cell);
    const Vec2 toward1 = mid + axis * (2.0 * cell);
    const auto cell_of = [&](const Vec2& p) {
      const int j = static_cast<int>((p.x - bounds.xlo) / cell);
      const int i = static_cast<int>((p.y - bounds.ylo) / cell);
      return std::pair<int, int>{i, j};
    };
    const auto [i0, j0] = cell_of(toward0);
    const auto [i1, j1] = cell_of(toward1);
    if (i0 < 0 || i0 >= res || j0 < 0 || j0 >= res) continue;
    if (i1 < 0 || i1 >= res || j1 < 0 || j1 >= res) continue;
    if (grid.label(i0, j0) < 0 || grid.label(i1, j1) < 0) continue;
    CHECK(grid.label(i0, j0) == 0);
    CHECK(grid.label(i1, j1) == 1);
    ++checked;
  }
  CHECK(checked >= 50);
}

}  // TEST_SUITE
