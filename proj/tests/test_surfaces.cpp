#include <doctest.h>

#include <cmath>

#include "orthocap/expr.hpp"
#include "orthocap/surfaces.hpp"

using namespace orthocap;

TEST_SUITE("surfaces") {

TEST_CASE("expression grammar: precedence, power, functions") {
  CHECK(Expr::parse("1+2*3").eval(0) == doctest::Approx(7.0));
  CHECK(Expr::parse("2^3^2").eval(0) == doctest::Approx(512.0));  // right assoc
  CHECK(Expr::parse("-x^2").eval(3) == doctest::Approx(-9.0));
  CHECK(Expr::parse("(1+2)*3").eval(0) == doctest::Approx(9.0));
  CHECK(Expr::parse("sin(pi/2)").eval(0) == doctest::Approx(1.0));
  CHECK(Expr::parse("cos(x)+cos(y)").eval(0.0, 0.0) == doctest::Approx(2.0));
  CHECK(Expr::parse("sqrt(abs(-9))").eval(0) == doctest::Approx(3.0));
  CHECK(Expr::parse("exp(0)").eval(0) == doctest::Approx(1.0));
  CHECK(Expr::parse("abs(1.5*x)").eval(-2.0) == doctest::Approx(3.0));
}

TEST_CASE("expression grammar rejects malformed input") {
  CHECK_THROWS_AS(Expr::parse("x+"), std::runtime_error);
  CHECK_THROWS_AS(Expr::parse("foo(x)"), std::runtime_error);
  CHECK_THROWS_AS(Expr::parse("sin x"), std::runtime_error);
  CHECK_THROWS_AS(Expr::parse("(x"), std::runtime_error);
  CHECK_THROWS_AS(Expr::parse("x y"), std::runtime_error);
  CHECK_THROWS_AS(Expr::parse(""), std::runtime_error);
}

TEST_CASE("surface_query on cos+cos at the origin") {
  const SurfaceModel model(make_cos_cos(Rect::square(-5, 5)));
  const SurfaceSample s = model.query({0.0, 0.0});
  CHECK(s.z == doctest::Approx(2.0));
  CHECK(s.p == doctest::Approx(0.0));
  CHECK(s.q == doctest::Approx(0.0));
  CHECK(s.fxx == doctest::Approx(-1.0));
  CHECK(s.fyy == doctest::Approx(-1.0));
  CHECK(s.fxy == doctest::Approx(0.0));
}

TEST_CASE("surface_query on the zero plane") {
  const SurfaceModel model(make_plane(Rect::square(-2, 2)));
  const SurfaceSample s = model.query({1.3, -0.4});
  CHECK(s.z == 0.0);
  CHECK(s.p == 0.0);
  CHECK(s.q == 0.0);
  CHECK(s.fxx == 0.0);
  CHECK(s.fxy == 0.0);
  CHECK(s.fyy == 0.0);
}

TEST_CASE("expression surface x^2 differentiates numerically") {
  const SurfaceModel model(
      make_expression_surface("x^2", Rect::square(-3, 3)));
  const SurfaceSample s = model.query({1.0, 0.0});
  CHECK(s.z == doctest::Approx(1.0));
  CHECK(s.p == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(s.q == doctest::Approx(0.0));
  CHECK(s.fxx == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("unit_normal is upward and normalized") {
  const SurfaceModel plane(make_plane(Rect::square(-1, 1)));
  const Vec3 n0 = plane.unit_normal({0.5, 0.5});
  CHECK(n0.x == doctest::Approx(0.0));
  CHECK(n0.y == doctest::Approx(0.0));
  CHECK(n0.z == doctest::Approx(1.0));

  // Slope 1 along x: p = 1, q = 0 -> (-1, 0, 1)/sqrt(2).
  const SurfaceModel ramp_x(make_expression_surface("x", Rect::square(-1, 1)));
  const Vec3 n1 = ramp_x.unit_normal({0.0, 0.0});
  CHECK(n1.x == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(n1.y == doctest::Approx(0.0));
  CHECK(n1.z == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

  // p = q = 1 -> (-1, -1, 1)/sqrt(3).
  const SurfaceModel ramp_xy(
      make_expression_surface("x+y", Rect::square(-1, 1)));
  const Vec3 n2 = ramp_xy.unit_normal({0.0, 0.0});
  CHECK(n2.x == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(n2.y == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(n2.z == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("unit_normal is unit length with positive z across a surface") {
  const SurfaceModel model(make_cos_cos(Rect::square(-5, 5)));
  for (double x = -4.5; x <= 4.5; x += 0.9) {
    for (double y = -4.5; y <= 4.5; y += 0.9) {
      const Vec3 n = model.unit_normal({x, y});
      CHECK(n.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(n.z > 0.0);
    }
  }
}

TEST_CASE("analytic surface rejects out-of-bounds queries") {
  const SurfaceModel model(make_cos_cos(Rect::square(-1, 1)));
  CHECK_THROWS_AS(model.query({1.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(model.unit_normal({0.0, -1.0001}), std::domain_error);
}

TEST_CASE("sphere preset exposes exact partials") {
  const double a = 2.0;
  const SurfaceModel model(make_sphere(Rect::square(-1, 1), a));
  const SurfaceSample s = model.query({0.5, -0.3});
  const double z = std::sqrt(a * a - 0.25 - 0.09);
  CHECK(s.z == doctest::Approx(z));
  CHECK(s.p == doctest::Approx(-0.5 / z));
  CHECK(s.q == doctest::Approx(0.3 / z));
  CHECK_THROWS_AS(make_sphere(Rect::square(-2, 2), 2.0), std::invalid_argument);
}

TEST_CASE("pseudosphere matches its closed-form radial slope") {
  const double a = 2.0;
  const AnalyticSurface ps = make_pseudosphere({0.3, 1.9, 0.3, 1.9}, a);
  // dz/drho = -sqrt(a^2 - rho^2)/rho along the radial direction.
  const double x = 1.0, y = 0.5;
  const double rho = std::hypot(x, y);
  const double expected = -std::sqrt(a * a - rho * rho) / rho;
  const Vec2 g = ps.grad(x, y);
  const double radial = (g.x * x + g.y * y) / rho;
  CHECK(radial == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("curve derivative helpers: closed form and numeric fallback") {
  const Curve1D parabola = make_parabola_curve(-2, 2);
  CHECK(parabola.deriv(1.0) == doctest::Approx(2.0));
  CHECK(parabola.deriv2(1.0) == doctest::Approx(2.0));

  const Curve1D abs_curve = make_abs_curve(-2, 2, 1.5);
  CHECK(abs_curve.deriv(0.5) == doctest::Approx(1.5));
  CHECK(abs_curve.deriv(-0.5) == doctest::Approx(-1.5));
  CHECK(abs_curve.deriv(0.0) == 0.0);  // one-sided average at the kink

  const Curve1D expr_curve = make_expression_curve("x^3", -2, 2);
  CHECK(expr_curve.deriv(1.0) == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(expr_curve.deriv2(1.0) == doctest::Approx(6.0).epsilon(1e-4));
}

}  // TEST_SUITE
