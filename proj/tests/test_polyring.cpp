#include <doctest.h>

#include "support.hpp"

using namespace hypcert;
using namespace hypcert::testing;

TEST_CASE("parse/format: documented inputs") {
  const auto r3 = standard_ring(3);
  const MultiPoly q = poly("x0^2 - x1^2 - x2^2", r3);
  CHECK(q.size() == 3);
  CHECK(to_string(q) == "x0^2 - x1^2 - x2^2");

  const auto r4 = standard_ring(4);
  const MultiPoly h = poly("x0^3 - x0*(2*x1^2 + 2*x2^2 + x3^2) + x1^3 + x1*x2^2", r4);
  CHECK(h.size() == 6);
  CHECK(h.homogeneous_degree() == 3u);
  CHECK(h.coefficient(Exponents{1, 2, 0, 0}) == GaussianRational(-2));

  const auto g = standard_ring(2, true);
  const MultiPoly m = poly("(0-1)*i*x1", g);
  CHECK(m.size() == 1);
  CHECK(m.coefficient(Exponents{0, 1}) == GaussianRational(Rational(0), Rational(-1)));
  CHECK(to_string(m) == "-i*x1");
}

TEST_CASE("parse errors") {
  const auto r = standard_ring(2);
  CHECK_THROWS_AS(poly("x0 + x7", r), ParseError);
  CHECK_THROWS_AS(poly("x0 +* x1", r), ParseError);
  CHECK_THROWS_AS(poly("i*x0", r), ParseError);
  CHECK_THROWS_AS(poly("x0/x1", r), ParseError);
  CHECK_THROWS_AS(poly("x0/0", r), ParseError);
  CHECK_THROWS_AS(poly("(x0", r), ParseError);
  CHECK(poly("x0 / 2", r) == poly("1/2*x0", r));
}

TEST_CASE("parse(format(p)) = p on random polynomials") {
  Rng rng(21);
  const auto r = make_ring({"y", "a", "b1", "c"}, {2, 1, 1, 1}, true);
  for (int k = 0; k < 300; ++k) {
    const MultiPoly p = random_poly(rng, r, 4, 5, k % 2 == 0);
    REQUIRE(parse_poly(to_string(p), r) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(22);
  const auto r = standard_ring(3, true);
  for (int k = 0; k < 100; ++k) {
    const MultiPoly a = random_poly(rng, r, 3, 4, true);
    const MultiPoly b = random_poly(rng, r, 3, 4, true);
    const MultiPoly c = random_poly(rng, r, 3, 4, false);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
    // Evaluation is a ring homomorphism: an independent oracle for the product.
    const auto x = to_gaussian(random_point(rng, 3));
    REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    if (!b.is_zero()) REQUIRE((a * b).exact_div(b) == a);
  }
}

TEST_CASE("weighted degree is additive under products") {
  Rng rng(23);
  const auto r = make_ring({"y", "x0", "x1"}, {2, 1, 1});
  for (int k = 0; k < 100; ++k) {
    MultiPoly p = random_form(rng, r, 2, 3);
    MultiPoly q = random_form(rng, r, 3, 3);
    // random_form builds ordinary degree; use the weighted degree reported by the type.
    if (p.is_zero() || q.is_zero()) continue;
    REQUIRE((p * q).weighted_degree() == *p.weighted_degree() + *q.weighted_degree());
    if (p.is_weighted_homogeneous() && q.is_weighted_homogeneous()) {
      REQUIRE((p * q).homogeneous_degree() == *p.homogeneous_degree() + *q.homogeneous_degree());
    }
  }
  const MultiPoly y = MultiPoly::variable(r, "y");
  CHECK((y * y - poly("x0^4 + x1^4", r)).homogeneous_degree() == 4u);
  CHECK_FALSE((y - poly("x0", r)).homogeneous_degree().has_value());
  CHECK_FALSE(MultiPoly(r).homogeneous_degree().has_value());
}

TEST_CASE("restrict_to_line: documented values") {
  const auto r = standard_ring(3);
  const MultiPoly q = poly("x0^2 - x1^2 - x2^2", r);
  CHECK(restrict_to_line(q, parse_point("1,0,0"), parse_point("0,1,0")) == UniPoly({-1, 0, 1}));
  CHECK(restrict_to_line(q, parse_point("1,0,0"), parse_point("1,0,0")) == UniPoly({1, -2, 1}));
  CHECK_THROWS_AS(restrict_to_line(q, parse_point("1,0"), parse_point("1,0,0")), DomainError);
  CHECK_THROWS_AS(restrict_to_line(poly("i*x0^2", standard_ring(3, true)), parse_point("1,0,0"), parse_point("0,1,0")),
                  DomainError);
}

TEST_CASE("restrict_to_line agrees with pointwise evaluation and is linear in h") {
  Rng rng(24);
  const auto r = standard_ring(4);
  for (int k = 0; k < 100; ++k) {
    const unsigned d = static_cast<unsigned>(uniform(rng, 1, 4));
    const MultiPoly h1 = random_form(rng, r, d, 5);
    const MultiPoly h2 = random_form(rng, r, d, 5);
    const Point e = random_point(rng, 4);
    const Point v = random_point(rng, 4);
    const UniPoly f = restrict_to_line(h1, e, v);
    for (int j = 0; j < 10; ++j) {
      const Rational t = random_rational(rng);
      Point x(4);
      for (std::size_t i = 0; i < 4; ++i) x[i] = t * e[i] - v[i];
      REQUIRE(GaussianRational(f(t)) == h1.evaluate(to_gaussian(x)));
    }
    REQUIRE(restrict_to_line(h1 + h2, e, v) == f + restrict_to_line(h2, e, v));
    const GaussianRational he = h1.evaluate(to_gaussian(e));
    if (!he.is_zero()) {
      REQUIRE(f.degree() == static_cast<int>(d));
      REQUIRE(GaussianRational(f.leading_coefficient()) == he);
    }
  }
}

TEST_CASE("directional_derivative: documented values and the line identity") {
  const auto r4 = standard_ring(4);
  const MultiPoly h = poly("x0^3 - x0*(2*x1^2 + 2*x2^2 + x3^2) + x1^3 + x1*x2^2", r4);
  CHECK(directional_derivative(h, parse_point("1,0,0,0")) == poly("3*x0^2 - 2*x1^2 - 2*x2^2 - x3^2", r4));
  const auto r3 = standard_ring(3);
  CHECK(directional_derivative(poly("x0*x1*x2", r3), parse_point("1,1,1")) == poly("x1*x2 + x0*x2 + x0*x1", r3));
  CHECK(directional_derivative(MultiPoly(r3), parse_point("1,1,1")).is_zero());

  // d/dt h(v + t e) at t = 0 equals (D_e h)(v): with w = -v, h(t e - w) = h(v + t e).
  Rng rng(25);
  for (int k = 0; k < 100; ++k) {
    const MultiPoly p = random_form(rng, r4, static_cast<unsigned>(uniform(rng, 1, 4)), 4);
    const Point e = random_point(rng, 4);
    const Point v = random_point(rng, 4);
    Point w(4);
    for (std::size_t i = 0; i < 4; ++i) w[i] = -v[i];
    const UniPoly line = restrict_to_line(p, e, w);
    const MultiPoly de = directional_derivative(p, e);
    REQUIRE(GaussianRational(line.derivative()(Rational(0))) == de.evaluate(to_gaussian(v)));
    if (!de.is_zero()) REQUIRE(de.homogeneous_degree() == *p.homogeneous_degree() - 1);
  }
}

TEST_CASE("conjugate: involution and multiplicativity") {
  const auto g = standard_ring(2, true);
  CHECK(conjugate(poly("i*x1", g)) == poly("-i*x1", g));
  const MultiPoly real = poly("x0^2 - 3*x1", g);
  CHECK(conjugate(real) == real);
  Rng rng(26);
  for (int k = 0; k < 100; ++k) {
    const MultiPoly p = random_poly(rng, g, 3, 4, true);
    const MultiPoly q = random_poly(rng, g, 3, 4, true);
    REQUIRE(conjugate(conjugate(p)) == p);
    REQUIRE(conjugate(p * q) == conjugate(p) * conjugate(q));
    REQUIRE(p.real_part() + p.imag_part().scaled(GaussianRational::imaginary_unit()) == p);
  }
}

TEST_CASE("real_square_root decides squareness exactly") {
  Rng rng(27);
  const auto r = standard_ring(3);
  for (int k = 0; k < 100; ++k) {
    const MultiPoly s = random_form(rng, r, static_cast<unsigned>(uniform(rng, 1, 3)), 3);
    if (s.is_zero()) continue;
    const Rational c(uniform(rng, 1, 9), uniform(rng, 1, 9));
    const MultiPoly p = (s * s).scaled(c);
    const auto root = real_square_root(p);
    REQUIRE(root.has_value());
    REQUIRE((root->root * root->root).scaled(root->scale) == p);
    REQUIRE_FALSE(real_square_root(-p).has_value());
  }
  CHECK_FALSE(real_square_root(poly("x0^2 + x1^2", r)).has_value());
  CHECK_FALSE(real_square_root(poly("x0^4 + 2*x0^2*x1^2 + 2*x0*x1^3 + x1^4 + x0^2*x2^2 - 2*x0*x1*x2^2 - x1^2*x2^2 + x2^4", r))
                  .has_value());
  CHECK(real_square_root(poly("4*x0^2 + 4*x0*x1 + x1^2", r)).has_value());
}

TEST_CASE("embed matches variables by name") {
  const auto a = make_ring({"x0", "x1"});
  const auto b = make_ring({"y", "x1", "x0"}, {2, 1, 1});
  const MultiPoly p = poly("x0^2 + 3*x1", a);
  const MultiPoly q = p.embed(b);
  CHECK(to_string(q) == "x0^2 + 3*x1");
  CHECK(q.embed(a) == p);
  CHECK_THROWS_AS(MultiPoly::variable(b, "y").embed(a), DomainError);
}
