#include <doctest.h>

#include "support.hpp"

using namespace hypcert;
using namespace hypcert::testing;

namespace {

std::vector<Rational> random_roots(Rng& rng, int count) {
  std::vector<Rational> roots;
  for (int k = 0; k < count; ++k) roots.push_back(random_rational(rng, 12, 5));
  return roots;
}

/// Distinct real roots counted by brute force on a grid finer than any root gap.
std::size_t distinct(std::vector<Rational> roots) {
  std::sort(roots.begin(), roots.end());
  return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

bool contains(const RootInterval& interval, const Rational& x) {
  return interval.exact() ? interval.lo == x : interval.lo < x && x < interval.hi;
}

}  // namespace

TEST_CASE("is_real_rooted: documented values") {
  CHECK(is_real_rooted(UniPoly({-1, 0, 1})));
  CHECK_FALSE(is_real_rooted(UniPoly({1, 0, 1})));
  CHECK(is_real_rooted(UniPoly({1, -2, 1})));
  CHECK(is_real_rooted(UniPoly({5})));
  CHECK_THROWS_AS(is_real_rooted(UniPoly()), DomainError);
  // (t - 1)^2 (t^2 + 1): a repeated real root next to a complex pair.
  CHECK_FALSE(is_real_rooted(UniPoly::from_roots({1, 1}) * UniPoly({1, 0, 1})));
}

TEST_CASE("interlaces_univariate: documented values") {
  const UniPoly f = UniPoly::from_roots({-1, 1});
  CHECK(interlaces_univariate(f, UniPoly({0, 1})));
  CHECK(interlaces_univariate(f, UniPoly({-1, 1})));
  CHECK_FALSE(interlaces_univariate(f, UniPoly({-1, 1}), {.strict = true}));
  CHECK_FALSE(interlaces_univariate(f, UniPoly({-2, 1})));
  CHECK_THROWS_AS(interlaces_univariate(f, f), DomainError);
  try {
    interlaces_univariate(UniPoly({1, 0, 1}), UniPoly({0, 1}));
    FAIL("expected NotRealRooted");
  } catch (const NotRealRooted& e) {
    CHECK(e.which() == "f");
  }
  try {
    interlaces_univariate(UniPoly::from_roots({0, 1, 2}), UniPoly({1, 0, 1}));
    FAIL("expected NotRealRooted");
  } catch (const NotRealRooted& e) {
    CHECK(e.which() == "g");
  }
}

TEST_CASE("Sturm counts agree with grid sign changes on squarefree products") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    // Integer roots spaced at least 1 apart, so a grid of step 1/4 sees every sign change.
    std::vector<Rational> roots;
    for (long r = -10; r <= 10; ++r) {
      if (uniform(rng, 0, 3) == 0) roots.push_back(Rational(r) + Rational(1, 2));
    }
    UniPoly p = UniPoly::from_roots(roots);
    if (uniform(rng, 0, 1)) p = p * UniPoly({uniform(rng, 1, 5), 0, 1});  // no real roots added
    const SturmChain chain(p);
    REQUIRE(chain.count_all() == roots.size());
    const Rational lo = uniform(rng, -12, 0), hi = uniform(rng, 1, 12);
    REQUIRE(chain.count(lo, hi) == grid_sign_changes(p, lo, hi, static_cast<int>(4 * (hi - lo).convert_to<double>())));
  }
}

TEST_CASE("isolate_roots recovers constructed roots with multiplicities") {
  Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    const auto roots = random_roots(rng, static_cast<int>(uniform(rng, 1, 6)));
    UniPoly p = UniPoly::from_roots(roots).scaled(random_rational(rng, 5, 3) + Rational(11));
    if (k % 3 == 0) p = p * UniPoly({1, 1, 1});
    const IsolatingIntervals iso = isolate_roots(p);
    REQUIRE(iso.intervals.size() == distinct(roots));
    REQUIRE(iso.root_count() == roots.size());
    for (std::size_t i = 0; i + 1 < iso.intervals.size(); ++i) {
      REQUIRE(iso.intervals[i].hi <= iso.intervals[i + 1].lo);
    }
    for (const Rational& r : roots) {
      const auto hits = std::count_if(iso.intervals.begin(), iso.intervals.end(),
                                      [&](const RootInterval& iv) { return contains(iv, r); });
      REQUIRE(hits == 1);
      const auto mult = static_cast<unsigned>(std::count(roots.begin(), roots.end(), r));
      for (const auto& iv : iso.intervals) {
        if (contains(iv, r)) REQUIRE(iv.multiplicity == mult);
      }
    }
    REQUIRE(is_real_rooted(p) == (k % 3 != 0));
  }
}

TEST_CASE("isolate_roots on irrational roots refines to any width") {
  const UniPoly p({-2, 0, 1});  // +-sqrt(2)
  IsolatingIntervals iso = isolate_roots(p);
  REQUIRE(iso.intervals.size() == 2);
  RootInterval positive = iso.intervals[1];
  refine_to_width(positive, p, Rational(1, 1000000));
  CHECK(positive.hi - positive.lo <= Rational(1, 1000000));
  CHECK(positive.lo * positive.lo < 2);
  CHECK(positive.hi * positive.hi > 2);
  CHECK(cauchy_bound(p) == 3);
}

TEST_CASE("squarefree_factorization reconstructs the input") {
  Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    const auto roots = random_roots(rng, static_cast<int>(uniform(rng, 1, 7)));
    const UniPoly p = UniPoly::from_roots(roots) * UniPoly({2, 0, 1});
    const auto factors = squarefree_factorization(p);
    UniPoly product({1});
    for (const auto& f : factors) {
      for (unsigned j = 0; j < f.multiplicity; ++j) product = product * f.factor;
      REQUIRE(gcd(f.factor, f.factor.derivative()).degree() == 0);
    }
    REQUIRE(product.monic() == p.monic());
    REQUIRE(squarefree_part(p).degree() == static_cast<int>(distinct(roots)) + 2);
  }
}

TEST_CASE("Rolle: f' interlaces a real-rooted f") {
  Rng rng(34);
  for (int k = 0; k < 100; ++k) {
    const UniPoly f = UniPoly::from_roots(random_roots(rng, static_cast<int>(uniform(rng, 2, 7))));
    REQUIRE(interlaces_univariate(f, f.derivative()));
    REQUIRE(interlaces_by_bezoutian(f, f.derivative()));
    REQUIRE(real_rooted_by_hermite(f));
  }
}

TEST_CASE("interlacing is invariant under positive scaling and shifts") {
  Rng rng(35);
  for (int k = 0; k < 100; ++k) {
    const int d = static_cast<int>(uniform(rng, 2, 6));
    const UniPoly f = UniPoly::from_roots(random_roots(rng, d));
    const UniPoly g = UniPoly::from_roots(random_roots(rng, d - 1));
    const bool base = interlaces_univariate(f, g);
    const Rational c = Rational(uniform(rng, 1, 9), uniform(rng, 1, 9));
    const Rational s = random_rational(rng);
    REQUIRE(interlaces_univariate(f.scaled(c), g.scaled(c)) == base);
    REQUIRE(interlaces_univariate(f.shifted(s), g.shifted(s)) == base);
    REQUIRE(interlaces_univariate(f.reflected(), g.reflected()) == base);
    // Bezoutian criterion as an independent decision procedure.
    REQUIRE(interlaces_by_bezoutian(f, g) == base);
  }
}

TEST_CASE("Hermite criterion agrees with Sturm on random polynomials") {
  Rng rng(36);
  int real = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<Rational> c;
    const int d = static_cast<int>(uniform(rng, 1, 6));
    for (int j = 0; j <= d; ++j) c.push_back(random_rational(rng));
    if (c.back() == 0) c.back() = 1;
    const UniPoly p(c);
    const bool rr = is_real_rooted(p);
    real += rr;
    REQUIRE(real_rooted_by_hermite(p) == rr);
  }
  CHECK(real > 20);
  CHECK(real < 180);
}
