#include <doctest.h>

#include "support.hpp"

using namespace hypcert;
using namespace hypcert::testing;

TEST_CASE("clifford_generators: invariants for n <= 6") {
  IntMatrix one(2, 2);
  one << 0, -1, 1, 0;
  CHECK(clifford_generators(1).matrices.front() == one);
  for (int n = 1; n <= 6; ++n) {
    const CliffordGenerators g = clifford_generators(n);
    REQUIRE(g.n == n);
    REQUIRE(g.matrices.size() == static_cast<std::size_t>(n));
    REQUIRE(g.size() == (Index{1} << n));
    REQUIRE_FALSE(clifford_violation(g).has_value());
    // Each column of each generator has exactly one nonzero entry (a signed permutation).
    for (const auto& a : g.matrices) {
      for (Index c = 0; c < a.cols(); ++c) REQUIRE(a.col(c).cwiseAbs().sum() == 1);
    }
  }
  CHECK_THROWS_AS(clifford_generators(0), DomainError);
  CHECK_THROWS_AS(clifford_generators(9), DomainError);
  CHECK_THROWS_AS(clifford_generators(4, 3), DomainError);
}

TEST_CASE("clifford_violation reports broken invariants") {
  CliffordGenerators g = clifford_generators(2);
  g.matrices[1] = g.matrices[0];
  REQUIRE(clifford_violation(g).has_value());
  CHECK(clifford_violation(g)->find("anticommute") != std::string::npos);
  g = clifford_generators(2);
  g.matrices[0](0, 0) = 2;
  CHECK(clifford_violation(g).has_value());
}

TEST_CASE("build_q: symmetric, traceless, squares to P I") {
  Rng rng(61);
  const auto r = standard_ring(3);
  for (int k = 0; k < 100; ++k) {
    const int count = static_cast<int>(uniform(rng, 1, 4));
    const unsigned degree = static_cast<unsigned>(uniform(rng, 1, 2));
    std::vector<MultiPoly> gs;
    for (int j = 0; j < count; ++j) {
      MultiPoly g;
      do g = random_form(rng, r, degree, 3); while (g.is_zero());
      gs.push_back(g);
    }
    const PolyMatrix q = build_q(gs);
    REQUIRE(q.size() == (Index{2} << count));
    REQUIRE(q.kind == MatrixKind::symmetric);
    REQUIRE_FALSE(find_kind_violation<MultiPoly>(q.entries, MatrixKind::symmetric).has_value());
    REQUIRE(trace<MultiPoly>(q.entries).is_zero());
    MultiPoly p(r);
    for (const auto& g : gs) p += g * g;
    // Oracle: Q^2 = P I evaluated at random points, independent of the polynomial products.
    for (int t = 0; t < 3; ++t) {
      const Point x = random_point(rng, 3);
      const ConstMatrix at = evaluate(q, x);
      const DenseMatrix<GaussianRational> sq = at.entries * at.entries;
      const DenseMatrix<GaussianRational> expected =
          DenseMatrix<GaussianRational>::Identity(q.size(), q.size()) * p.evaluate(to_gaussian(x));
      REQUIRE(sq == expected);
    }
    const auto s = square_scalar(q.entries);
    REQUIRE(s.has_value());
    REQUIRE(*s == p);
  }
  CHECK_THROWS_AS(build_q({}), DomainError);
  CHECK_THROWS_AS(build_q({poly("x0", r), poly("x1^2", r)}), DomainError);
  CHECK_THROWS_AS(build_q({poly("x0 + x1^2", r)}), DomainError);
  CHECK_THROWS_AS(build_q({poly("i*x0", standard_ring(3, true))}), DomainError);
}

TEST_CASE("sos_to_detrep: documented values") {
  const auto r = make_ring({"x1", "x2"});
  const CliffordDetRep disk = sos_to_detrep({poly("x1", r), poly("x2", r)});
  CHECK(disk.report.ok);
  CHECK(disk.power == 4);
  CHECK(disk.q.size() == 8);
  CHECK(disk.report.determinant_method == "minimal-polynomial");
  CHECK(to_string(disk.h) == "y^2 - x1^2 - x2^2");
  CHECK_FALSE(disk.p_is_square);

  // A single square: P = x1^2 is a square, so the Bareiss path is used and still verifies.
  const CliffordDetRep single = sos_to_detrep({poly("x1", r)});
  CHECK(single.report.ok);
  CHECK(single.p_is_square);
  CHECK(single.power == 2);
  CHECK(single.report.determinant_method == "bareiss");

  const auto ry = make_ring({"y", "x1"});
  CHECK_THROWS_AS(sos_to_detrep({poly("y", ry)}), DomainError);
}

TEST_CASE("sos_to_detrep round trips through detrep_to_sos") {
  Rng rng(62);
  const auto r = standard_ring(3);
  for (int k = 0; k < 20; ++k) {
    const int count = static_cast<int>(uniform(rng, 1, 2));
    std::vector<MultiPoly> gs;
    for (int j = 0; j < count; ++j) {
      MultiPoly g;
      do g = random_form(rng, r, 1, 3); while (g.is_zero());
      gs.push_back(g);
    }
    const CliffordDetRep rep = sos_to_detrep(gs);
    REQUIRE(rep.report.ok);
    const SosDecomposition back = detrep_to_sos(embed(rep.q, with_gaussian(r, false)), rep.p.embed(r));
    MultiPoly sum(r);
    for (const auto& g : back.squares) sum += g * g;
    MultiPoly p(r);
    for (const auto& g : gs) p += g * g;
    REQUIRE(sum == p);
  }
}

TEST_CASE("sos_to_detrep on the ternary quartic with a Bareiss cross-check") {
  const PolyFile squares = read_poly_file(fixture_dir() / "F3" / "squares.txt");
  const CliffordDetRep rep = sos_to_detrep(squares.polys, true);
  CHECK(rep.report.ok);
  CHECK(rep.q.size() == 16);
  CHECK(rep.power == 8);
  CHECK(rep.p == read_single_poly(fixture_dir() / "F3" / "p.txt").embed(rep.q.ring));
  bool cross = false;
  for (const auto& note : rep.report.notes) cross = cross || note.find("cross-check") != std::string::npos;
  CHECK(cross);
}
