#include <cmath>

#include <doctest.h>

#include "support.hpp"

using namespace hypcert;
using namespace hypcert::testing;

namespace {

Rational square_sum(const std::array<Rational, 4>& q) {
  Rational s = 0;
  for (const auto& x : q) s += x * x;
  return s;
}

ConstMatrix diag(std::initializer_list<long> values) {
  const auto n = static_cast<Index>(values.size());
  ConstMatrix m{DenseMatrix<GaussianRational>::Zero(n, n), MatrixKind::symmetric};
  Index k = 0;
  for (long v : values) m.entries(k, k) = v, ++k;
  return m;
}

ConstMatrix random_symmetric(Rng& rng, Index n, bool hermitian) {
  ConstMatrix m{DenseMatrix<GaussianRational>(n, n), hermitian ? MatrixKind::hermitian : MatrixKind::symmetric};
  for (Index i = 0; i < n; ++i) {
    m.entries(i, i) = random_rational(rng, 6, 2);
    for (Index j = i + 1; j < n; ++j) {
      m.entries(i, j) = random_gaussian(rng, hermitian);
      m.entries(j, i) = conj(m.entries(i, j));
    }
  }
  return m;
}

/// B* B + t I: positive definite for t > 0.
ConstMatrix random_gram(Rng& rng, Index n, bool hermitian, long shift) {
  DenseMatrix<GaussianRational> b(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) b(i, j) = random_gaussian(rng, hermitian);
  }
  DenseMatrix<GaussianRational> g = adjoint<GaussianRational>(b) * b;
  for (Index i = 0; i < n; ++i) g(i, i) += GaussianRational(shift);
  return {g, hermitian ? MatrixKind::hermitian : MatrixKind::symmetric};
}

DenseVector<GaussianRational> random_vector(Rng& rng, Index n, bool complex) {
  DenseVector<GaussianRational> v(n);
  do {
    for (Index i = 0; i < n; ++i) v(i) = random_gaussian(rng, complex);
  } while (std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); }));
  return v;
}

}  // namespace

TEST_CASE("four_square_decompose: documented values") {
  CHECK(four_square_decompose(Rational(1)) == std::array<Rational, 4>{1, 0, 0, 0});
  CHECK(four_square_decompose(Rational(7)) == std::array<Rational, 4>{2, 1, 1, 1});
  CHECK(four_square_decompose(Rational(3, 4)) ==
        std::array<Rational, 4>{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(0)});
  CHECK_THROWS_AS(four_square_decompose(Rational(0)), DomainError);
  CHECK_THROWS_AS(four_square_decompose(Rational(-2, 3)), DomainError);
}

TEST_CASE("four_square_decompose: 1000 random rationals sum exactly") {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Rational c(uniform(rng, 1, 999999), uniform(rng, 1, 999999));
    const auto q = four_square_decompose(c);
    REQUIRE(square_sum(q) == c);
  }
}

TEST_CASE("four_square_decompose_integer: minimal number of squares") {
  // Oracle: brute-force minimal count for small n.
  for (long n = 0; n < 400; ++n) {
    int best = 4;
    for (long a = 0; a * a <= n; ++a) {
      for (long b = 0; a * a + b * b <= n; ++b) {
        const long rest = n - a * a - b * b;
        const long c = static_cast<long>(std::sqrt(static_cast<double>(rest)));
        if (a * a + b * b == n) best = std::min(best, (a > 0) + (b > 0));
        if (c * c == rest) best = std::min(best, (a > 0) + (b > 0) + (c > 0));
      }
    }
    const auto q = four_square_decompose_integer(Integer(n));
    int used = 0;
    Integer s = 0;
    for (const auto& x : q) {
      used += x != 0;
      s += x * x;
    }
    REQUIRE(s == n);
    REQUIRE(used == best);
  }
  const Integer big = Integer(1) << 70;
  const auto q = four_square_decompose_integer(big + 7);
  CHECK(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == big + 7);
}

TEST_CASE("GaussianRational invariants") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const GaussianRational z = random_gaussian(rng, true);
    const GaussianRational w = random_gaussian(rng, true);
    CHECK(conj(conj(z)) == z);
    const GaussianRational n = z * conj(z);
    CHECK(n.is_real());
    CHECK(n.real() >= 0);
    CHECK(conj(z * w) == conj(z) * conj(w));
    CHECK(parse_gaussian(to_string(z)) == z);
    if (!w.is_zero()) CHECK((z / w) * w == z);
  }
  CHECK(to_string(GaussianRational(Rational(1, 2), Rational(-3))) == "1/2-3*i");
  CHECK(to_string(GaussianRational::imaginary_unit()) == "i");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("parse_rational rejects malformed literals") {
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("is_positive_definite: documented values") {
  CHECK(is_positive_definite({DenseMatrix<GaussianRational>::Identity(3, 3), MatrixKind::symmetric}));
  CHECK_FALSE(is_positive_definite(diag({1, -1})));
  CHECK_THROWS_AS(is_positive_definite({DenseMatrix<GaussianRational>::Identity(2, 2), MatrixKind::none}),
                  DomainError);

  const PolyMatrix cubic = read_matrix_file(fixture_dir() / "F2" / "matrix.json");
  const ConstMatrix at_e = evaluate(cubic, parse_point("1,0,0,0"));
  CHECK(at_e.entries == DenseMatrix<GaussianRational>::Identity(3, 3));
  CHECK(is_positive_definite(at_e));
}

TEST_CASE("is_positive_definite: broken hermitian invariant is an internal error") {
  ConstMatrix m{DenseMatrix<GaussianRational>::Identity(2, 2), MatrixKind::hermitian};
  m.entries(0, 0) = GaussianRational(Rational(1), Rational(1));
  CHECK_THROWS_AS(is_positive_definite(m), InternalError);
}

TEST_CASE("is_positive_definite agrees with a sampling oracle on random 4x4 matrices") {
  Rng rng(5);
  int definite = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const bool hermitian = trial % 2 == 1;
    const ConstMatrix m = trial % 3 == 0 ? random_gram(rng, 4, hermitian, uniform(rng, -2, 2))
                                         : random_symmetric(rng, 4, hermitian);
    const bool pd = is_positive_definite(m);
    definite += pd;
    bool all_positive = true;
    for (int k = 0; k < 100; ++k) {
      const GaussianRational q = hermitian_form(m.entries, random_vector(rng, 4, hermitian));
      REQUIRE(q.is_real());
      all_positive = all_positive && q.real() > 0;
    }
    if (pd) REQUIRE(all_positive);
    if (!all_positive) REQUIRE_FALSE(pd);

    // Inertia from the characteristic polynomial is a second, elimination-free oracle.
    REQUIRE(pd == (inertia(m.entries).positive == 4));

    // Every refutation carries a vector that re-verifies.
    const auto witness = definiteness_witness(m);
    REQUIRE(witness.has_value() == !pd);
    if (witness) {
      const GaussianRational value = hermitian_form(m.entries, witness->vector);
      REQUIRE(value.is_real());
      REQUIRE(value.real() <= 0);
      REQUIRE(value.real() == witness->value);
      REQUIRE(leading_principal_minors(m.entries)[witness->minor - 1].real() <= 0);
    }
  }
  CHECK(definite > 20);
  CHECK(definite < 180);
}
