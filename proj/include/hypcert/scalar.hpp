#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

#include "hypcert/error.hpp"

namespace hypcert {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

/// Parses "p", "-p" or "p/q" (q nonzero). The result is in lowest terms.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Exact Gaussian rational a + b*i.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT: implicit, Eigen builds Scalar(0)
  GaussianRational(long re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_real() const { return im_ == 0; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  /// z * conj(z), always a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& z) { return {z.real(), -z.imag()}; }

/// "a", "b*i", "a+b*i" or "a-b*i"; the parser in polyring accepts all of them.
std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parses a Gaussian rational written in the polynomial grammar (e.g. "1/2-3*i").
GaussianRational parse_gaussian(std::string_view text);

/// Writes c = q1^2 + q2^2 + q3^2 + q4^2 with rational q's, using as few nonzero
/// squares as possible and, among those, the lexicographically largest integer
/// tuple for c = u/v -> u*v = a^2+b^2+c^2+d^2, q = (a,b,c,d)/v.
std::array<Rational, 4> four_square_decompose(const Rational& c);

/// Four-square decomposition of a nonnegative integer, sorted descending.
std::array<Integer, 4> four_square_decompose_integer(const Integer& n);

}  // namespace hypcert

namespace Eigen {

template <>
struct NumTraits<hypcert::GaussianRational> : GenericNumTraits<hypcert::GaussianRational> {
  using Real = hypcert::GaussianRational;
  using NonInteger = hypcert::GaussianRational;
  using Literal = hypcert::GaussianRational;
  using Nested = hypcert::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  // Exact scalars: no decimal precision for stream output.
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen
