#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypcert/scalar.hpp"

namespace hypcert {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// Monic polynomial with the given roots (repeated for multiplicity).
  static UniPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading_coefficient() const;
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational operator()(const Rational& t) const;
  /// Sign of the value at t: -1, 0, or 1.
  int sign_at(const Rational& t) const;

  UniPoly derivative() const;
  /// p(t + shift).
  UniPoly shifted(const Rational& shift) const;
  /// p(-t).
  UniPoly reflected() const;
  UniPoly scaled(const Rational& c) const;
  /// Positive rescaling to a primitive integer polynomial; keeps the sign of every value.
  UniPoly primitive() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const { return scaled(Rational(-1)); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division over Q.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly exact_div(const UniPoly& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0. Remainders are kept primitive to contain growth.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

std::string to_string(const UniPoly& p, const std::string& variable = "t");
std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace hypcert
