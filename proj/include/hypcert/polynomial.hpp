#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/container/small_vector.hpp>

#include "hypcert/scalar.hpp"
#include "hypcert/univariate.hpp"

namespace hypcert {

/// Ordered variable names with positive integer weights. The weights define the
/// grading (e.g. deg(y) = e, deg(x_i) = 1 for companion forms).
class Ring {
 public:
  Ring(std::vector<std::string> variables, std::vector<unsigned> weights, bool gaussian);

  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  bool gaussian() const { return gaussian_; }
  bool all_weights_one() const;

  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<unsigned> weights_;
  bool gaussian_ = false;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, std::vector<unsigned> weights = {},
                  bool gaussian = false);
/// Ring with variables prefix0..prefix{n-1}, all weights 1.
RingPtr standard_ring(std::size_t n, bool gaussian = false, std::string_view prefix = "x");
/// Same variables and weights with the gaussian flag replaced.
RingPtr with_gaussian(const RingPtr& ring, bool gaussian);

bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = boost::container::small_vector<std::uint16_t, 12>;

struct Term {
  std::uint32_t weighted_degree = 0;
  Exponents exponents;
  GaussianRational coefficient;
};

/// Sparse multivariate polynomial over Q(i). Terms are kept sorted in
/// descending weighted graded-lex order with no zero coefficients. A polynomial
/// without a ring is a constant; it adopts the ring of the other operand.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int c);  // NOLINT: Eigen constructs Scalar(0), Scalar(1)
  MultiPoly(const GaussianRational& c);  // NOLINT
  MultiPoly(const Rational& c);  // NOLINT
  explicit MultiPoly(RingPtr ring);

  static MultiPoly constant(RingPtr ring, const GaussianRational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly monomial(RingPtr ring, Exponents exponents, const GaussianRational& c);
  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_real() const;

  /// Leading term in weighted graded-lex order; the polynomial must be nonzero.
  const Term& leading_term() const;
  GaussianRational coefficient(const Exponents& exponents) const;
  GaussianRational constant_term() const;

  bool is_weighted_homogeneous() const;
  /// Common weighted degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<unsigned> homogeneous_degree() const;
  /// Largest weighted degree; nullopt for zero.
  std::optional<unsigned> weighted_degree() const;
  /// Largest ordinary total degree; nullopt for zero.
  std::optional<unsigned> total_degree() const;
  unsigned degree_in(std::size_t variable) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const GaussianRational& c) const;
  MultiPoly pow(unsigned k) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  /// Replaces variable k by images[k]; all images must share a ring (or be constants).
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Re-expresses the polynomial in `target`, matching variables by name.
  MultiPoly embed(const RingPtr& target) const;

  MultiPoly derivative(std::size_t variable) const;
  MultiPoly conjugate() const;
  MultiPoly real_part() const;
  MultiPoly imag_part() const;

  /// Multivariate division by a single divisor in the term order: *this =
  /// q * divisor + r where no term of r is divisible by lt(divisor).
  std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& divisor) const;
  /// Quotient of an exact division; throws DomainError when a remainder is left.
  MultiPoly exact_div(const MultiPoly& divisor) const;

 private:
  void promote_to(const RingPtr& ring);
  void unify_with(const MultiPoly& o);
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline MultiPoly conj(const MultiPoly& p) { return p.conjugate(); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_real(const MultiPoly& p) { return p.is_real(); }
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return a.exact_div(b); }
inline std::size_t term_count(const MultiPoly& p) { return p.size(); }

/// Weighted graded-lex comparison; true when `a` sorts after (is larger than) `b`.
bool term_greater(const Term& a, const Term& b);

/// Square root over R of a real polynomial, if one exists: returns (c, s) with
/// p = c * s^2, c > 0 rational and s having rational coefficients. Works for any
/// monomial order since lt(s^2) = lt(s)^2. Returns nullopt when p is not a square
/// in R[x]; the zero polynomial is reported as 0 = 1 * 0^2.
struct SquareRoot {
  Rational scale;
  MultiPoly root;
};
std::optional<SquareRoot> real_square_root(const MultiPoly& p);

/// A rational point (a direction e or a line offset v).
using Point = std::vector<Rational>;

/// Parses comma-separated rationals, e.g. "1,0,-1/2".
Point parse_point(std::string_view text);
std::string to_string(const Point& point);
std::vector<GaussianRational> to_gaussian(const Point& point);

/// t -> h(t*e - v) for a homogeneous real h in an all-weight-1 ring. The
/// leading coefficient is h(e) whenever h(e) != 0.
UniPoly restrict_to_line(const MultiPoly& h, const Point& e, const Point& v);

/// D_e h = sum_i e_i * dh/dx_i (all weights 1).
MultiPoly directional_derivative(const MultiPoly& h, const Point& e);

/// Coefficient-wise complex conjugation.
inline MultiPoly conjugate(const MultiPoly& p) { return p.conjugate(); }

/// Parses the ASCII polynomial grammar (+ - * / ^, parentheses, integer and p/q
/// literals, `i` in gaussian rings). Division is only by nonzero constants.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);
/// Canonical text: terms in descending weighted graded-lex order.
std::string to_string(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace hypcert

namespace Eigen {

template <>
struct NumTraits<hypcert::MultiPoly> : GenericNumTraits<hypcert::MultiPoly> {
  using Real = hypcert::MultiPoly;
  using NonInteger = hypcert::MultiPoly;
  using Literal = hypcert::MultiPoly;
  using Nested = hypcert::MultiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  // Exact scalars: no decimal precision for stream output.
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen
