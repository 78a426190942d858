#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>

#include "hypcert/detrep.hpp"

namespace hypcert {

using RationalMatrix = DenseMatrix<Rational>;

/// h o T^{-1} = alpha z0^2 + z0 q1 + q2 in coordinates z = T x with T e = (1,0,...,0).
struct QuadraticNormalForm {
  /// The form actually normalized: h, or -h when h(e) < 0.
  MultiPoly h;
  bool negated = false;
  Point direction;
  RationalMatrix t;
  RationalMatrix t_inverse;
  /// Ring of the z coordinates (z0 .. z{n-1}).
  RingPtr z_ring;
  MultiPoly transformed;
  Rational alpha;
  MultiPoly q1;
  MultiPoly q2;
  /// Branch form q1^2 - 4 alpha q2 (free of z0).
  MultiPoly p;
};

/// Throws DomainError for non-quadratic input or h(e) = 0.
QuadraticNormalForm normalize_at_direction(const MultiPoly& h, const Point& e);

/// z -> x substitution images: z_i = sum_j T_ij x_j, as polynomials in `x_ring`.
std::vector<MultiPoly> coordinate_images(const RationalMatrix& t, const RingPtr& x_ring);

/// Raised by rational_sos_quadratic on an indefinite form; p(witness) = value < 0.
class IndefiniteForm : public DomainError {
 public:
  IndefiniteForm(Point witness, Rational value);
  Point witness;
  Rational value;
};

struct QuadraticSos {
  /// p = sum weights[j] * forms[j]^2 (congruence diagonalization).
  std::vector<Rational> weights;
  std::vector<MultiPoly> forms;
  /// Unit-weight squares: p = sum squares[j]^2.
  std::vector<MultiPoly> squares;
};

/// Rational SOS of a quadratic form by symmetric elimination (first nonzero
/// diagonal pivot) and four-square splitting of the pivots.
QuadraticSos rational_sos_quadratic(const MultiPoly& p);

/// A pipeline stage failed; `stage` names it and `witness` carries its
/// counterexample when one exists.
class PipelineError : public DomainError {
 public:
  PipelineError(std::string stage, const std::string& detail, std::optional<Point> witness = std::nullopt,
                std::optional<DetRepReport> report = std::nullopt);
  std::string stage;
  std::optional<Point> witness;
  std::optional<DetRepReport> report;
};

struct QuadraticOptions {
  /// Bareiss cross-check of the shortcut for pencils up to this size.
  Index cross_check_limit = 8;
};

struct QuadraticDetRep {
  QuadraticNormalForm normal_form;
  std::vector<MultiPoly> squares;
  /// (2 alpha z0 + q1) I - Q(z), pulled back to x.
  PolyMatrix pencil;
  unsigned power = 1;
  Rational scalar{1};
  DetRepReport report;
};

/// det(pencil) = c * h^r with r = 2^k, c = (4 alpha)^r, pencil(e) = 2 alpha I.
QuadraticDetRep quadratic_detrep(const MultiPoly& h, const Point& e, const QuadraticOptions& options = {});

}  // namespace hypcert
