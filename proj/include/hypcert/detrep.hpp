#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypcert/dense.hpp"
#include "hypcert/polynomial.hpp"

namespace hypcert {

/// Square matrix of polynomials over one ring, tagged with its symmetry kind.
struct PolyMatrix {
  RingPtr ring;
  DenseMatrix<MultiPoly> entries;
  MatrixKind kind = MatrixKind::none;

  Index size() const { return entries.rows(); }
};

/// Builds a matrix from row-major entries; every entry is embedded into `ring`.
PolyMatrix make_poly_matrix(const RingPtr& ring, const std::vector<std::vector<MultiPoly>>& rows,
                            MatrixKind kind);

/// Re-expresses all entries in `ring` (matching variables by name).
PolyMatrix embed(const PolyMatrix& m, const RingPtr& ring);

/// Exact determinant by fraction-free Bareiss elimination.
MultiPoly poly_det(const PolyMatrix& m);
/// Permutation expansion; the independent oracle for sizes up to 8.
MultiPoly poly_det_leibniz(const PolyMatrix& m);

/// Entry-wise evaluation at a rational point.
ConstMatrix evaluate(const PolyMatrix& m, const Point& point);
ConstMatrix evaluate(const PolyMatrix& m, const std::vector<GaussianRational>& point);

/// x_0 A_0 + ... + x_n A_n over `ring` (arity must equal the pencil length).
PolyMatrix pencil_matrix(const std::vector<ConstMatrix>& pencil, const RingPtr& ring);
/// Splits a matrix of linear forms into its coefficient matrices. Throws
/// DomainError if an entry is not a homogeneous linear form.
std::vector<ConstMatrix> pencil_coefficients(const PolyMatrix& m);

/// If A^2 = p * I for some polynomial p, returns p.
std::optional<MultiPoly> square_scalar(const DenseMatrix<MultiPoly>& a);

/// A named check that did not pass, with a witness that can be re-checked
/// independently (entry index, definiteness vector, polynomial difference,
/// evaluation point).
struct CheckFailure {
  std::string check;
  std::string detail;
  std::optional<std::size_t> matrix_index;
  std::optional<EntryIndex> entry;
  std::optional<DefinitenessWitness> definiteness;
  std::optional<MultiPoly> difference;
  std::optional<Point> point;
};

struct DetRepReport {
  bool ok = false;
  Rational scalar{1};
  unsigned power = 1;
  /// "bareiss", "minimal-polynomial" or "none" when the identity was not reached.
  std::string determinant_method = "none";
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;
};

enum class DetMethod {
  /// Minimal-polynomial shortcut when its conditions hold, Bareiss otherwise.
  automatic,
  bareiss,
  shortcut
};

struct VerifyOptions {
  bool up_to_scalar = false;
  DetMethod method = DetMethod::automatic;
  /// When the shortcut is used on a matrix of size <= cross_check_limit, also run
  /// Bareiss and require agreement.
  bool cross_check = false;
  Index cross_check_limit = 16;
};

/// Checks h^r = c * det(x_0 A_0 + ... + x_n A_n) with symmetric/hermitian A_i
/// (c = 1 unless up_to_scalar), and that sum e_i A_i is positive definite.
/// Throws DomainError on size/degree inconsistency.
DetRepReport verify_pencil(const std::vector<ConstMatrix>& pencil, const MultiPoly& h, unsigned r,
                           const Point& e, VerifyOptions options = {});
/// Same checks for a matrix of linear forms.
DetRepReport verify_pencil(const PolyMatrix& m, const MultiPoly& h, unsigned r, const Point& e,
                           VerifyOptions options = {});

/// Checks det(y*I - A) = h^r, where h lives in a ring containing `y` with weight
/// e and A has entries of weighted degree e in the remaining variables.
/// Throws DomainError on grading violations.
DetRepReport verify_companion(const PolyMatrix& a, const MultiPoly& h, unsigned r,
                              std::string_view y = "y", VerifyOptions options = {});

/// y*I - A over the ring of h (A embedded by variable name).
PolyMatrix companion_matrix(const PolyMatrix& a, const RingPtr& ring, std::string_view y = "y");

/// Independent re-check of a failure witness against the matrix M whose
/// determinant was tested: entries against the kind, v* M(e) v <= 0 for
/// definiteness vectors, det M(point) != c * h(point)^r for determinant points.
/// Returns false for failures that carry no checkable witness.
bool recheck_failure(const CheckFailure& failure, const PolyMatrix& m, const MultiPoly& h, unsigned r,
                     const Rational& scalar);

/// Raised by detrep_to_sos when A^2 != p * I; carries the offending entry.
class SquareIdentityError : public DomainError {
 public:
  SquareIdentityError(EntryIndex entry, MultiPoly difference);
  EntryIndex entry;
  MultiPoly difference;
};

struct SosDecomposition {
  MultiPoly p;
  /// Real polynomials G with sum G^2 = p, each scaled so its leading
  /// coefficient is positive.
  std::vector<MultiPoly> squares;
  MatrixKind kind = MatrixKind::none;
  Index column = 0;
  /// 2r squares (symmetric) or 4r - 1 (hermitian) for a matrix of size 2r.
  std::size_t square_bound = 0;
  /// Whether p is a square in R[x] (then the SOS does not certify anything beyond p = s^2).
  bool p_is_square = false;
};

/// Reads an SOS certificate off a column of a self-adjoint A with A^2 = p * I.
SosDecomposition detrep_to_sos(const PolyMatrix& a, const MultiPoly& p, Index column = 0);

/// Plucker coordinates x_ij = P_i Q_j - P_j Q_i (0 <= i < j <= 4) of the line
/// through two points of P^4, in the order 01,02,03,04,12,13,14,23,24,34.
std::array<Rational, 10> plucker_line(const Point& p, const Point& q);
/// Variable names x01 .. x34 in the same order.
std::vector<std::string> plucker_variable_names();
/// The five three-term Grassmann-Plucker relations of G(2, 5).
bool satisfies_plucker_relations(const std::array<Rational, 10>& coords);

}  // namespace hypcert
