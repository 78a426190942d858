#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hypcert/scalar.hpp"

namespace hypcert {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

enum class MatrixKind { symmetric, hermitian, none };

std::string to_string(MatrixKind kind);
MatrixKind parse_kind(std::string_view text);

/// Constant matrix over Q(i) together with its declared symmetry kind.
struct ConstMatrix {
  DenseMatrix<GaussianRational> entries;
  MatrixKind kind = MatrixKind::none;
};

// Scalar hooks for GaussianRational; MultiPoly provides the same set.
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool is_real(const GaussianRational& z) { return z.is_real(); }
inline GaussianRational exact_div(const GaussianRational& a, const GaussianRational& b) { return a / b; }
inline std::size_t term_count(const GaussianRational& z) { return z.is_zero() ? 0 : 1; }

template <typename Scalar>
DenseMatrix<Scalar> conjugate(const DenseMatrix<Scalar>& m) {
  return m.unaryExpr([](const Scalar& s) { return conj(s); });
}

/// Conjugate transpose.
template <typename Scalar>
DenseMatrix<Scalar> adjoint(const DenseMatrix<Scalar>& m) {
  return conjugate<Scalar>(m).transpose();
}

template <typename Scalar>
Scalar trace(const DenseMatrix<Scalar>& m) {
  Scalar acc(0);
  for (Index k = 0; k < m.rows(); ++k) acc += m(k, k);
  return acc;
}

struct EntryIndex {
  Index row = 0;
  Index col = 0;
};

/// First entry violating the declared kind: M(i,j) != M(j,i) or a non-real entry
/// for symmetric, M(i,j) != conj(M(j,i)) for hermitian. Non-square matrices
/// report (rows, cols).
template <typename Scalar>
std::optional<EntryIndex> find_kind_violation(const DenseMatrix<Scalar>& m, MatrixKind kind) {
  if (m.rows() != m.cols()) return EntryIndex{m.rows(), m.cols()};
  if (kind == MatrixKind::none) return std::nullopt;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i; j < m.cols(); ++j) {
      if (kind == MatrixKind::symmetric) {
        if (!is_real(m(i, j)) || !(m(i, j) == m(j, i))) return EntryIndex{i, j};
      } else if (!(m(i, j) == conj(m(j, i)))) {
        return EntryIndex{i, j};
      }
    }
  }
  return std::nullopt;
}

/// Fraction-free Bareiss elimination. Every division is exact in an integral
/// domain, so Scalar only needs ring operations plus exact_div. Row pivoting
/// picks the nonzero candidate with the fewest terms.
template <typename Scalar>
Scalar bareiss_det(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar previous(1);
  for (Index k = 0; k + 1 < n; ++k) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      if (pivot < 0 || term_count(m(i, k)) < term_count(m(pivot, k))) pivot = i;
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar numerator = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(numerator, previous);
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Permutation expansion; an independent oracle for small sizes.
template <typename Scalar>
Scalar leibniz_det(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n > 8) throw DomainError("Leibniz expansion limited to size 8");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  Scalar total(0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    Scalar product(1);
    for (Index r = 0; r < n; ++r) {
      product = product * m(r, perm[static_cast<std::size_t>(r)]);
      if (is_zero(product)) break;
    }
    if (inversions % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Characteristic polynomial det(t*I - M) by Faddeev-LeVerrier; coefficients in
/// ascending degree, monic.
template <typename Scalar>
std::vector<Scalar> characteristic_polynomial(const DenseMatrix<Scalar>& m) {
  const Index n = m.rows();
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n + 1), Scalar(0));
  coeffs[static_cast<std::size_t>(n)] = Scalar(1);
  DenseMatrix<Scalar> identity = DenseMatrix<Scalar>::Identity(n, n);
  DenseMatrix<Scalar> work = DenseMatrix<Scalar>::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    work = m * work + coeffs[static_cast<std::size_t>(n - k + 1)] * identity;
    DenseMatrix<Scalar> product = m * work;
    coeffs[static_cast<std::size_t>(n - k)] = -trace<Scalar>(product) / Scalar(static_cast<int>(k));
  }
  return coeffs;
}

// Leading principal minors, each by fraction-free elimination.
std::vector<GaussianRational> leading_principal_minors(const DenseMatrix<GaussianRational>& m);

/// Sylvester criterion. Throws DomainError for kind none and InternalError when
/// a minor has an imaginary residue (a broken hermitian invariant).
bool is_positive_definite(const ConstMatrix& m);

/// Evidence that a self-adjoint constant matrix is not positive definite: a
/// nonzero vector v with v* M v = value <= 0, found by LDL* elimination. `minor`
/// is the 1-based size of the first leading principal minor that is not positive.
struct DefinitenessWitness {
  std::size_t minor = 0;
  DenseVector<GaussianRational> vector;
  Rational value;
};

std::optional<DefinitenessWitness> definiteness_witness(const ConstMatrix& m);

/// v* M v for a self-adjoint M (returned as a Gaussian rational for inspection).
GaussianRational hermitian_form(const DenseMatrix<GaussianRational>& m,
                                const DenseVector<GaussianRational>& v);

/// Number of positive and negative eigenvalues of a self-adjoint matrix, from
/// Descartes' rule on its (real-rooted) characteristic polynomial.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

Inertia inertia(const DenseMatrix<GaussianRational>& m);

}  // namespace hypcert
