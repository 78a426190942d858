#include "hypcert/dense.hpp"

namespace hypcert {

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::symmetric:
      return "symmetric";
    case MatrixKind::hermitian:
      return "hermitian";
    case MatrixKind::none:
      return "none";
  }
  return "none";
}

MatrixKind parse_kind(std::string_view text) {
  if (text == "symmetric") return MatrixKind::symmetric;
  if (text == "hermitian") return MatrixKind::hermitian;
  if (text == "none") return MatrixKind::none;
  throw ParseError("unknown matrix kind '" + std::string(text) + "'");
}

std::vector<GaussianRational> leading_principal_minors(const DenseMatrix<GaussianRational>& m) {
  std::vector<GaussianRational> minors;
  minors.reserve(static_cast<std::size_t>(m.rows()));
  for (Index k = 1; k <= m.rows(); ++k) {
    minors.push_back(bareiss_det<GaussianRational>(m.topLeftCorner(k, k)));
  }
  return minors;
}

bool is_positive_definite(const ConstMatrix& m) {
  if (m.kind == MatrixKind::none) throw DomainError("definiteness test needs a symmetric or hermitian matrix");
  if (m.entries.rows() != m.entries.cols()) throw DomainError("definiteness test needs a square matrix");
  for (Index k = 1; k <= m.entries.rows(); ++k) {
    const GaussianRational minor = bareiss_det<GaussianRational>(m.entries.topLeftCorner(k, k));
    if (!minor.is_real()) throw InternalError("leading minor with imaginary part; matrix is not hermitian");
    if (minor.real() <= 0) return false;
  }
  return true;
}

GaussianRational hermitian_form(const DenseMatrix<GaussianRational>& m,
                                const DenseVector<GaussianRational>& v) {
  GaussianRational acc(0);
  for (Index i = 0; i < m.rows(); ++i) {
    if (v(i).is_zero()) continue;
    GaussianRational row(0);
    for (Index j = 0; j < m.cols(); ++j) {
      if (!v(j).is_zero()) row += m(i, j) * v(j);
    }
    acc += conj(v(i)) * row;
  }
  return acc;
}

std::optional<DefinitenessWitness> definiteness_witness(const ConstMatrix& m) {
  if (m.kind == MatrixKind::none) throw DomainError("definiteness test needs a symmetric or hermitian matrix");
  const Index n = m.entries.rows();
  DenseMatrix<GaussianRational> work = m.entries;
  DenseMatrix<GaussianRational> lower = DenseMatrix<GaussianRational>::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    const GaussianRational pivot = work(k, k);
    if (!pivot.is_real()) throw InternalError("non-real diagonal in hermitian elimination");
    if (pivot.real() <= 0) {
      // v solves L* v = e_k, so v* M v equals the k-th pivot.
      DenseVector<GaussianRational> v = DenseVector<GaussianRational>::Zero(n);
      v(k) = GaussianRational(1);
      for (Index j = k - 1; j >= 0; --j) {
        GaussianRational acc(0);
        for (Index l = j + 1; l <= k; ++l) acc += conj(lower(l, j)) * v(l);
        v(j) = -acc;
      }
      DefinitenessWitness witness;
      witness.minor = static_cast<std::size_t>(k + 1);
      witness.vector = std::move(v);
      witness.value = hermitian_form(m.entries, witness.vector).real();
      return witness;
    }
    for (Index i = k + 1; i < n; ++i) lower(i, k) = work(i, k) / pivot;
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) work(i, j) -= lower(i, k) * work(k, j);
    }
  }
  return std::nullopt;
}

namespace {

std::size_t sign_variations(const std::vector<Rational>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia inertia(const DenseMatrix<GaussianRational>& m) {
  const auto chi = characteristic_polynomial<GaussianRational>(m);
  std::vector<Rational> plus;
  std::vector<Rational> minus;
  std::size_t zero = 0;
  while (zero < chi.size() && chi[zero].is_zero()) ++zero;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    if (!chi[k].is_real()) throw InternalError("characteristic polynomial of a self-adjoint matrix is not real");
    plus.push_back(chi[k].real());
    minus.push_back(k % 2 == 0 ? chi[k].real() : Rational(-chi[k].real()));
  }
  return {sign_variations(plus), sign_variations(minus), zero};
}

}  // namespace hypcert
