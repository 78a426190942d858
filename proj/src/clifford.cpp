#include "hypcert/clifford.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hypcert {

namespace {

/// Subsets of {0..n-1} as bitmasks, ordered by size then lexicographically.
std::vector<unsigned> basis_order(int n) {
  std::vector<unsigned> subsets(std::size_t{1} << n);
  for (unsigned s = 0; s < subsets.size(); ++s) subsets[s] = s;
  const auto elements = [](unsigned s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1U) {
      if ((s & 1U) != 0) out.push_back(i);
    }
    return out;
  };
  std::sort(subsets.begin(), subsets.end(), [&](unsigned a, unsigned b) {
    const auto ea = elements(a);
    const auto eb = elements(b);
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    return ea < eb;
  });
  return subsets;
}

}  // namespace

CliffordGenerators clifford_generators(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw DomainError("Clifford generator count must be in [1, " + std::to_string(max_n) + "]");
  }
  const auto order = basis_order(n);
  std::map<unsigned, Index> position;
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<Index>(k);

  const Index m = static_cast<Index>(order.size());
  CliffordGenerators out{n, {}};
  for (int i = 0; i < n; ++i) {
    IntMatrix a = IntMatrix::Zero(m, m);
    const unsigned bit = 1U << static_cast<unsigned>(i);
    for (Index col = 0; col < m; ++col) {
      const unsigned s = order[static_cast<std::size_t>(col)];
      // e_i * e_S: move e_i past the generators of S below i, then square if i is in S.
      int sign = (std::popcount(s & (bit - 1U)) % 2 == 0) ? 1 : -1;
      if ((s & bit) != 0) sign = -sign;
      a(position.at(s ^ bit), col) = sign;
    }
    out.matrices.push_back(std::move(a));
  }
  if (auto bad = clifford_violation(out)) throw InternalError("Clifford generators: " + *bad);
  return out;
}

std::optional<std::string> clifford_violation(const CliffordGenerators& g) {
  const Index m = g.size();
  const IntMatrix identity = IntMatrix::Identity(m, m);
  for (std::size_t i = 0; i < g.matrices.size(); ++i) {
    const IntMatrix& a = g.matrices[i];
    if ((a.array().abs() > 1).any()) return "A_" + std::to_string(i + 1) + " has entries outside {0, +-1}";
    if (a.transpose() != -a) return "A_" + std::to_string(i + 1) + " is not skew";
    if (a * a != -identity) return "A_" + std::to_string(i + 1) + "^2 != -I";
    for (std::size_t j = i + 1; j < g.matrices.size(); ++j) {
      const IntMatrix& b = g.matrices[j];
      if (a * b + b * a != IntMatrix::Zero(m, m)) {
        return "A_" + std::to_string(i + 1) + " and A_" + std::to_string(j + 1) + " do not anticommute";
      }
    }
  }
  return std::nullopt;
}

PolyMatrix build_q(const std::vector<MultiPoly>& squares) {
  if (squares.empty()) throw DomainError("build_q needs at least one polynomial");
  RingPtr ring;
  std::optional<unsigned> degree;
  for (const auto& g : squares) {
    if (!g.is_real()) throw DomainError("build_q needs real polynomials");
    if (g.is_zero()) continue;
    const auto d = g.homogeneous_degree();
    if (!d) throw DomainError("build_q: " + to_string(g) + " is not homogeneous");
    if (degree && *degree != *d) throw DomainError("build_q: polynomials of mixed degrees");
    degree = d;
    if (!ring && g.ring()) ring = g.ring();
  }
  if (!ring) throw DomainError("build_q needs a nonzero polynomial with a ring");
  const int k = static_cast<int>(squares.size());
  const auto gens = clifford_generators(k);
  const Index half = gens.size();

  DenseMatrix<MultiPoly> s = DenseMatrix<MultiPoly>::Constant(half, half, MultiPoly(ring));
  for (int i = 0; i < k; ++i) {
    const MultiPoly g = squares[static_cast<std::size_t>(i)].embed(ring);
    const IntMatrix& a = gens.matrices[static_cast<std::size_t>(i)];
    for (Index r = 0; r < half; ++r) {
      for (Index c = 0; c < half; ++c) {
        if (a(r, c) != 0) s(r, c) += a(r, c) > 0 ? g : -g;
      }
    }
  }
  PolyMatrix q{ring, DenseMatrix<MultiPoly>::Constant(2 * half, 2 * half, MultiPoly(ring)), MatrixKind::symmetric};
  q.entries.topRightCorner(half, half) = s;
  q.entries.bottomLeftCorner(half, half) = s.transpose();

  MultiPoly p(ring);
  for (const auto& g : squares) p += g.embed(ring) * g.embed(ring);
  if (find_kind_violation<MultiPoly>(q.entries, MatrixKind::symmetric)) throw InternalError("Q is not symmetric");
  if (!trace<MultiPoly>(q.entries).is_zero()) throw InternalError("trace Q != 0");
  // Q^2 = diag(S S^T, S^T S); checking the blocks avoids the zero products.
  const DenseMatrix<MultiPoly> sst = s * s.transpose();
  const DenseMatrix<MultiPoly> sts = s.transpose() * s;
  for (Index r = 0; r < half; ++r) {
    for (Index c = 0; c < half; ++c) {
      const MultiPoly expected = r == c ? p : MultiPoly(ring);
      if (!(sst(r, c) == expected) || !(sts(r, c) == expected)) throw InternalError("Q^2 != P I");
    }
  }
  return q;
}

CliffordDetRep sos_to_detrep(const std::vector<MultiPoly>& squares, bool cross_check) {
  PolyMatrix q = build_q(squares);
  const RingPtr& xring = q.ring;
  unsigned e = 0;
  for (const auto& g : squares) {
    if (!g.is_zero()) e = *g.homogeneous_degree();
  }
  if (xring->index_of("y")) throw DomainError("sos_to_detrep: the ring already has a variable named y");

  std::vector<std::string> vars{"y"};
  std::vector<unsigned> weights{std::max(e, 1U)};
  for (std::size_t k = 0; k < xring->arity(); ++k) {
    vars.push_back(xring->variables()[k]);
    weights.push_back(xring->weights()[k]);
  }
  const RingPtr ring = make_ring(vars, weights, xring->gaussian());

  CliffordDetRep out;
  out.q = embed(q, ring);
  out.p = MultiPoly(ring);
  for (const auto& g : squares) out.p += g.embed(ring) * g.embed(ring);
  const MultiPoly y = MultiPoly::variable(ring, 0);
  out.h = y * y - out.p;
  out.power = 1U << squares.size();
  out.p_is_square = real_square_root(out.p).has_value();

  VerifyOptions options;
  options.cross_check = cross_check;
  out.report = verify_companion(out.q, out.h, out.power, "y", options);
  if (out.p_is_square) out.report.notes.push_back("P is a perfect square; the shortcut does not apply");
  return out;
}

}  // namespace hypcert
