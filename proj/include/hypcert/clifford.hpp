#pragma once

#include <vector>

#include <Eigen/Core>

#include "hypcert/detrep.hpp"

namespace hypcert {

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Left multiplication by e_1..e_n on Cl_{0,n} (e_i^2 = -1), in the basis of
/// products e_S ordered by (|S|, lex). Each A_i is skew with entries in {0, +-1},
/// A_i^2 = -I and A_i A_j = -A_j A_i.
struct CliffordGenerators {
  int n = 0;
  std::vector<IntMatrix> matrices;

  Index size() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

inline constexpr int kMaxCliffordGenerators = 8;

/// Throws DomainError unless 1 <= n <= max_n; InternalError if an invariant fails.
CliffordGenerators clifford_generators(int n, int max_n = kMaxCliffordGenerators);
/// Exhaustive invariant check; returns a description of the first violation.
std::optional<std::string> clifford_violation(const CliffordGenerators& generators);

/// Q = [[0, S], [S^T, 0]] with S = sum G_i A_i, symmetric of size 2^(k+1), with
/// Q^2 = (sum G_i^2) I and trace 0 (both asserted). G_i must be real and
/// homogeneous of one common degree.
PolyMatrix build_q(const std::vector<MultiPoly>& squares);

struct CliffordDetRep {
  /// A = Q over the ring (y, x...) with deg y = e.
  PolyMatrix q;
  MultiPoly p;
  /// h = y^2 - p.
  MultiPoly h;
  unsigned power = 1;
  DetRepReport report;
  bool p_is_square = false;
};

/// det(y I - Q) = (y^2 - P)^(2^k), verified with verify_companion (shortcut,
/// with a Bareiss cross-check up to size 16 when `cross_check` is set).
CliffordDetRep sos_to_detrep(const std::vector<MultiPoly>& squares, bool cross_check = true);

}  // namespace hypcert
