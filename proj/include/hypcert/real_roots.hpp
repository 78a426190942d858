#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypcert/univariate.hpp"

namespace hypcert {

/// One real root: lo == hi is an exact rational root, otherwise the root lies
/// in the open interval (lo, hi) and neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;

  bool exact() const { return lo == hi; }
};

struct IsolatingIntervals {
  std::vector<RootInterval> intervals;

  /// Real roots counted with multiplicity.
  std::size_t root_count() const;
};

/// "[lo, hi] x mult".
std::string to_string(const RootInterval& interval);
std::ostream& operator<<(std::ostream& os, const IsolatingIntervals& roots);

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), each term rescaled
/// by a positive constant. p should be squarefree.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  /// Sign variations at t (zeros skipped).
  std::size_t variations_at(const Rational& t) const;
  /// Sign variations at +infinity (positive = true) or -infinity.
  std::size_t variations_at_infinity(bool positive) const;
  /// Number of distinct roots in (a, b].
  std::size_t count(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots.
  std::size_t count_all() const;

  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

/// f / gcd(f, f'), made monic.
UniPoly squarefree_part(const UniPoly& f);

/// Yun's algorithm: f = lc * prod g_k^k with g_k squarefree and pairwise coprime.
/// Only factors of positive degree are returned.
struct SquarefreeFactor {
  UniPoly factor;
  unsigned multiplicity;
};
std::vector<SquarefreeFactor> squarefree_factorization(const UniPoly& f);

/// 1 + max |a_i| / |a_n|; every root has absolute value strictly below it.
Rational cauchy_bound(const UniPoly& f);

/// True iff every complex root of f is real. Throws DomainError for f = 0.
bool is_real_rooted(const UniPoly& f);

/// Sorted isolating intervals for the distinct real roots of f with multiplicities.
IsolatingIntervals isolate_roots(const UniPoly& f);

/// Halves an open isolating interval of a root of the squarefree polynomial p.
void bisect(RootInterval& interval, const UniPoly& p);
/// Bisects until hi - lo <= width (exact roots are left alone).
void refine_to_width(RootInterval& interval, const UniPoly& p, const Rational& width);

/// Raised when an interlacing test is applied to a polynomial with non-real roots.
class NotRealRooted : public DomainError {
 public:
  explicit NotRealRooted(std::string which)
      : DomainError(which + " is not real-rooted"), which_(std::move(which)) {}
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

struct InterlaceOptions {
  /// Strict mode forbids shared roots (a_1 < b_1 < a_2 < ...).
  bool strict = false;
};

/// Weak interlacing a_1 <= b_1 <= a_2 <= ... <= b_{d-1} <= a_d of the roots of f
/// (degree d) and g (degree d-1). Throws DomainError on a degree mismatch and
/// NotRealRooted("f"/"g") when an input has non-real roots.
bool interlaces_univariate(const UniPoly& f, const UniPoly& g, InterlaceOptions options = {});

// Independent decision procedures, used to re-check emitted witnesses.

/// Hermite's criterion: f is real-rooted iff the Hankel matrix of its Newton power
/// sums is positive semidefinite.
bool real_rooted_by_hermite(const UniPoly& f);

/// Bezoutian criterion: for real-rooted f, g with deg g = deg f - 1, the roots
/// weakly interlace iff Bez(f, g) is semidefinite. Returns false if either
/// input is not real-rooted (checked with Hermite's criterion).
bool interlaces_by_bezoutian(const UniPoly& f, const UniPoly& g);

}  // namespace hypcert
