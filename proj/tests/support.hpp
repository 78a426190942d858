#pragma once

#include <random>
#include <string>
#include <vector>

#include "hypcert/fixtures.hpp"

namespace hypcert::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_bound = 9, long den_bound = 4) {
  return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline GaussianRational random_gaussian(Rng& rng, bool complex) {
  return complex ? GaussianRational(random_rational(rng), random_rational(rng)) : GaussianRational(random_rational(rng));
}

/// Random homogeneous form of the given degree with about `terms` terms.
inline MultiPoly random_form(Rng& rng, const RingPtr& ring, unsigned degree, int terms, bool complex = false) {
  std::vector<Term> out;
  const std::size_t n = ring->arity();
  for (int k = 0; k < terms; ++k) {
    Exponents e(n, 0);
    for (unsigned d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))];
    out.push_back({0, e, random_gaussian(rng, complex)});
  }
  return MultiPoly::from_terms(ring, std::move(out));
}

/// Random (inhomogeneous) polynomial with small degree.
inline MultiPoly random_poly(Rng& rng, const RingPtr& ring, unsigned max_degree, int terms, bool complex = false) {
  MultiPoly p(ring);
  for (int k = 0; k < terms; ++k) {
    p += random_form(rng, ring, static_cast<unsigned>(uniform(rng, 0, max_degree)), 1, complex);
  }
  return p;
}

inline Point random_point(Rng& rng, std::size_t n, long bound = 5) {
  Point p(n);
  for (auto& x : p) x = uniform(rng, -bound, bound);
  return p;
}

inline MultiPoly poly(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

/// Sturm-free oracle: number of sign changes of p sampled on a grid (zeros skipped).
inline std::size_t grid_sign_changes(const UniPoly& p, const Rational& lo, const Rational& hi, int steps) {
  std::size_t changes = 0;
  int last = 0;
  for (int k = 0; k <= steps; ++k) {
    const Rational t = lo + (hi - lo) * Rational(k, steps);
    const int s = p.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline PolyMatrix random_poly_matrix(Rng& rng, const RingPtr& ring, Index n, bool complex) {
  PolyMatrix m{ring, DenseMatrix<MultiPoly>(n, n), MatrixKind::none};
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      m.entries(i, j) = uniform(rng, 0, 3) == 0 ? MultiPoly(ring) : random_poly(rng, ring, 2, 2, complex);
    }
  }
  return m;
}

inline std::filesystem::path fixture_dir() { return default_fixture_dir(); }

}  // namespace hypcert::testing
