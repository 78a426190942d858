#include "hypcert/detrep.hpp"

#include <algorithm>
#include <numeric>

namespace hypcert {

PolyMatrix make_poly_matrix(const RingPtr& ring, const std::vector<std::vector<MultiPoly>>& rows,
                            MatrixKind kind) {
  const auto n = static_cast<Index>(rows.size());
  PolyMatrix m{ring, DenseMatrix<MultiPoly>(n, n), kind};
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != n) throw DomainError("matrix must be square");
    for (Index j = 0; j < n; ++j) m.entries(i, j) = row[static_cast<std::size_t>(j)].embed(ring);
  }
  return m;
}

PolyMatrix embed(const PolyMatrix& m, const RingPtr& ring) {
  PolyMatrix out{ring, m.entries, m.kind};
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m.size(); ++j) out.entries(i, j) = m.entries(i, j).embed(ring);
  }
  return out;
}

MultiPoly poly_det(const PolyMatrix& m) {
  MultiPoly det = bareiss_det<MultiPoly>(m.entries);
  return det.embed(m.ring);
}

MultiPoly poly_det_leibniz(const PolyMatrix& m) {
  MultiPoly det = leibniz_det<MultiPoly>(m.entries);
  return det.embed(m.ring);
}

ConstMatrix evaluate(const PolyMatrix& m, const std::vector<GaussianRational>& point) {
  ConstMatrix out{DenseMatrix<GaussianRational>(m.size(), m.size()), m.kind};
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m.size(); ++j) out.entries(i, j) = m.entries(i, j).evaluate(point);
  }
  return out;
}

ConstMatrix evaluate(const PolyMatrix& m, const Point& point) { return evaluate(m, to_gaussian(point)); }

PolyMatrix pencil_matrix(const std::vector<ConstMatrix>& pencil, const RingPtr& ring) {
  if (pencil.size() != ring->arity()) throw DomainError("pencil length must equal the number of variables");
  if (pencil.empty()) throw DomainError("empty pencil");
  const Index n = pencil.front().entries.rows();
  const MatrixKind kind = pencil.front().kind;
  PolyMatrix m{ring, DenseMatrix<MultiPoly>::Constant(n, n, MultiPoly(ring)), kind};
  for (std::size_t k = 0; k < pencil.size(); ++k) {
    const auto& a = pencil[k];
    if (a.entries.rows() != n || a.entries.cols() != n) throw DomainError("pencil matrices differ in size");
    if (a.kind != kind) throw DomainError("pencil matrices declare different kinds");
    const MultiPoly x = MultiPoly::variable(ring, k);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (!a.entries(i, j).is_zero()) m.entries(i, j) += x.scaled(a.entries(i, j));
      }
    }
  }
  return m;
}

std::vector<ConstMatrix> pencil_coefficients(const PolyMatrix& m) {
  if (!m.ring->all_weights_one()) throw DomainError("pencil entries need an all-weight-1 ring");
  const Index n = m.size();
  std::vector<ConstMatrix> out(m.ring->arity(),
                               ConstMatrix{DenseMatrix<GaussianRational>::Zero(n, n), m.kind});
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& term : m.entries(i, j).terms()) {
        if (term.weighted_degree != 1) {
          throw DomainError("pencil entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not a linear form");
        }
        for (std::size_t k = 0; k < term.exponents.size(); ++k) {
          if (term.exponents[k] == 1) out[k].entries(i, j) = term.coefficient;
        }
      }
    }
  }
  return out;
}

std::optional<MultiPoly> square_scalar(const DenseMatrix<MultiPoly>& a) {
  const DenseMatrix<MultiPoly> sq = a * a;
  const MultiPoly p = sq(0, 0);
  for (Index i = 0; i < sq.rows(); ++i) {
    for (Index j = 0; j < sq.cols(); ++j) {
      if (i == j ? !(sq(i, j) == p) : !sq(i, j).is_zero()) return std::nullopt;
    }
  }
  return p;
}

PolyMatrix companion_matrix(const PolyMatrix& a, const RingPtr& ring, std::string_view y) {
  const MultiPoly yvar = MultiPoly::variable(ring, y);
  PolyMatrix m = embed(a, ring);
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m.size(); ++j) m.entries(i, j) = -m.entries(i, j);
    m.entries(i, i) += yvar;
  }
  return m;
}

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

GaussianRational const_det(const ConstMatrix& m) {
  return m.entries.rows() <= 7 ? leibniz_det<GaussianRational>(m.entries)
                               : bareiss_det<GaussianRational>(m.entries);
}

/// Small integer point where det M and c * h^r disagree, if the search finds one.
std::optional<Point> disagreement_point(const PolyMatrix& m, const MultiPoly& h, unsigned r,
                                        const Rational& scalar) {
  std::uint64_t state = 0x5EEDULL;
  const std::size_t n = m.ring->arity();
  for (int attempt = 0; attempt < 200; ++attempt) {
    Point pt(n);
    for (auto& x : pt) x = static_cast<long>(splitmix(state) % 7) - 3;
    const auto g = to_gaussian(pt);
    GaussianRational rhs = GaussianRational(scalar) * [&] {
      GaussianRational acc(1);
      const GaussianRational hv = h.evaluate(g);
      for (unsigned k = 0; k < r; ++k) acc *= hv;
      return acc;
    }();
    if (!(const_det(evaluate(m, g)) == rhs)) return pt;
  }
  return std::nullopt;
}

struct ShortcutForm {
  MultiPoly linear;   // L
  MultiPoly square;   // P with (L*I - M)^2 = P*I
  unsigned half_size;
};

/// M = L*I - B with trace B = 0, B^2 = P*I, P not a square: det M = (L^2 - P)^(m/2).
std::optional<ShortcutForm> detect_shortcut(const PolyMatrix& m) {
  if (m.kind == MatrixKind::none || m.size() == 0 || m.size() % 2 != 0) return std::nullopt;
  if (find_kind_violation<MultiPoly>(m.entries, m.kind)) return std::nullopt;
  const Index n = m.size();
  const MultiPoly linear = trace<MultiPoly>(m.entries).scaled(GaussianRational(Rational(1, n)));
  DenseMatrix<MultiPoly> b = -m.entries;
  for (Index k = 0; k < n; ++k) b(k, k) += linear;
  const auto p = square_scalar(b);
  if (!p || !p->is_real() || p->is_zero()) return std::nullopt;
  if (real_square_root(*p)) return std::nullopt;
  return ShortcutForm{linear.embed(m.ring), p->embed(m.ring), static_cast<unsigned>(n / 2)};
}

/// Compares lhs^a with zeta * rhs^b via the reduced powers a/g, b/g; returns
/// zeta^g or nullopt when no constant zeta makes them equal.
struct PowerComparison {
  bool equal = false;
  Rational scalar{0};
  MultiPoly difference;
};

PowerComparison compare_powers(const MultiPoly& base, unsigned a, const MultiPoly& h, unsigned r) {
  const unsigned g = std::gcd(a, r);
  const MultiPoly lhs = base.pow(a / g);
  const MultiPoly rhs = h.pow(r / g);
  PowerComparison out;
  if (lhs.is_zero() || rhs.is_zero()) {
    out.difference = lhs - rhs;
    out.equal = lhs.is_zero() && rhs.is_zero();
    return out;
  }
  const GaussianRational zeta = lhs.leading_term().coefficient / rhs.leading_term().coefficient;
  out.difference = lhs - rhs.scaled(zeta);
  if (!zeta.is_real() || !out.difference.is_zero()) return out;
  out.equal = true;
  out.scalar = 1;
  for (unsigned k = 0; k < g; ++k) out.scalar *= zeta.real();
  return out;
}

void check_identity(const PolyMatrix& m, const MultiPoly& h, unsigned r, const VerifyOptions& options,
                    DetRepReport& report) {
  std::optional<ShortcutForm> shortcut;
  if (options.method != DetMethod::bareiss) shortcut = detect_shortcut(m);
  if (options.method == DetMethod::shortcut && !shortcut) {
    report.failures.push_back({"determinant", "minimal-polynomial shortcut not applicable", {}, {}, {}, {}, {}});
    return;
  }

  Rational scalar;
  MultiPoly difference;
  bool matched = false;
  bool zero_det = false;
  if (shortcut) {
    report.determinant_method = "minimal-polynomial";
    const MultiPoly base = shortcut->linear * shortcut->linear - shortcut->square;
    const auto cmp = compare_powers(base, shortcut->half_size, h, r);
    matched = cmp.equal;
    scalar = cmp.scalar;
    difference = cmp.difference;
    report.notes.push_back("det = (L^2 - P)^" + std::to_string(shortcut->half_size) + " with P = " +
                           to_string(shortcut->square));
    if (options.cross_check && m.size() <= options.cross_check_limit) {
      const MultiPoly det = poly_det(m);
      if (!(det == base.pow(shortcut->half_size))) {
        report.failures.push_back({"cross-check", "Bareiss determinant disagrees with the shortcut", {}, {}, {},
                                   det - base.pow(shortcut->half_size), {}});
      } else {
        report.notes.push_back("Bareiss cross-check agrees");
      }
    }
  } else {
    report.determinant_method = "bareiss";
    const MultiPoly det = poly_det(m);
    const MultiPoly target = h.pow(r);
    zero_det = det.is_zero();
    if (!zero_det) {
      const GaussianRational zeta = det.leading_term().coefficient / target.leading_term().coefficient;
      if (zeta.is_real()) {
        scalar = zeta.real();
        difference = det - target.scaled(zeta);
        matched = difference.is_zero();
      } else {
        difference = det - target;
      }
    } else {
      difference = -target;
    }
  }

  if (!matched) {
    CheckFailure failure{"determinant", zero_det ? "determinant vanishes identically"
                                                 : "det differs from every scalar multiple of h^r",
                         {}, {}, {}, difference, {}};
    failure.point = disagreement_point(m, h, r, options.up_to_scalar ? scalar : Rational(1));
    report.failures.push_back(std::move(failure));
    return;
  }
  if (options.up_to_scalar) {
    if (scalar <= 0) {
      report.failures.push_back({"scalar", "det = c * h^r with c = " + to_string(scalar) + " <= 0", {}, {}, {}, {}, {}});
      return;
    }
    report.scalar = scalar;
  } else if (scalar != 1) {
    CheckFailure failure{"determinant", "det = c * h^r with c = " + to_string(scalar) + " != 1", {}, {}, {},
                         {}, {}};
    failure.point = disagreement_point(m, h, r, Rational(1));
    report.failures.push_back(std::move(failure));
  }
}

void check_kind(const PolyMatrix& m, DetRepReport& report) {
  if (m.kind == MatrixKind::none) {
    report.failures.push_back({"kind", "matrix is declared neither symmetric nor hermitian", {}, {}, {}, {}, {}});
    return;
  }
  if (const auto bad = find_kind_violation<MultiPoly>(m.entries, m.kind)) {
    report.failures.push_back({"kind",
                               "entry (" + std::to_string(bad->row) + "," + std::to_string(bad->col) +
                                   ") violates the " + to_string(m.kind) + " kind",
                               {}, *bad, {}, {}, {}});
  }
}

void require_point(const Point& e, const RingPtr& ring) {
  if (e.size() != ring->arity()) throw DomainError("direction arity does not match the ring");
}

}  // namespace

DetRepReport verify_pencil(const PolyMatrix& pencil, const MultiPoly& h, unsigned r, const Point& e,
                           VerifyOptions options) {
  if (h.is_zero() || !h.ring()) throw DomainError("verify_pencil needs a nonzero polynomial h");
  if (r == 0) throw DomainError("power r must be positive");
  const auto degree = h.homogeneous_degree();
  if (!degree || !h.ring()->all_weights_one()) throw DomainError("h must be homogeneous in an all-weight-1 ring");
  const PolyMatrix m = embed(pencil, h.ring());
  pencil_coefficients(m);  // entries must be linear forms
  if (static_cast<Index>(*degree * r) != m.size()) {
    throw DomainError("size/degree inconsistency: deg(h) * r = " + std::to_string(*degree * r) +
                      " but the matrix has size " + std::to_string(m.size()));
  }
  require_point(e, h.ring());

  DetRepReport report;
  report.power = r;
  check_kind(m, report);
  check_identity(m, h, r, options, report);

  const bool kind_ok = report.failures.empty() || report.failures.front().check != "kind";
  if (m.kind != MatrixKind::none && kind_ok) {
    const ConstMatrix at_e = evaluate(m, e);
    if (auto witness = definiteness_witness(at_e)) {
      CheckFailure failure{"definite",
                           "leading principal minor " + std::to_string(witness->minor) + " of M(e) is not positive",
                           {}, {}, std::move(witness), {}, e};
      report.failures.push_back(std::move(failure));
    }
  } else {
    report.notes.push_back("definiteness not tested: kind check failed");
  }
  report.ok = report.failures.empty();
  return report;
}

DetRepReport verify_pencil(const std::vector<ConstMatrix>& pencil, const MultiPoly& h, unsigned r,
                           const Point& e, VerifyOptions options) {
  if (!h.ring()) throw DomainError("verify_pencil needs h in a ring");
  DetRepReport report = verify_pencil(pencil_matrix(pencil, h.ring()), h, r, e, options);
  for (auto& failure : report.failures) {
    if (failure.check != "kind" || !failure.entry) continue;
    for (std::size_t k = 0; k < pencil.size(); ++k) {
      if (find_kind_violation<GaussianRational>(pencil[k].entries, pencil[k].kind)) {
        failure.matrix_index = k;
        break;
      }
    }
  }
  return report;
}

DetRepReport verify_companion(const PolyMatrix& a, const MultiPoly& h, unsigned r, std::string_view y,
                              VerifyOptions options) {
  if (h.is_zero() || !h.ring()) throw DomainError("verify_companion needs a nonzero polynomial h");
  if (r == 0) throw DomainError("power r must be positive");
  const auto yindex = h.ring()->index_of(y);
  if (!yindex) throw DomainError("ring of h has no variable '" + std::string(y) + "'");
  const unsigned e = h.ring()->weights()[*yindex];
  const auto hdeg = h.homogeneous_degree();
  if (!hdeg || *hdeg % e != 0) throw DomainError("grading violation: h must be weighted-homogeneous of degree d*e");
  const PolyMatrix embedded = embed(a, h.ring());
  for (Index i = 0; i < embedded.size(); ++i) {
    for (Index j = 0; j < embedded.size(); ++j) {
      const MultiPoly& entry = embedded.entries(i, j);
      if (entry.is_zero()) continue;
      if (entry.degree_in(*yindex) != 0) throw DomainError("grading violation: companion entries may not involve y");
      const auto d = entry.homogeneous_degree();
      if (!d || *d != e) {
        throw DomainError("grading violation: entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not homogeneous of degree " + std::to_string(e));
      }
    }
  }
  const unsigned d = *hdeg / e;
  if (static_cast<Index>(d * r) != a.size()) {
    throw DomainError("size/degree inconsistency: d * r = " + std::to_string(d * r) + " but A has size " +
                      std::to_string(a.size()));
  }

  DetRepReport report;
  report.power = r;
  check_kind(embedded, report);
  PolyMatrix m = companion_matrix(embedded, h.ring(), y);
  check_identity(m, h, r, options, report);
  report.ok = report.failures.empty();
  return report;
}

bool recheck_failure(const CheckFailure& failure, const PolyMatrix& m, const MultiPoly& h, unsigned r,
                     const Rational& scalar) {
  if (failure.check == "kind" && failure.entry) {
    const auto [i, j] = *failure.entry;
    if (i >= m.size() || j >= m.size()) return false;
    const MultiPoly& a = m.entries(i, j);
    const MultiPoly& b = m.entries(j, i);
    if (m.kind == MatrixKind::symmetric) return !(a == b) || !a.is_real();
    if (m.kind == MatrixKind::hermitian) return !(a == b.conjugate());
    return false;
  }
  if (failure.check == "definite" && failure.definiteness && failure.point) {
    const auto& v = failure.definiteness->vector;
    if (std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); })) return false;
    const ConstMatrix at_e = evaluate(m, *failure.point);
    const GaussianRational value = hermitian_form(at_e.entries, v);
    return value.is_real() && value.real() <= 0;
  }
  if (failure.check == "determinant" && failure.point) {
    const auto g = to_gaussian(*failure.point);
    GaussianRational rhs(scalar);
    const GaussianRational hv = h.evaluate(g);
    for (unsigned k = 0; k < r; ++k) rhs *= hv;
    return !(const_det(evaluate(m, g)) == rhs);
  }
  return false;
}

SquareIdentityError::SquareIdentityError(EntryIndex entry_, MultiPoly difference_)
    : DomainError("A^2 != p*I at entry (" + std::to_string(entry_.row) + "," + std::to_string(entry_.col) + ")"),
      entry(entry_),
      difference(std::move(difference_)) {}

namespace {

MultiPoly positive_leading(const MultiPoly& p) {
  if (p.is_zero() || p.leading_term().coefficient.real() > 0) return p;
  return -p;
}

}  // namespace

SosDecomposition detrep_to_sos(const PolyMatrix& a, const MultiPoly& p, Index column) {
  if (a.kind == MatrixKind::none) throw DomainError("detrep_to_sos needs a symmetric or hermitian matrix");
  if (column < 0 || column >= a.size()) throw DomainError("column index out of range");
  if (auto bad = find_kind_violation<MultiPoly>(a.entries, a.kind)) {
    throw DomainError("matrix violates its declared kind at (" + std::to_string(bad->row) + "," +
                      std::to_string(bad->col) + ")");
  }
  const MultiPoly target = p.embed(a.ring);
  const DenseMatrix<MultiPoly> sq = a.entries * a.entries;
  for (Index i = 0; i < sq.rows(); ++i) {
    for (Index j = 0; j < sq.cols(); ++j) {
      const MultiPoly expected = i == j ? target : MultiPoly(a.ring);
      if (!(sq(i, j).embed(a.ring) == expected)) throw SquareIdentityError({i, j}, sq(i, j) - expected);
    }
  }

  SosDecomposition out;
  out.p = target;
  out.kind = a.kind;
  out.column = column;
  out.square_bound = a.kind == MatrixKind::symmetric ? static_cast<std::size_t>(a.size())
                                                     : static_cast<std::size_t>(2 * a.size() - 1);
  for (Index j = 0; j < a.size(); ++j) {
    const MultiPoly& entry = a.entries(j, column);
    for (const MultiPoly& part : {entry.real_part(), entry.imag_part()}) {
      if (!part.is_zero()) out.squares.push_back(positive_leading(part.embed(a.ring)));
    }
  }
  MultiPoly sum(a.ring);
  for (const auto& g : out.squares) sum += g * g;
  if (!(sum == target)) throw InternalError("extracted squares do not sum to p");
  out.p_is_square = real_square_root(target).has_value();
  return out;
}

std::vector<std::string> plucker_variable_names() {
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  }
  return names;
}

std::array<Rational, 10> plucker_line(const Point& p, const Point& q) {
  if (p.size() != 5 || q.size() != 5) throw DomainError("Plucker coordinates need points of P^4");
  std::array<Rational, 10> out;
  std::size_t k = 0;
  bool nonzero = false;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      out[k] = p[i] * q[j] - p[j] * q[i];
      nonzero = nonzero || out[k] != 0;
      ++k;
    }
  }
  if (!nonzero) throw DomainError("points are proportional; they do not span a line");
  return out;
}

bool satisfies_plucker_relations(const std::array<Rational, 10>& c) {
  const auto at = [&](int i, int j) -> const Rational& {
    // Index of (i, j), i < j, in lexicographic order of pairs from {0..4}.
    static constexpr int offset[5] = {0, 4, 7, 9, 10};
    return c[static_cast<std::size_t>(offset[i] + (j - i - 1))];
  };
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      for (int k = j + 1; k < 5; ++k) {
        for (int l = k + 1; l < 5; ++l) {
          if (at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k) != 0) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace hypcert
