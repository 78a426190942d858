#include "hypcert/quadratic.hpp"

#include "hypcert/clifford.hpp"

namespace hypcert {

namespace {

void require_real_quadratic(const MultiPoly& h) {
  if (!h.ring() || !h.ring()->all_weights_one()) throw DomainError("quadratic input needs an all-weight-1 ring");
  if (!h.is_real()) throw DomainError("quadratic input must have real coefficients");
  if (!h.is_zero() && h.homogeneous_degree() != 2u) throw DomainError("input is not a quadratic form");
}

Rational real_value(const MultiPoly& p, const Point& x) { return p.evaluate(to_gaussian(x)).real(); }

}  // namespace

std::vector<MultiPoly> coordinate_images(const RationalMatrix& t, const RingPtr& x_ring) {
  std::vector<MultiPoly> images;
  for (Index i = 0; i < t.rows(); ++i) {
    MultiPoly z(x_ring);
    for (Index j = 0; j < t.cols(); ++j) {
      if (t(i, j) != 0) z += MultiPoly::variable(x_ring, static_cast<std::size_t>(j)).scaled(t(i, j));
    }
    images.push_back(std::move(z));
  }
  return images;
}

QuadraticNormalForm normalize_at_direction(const MultiPoly& h, const Point& e) {
  require_real_quadratic(h);
  if (h.is_zero()) throw DomainError("input is not a quadratic form");
  const std::size_t n = h.ring()->arity();
  if (e.size() != n) throw DomainError("direction arity does not match the ring");
  const Rational he = real_value(h, e);
  if (he == 0) throw DomainError("h(e) = 0: e is not a direction of hyperbolicity");

  QuadraticNormalForm nf;
  nf.negated = he < 0;
  nf.h = nf.negated ? -h : h;
  nf.direction = e;

  // T^{-1} = [e, unit vectors except the pivot]; pivot = first nonzero coordinate of e.
  const auto pivot = static_cast<Index>(std::find_if(e.begin(), e.end(), [](const Rational& x) { return x != 0; }) -
                                        e.begin());
  const auto size = static_cast<Index>(n);
  nf.t_inverse = RationalMatrix::Zero(size, size);
  for (Index i = 0; i < size; ++i) nf.t_inverse(i, 0) = e[static_cast<std::size_t>(i)];
  for (Index i = 0, col = 1; i < size; ++i) {
    if (i != pivot) nf.t_inverse(i, col++) = 1;
  }
  // z0 = x_pivot / e_pivot, z_col = x_i - e_i z0.
  nf.t = RationalMatrix::Zero(size, size);
  const Rational ep = e[static_cast<std::size_t>(pivot)];
  nf.t(0, pivot) = 1 / ep;
  for (Index i = 0, col = 1; i < size; ++i) {
    if (i == pivot) continue;
    nf.t(col, i) = 1;
    nf.t(col, pivot) = -e[static_cast<std::size_t>(i)] / ep;
    ++col;
  }
  if (nf.t * nf.t_inverse != RationalMatrix::Identity(size, size)) throw InternalError("T T^{-1} != I");

  nf.z_ring = standard_ring(n, false, "z");
  const auto x_images = coordinate_images(nf.t_inverse, nf.z_ring);
  nf.transformed = nf.h.substitute(x_images);

  Exponents z0sq(n, 0);
  z0sq[0] = 2;
  nf.alpha = nf.transformed.coefficient(z0sq).real();
  nf.q1 = MultiPoly(nf.z_ring);
  nf.q2 = MultiPoly(nf.z_ring);
  for (const auto& term : nf.transformed.terms()) {
    if (term.exponents[0] == 1) {
      Exponents rest = term.exponents;
      rest[0] = 0;
      nf.q1 += MultiPoly::monomial(nf.z_ring, rest, term.coefficient);
    } else if (term.exponents[0] == 0) {
      nf.q2 += MultiPoly::monomial(nf.z_ring, term.exponents, term.coefficient);
    }
  }
  nf.p = nf.q1 * nf.q1 - nf.q2.scaled(Rational(4) * nf.alpha);

  const MultiPoly z0 = MultiPoly::variable(nf.z_ring, 0);
  if (!(nf.transformed == z0 * z0 * MultiPoly(GaussianRational(nf.alpha)) + z0 * nf.q1 + nf.q2) ||
      nf.alpha != he * (nf.negated ? -1 : 1)) {
    throw InternalError("normal form does not reproduce h");
  }
  const MultiPoly ell = z0.scaled(Rational(2) * nf.alpha) + nf.q1;
  if (!(nf.transformed.scaled(Rational(4) * nf.alpha) == ell * ell - nf.p)) {
    throw InternalError("4 alpha h != (2 alpha z0 + q1)^2 - p");
  }
  return nf;
}

IndefiniteForm::IndefiniteForm(Point witness_, Rational value_)
    : DomainError("quadratic form is not nonnegative: p(" + to_string(witness_) + ") = " + to_string(value_)),
      witness(std::move(witness_)),
      value(std::move(value_)) {}

namespace {

/// Point where the pivot forms ell_j (pivot variable coefficient 1) vanish,
/// given values for the remaining variables; solved in reverse pivot order.
Point back_solve(Point v, const std::vector<MultiPoly>& forms, const std::vector<std::size_t>& pivots) {
  for (std::size_t j = forms.size(); j-- > 0;) {
    v[pivots[j]] = 0;
    v[pivots[j]] = -real_value(forms[j], v);
  }
  return v;
}

}  // namespace

QuadraticSos rational_sos_quadratic(const MultiPoly& p) {
  require_real_quadratic(p);
  QuadraticSos out;
  if (p.is_zero()) return out;
  const RingPtr& ring = p.ring();
  const std::size_t n = ring->arity();

  std::vector<std::size_t> pivots;
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    // First variable with a nonzero square coefficient.
    std::optional<std::size_t> pivot;
    Rational a;
    for (std::size_t i = 0; i < n && !pivot; ++i) {
      Exponents sq(n, 0);
      sq[i] = 2;
      a = rest.coefficient(sq).real();
      if (a != 0) pivot = i;
    }
    if (!pivot) {
      // Zero diagonal, nonzero form: b x_i x_j with the rest vanishing on span(e_i, e_j).
      const Term& lead = rest.leading_term();
      std::size_t i = n;
      std::size_t j = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (lead.exponents[k] == 1) (i == n ? i : j) = k;
      }
      Point v(n, Rational(0));
      v[i] = 1;
      v[j] = lead.coefficient.real() > 0 ? -1 : 1;
      v = back_solve(v, out.forms, pivots);
      throw IndefiniteForm(v, real_value(p, v));
    }
    if (a < 0) {
      Point v(n, Rational(0));
      v[*pivot] = 1;
      v = back_solve(v, out.forms, pivots);
      v[*pivot] = 1;  // ell_pivot(v) = 1 since later variables vanish
      throw IndefiniteForm(v, real_value(p, v));
    }
    MultiPoly ell = rest.derivative(*pivot).scaled(1 / (Rational(2) * a));
    rest -= (ell * ell).scaled(a);
    pivots.push_back(*pivot);
    out.forms.push_back(std::move(ell));
    out.weights.push_back(a);
  }

  for (std::size_t j = 0; j < out.forms.size(); ++j) {
    for (const Rational& q : four_square_decompose(out.weights[j])) {
      if (q != 0) out.squares.push_back(out.forms[j].scaled(q));
    }
  }
  MultiPoly sum(ring);
  for (const auto& g : out.squares) sum += g * g;
  if (!(sum == p)) throw InternalError("quadratic SOS does not reproduce p");
  return out;
}

PipelineError::PipelineError(std::string stage_, const std::string& detail, std::optional<Point> witness_,
                             std::optional<DetRepReport> report_)
    : DomainError(stage_ + ": " + detail), stage(std::move(stage_)), witness(std::move(witness_)),
      report(std::move(report_)) {}

QuadraticDetRep quadratic_detrep(const MultiPoly& h, const Point& e, const QuadraticOptions& options) {
  QuadraticDetRep out;
  try {
    out.normal_form = normalize_at_direction(h, e);
  } catch (const DomainError& err) {
    throw PipelineError("normalize_at_direction", err.what());
  }
  const auto& nf = out.normal_form;
  QuadraticSos sos;
  try {
    sos = rational_sos_quadratic(nf.p);
  } catch (const IndefiniteForm& err) {
    throw PipelineError("rational_sos_quadratic",
                        std::string(err.what()) + " (z coordinates); the branch form must be nonnegative",
                        err.witness);
  }
  out.squares = sos.squares;

  const MultiPoly z0 = MultiPoly::variable(nf.z_ring, 0);
  const MultiPoly ell = z0.scaled(Rational(2) * nf.alpha) + nf.q1;
  PolyMatrix m_z;
  if (out.squares.empty()) {
    // p = 0: 4 alpha h = ell^2 = det(ell I_2).
    m_z = make_poly_matrix(nf.z_ring, {{ell, MultiPoly(nf.z_ring)}, {MultiPoly(nf.z_ring), ell}},
                           MatrixKind::symmetric);
    out.power = 1;
  } else {
    try {
      m_z = build_q(out.squares);
    } catch (const Error& err) {
      throw PipelineError("build_q", err.what());
    }
    m_z = embed(m_z, nf.z_ring);
    for (Index i = 0; i < m_z.size(); ++i) {
      for (Index j = 0; j < m_z.size(); ++j) m_z.entries(i, j) = -m_z.entries(i, j);
      m_z.entries(i, i) += ell;
    }
    if (out.squares.size() >= 32) throw PipelineError("build_q", "too many squares");
    out.power = 1U << out.squares.size();
  }
  out.scalar = 1;
  for (unsigned k = 0; k < out.power; ++k) out.scalar *= Rational(4) * nf.alpha;

  const auto z_images = coordinate_images(nf.t, h.ring());
  out.pencil = PolyMatrix{h.ring(), m_z.entries, MatrixKind::symmetric};
  for (Index i = 0; i < m_z.size(); ++i) {
    for (Index j = 0; j < m_z.size(); ++j) out.pencil.entries(i, j) = m_z.entries(i, j).substitute(z_images);
  }

  VerifyOptions verify;
  verify.up_to_scalar = true;
  verify.cross_check = true;
  verify.cross_check_limit = options.cross_check_limit;
  out.report = verify_pencil(out.pencil, nf.h, out.power, e, verify);
  if (!out.report.ok) {
    const auto& first = out.report.failures.front();
    throw PipelineError("verify_pencil", first.check + ": " + first.detail, first.point, out.report);
  }
  if (out.report.scalar != out.scalar) {
    throw PipelineError("verify_pencil", "scalar " + to_string(out.report.scalar) + " != (4 alpha)^r", std::nullopt,
                        out.report);
  }
  return out;
}

}  // namespace hypcert
