#include "hypcert/hyperbolicity.hpp"

namespace hypcert {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

Rational evaluate_real(const MultiPoly& p, const Point& x) {
  const GaussianRational value = p.evaluate(to_gaussian(x));
  return value.real();
}

void require_real_form(const MultiPoly& p, const Point& e, const char* name) {
  if (p.is_zero()) throw DomainError(std::string(name) + " is the zero polynomial");
  if (!p.is_real()) throw DomainError(std::string(name) + " has non-real coefficients");
  if (!p.homogeneous_degree()) throw DomainError(std::string(name) + " is not homogeneous");
  if (p.ring() && !p.ring()->all_weights_one()) throw DomainError(std::string(name) + " needs all weights 1");
  const std::size_t n = p.ring() ? p.ring()->arity() : e.size();
  if (e.size() != n) throw DomainError("direction arity does not match the ring");
  if (evaluate_real(p, e) == 0) throw DomainError(std::string(name) + "(e) = 0: e is not a direction of hyperbolicity");
}

std::size_t ring_arity(const MultiPoly& p, const Point& e) { return p.ring() ? p.ring()->arity() : e.size(); }

/// Calls test(v) for each sampled line (skipping v = e) until it returns a witness.
template <typename Test>
SampledVerdict run_samples(const Point& e, std::size_t arity, const SamplingOptions& options, Test&& test) {
  if (options.box < 0) throw DomainError("sample box must be nonnegative");
  SampledVerdict verdict;
  verdict.seed = options.seed;
  verdict.box = options.box;
  for (std::uint64_t index = 0; verdict.samples_run < options.samples; ++index) {
    Point v = sample_offset(options.seed, index, arity, options.box);
    if (v == e) {
      if (options.box == 0) break;  // the only point in the box
      continue;
    }
    ++verdict.samples_run;
    if (auto witness = test(v)) {
      verdict.status = VerdictStatus::refuted;
      verdict.witness = std::move(witness);
      break;
    }
  }
  return verdict;
}

}  // namespace

Point sample_offset(std::uint64_t seed, std::uint64_t index, std::size_t arity, long box) {
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(box) + 1;
  Point v(arity);
  std::uint64_t state = mix(seed ^ mix(index));
  for (auto& x : v) {
    state = mix(state);
    x = static_cast<long>(state % width) - box;
  }
  return v;
}

std::string to_string(VerdictStatus status) {
  return status == VerdictStatus::refuted ? "refuted" : "no-counterexample";
}

SampledVerdict is_hyperbolic_sampled(const MultiPoly& h, const Point& e, const SamplingOptions& options) {
  require_real_form(h, e, "h");
  return run_samples(e, ring_arity(h, e), options, [&](const Point& v) -> std::optional<LineWitness> {
    UniPoly f = restrict_to_line(h, e, v);
    if (is_real_rooted(f)) return std::nullopt;
    LineWitness w{v, f, std::nullopt, isolate_roots(f), std::nullopt, ""};
    w.reason = "h(te - v) has " + std::to_string(f.degree() - static_cast<int>(w.roots.root_count())) +
               " non-real roots";
    return w;
  });
}

SampledVerdict interlaces_sampled(const MultiPoly& g, const MultiPoly& h, const Point& e,
                                  const SamplingOptions& options) {
  require_real_form(h, e, "h");
  require_real_form(g, e, "g");
  if (*g.homogeneous_degree() + 1 != *h.homogeneous_degree()) {
    throw DomainError("interlacer degree must be deg(h) - 1");
  }
  const MultiPoly gh = g.embed(h.ring());
  return run_samples(e, ring_arity(h, e), options, [&](const Point& v) -> std::optional<LineWitness> {
    UniPoly f = restrict_to_line(h, e, v);
    UniPoly q = restrict_to_line(gh, e, v);
    std::string reason;
    try {
      if (interlaces_univariate(f, q)) return std::nullopt;
      reason = "roots of g(te - v) do not interlace those of h(te - v)";
    } catch (const NotRealRooted& err) {
      reason = (err.which() == "f" ? "h" : "g") + std::string("(te - v) is not real-rooted");
    }
    return LineWitness{v, f, q, isolate_roots(f), isolate_roots(q), reason};
  });
}

UniPoly interpolate_on_line(const MultiPoly& p, const Point& e, const Point& v) {
  if (p.is_zero()) return {};
  const unsigned d = p.total_degree().value_or(0);
  // Newton divided differences at t = 0, 1, ..., d.
  std::vector<Rational> coeffs;
  for (unsigned k = 0; k <= d; ++k) {
    Point x(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) x[j] = Rational(k) * e[j] - v[j];
    coeffs.push_back(evaluate_real(p, x));
  }
  for (unsigned level = 1; level <= d; ++level) {
    for (unsigned k = d; k >= level; --k) coeffs[k] = (coeffs[k] - coeffs[k - 1]) / Rational(level);
  }
  UniPoly out = UniPoly::constant(coeffs[d]);
  for (unsigned k = d; k-- > 0;) out = out * UniPoly({Rational(-static_cast<long>(k)), Rational(1)}) + UniPoly::constant(coeffs[k]);
  return out;
}

bool recheck_hyperbolicity_witness(const MultiPoly& h, const Point& e, const LineWitness& witness) {
  const UniPoly f = interpolate_on_line(h, e, witness.v);
  return f == witness.restricted && !real_rooted_by_hermite(f);
}

bool recheck_interlacing_witness(const MultiPoly& g, const MultiPoly& h, const Point& e,
                                 const LineWitness& witness) {
  const UniPoly f = interpolate_on_line(h, e, witness.v);
  const UniPoly q = interpolate_on_line(g.embed(h.ring()), e, witness.v);
  if (!(f == witness.restricted) || !witness.restricted_interlacer || !(q == *witness.restricted_interlacer)) {
    return false;
  }
  return !interlaces_by_bezoutian(f, q);
}

CertificationError::CertificationError(DetRepReport report_)
    : DomainError("pencil does not certify hyperbolicity: " +
                  (report_.failures.empty() ? std::string("unknown failure")
                                            : report_.failures.front().check + ": " + report_.failures.front().detail)),
      report(std::move(report_)) {}

HyperbolicityCertificate certify_from_pencil(const MultiPoly& h, unsigned r, const Point& e,
                                             const PolyMatrix& pencil, bool up_to_scalar) {
  VerifyOptions options;
  options.up_to_scalar = up_to_scalar;
  DetRepReport report = verify_pencil(pencil, h, r, e, options);
  if (!report.ok) throw CertificationError(std::move(report));
  HyperbolicityCertificate cert{h, r, e, embed(pencil, h.ring()), report.scalar, report};
  return cert;
}

HyperbolicityCertificate certify_from_pencil(const MultiPoly& h, unsigned r, const Point& e,
                                             const std::vector<ConstMatrix>& pencil, bool up_to_scalar) {
  if (!h.ring()) throw DomainError("certify_from_pencil needs h in a ring");
  return certify_from_pencil(h, r, e, pencil_matrix(pencil, h.ring()), up_to_scalar);
}

}  // namespace hypcert
