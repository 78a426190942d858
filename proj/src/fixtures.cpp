#include "hypcert/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>

#ifndef HYPCERT_FIXTURE_DIR
#define HYPCERT_FIXTURE_DIR "data/fixtures"
#endif

namespace hypcert {

namespace {

namespace fs = std::filesystem;

class Checks {
 public:
  explicit Checks(FixtureResult& result) : result_(result) {}

  bool add(std::string name, bool passed, std::string detail = {}) {
    result_.checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }

 private:
  FixtureResult& result_;
};

std::string field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("fixture.json: missing field '") + key + "'");
  return j.at(key).get<std::string>();
}

std::uint64_t next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

Point random_point(std::uint64_t& state, std::size_t n, long box) {
  Point p(n);
  for (auto& x : p) x = static_cast<long>(next(state) % static_cast<std::uint64_t>(2 * box + 1)) - box;
  return p;
}

GaussianRational power(const GaussianRational& z, unsigned r) {
  GaussianRational out(1);
  for (unsigned k = 0; k < r; ++k) out *= z;
  return out;
}

SamplingOptions sampling_from(const Json& spec, const std::optional<SamplingOptions>& override_) {
  if (override_) return *override_;
  SamplingOptions options;
  if (spec.contains("samples")) options.samples = spec.at("samples").get<std::size_t>();
  if (spec.contains("seed")) options.seed = spec.at("seed").get<std::uint64_t>();
  return options;
}

void pencil_fixture(const fs::path& dir, const Json& spec, Checks& checks, bool with_interlacer) {
  const PolyMatrix m = read_matrix_file(dir / field(spec, "matrix"));
  const MultiPoly h = read_single_poly(dir / field(spec, "poly")).embed(m.ring);
  const Point e = parse_point(field(spec, "direction"));
  const unsigned r = spec.at("power").get<unsigned>();

  const auto violation = find_kind_violation<MultiPoly>(m.entries, m.kind);
  checks.add("matrix is " + to_string(m.kind), m.kind != MatrixKind::none && !violation);
  const MultiPoly det = poly_det(m);
  checks.add("det = h^r (Bareiss)", det == h.pow(r), "det = " + to_string(det));
  checks.add("det = h^r (Leibniz oracle)", poly_det_leibniz(m) == h.pow(r));
  const ConstMatrix at_e = evaluate(m, e);
  checks.add("positive definite at e = (" + to_string(e) + ")", is_positive_definite(at_e));

  const DetRepReport report = verify_pencil(m, h, r, e);
  checks.add("verify_pencil passes with c = 1", report.ok && report.scalar == 1);

  const MultiPoly real_h = h.embed(with_gaussian(h.ring(), false));
  try {
    const auto cert = certify_from_pencil(h, r, e, m, false);
    SamplingOptions sampling;
    sampling.samples = 200;
    const auto verdict = is_hyperbolic_sampled(real_h, e, sampling);
    checks.add("certified pencil; sampled hyperbolicity finds no counterexample",
               verdict.status == VerdictStatus::no_counterexample,
               std::to_string(verdict.samples_run) + " lines");
  } catch (const CertificationError& err) {
    checks.add("certified pencil; sampled hyperbolicity finds no counterexample", false, err.what());
  }

  if (with_interlacer) {
    const MultiPoly g = read_single_poly(dir / field(spec, "interlacer")).embed(real_h.ring());
    SamplingOptions sampling;
    sampling.samples = 200;
    const auto verdict = interlaces_sampled(g, real_h, e, sampling);
    checks.add("g = " + to_string(g) + " interlaces h (sampled)", verdict.status == VerdictStatus::no_counterexample,
               std::to_string(verdict.samples_run) + " lines");
  }
}

void companion_fixture(const fs::path& dir, const Json& spec, Checks& checks) {
  // The file holds y*I - A; recover A.
  const PolyMatrix printed = read_matrix_file(dir / field(spec, "matrix"));
  const RingPtr& ring = printed.ring;
  const auto y_index = ring->index_of("y");
  if (!y_index) throw ParseError("companion matrix ring has no variable y");
  const MultiPoly y = MultiPoly::variable(ring, *y_index);
  PolyMatrix a = printed;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < a.size(); ++j) a.entries(i, j) = -printed.entries(i, j);
    a.entries(i, i) += y;
  }
  bool y_free = true;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < a.size(); ++j) {
      const MultiPoly& entry = a.entries(i, j);
      y_free = y_free && entry.degree_in(*y_index) == 0 &&
               (entry.is_zero() || entry.homogeneous_degree() == ring->weights()[*y_index]);
    }
  }
  checks.add("A has y-free entries of degree deg(y)", y_free);
  checks.add("A is " + to_string(a.kind),
             a.kind != MatrixKind::none && !find_kind_violation<MultiPoly>(a.entries, a.kind));

  const MultiPoly p = read_single_poly(dir / field(spec, "poly")).embed(ring);
  const auto sq = square_scalar(a.entries);
  checks.add("A^2 = p*I", sq && *sq == p);

  const SosDecomposition sos = detrep_to_sos(a, p);
  MultiPoly sum(ring);
  for (const auto& g : sos.squares) sum += g * g;
  checks.add("sum of extracted squares = p", sum == p, std::to_string(sos.squares.size()) + " squares");

  const PolyFile expected = read_poly_file(dir / field(spec, "squares"));
  std::multiset<std::string> want;
  std::multiset<std::string> got;
  for (const auto& g : expected.polys) want.insert(to_string(g.embed(ring)));
  for (const auto& g : sos.squares) got.insert(to_string(g));
  checks.add("extracted squares match the three-square identity", want == got);
  checks.add("p is not a square", !sos.p_is_square);

  const MultiPoly h = y * y - p;
  const auto report = verify_companion(a, h, spec.at("power").get<unsigned>());
  checks.add("det(y*I - A) = y^2 - p", report.ok, report.determinant_method);
}

void plucker_fixture(const fs::path& dir, const Json& spec, Checks& checks) {
  const PolyMatrix m = read_matrix_file(dir / field(spec, "matrix"));
  const auto names = plucker_variable_names();
  checks.add("ring uses Plucker coordinates x01..x34", m.ring->variables() == names);
  checks.add("matrix is hermitian",
             m.kind == MatrixKind::hermitian && !find_kind_violation<MultiPoly>(m.entries, m.kind));

  const auto& base = spec.at("base_line");
  const auto coords_e = plucker_line(parse_point(base.at(0).get<std::string>()), parse_point(base.at(1).get<std::string>()));
  const ConstMatrix at_e = evaluate(m, Point(coords_e.begin(), coords_e.end()));
  const GaussianRational scale(Rational(spec.at("expected_at_base_line").get<long>()));
  const DenseMatrix<GaussianRational> expected =
      DenseMatrix<GaussianRational>::Identity(m.size(), m.size()) * scale;
  checks.add("M(E) = " + to_string(scale) + "*I", at_e.entries == expected);
  checks.add("M(E) positive definite", is_positive_definite(at_e));

  const PolyFile surface = read_poly_file(dir / field(spec, "surface"));
  const Point p = parse_point(field(spec, "point_on_surface"));
  bool on_surface = !surface.polys.empty();
  for (const auto& q : surface.polys) on_surface = on_surface && q.evaluate(to_gaussian(p)).is_zero();
  checks.add("(" + to_string(p) + ") lies on X", on_surface);

  const auto wanted = spec.at("incident_lines").get<std::size_t>();
  const long box = spec.at("line_box").get<long>();
  std::uint64_t state = 0xF4;
  std::size_t tested = 0;
  std::size_t vanished = 0;
  bool relations = true;
  while (tested < wanted) {
    const Point q = random_point(state, 5, box);
    std::array<Rational, 10> coords;
    try {
      coords = plucker_line(p, q);
    } catch (const DomainError&) {
      continue;  // q proportional to p
    }
    ++tested;
    relations = relations && satisfies_plucker_relations(coords);
    const ConstMatrix at_line = evaluate(m, Point(coords.begin(), coords.end()));
    if (bareiss_det<GaussianRational>(at_line.entries).is_zero()) ++vanished;
  }
  checks.add("sampled lines satisfy the Plucker relations", relations);
  checks.add("det vanishes on " + std::to_string(tested) + " lines through the point", vanished == tested,
             std::to_string(vanished) + "/" + std::to_string(tested));

  // A line missing X (even over C): x0^2 + x1^2 = x0^2 + 4 x1^2 = 0 forces x0 = x1 = 0.
  const auto coords_off = plucker_line(parse_point("1,0,0,0,0"), parse_point("0,1,0,0,0"));
  const GaussianRational off = bareiss_det<GaussianRational>(evaluate(m, Point(coords_off.begin(), coords_off.end())).entries);
  checks.add("det is nonzero on a line missing X", !off.is_zero(), "det = " + to_string(off));
}

void sampling_fixture(const fs::path& dir, const Json& spec, const std::optional<SamplingOptions>& override_,
                      Checks& checks) {
  const SamplingOptions options = sampling_from(spec, override_);
  const MultiPoly h = read_single_poly(dir / field(spec, "poly"));
  const Point e = parse_point(field(spec, "direction"));
  const auto verdict = is_hyperbolic_sampled(h, e, options);
  checks.add("e3 has no counterexample on " + std::to_string(options.samples) + " lines",
             verdict.status == VerdictStatus::no_counterexample && verdict.samples_run == options.samples,
             "seed " + std::to_string(options.seed));
  const auto again = is_hyperbolic_sampled(h, e, options);
  checks.add("verdict is seed-deterministic", verdict_to_json(again).dump() == verdict_to_json(verdict).dump());

  const MultiPoly g = h.derivative(0);
  SamplingOptions fewer = options;
  fewer.samples = std::min<std::size_t>(options.samples, 200);
  const auto interlacer = interlaces_sampled(g, h, e, fewer);
  checks.add("d/dx0 e3 interlaces e3 (sampled)", interlacer.status == VerdictStatus::no_counterexample);

  const MultiPoly control = read_single_poly(dir / field(spec, "control"));
  const Point ce = parse_point(field(spec, "control_direction"));
  const auto refuted = is_hyperbolic_sampled(control, ce, options);
  const bool has_witness = refuted.status == VerdictStatus::refuted && refuted.witness.has_value();
  checks.add("control " + to_string(control) + " is refuted", has_witness,
             has_witness ? "v = (" + to_string(refuted.witness->v) + "), " + to_string(refuted.witness->restricted)
                         : std::string());
  checks.add("control witness re-verifies (interpolation + Hermite)",
             has_witness && recheck_hyperbolicity_witness(control, ce, *refuted.witness));
}

void quadratic_fixture(const fs::path& dir, const Json& spec, Checks& checks) {
  for (const auto& item : spec.at("cases")) {
    const MultiPoly h = read_single_poly(dir / field(item, "poly"));
    const Point e = parse_point(field(item, "direction"));
    const std::string label = "[" + to_string(h) + "] ";
    QuadraticDetRep rep;
    try {
      rep = quadratic_detrep(h, e);
    } catch (const PipelineError& err) {
      checks.add(label + "pipeline succeeds", false, err.what());
      continue;
    }
    const auto size = item.at("size").get<Index>();
    const auto r = item.at("power").get<unsigned>();
    const Rational c = parse_rational(field(item, "scalar"));
    checks.add(label + "symmetric " + std::to_string(size) + "x" + std::to_string(size) + " pencil",
               rep.pencil.size() == size && rep.pencil.kind == MatrixKind::symmetric &&
                   !find_kind_violation<MultiPoly>(rep.pencil.entries, MatrixKind::symmetric));
    checks.add(label + "r = " + std::to_string(r) + ", c = " + to_string(c), rep.power == r && rep.scalar == c);
    checks.add(label + "positive definite at e", is_positive_definite(evaluate(rep.pencil, e)));

    const MultiPoly target = h.pow(r).scaled(c);
    const std::string method = field(item, "method");
    if (method == "bareiss") {
      checks.add(label + "det = c*h^r (direct Bareiss)", poly_det(rep.pencil) == target);
    } else {
      checks.add(label + "det = c*h^r (" + rep.report.determinant_method + ")",
                 rep.report.ok && rep.report.determinant_method == method);
      std::uint64_t state = 0xF6;
      bool agree = true;
      for (int k = 0; k < 5; ++k) {
        const Point x = random_point(state, e.size(), 6);
        const GaussianRational lhs = bareiss_det<GaussianRational>(evaluate(rep.pencil, x).entries);
        agree = agree && lhs == GaussianRational(c) * power(h.evaluate(to_gaussian(x)), r);
      }
      checks.add(label + "det agrees with c*h^r at 5 integer points", agree);
    }
    try {
      certify_from_pencil(h, rep.power, e, rep.pencil, true);
      checks.add(label + "certify_from_pencil accepts", true);
    } catch (const CertificationError& err) {
      checks.add(label + "certify_from_pencil accepts", false, err.what());
    }
  }
}

}  // namespace

bool FixtureResult::passed() const {
  return error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

fs::path default_fixture_dir() {
  if (const char* env = std::getenv("HYPCERT_FIXTURES"); env != nullptr && *env != '\0') return env;
  return HYPCERT_FIXTURE_DIR;
}

std::vector<std::string> fixture_ids() { return {"F1", "F2", "F3", "F4", "F5", "F6"}; }

FixtureResult run_fixture(const std::string& id, const fs::path& dir, const std::optional<SamplingOptions>& sampling) {
  FixtureResult result;
  result.id = id;
  Checks checks(result);
  const auto start = std::chrono::steady_clock::now();
  try {
    const fs::path fixture_dir = dir / id;
    const Json spec = read_json_file(fixture_dir / "fixture.json");
    result.title = spec.value("title", "");
    if (id == "F1") {
      pencil_fixture(fixture_dir, spec, checks, false);
    } else if (id == "F2") {
      pencil_fixture(fixture_dir, spec, checks, true);
    } else if (id == "F3") {
      companion_fixture(fixture_dir, spec, checks);
    } else if (id == "F4") {
      plucker_fixture(fixture_dir, spec, checks);
    } else if (id == "F5") {
      sampling_fixture(fixture_dir, spec, sampling, checks);
    } else if (id == "F6") {
      quadratic_fixture(fixture_dir, spec, checks);
    } else {
      throw DomainError("unknown fixture id '" + id + "'");
    }
  } catch (const std::exception& err) {
    result.error = err.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<FixtureResult> run_fixtures(const std::string& filter, const fs::path& dir,
                                        const std::optional<SamplingOptions>& sampling) {
  const auto ids = fixture_ids();
  if (!filter.empty() && std::find(ids.begin(), ids.end(), filter) == ids.end()) {
    throw DomainError("unknown fixture id '" + filter + "'");
  }
  std::vector<FixtureResult> out;
  for (const auto& id : ids) {
    if (filter.empty() || filter == id) out.push_back(run_fixture(id, dir, sampling));
  }
  return out;
}

Json fixture_results_to_json(const std::vector<FixtureResult>& results) {
  Json fixtures = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json item{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(std::move(item));
    }
    Json entry{{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", checks}};
    if (!r.error.empty()) entry["error"] = r.error;
    fixtures.push_back(std::move(entry));
    if (r.passed()) ++passed;
  }
  return Json{{"passed", passed}, {"total", results.size()}, {"fixtures", fixtures}};
}

}  // namespace hypcert
