// hypcert: command-line front end for the certificate library.
//
// Exit codes: 0 verified/constructed, 1 refuted/failed (witness in the report),
// 64 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "hypcert/fixtures.hpp"

using namespace hypcert;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 64;

struct Globals {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  long box = 50;
  bool json = false;
};

SamplingOptions sampling(const Globals& g) { return {g.samples, g.seed, g.box}; }

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string verdict_text(const SampledVerdict& v) {
  std::string out = to_string(v.status) + " (" + std::to_string(v.samples_run) + " lines, seed " +
                    std::to_string(v.seed) + ", box " + std::to_string(v.box) + ")\n";
  if (v.witness) {
    const auto& w = *v.witness;
    out += "  witness v = (" + to_string(w.v) + ")\n";
    out += "  h(te - v) = " + to_string(w.restricted) + "\n";
    if (w.restricted_interlacer) out += "  g(te - v) = " + to_string(*w.restricted_interlacer) + "\n";
    out += "  reason: " + w.reason + "\n";
  }
  return out;
}

std::string report_text(const DetRepReport& r) {
  std::string out = std::string(r.ok ? "verified" : "FAILED") + ": det = c * h^" + std::to_string(r.power) +
                    " with c = " + to_string(r.scalar) + " (" + r.determinant_method + ")\n";
  for (const auto& f : r.failures) {
    out += "  failed " + f.check + ": " + f.detail + "\n";
    if (f.point) out += "    at (" + to_string(*f.point) + ")\n";
    if (f.definiteness) out += "    v* M v = " + to_string(f.definiteness->value) + "\n";
    if (f.difference) out += "    difference: " + to_string(*f.difference) + "\n";
  }
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  return out;
}

int check_hyperbolic(const Globals& g, const std::string& poly, const std::string& dir) {
  const MultiPoly h = read_single_poly(poly);
  const auto verdict = is_hyperbolic_sampled(h, parse_point(dir), sampling(g));
  emit(g, verdict_to_json(verdict), verdict_text(verdict));
  return verdict.status == VerdictStatus::refuted ? kRefuted : kOk;
}

int check_interlacer(const Globals& g, const std::string& poly, const std::string& interlacer,
                     const std::string& dir) {
  const MultiPoly h = read_single_poly(poly);
  const MultiPoly q = read_single_poly(interlacer).embed(h.ring());
  const auto verdict = interlaces_sampled(q, h, parse_point(dir), sampling(g));
  emit(g, verdict_to_json(verdict), verdict_text(verdict));
  return verdict.status == VerdictStatus::refuted ? kRefuted : kOk;
}

struct VerifyArgs {
  std::string matrix;
  std::string poly;
  unsigned power = 1;
  std::string dir;
  bool companion = false;
  bool up_to_scalar = false;
  std::string y = "y";
};

int verify_detrep(const Globals& g, const VerifyArgs& a) {
  const MultiPoly h = read_single_poly(a.poly);
  VerifyOptions options;
  options.up_to_scalar = a.up_to_scalar;
  DetRepReport report;
  if (a.companion) {
    const PolyMatrix m = read_matrix_file(a.matrix);
    report = verify_companion(m, h, a.power, a.y, options);
  } else {
    if (a.dir.empty()) throw DomainError("--dir is required in pencil mode");
    const Json j = read_json_file(a.matrix);
    if (j.contains("matrices")) {
      auto [ring, pencil] = pencil_from_json(j);
      report = verify_pencil(pencil, h.embed(with_gaussian(h.ring(), h.ring()->gaussian() || ring->gaussian())),
                             a.power, parse_point(a.dir), options);
    } else {
      report = verify_pencil(matrix_from_json(j), h, a.power, parse_point(a.dir), options);
    }
  }
  emit(g, report_to_json(report), report_text(report));
  return report.ok ? kOk : kRefuted;
}

int detrep_to_sos_cmd(const Globals& g, const std::string& matrix, const std::string& poly, Index column) {
  const PolyMatrix a = read_matrix_file(matrix);
  const MultiPoly p = read_single_poly(poly);
  try {
    const auto sos = detrep_to_sos(a, p, column);
    std::string text = "p = " + to_string(sos.p) + "\n";
    for (const auto& s : sos.squares) text += "  + (" + to_string(s) + ")^2\n";
    text += "square bound " + std::to_string(sos.square_bound) + (sos.p_is_square ? "; p is a square\n" : "\n");
    emit(g, sos_to_json(sos), text);
    return kOk;
  } catch (const SquareIdentityError& err) {
    Json j{{"ok", false},
           {"error", err.what()},
           {"entry", {err.entry.row, err.entry.col}},
           {"difference", to_string(err.difference)}};
    emit(g, j, std::string("FAILED: ") + err.what() + "\n  (A^2 - p*I) entry = " + to_string(err.difference) + "\n");
    return kRefuted;
  }
}

int sos_to_detrep_cmd(const Globals& g, const std::string& squares) {
  const PolyFile file = read_poly_file(squares);
  if (file.polys.empty()) throw ParseError(squares + ": no polynomials");
  const auto rep = sos_to_detrep(file.polys, true);
  emit(g, clifford_to_json(rep),
       "Q: " + std::to_string(rep.q.size()) + "x" + std::to_string(rep.q.size()) + " symmetric, h = " +
           to_string(rep.h) + ", r = " + std::to_string(rep.power) + "\n" + report_text(rep.report));
  return rep.report.ok ? kOk : kRefuted;
}

int quadratic_detrep_cmd(const Globals& g, const std::string& poly, const std::string& dir) {
  const MultiPoly h = read_single_poly(poly);
  try {
    const auto rep = quadratic_detrep(h, parse_point(dir));
    emit(g, quadratic_to_json(rep),
         "pencil: " + std::to_string(rep.pencil.size()) + "x" + std::to_string(rep.pencil.size()) +
             " symmetric, r = " + std::to_string(rep.power) + ", c = " + to_string(rep.scalar) + "\n" +
             report_text(rep.report));
    return kOk;
  } catch (const PipelineError& err) {
    if (err.stage == "normalize_at_direction") throw;
    Json j{{"ok", false}, {"stage", err.stage}, {"error", err.what()}};
    if (err.witness) {
      Json v = Json::array();
      for (const auto& x : *err.witness) v.push_back(to_string(x));
      j["witness"] = v;
    }
    if (err.report) j["report"] = report_to_json(*err.report);
    emit(g, j, std::string("FAILED at ") + err.what() + "\n" +
                   (err.witness ? "  witness (" + to_string(*err.witness) + ")\n" : std::string()));
    return kRefuted;
  }
}

int fixtures_cmd(const Globals& g, bool sampling_overridden, const std::string& id, const std::string& data) {
  const auto dir = data.empty() ? default_fixture_dir() : std::filesystem::path(data);
  std::optional<SamplingOptions> override_;
  if (sampling_overridden) override_ = sampling(g);
  const auto results = run_fixtures(id, dir, override_);
  std::string text;
  std::size_t passed = 0;
  double total = 0;
  for (const auto& r : results) {
    text += std::string(r.passed() ? "PASS " : "FAIL ") + r.id + "  " + r.title + "  (" +
            std::to_string(r.seconds) + " s)\n";
    for (const auto& c : r.checks) {
      text += std::string("    [") + (c.passed ? "ok" : "FAIL") + "] " + c.name;
      if (!c.detail.empty()) text += "  -- " + c.detail;
      text += "\n";
    }
    if (!r.error.empty()) text += "    error: " + r.error + "\n";
    passed += r.passed() ? 1 : 0;
    total += r.seconds;
  }
  text += std::to_string(passed) + "/" + std::to_string(results.size()) + " fixtures pass (" + std::to_string(total) +
          " s)\n";
  emit(g, fixture_results_to_json(results), text);
  return passed == results.size() ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for hyperbolic polynomials, determinantal representations and sums of squares"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Sampling seed")->capture_default_str();
  auto* samples_opt = app.add_option("--samples", g.samples, "Number of sampled lines")->capture_default_str();
  auto* box_opt = app.add_option("--box", g.box, "Sampled offsets lie in [-box, box]^n")->capture_default_str();
  app.add_flag("--json", g.json, "Emit JSON");

  std::string poly;
  std::string dir;
  auto* hyp = app.add_subcommand("check-hyperbolic", "Sampled hyperbolicity test with exact refutations");
  hyp->add_option("--poly", poly, "Polynomial file")->required();
  hyp->add_option("--dir", dir, "Direction e, e.g. 1,0,0")->required();

  std::string interlacer;
  auto* inter = app.add_subcommand("check-interlacer", "Sampled interlacer test");
  inter->add_option("--poly", poly, "Polynomial file with h")->required();
  inter->add_option("--interlacer", interlacer, "Polynomial file with g")->required();
  inter->add_option("--dir", dir, "Direction e")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-detrep", "Verify a determinantal representation");
  verify->add_option("--matrix", va.matrix, "Matrix JSON (or pencil JSON)")->required();
  verify->add_option("--poly", va.poly, "Polynomial file with h")->required();
  verify->add_option("--power", va.power, "Power r")->capture_default_str();
  verify->add_option("--dir", va.dir, "Direction e (pencil form)");
  auto* pencil_flag = verify->add_flag("--pencil", "Pencil form h^r = det(sum x_i A_i) (default)");
  verify->add_flag("--companion", va.companion, "Companion form h^r = det(y*I - A)")->excludes(pencil_flag);
  verify->add_flag("--up-to-scalar", va.up_to_scalar, "Accept det = c * h^r with c > 0");
  verify->add_option("--y", va.y, "Name of the companion variable")->capture_default_str();

  std::string matrix;
  Index column = 0;
  auto* to_sos = app.add_subcommand("detrep-to-sos", "Read an SOS off a matrix with A^2 = p*I");
  to_sos->add_option("--matrix", matrix, "Matrix JSON")->required();
  to_sos->add_option("--poly", poly, "Polynomial file with p")->required();
  to_sos->add_option("--column", column, "Column index")->capture_default_str();

  std::string squares;
  auto* from_sos = app.add_subcommand("sos-to-detrep", "Clifford construction from squares");
  from_sos->add_option("--squares", squares, "Polynomial file, one square root per line")->required();

  auto* quad = app.add_subcommand("quadratic-detrep", "Definite representation of a power of a quadratic");
  quad->add_option("--poly", poly, "Polynomial file")->required();
  quad->add_option("--dir", dir, "Direction e")->required();

  std::string id;
  std::string data;
  auto* fixtures = app.add_subcommand("fixtures", "Worked examples");
  fixtures->require_subcommand(1);
  auto* run = fixtures->add_subcommand("run", "Run fixtures");
  run->add_option("--id", id, "Fixture id (F1..F6)");
  run->add_option("--data", data, "Fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hyp) return check_hyperbolic(g, poly, dir);
    if (*inter) return check_interlacer(g, poly, interlacer, dir);
    if (*verify) return verify_detrep(g, va);
    if (*to_sos) return detrep_to_sos_cmd(g, matrix, poly, column);
    if (*from_sos) return sos_to_detrep_cmd(g, squares);
    if (*quad) return quadratic_detrep_cmd(g, poly, dir);
    if (*run) {
      const bool overridden = seed_opt->count() + samples_opt->count() + box_opt->count() > 0;
      return fixtures_cmd(g, overridden, id, data);
    }
  } catch (const Error& err) {
    std::cerr << "hypcert: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
