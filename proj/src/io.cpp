#include "hypcert/io.hpp"

#include <fstream>
#include <sstream>

namespace hypcert {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream stream{std::string(text)};
  while (std::getline(stream, item, sep)) out.push_back(item);
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("field '") + key + "': " + err.what());
  }
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

Json intervals_to_json(const IsolatingIntervals& roots) {
  Json out = Json::array();
  for (const auto& r : roots.intervals) out.push_back(to_string(r));
  return out;
}

Json const_matrix_to_json(const DenseMatrix<GaussianRational>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json ring_to_json(const RingPtr& ring) {
  return Json{{"vars", ring->variables()}, {"weights", ring->weights()}, {"gaussian", ring->gaussian()}};
}

RingPtr ring_from_json(const Json& j) {
  auto vars = get_field<std::vector<std::string>>(j, "vars");
  std::vector<unsigned> weights;
  if (j.contains("weights")) weights = get_field<std::vector<unsigned>>(j, "weights");
  const bool gaussian = j.contains("gaussian") && get_field<bool>(j, "gaussian");
  try {
    return make_ring(std::move(vars), std::move(weights), gaussian);
  } catch (const DomainError& err) {
    throw ParseError(std::string("ring: ") + err.what());
  }
}

RingPtr parse_ring_header(std::string_view line) {
  std::string text = trim(line);
  if (text.rfind("ring:", 0) != 0) throw ParseError("expected a 'ring:' header line");
  std::vector<std::string> vars;
  std::vector<unsigned> weights;
  bool gaussian = false;
  std::stringstream stream(text.substr(5));
  std::string field;
  while (stream >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("malformed ring header field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "vars") {
      vars = split(value, ',');
    } else if (key == "weights") {
      for (const auto& w : split(value, ',')) {
        try {
          const int parsed = std::stoi(w);
          if (parsed < 1) throw ParseError("weights must be positive");
          weights.push_back(static_cast<unsigned>(parsed));
        } catch (const std::logic_error&) {
          throw ParseError("malformed weight '" + w + "'");
        }
      }
    } else if (key == "gaussian") {
      if (value != "true" && value != "false") throw ParseError("gaussian must be true or false");
      gaussian = value == "true";
    } else {
      throw ParseError("unknown ring header field '" + key + "'");
    }
  }
  if (vars.empty()) throw ParseError("ring header declares no variables");
  try {
    return make_ring(std::move(vars), std::move(weights), gaussian);
  } catch (const DomainError& err) {
    throw ParseError(std::string("ring header: ") + err.what());
  }
}

std::string ring_header(const RingPtr& ring) {
  std::string vars;
  std::string weights;
  for (std::size_t k = 0; k < ring->arity(); ++k) {
    vars += (k ? "," : "") + ring->variables()[k];
    weights += (k ? "," : "") + std::to_string(ring->weights()[k]);
  }
  return "ring: vars=" + vars + " weights=" + weights + " gaussian=" + (ring->gaussian() ? "true" : "false");
}

PolyFile parse_poly_file(std::string_view text) {
  PolyFile out;
  for (const auto& raw : split(text, '\n')) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!out.ring) {
      out.ring = parse_ring_header(line);
      continue;
    }
    out.polys.push_back(parse_poly(line, out.ring));
  }
  if (!out.ring) throw ParseError("polynomial file has no ring header");
  return out;
}

PolyFile read_poly_file(const std::filesystem::path& path) { return parse_poly_file(read_text_file(path)); }

MultiPoly read_single_poly(const std::filesystem::path& path) {
  PolyFile file = read_poly_file(path);
  if (file.polys.size() != 1) {
    throw ParseError(path.string() + ": expected one polynomial, found " + std::to_string(file.polys.size()));
  }
  return file.polys.front();
}

std::string format_poly_file(const RingPtr& ring, const std::vector<MultiPoly>& polys) {
  std::string out = ring_header(ring) + "\n";
  for (const auto& p : polys) out += to_string(p) + "\n";
  return out;
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.size(); ++j) row.push_back(to_string(m.entries(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"ring", ring_to_json(m.ring)}, {"kind", to_string(m.kind)}, {"entries", rows}};
}

PolyMatrix matrix_from_json(const Json& j) {
  const RingPtr ring = ring_from_json(j.contains("ring") ? j.at("ring") : Json());
  const MatrixKind kind = j.contains("kind") ? parse_kind(get_field<std::string>(j, "kind")) : MatrixKind::none;
  const auto rows = get_field<std::vector<std::vector<std::string>>>(j, "entries");
  std::vector<std::vector<MultiPoly>> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ParseError("matrix entries must form a square array");
    std::vector<MultiPoly> parsed;
    for (const auto& text : row) parsed.push_back(parse_poly(text, ring));
    entries.push_back(std::move(parsed));
  }
  if (entries.empty()) throw ParseError("matrix has no entries");
  return make_poly_matrix(ring, entries, kind);
}

PolyMatrix read_matrix_file(const std::filesystem::path& path) { return matrix_from_json(read_json_file(path)); }

Json pencil_to_json(const std::vector<ConstMatrix>& pencil, const RingPtr& ring) {
  Json matrices = Json::array();
  for (const auto& a : pencil) matrices.push_back(const_matrix_to_json(a.entries));
  return Json{{"vars", ring->variables()},
              {"kind", pencil.empty() ? "none" : to_string(pencil.front().kind)},
              {"matrices", matrices}};
}

std::pair<RingPtr, std::vector<ConstMatrix>> pencil_from_json(const Json& j) {
  auto vars = get_field<std::vector<std::string>>(j, "vars");
  const MatrixKind kind = parse_kind(get_field<std::string>(j, "kind"));
  const auto matrices = get_field<std::vector<std::vector<std::vector<std::string>>>>(j, "matrices");
  if (matrices.size() != vars.size()) throw ParseError("pencil needs one matrix per variable");
  std::vector<ConstMatrix> pencil;
  bool gaussian = false;
  for (const auto& rows : matrices) {
    const auto n = static_cast<Index>(rows.size());
    ConstMatrix a{DenseMatrix<GaussianRational>(n, n), kind};
    for (Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<Index>(row.size()) != n) throw ParseError("pencil matrices must be square");
      for (Index k = 0; k < n; ++k) {
        a.entries(i, k) = parse_gaussian(row[static_cast<std::size_t>(k)]);
        gaussian = gaussian || !a.entries(i, k).is_real();
      }
    }
    pencil.push_back(std::move(a));
  }
  return {make_ring(std::move(vars), {}, gaussian || kind == MatrixKind::hermitian), std::move(pencil)};
}

Json verdict_to_json(const SampledVerdict& verdict) {
  Json out{{"status", to_string(verdict.status)},
           {"samples", verdict.samples_run},
           {"seed", verdict.seed},
           {"box", verdict.box}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    Json witness{{"v", point_to_json(w.v)},
                 {"restricted_poly", to_string(w.restricted)},
                 {"reason", w.reason},
                 {"roots", intervals_to_json(w.roots)}};
    if (w.restricted_interlacer) witness["restricted_interlacer"] = to_string(*w.restricted_interlacer);
    if (w.interlacer_roots) witness["interlacer_roots"] = intervals_to_json(*w.interlacer_roots);
    out["witness"] = std::move(witness);
  }
  return out;
}

Json report_to_json(const DetRepReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json item{{"check", f.check}, {"detail", f.detail}};
    if (f.matrix_index) item["matrix_index"] = *f.matrix_index;
    if (f.entry) item["entry"] = {f.entry->row, f.entry->col};
    if (f.definiteness) {
      item["minor"] = f.definiteness->minor;
      Json v = Json::array();
      for (const auto& x : f.definiteness->vector) v.push_back(to_string(x));
      item["vector"] = v;
      item["value"] = to_string(f.definiteness->value);
    }
    if (f.difference) item["difference"] = to_string(*f.difference);
    if (f.point) item["point"] = point_to_json(*f.point);
    failures.push_back(std::move(item));
  }
  return Json{{"ok", report.ok},
              {"scalar", to_string(report.scalar)},
              {"power", report.power},
              {"determinant_method", report.determinant_method},
              {"failures", failures},
              {"notes", report.notes}};
}

Json sos_to_json(const SosDecomposition& sos) {
  Json squares = Json::array();
  for (const auto& g : sos.squares) squares.push_back(to_string(g));
  return Json{{"p", to_string(sos.p)},       {"squares", squares},
              {"kind", to_string(sos.kind)}, {"column", sos.column},
              {"square_bound", sos.square_bound}, {"p_is_square", sos.p_is_square}};
}

Json quadratic_to_json(const QuadraticDetRep& rep) {
  const auto& nf = rep.normal_form;
  Json t = Json::array();
  for (Index i = 0; i < nf.t.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < nf.t.cols(); ++j) row.push_back(to_string(nf.t(i, j)));
    t.push_back(std::move(row));
  }
  Json squares = Json::array();
  for (const auto& g : rep.squares) squares.push_back(to_string(g));
  return Json{{"matrix", matrix_to_json(rep.pencil)},
              {"pencil", pencil_to_json(pencil_coefficients(rep.pencil), rep.pencil.ring)},
              {"r", rep.power},
              {"c", to_string(rep.scalar)},
              {"coordinate_map", t},
              {"negated", nf.negated},
              {"alpha", to_string(nf.alpha)},
              {"q1", to_string(nf.q1)},
              {"q2", to_string(nf.q2)},
              {"p", to_string(nf.p)},
              {"squares", squares},
              {"report", report_to_json(rep.report)}};
}

Json clifford_to_json(const CliffordDetRep& rep) {
  return Json{{"matrix", matrix_to_json(rep.q)},
              {"h", to_string(rep.h)},
              {"p", to_string(rep.p)},
              {"r", rep.power},
              {"p_is_square", rep.p_is_square},
              {"report", report_to_json(rep.report)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(path.string() + ": " + err.what());
  }
}

}  // namespace hypcert
