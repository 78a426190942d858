#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypcert/clifford.hpp"
#include "hypcert/hyperbolicity.hpp"
#include "hypcert/quadratic.hpp"

namespace hypcert {

using Json = nlohmann::ordered_json;

// Rings: {"vars": [...], "weights": [...], "gaussian": bool}.
Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);

/// `ring: vars=x0,x1 weights=1,1 gaussian=false` (weights and gaussian optional).
RingPtr parse_ring_header(std::string_view line);
std::string ring_header(const RingPtr& ring);

/// Polynomial file: a ring header line, then polynomials. Blank lines and lines
/// starting with '#' are ignored.
struct PolyFile {
  RingPtr ring;
  std::vector<MultiPoly> polys;
};
PolyFile parse_poly_file(std::string_view text);
PolyFile read_poly_file(const std::filesystem::path& path);
/// Exactly one polynomial.
MultiPoly read_single_poly(const std::filesystem::path& path);
std::string format_poly_file(const RingPtr& ring, const std::vector<MultiPoly>& polys);

// Matrix JSON: {"ring": ..., "kind": "...", "entries": [["poly", ...], ...]}.
Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);
PolyMatrix read_matrix_file(const std::filesystem::path& path);

// Pencil JSON: {"vars": [...], "kind": "...", "matrices": [[["a+b*i", ...], ...], ...]}.
Json pencil_to_json(const std::vector<ConstMatrix>& pencil, const RingPtr& ring);
std::pair<RingPtr, std::vector<ConstMatrix>> pencil_from_json(const Json& j);

Json verdict_to_json(const SampledVerdict& verdict);
Json report_to_json(const DetRepReport& report);
Json sos_to_json(const SosDecomposition& sos);
Json quadratic_to_json(const QuadraticDetRep& rep);
Json clifford_to_json(const CliffordDetRep& rep);

Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace hypcert
