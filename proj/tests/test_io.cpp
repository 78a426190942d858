#include <doctest.h>

#include "support.hpp"

using namespace hypcert;
using namespace hypcert::testing;

TEST_CASE("poly files: header, comments and round trip") {
  const PolyFile pf = parse_poly_file("# comment\nring: vars=a,b weights=2,1 gaussian=true\n\na^2 - i*b^4\n# more\nb^2\n");
  REQUIRE(pf.polys.size() == 2);
  CHECK(pf.ring->weights() == std::vector<unsigned>{2, 1});
  CHECK(pf.ring->gaussian());
  const PolyFile again = parse_poly_file(format_poly_file(pf.ring, pf.polys));
  CHECK(*again.ring == *pf.ring);
  REQUIRE(again.polys.size() == 2);
  CHECK(again.polys[0] == pf.polys[0].embed(again.ring));
  CHECK(parse_ring_header("ring: vars=x0,x1")->all_weights_one());
  CHECK(ring_header(standard_ring(2)) == "ring: vars=x0,x1 weights=1,1 gaussian=false");

  CHECK_THROWS_AS(parse_poly_file("x0 + 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poly_file("ring: vars=x0,x0\nx0\n"), Error);
  CHECK_THROWS_AS(parse_poly_file("ring: vars=x0 weights=1,1\nx0\n"), Error);
  CHECK_THROWS_AS(read_single_poly(fixture_dir() / "F3" / "squares.txt"), Error);
  CHECK_THROWS_AS(read_text_file(fixture_dir() / "missing.txt"), ParseError);
}

TEST_CASE("matrix and pencil JSON round trip") {
  Rng rng(81);
  const auto r = make_ring({"y", "u", "v"}, {2, 1, 1}, true);
  for (int k = 0; k < 30; ++k) {
    PolyMatrix m = random_poly_matrix(rng, r, static_cast<Index>(uniform(rng, 1, 4)), true);
    const PolyMatrix back = matrix_from_json(Json::parse(matrix_to_json(m).dump()));
    REQUIRE(*back.ring == *r);
    REQUIRE(back.kind == m.kind);
    REQUIRE(back.entries == m.entries);
  }
  const PolyMatrix f1 = read_matrix_file(fixture_dir() / "F1" / "matrix.json");
  const auto coeffs = pencil_coefficients(f1);
  const auto [ring, pencil] = pencil_from_json(pencil_to_json(coeffs, f1.ring));
  CHECK(ring->variables() == f1.ring->variables());
  REQUIRE(pencil.size() == coeffs.size());
  for (std::size_t k = 0; k < pencil.size(); ++k) CHECK(pencil[k].entries == coeffs[k].entries);

  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"ring": {"vars": ["x"]}, "kind": "odd", "entries": [["x"]]})")),
                  Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"ring": {"vars": ["x"]}, "kind": "symmetric", "entries": [["x", "1"]]})")),
                  Error);
}

TEST_CASE("verdict and report JSON carry exact witnesses") {
  const auto r = standard_ring(3);
  const MultiPoly sphere = poly("x0^2 + x1^2 + x2^2", r);
  SamplingOptions opts;
  opts.samples = 100;
  const SampledVerdict v = is_hyperbolic_sampled(sphere, parse_point("1,0,0"), opts);
  const Json j = verdict_to_json(v);
  CHECK(j["status"] == "refuted");
  CHECK(j["seed"] == 0);
  Point offset;
  for (const auto& x : j["witness"]["v"]) offset.push_back(parse_rational(x.get<std::string>()));
  CHECK(offset == v.witness->v);
  CHECK(parse_poly_file("ring: vars=t\n" + j["witness"]["restricted_poly"].get<std::string>()).polys.size() == 1);

  const PolyMatrix f1 = read_matrix_file(fixture_dir() / "F1" / "matrix.json");
  const MultiPoly h1 = read_single_poly(fixture_dir() / "F1" / "h.txt");
  const Json rep = report_to_json(verify_pencil(f1, h1, 1, parse_point("0,1,0,0")));
  CHECK(rep["ok"] == false);
  CHECK(rep["failures"][0]["check"] == "definite");
}

TEST_CASE("fixtures: all pass and JSON output is byte-stable") {
  const auto results = run_fixtures("", fixture_dir());
  REQUIRE(results.size() == 6);
  for (const auto& f : results) {
    INFO(f.id << ": " << f.error);
    for (const auto& c : f.checks) {
      INFO(c.name << " " << c.detail);
      CHECK(c.passed);
    }
    CHECK(f.passed());
  }
  const std::string a = fixture_results_to_json(results).dump();
  const std::string b = fixture_results_to_json(run_fixtures("", fixture_dir())).dump();
  CHECK(a == b);
  CHECK_THROWS_AS(run_fixtures("F9", fixture_dir()), DomainError);
  const auto missing = run_fixture("F1", fixture_dir() / "nowhere");
  CHECK_FALSE(missing.passed());
  CHECK_FALSE(missing.error.empty());
}
