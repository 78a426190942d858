#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPCERT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cli(const std::string& name) { return std::string(HYPCERT_DATA) + "/cli/" + name; }
std::string fx(const std::string& name) { return std::string(HYPCERT_DATA) + "/fixtures/" + name; }

}  // namespace

TEST_CASE("check-hyperbolic: exit codes and JSON") {
  const Run ok = run("check-hyperbolic --poly " + cli("q.txt") + " --dir 1,0,0 --json");
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "no-counterexample");
  CHECK(j["samples"] == 500);

  const Run bad = run("check-hyperbolic --poly " + cli("sphere.txt") + " --dir 1,0,0 --json --seed 3");
  CHECK(bad.code == 1);
  const auto w = nlohmann::json::parse(bad.out);
  CHECK(w["status"] == "refuted");
  CHECK(w["seed"] == 3);
  CHECK(w["witness"]["v"].size() == 3);

  // Same seed, same bytes.
  CHECK(run("check-hyperbolic --poly " + cli("sphere.txt") + " --dir 1,0,0 --json --seed 3").out == bad.out);

  CHECK(run("check-hyperbolic --poly " + cli("q.txt") + " --dir 1,1,0").code == 64);
  CHECK(run("check-hyperbolic --poly " + cli("nothing.txt") + " --dir 1,0,0").code == 64);
  CHECK(run("check-hyperbolic --poly " + cli("q.txt")).code == 64);
  CHECK(run("no-such-command").code == 64);
}

TEST_CASE("check-interlacer") {
  CHECK(run("check-interlacer --poly " + fx("F2/h.txt") + " --interlacer " + fx("F2/interlacer.txt") +
            " --dir 1,0,0,0 --samples 100")
            .code == 0);
  CHECK(run("check-interlacer --poly " + fx("F2/h.txt") + " --interlacer " + fx("F2/h.txt") + " --dir 1,0,0,0").code ==
        64);
}

TEST_CASE("verify-detrep: pencil and companion forms") {
  CHECK(run("verify-detrep --matrix " + fx("F1/matrix.json") + " --poly " + fx("F1/h.txt") + " --dir 1,0,0,0").code ==
        0);
  const Run off = run("verify-detrep --matrix " + fx("F1/matrix.json") + " --poly " + fx("F1/h.txt") +
                      " --dir 0,1,0,0 --json");
  CHECK(off.code == 1);
  CHECK(nlohmann::json::parse(off.out)["failures"][0]["check"] == "definite");
  CHECK(run("verify-detrep --matrix " + cli("cubic_surface.json") + " --poly " + cli("cubic_surface_h.txt") +
            " --dir 1,0,0,0")
            .code == 0);
  CHECK(run("verify-detrep --matrix " + fx("F1/matrix.json") + " --poly " + fx("F1/h.txt")).code == 64);
  CHECK(run("verify-detrep --matrix " + fx("F1/matrix.json") + " --poly " + fx("F1/h.txt") +
            " --dir 1,0,0,0 --power 2")
            .code == 64);
  CHECK(run("verify-detrep --pencil --companion --matrix " + fx("F1/matrix.json") + " --poly " + fx("F1/h.txt")).code ==
        64);
}

TEST_CASE("sos-to-detrep and detrep-to-sos") {
  const Run sos = run("sos-to-detrep --squares " + cli("disk_squares.txt") + " --json");
  CHECK(sos.code == 0);
  const auto j = nlohmann::json::parse(sos.out);
  CHECK(j["report"]["ok"] == true);
  const Run back = run("detrep-to-sos --matrix " + fx("F1/matrix.json") + " --poly " + fx("F1/h.txt"));
  CHECK(back.code == 1);  // A^2 != p I for this matrix
}

TEST_CASE("quadratic-detrep") {
  const Run ok = run("quadratic-detrep --poly " + cli("q.txt") + " --dir 1,0,0 --json");
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["r"] == 4);
  CHECK(j["c"] == "256");
  const Run bad = run("quadratic-detrep --poly " + cli("sphere.txt") + " --dir 1,0,0 --json");
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["stage"] == "rational_sos_quadratic");
  CHECK(run("quadratic-detrep --poly " + cli("q.txt") + " --dir 1,1,0").code == 64);
}

TEST_CASE("fixtures run") {
  const Run all = run("fixtures run");
  CHECK(all.code == 0);
  CHECK(all.out.find("6/6 fixtures pass") != std::string::npos);
  const Run one = run("fixtures run --id F1 --json");
  CHECK(one.code == 0);
  CHECK(one.out == run("fixtures run --id F1 --json").out);
  CHECK(run("fixtures run --id F9").code == 64);
}
