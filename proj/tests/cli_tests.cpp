#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "cihull/hull.hpp"
#include "cihull/instance.hpp"
#include "cihull/polytope.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("CIHULL_CLI");
  REQUIRE_MESSAGE(p != nullptr, "CIHULL_CLI must point at the binary");
  return p;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + cli_path() + "\" " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("cihull_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

const std::string& square_file() {
  static const std::string path = write_temp("square.json", R"({
    "points": [[0, 0], [1, 0], [0, 1]],
    "intervals": [[-1, 1], [0, 1], [0, 1]]
  })");
  return path;
}

const std::string& empty_file() {
  static const std::string path = write_temp("empty.json", R"({
    "points": [[0, 0], [1, 0], [0, 1]],
    "intervals": [[0.6, 0.7], [0.6, 0.7], [0.6, 0.7]]
  })");
  return path;
}

const std::string& rays_file() {
  static const std::string path = write_temp("rays.json", R"({
    "points": [[0, 0], [1, 0], [0, 1]],
    "intervals": [["-inf", 0], [0, "inf"], [0, 1]]
  })");
  return path;
}

const std::string& loose_file() {
  static const std::string path = write_temp("loose.json", R"({
    "points": [[0, 0], [1, 0], [0, 1]],
    "intervals": [[0, 3], [0, 2], [0, 5]]
  })");
  return path;
}

const std::string& hexagon_file() {
  static const std::string path = write_temp("hexagon.json", R"({
    "points": [[-1, 0], [1, 0], [0, 1.7320508075688772]],
    "intervals": [[0, 0.6666666666666666], [0, 0.6666666666666666],
                  [0, 0.6666666666666666]]
  })");
  return path;
}

const std::string& box_file() {
  static const std::string path = write_temp("box.json", R"({
    "points": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "intervals": [[-2, 1], [0, 1], [0, 1], [0, 1]]
  })");
  return path;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

TEST_CASE("check reports feasibility and boundedness") {
  const RunResult ok = run_cli("check " + quoted(square_file()));
  CHECK(ok.exit_code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["nonempty"] == true);
  CHECK(j["bounded"] == true);
  CHECK(j["witness"].is_array());
  CHECK(j["witness"].size() == 3);
  CHECK(j["unbounded_direction"].is_null());

  const RunResult empty = run_cli("check " + quoted(empty_file()));
  CHECK(empty.exit_code == 1);
  const json je = json::parse(empty.out);
  CHECK(je["nonempty"] == false);
  CHECK(je["witness"].is_null());

  const RunResult rays = run_cli("check " + quoted(rays_file()));
  CHECK(rays.exit_code == 1);
  const json jr = json::parse(rays.out);
  CHECK(jr["nonempty"] == true);
  CHECK(jr["bounded"] == false);
  CHECK(jr["unbounded_direction"] == json::array({0, 1}));
}

TEST_CASE("hull emits vertices and bound metadata") {
  const RunResult res = run_cli("hull " + quoted(square_file()));
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["count"] == 4);
  CHECK(j["dim"] == 2);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["bounds"]["thm41"] == 6);
  CHECK(j["bounds"]["thm43_if_wide"].is_null());

  // Two runs emit identical bytes.
  CHECK(res.out == run_cli("hull " + quoted(square_file())).out);
}

TEST_CASE("hull flags the wide bound when it applies") {
  const RunResult res = run_cli("hull " + quoted(hexagon_file()));
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["count"] == 6);
  CHECK(j["bounds"]["thm43_if_wide"] == 6);
}

TEST_CASE("hull reports empty and unbounded inputs without crashing") {
  const RunResult empty = run_cli("hull " + quoted(empty_file()));
  CHECK(empty.exit_code == 1);
  const json je = json::parse(empty.out);
  CHECK(je["count"] == 0);
  CHECK(je["vertices"].empty());

  const RunResult rays = run_cli("hull " + quoted(rays_file()));
  CHECK(rays.exit_code == 1);
  const json jr = json::parse(rays.out);
  CHECK(jr.contains("error"));
  CHECK(jr["unbounded_direction"] == json::array({0, 1}));
}

TEST_CASE("hull respects the enumeration cap") {
  const RunResult res = run_cli("hull --edge-cap 2 " + quoted(square_file()));
  CHECK(res.exit_code == 1);
  CHECK(json::parse(res.out).contains("error"));
}

TEST_CASE("reduce clips the family and labels it") {
  const RunResult res = run_cli("reduce " + quoted(loose_file()));
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  const json unit = json::array({0.0, 1.0});
  CHECK(j["intervals"] == json::array({unit, unit, unit}));
  CHECK(j["irreducible"] == true);
  CHECK(j["wide"] == true);
  CHECK(j["minimality"] == "minimal");
}

TEST_CASE("transform applies a homothety") {
  const RunResult res =
      run_cli("transform --homothety 1,1,2 " + quoted(square_file()));
  CHECK(res.exit_code == 0);
  const cihull::Instance img = cihull::parse_instance(res.out);
  const cihull::VPolytope vp = cihull::interval_hull(img);
  const cihull::VPolytope expect = cihull::extract_vertices(
      {{1.0, 1.0}, {3.0, 1.0}, {1.0, 3.0}, {3.0, 3.0}});
  CHECK(cihull::vertex_sets_match(vp, expect, 1e-9));
}

TEST_CASE("transform applies an affine map") {
  const RunResult res =
      run_cli("transform --affine 1,0 " + quoted(square_file()));
  CHECK(res.exit_code == 0);
  const cihull::Instance img = cihull::parse_instance(res.out);
  REQUIRE(img.size() == 2);
  CHECK(img.family[0] == cihull::Interval(-1.0, 2.0));
  CHECK(img.family[1] == cihull::Interval(0.0, 1.0));
}

TEST_CASE("transform wants exactly one map") {
  CHECK(run_cli("transform " + quoted(square_file())).exit_code == 2);
  CHECK(run_cli("transform --homothety 1,1,2 --affine 1,0 " +
                quoted(square_file()))
            .exit_code == 2);
}

TEST_CASE("decompose prints the nested homothets") {
  const RunResult res = run_cli("decompose " + quoted(hexagon_file()));
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(std::abs(j["outer"]["ratio"].get<double>() - 1.0) < 1e-12);
  CHECK(std::abs(j["outer"]["center"][0].get<double>()) < 1e-12);
  REQUIRE(j["inner"].size() == 3);
  for (const json& h : j["inner"]) {
    CHECK(h["empty"] == false);
    CHECK(std::abs(h["ratio"].get<double>() - 1.0 / 3.0) < 1e-12);
  }

  const RunResult bad = run_cli("decompose " + quoted(loose_file()));
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.out).contains("error"));
}

TEST_CASE("compare cross checks the pipeline") {
  const RunResult res = run_cli("compare " + quoted(square_file()));
  CHECK(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["pass"] == true);
  CHECK(j["samples_outside"] == 0);
  CHECK(j["vertices_infeasible"] == 0);

  const RunResult sampled = run_cli("compare --samples 50 --seed 3 " +
                                    quoted(square_file()));
  CHECK(sampled.exit_code == 0);
  const json js = json::parse(sampled.out);
  CHECK(js["pass"] == true);
  CHECK(js["samples_checked"].get<std::size_t>() >=
        j["samples_checked"].get<std::size_t>() + 50);
}

TEST_CASE("render writes svg and obj files") {
  const fs::path svg = fs::temp_directory_path() / "cihull_cli_out.svg";
  const RunResult rs = run_cli("render --format svg --out " +
                               quoted(svg.string()) + " " +
                               quoted(square_file()));
  CHECK(rs.exit_code == 0);
  std::ifstream in(svg);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("<svg", 0) == 0);

  const fs::path obj = fs::temp_directory_path() / "cihull_cli_out.obj";
  const RunResult ro = run_cli("render --format obj --out " +
                               quoted(obj.string()) + " " + quoted(box_file()));
  CHECK(ro.exit_code == 0);
  CHECK(fs::file_size(obj) > 0);

  const RunResult bad = run_cli("render --format svg --out " +
                                quoted(svg.string()) + " " + quoted(box_file()));
  CHECK(bad.exit_code == 1);
}

TEST_CASE("gallery runs the worked examples") {
  const RunResult one = run_cli("gallery --id fig12");
  CHECK(one.exit_code == 0);
  CHECK(one.out == "fig12 PASS\n");

  CHECK(run_cli("gallery --id bogus").exit_code == 2);

  const RunResult all = run_cli("gallery");
  CHECK(all.exit_code == 0);
  std::size_t lines = 0;
  for (char c : all.out) lines += c == '\n';
  CHECK(lines == 16);
  CHECK(all.out.rfind("fig1 PASS\n", 0) == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out == run_cli("gallery").out);
}

TEST_CASE("gallery renders every entry") {
  const fs::path dir = fs::temp_directory_path() / "cihull_cli_gallery";
  fs::remove_all(dir);
  const RunResult res = run_cli("gallery --render " + quoted(dir.string()));
  CHECK(res.exit_code == 0);
  CHECK(fs::exists(dir / "fig1.svg"));
  CHECK(fs::exists(dir / "fig12.svg"));
  CHECK(fs::exists(dir / "fig13.obj"));
  CHECK(fs::exists(dir / "fig16.obj"));
}

TEST_CASE("usage and io errors use distinct exit codes") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("badcmd").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("hull").exit_code == 2);  // missing file argument

  const RunResult missing = run_cli("hull /no/such/file.json");
  CHECK(missing.exit_code == 1);
  CHECK(json::parse(missing.out).contains("error"));
}
