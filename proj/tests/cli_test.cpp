#include "doctest.h"

#include "cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = liekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect = 0) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  CHECK(r.code == expect);
  return json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "liekit_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate", "F4"}).code == 1);
  CHECK(run({"build"}).code == 1);
  CHECK(run({"build", "Q7"}).code == 1);
  CHECK(run({"exponents", "D2"}).code == 1);
  CHECK(run({"build", "F4", "--format", "xml"}).code == 1);
  CHECK(run({"verify", "/nonexistent/table.txt"}).code == 1);
}

TEST_CASE("build F4") {
  const auto j = run_json({"build", "F4", "--verify"});
  CHECK(j["payload"]["dim"] == 52);
  CHECK(j["payload"]["jacobi"]["violations"] == 0);
  CHECK(j["tool_version"] == liekit::cli::kToolVersion);
  CHECK(j["convention"] == "bourbaki");
  CHECK(j["command"]["verb"] == "build");
}

TEST_CASE("exponents E8") {
  const auto j = run_json({"exponents", "E8"});
  CHECK(j["payload"]["exponents"] == json::array({1, 7, 11, 13, 17, 19, 23, 29}));
}

TEST_CASE("kostant F4 B4") {
  const auto j = run_json({"kostant", "F4", "B4"});
  CHECK(j["payload"]["dims"] == json::array({44, 128, 84}));
  CHECK(j["payload"]["signs"] == json::array({"+", "-", "+"}));
  const auto capped = run({"kostant", "E8", "E8"});
  CHECK(capped.code == 1);
}

TEST_CASE("torsion data carries its provenance") {
  const auto j = run_json({"topology", "E8"});
  CHECK(j["provenance"]["torsion_primes"] == "paper-reference-data");
  CHECK(j["payload"]["torsion_primes"] == json::array({2, 3, 5}));
  for (const auto& [k, v] : j["provenance"].items())
    CHECK((v == "computed" || v == "paper-reference-data"));
  const auto d = run_json({"dims", "G2"});
  for (const auto& [k, v] : d["provenance"].items()) CHECK(v == "computed");
}

TEST_CASE("other verbs answer") {
  CHECK(run({"roots", "G2"}).code == 0);
  CHECK(run({"dims", "E7", "--format", "tsv"}).code == 0);
  CHECK(run({"spinsplit", "4"}).code == 0);
  CHECK(run({"coset"}).code == 0);
  CHECK(run_json({"coset", "OP2"})["payload"]["space_dim"] == 16);
  CHECK(run({"coset", "F4", "Spin(9)", "--dim", "15"}).code != 0);
  CHECK(run_json({"exponents", "U(4)"})["payload"]["exponents_with_torus"] == json::array({0, 1, 2, 3}));
}

TEST_CASE("json output is identical across runs and worker counts") {
  const auto a = run({"build", "E6", "--format", "json", "--workers", "1"});
  const auto b = run({"build", "E6", "--format", "json", "--workers", "4"});
  const auto c = run({"build", "E6", "--format", "json", "--workers", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  CHECK_NOTHROW(json::parse(a.out));
}

TEST_CASE("build, export, import, verify round trip") {
  for (const std::string target : {"G2", "F4", "E6", "E7", "E8", "so(9)", "su(5)", "sp(3)"}) {
    CAPTURE(target);
    const auto file = scratch(target + ".lie");
    REQUIRE(run({"build", target}).code == 0);
    REQUIRE(run({"export", target, "-o", file.string()}).code == 0);
    const auto imp = run_json({"import", file.string()});
    CHECK(imp["payload"]["jacobi"]["violations"] == 0);
    const auto ver = run_json({"verify", file.string(), "--verify"});
    CHECK(ver["payload"]["jacobi"]["violations"] == 0);
    CHECK(ver["payload"]["jacobi"]["first_violation"].is_null());
  }
}

TEST_CASE("corrupted so(5) file fails verification") {
  const auto exported = run({"export", "so(5)"});
  REQUIRE(exported.code == 0);
  std::string text = exported.out;
  const auto pos = text.find("\n0 1 2 1 1\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "\n0 1 2 2 1\n");
  const auto file = scratch("so5_bad.lie");
  write(file, text);
  const auto j = run_json({"verify", file.string()}, 2);
  const auto& fv = j["payload"]["jacobi"]["first_violation"];
  REQUIRE(fv.is_object());
  // Only [L_1_2, L_1_3] changed, by +L_2_3. Among triples through (0, 1) the
  // smallest with a nonzero change is (0, 1, 4): the extra term is
  // [L_2_4, L_2_3] = -L_3_4 = -e_5; the other two terms are untouched.
  CHECK(fv["i"] == 0);
  CHECK(fv["j"] == 1);
  CHECK(fv["k"] == 4);
  CHECK(fv["defect"] == json::parse(R"([{"coeff": "-1", "index": 5}])"));
  CHECK(run({"import", file.string()}).code == 2);
}

TEST_CASE("verification failure of a spin extension exits 2") {
  CHECK(run({"build", "so(11)+spin(11)"}).code == 2);
}

}  // TEST_SUITE
