#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pmb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PMB_TEST_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pmb_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
  auto r = run({"check", data("dims122.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "result: pass"));

  r = run({"check", data("hook.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "IntersectionFailAt (1,1)"));

  r = run({"check", data("zero_map.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "NotInjectiveAt (0)"));

  r = run({"check", data("noncommuting.json"), "--format", "json"});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "\"kind\":\"NotCommutativeAt\""));
  CHECK(contains(r.out, "NotCommutativeAt (1,1)"));
}

TEST_CASE("input errors") {
  auto r = run({"check", data("malformed.json")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "line"));

  r = run({"check", data("wrong_shape.json")});
  CHECK(r.code == 1);

  r = run({"check", data("does_not_exist.json")});
  CHECK(r.code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"check"}).code == 64);
  CHECK(run({"check", data("hook.json"), "--format", "xml"}).code == 64);
  CHECK(run({"gen", "--seed", "1", "--window", "0,1", "--gens", "(5)"}).code == 64);
  CHECK(run({"gen", "--seed", "1", "--window", "0,1,2", "--gens", "(0)"}).code == 64);
  CHECK(run({"gen", "--seed", "1", "--window", "0,1", "--gens", "0"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("basis, verify and tampered bases") {
  const fs::path basis = scratch("dims122.basis.json");
  auto r = run({"basis", data("dims122.json"), "--out", basis.string()});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "counts: 0:1 1:1"));
  CHECK(contains(r.out, "row_ops:"));

  CHECK(run({"verify", data("dims122.json"), basis.string()}).code == 0);

  // Drop the last element.
  const fs::path dropped = scratch("dropped.basis.json");
  spit(dropped, R"({"elements":[{"degree":0,"vector":["1"]}]})");
  r = run({"verify", data("dims122.json"), dropped.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "FAIL"));

  // A basis for a different module.
  CHECK(run({"verify", data("interval.json"), basis.string()}).code == 2);

  r = run({"basis", data("hook.json")});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "IntersectionFailAt (1,1)"));
}

TEST_CASE("2D basis round trip") {
  const fs::path basis = scratch("free2d.basis.json");
  REQUIRE(run({"basis", data("free2d.json"), "--out", basis.string(), "--format", "json"}).code == 0);
  CHECK(run({"verify", data("free2d.json"), basis.string()}).code == 0);
  CHECK(run({"verify", data("dims122.json"), basis.string()}).code == 2);
}

TEST_CASE("gen is deterministic and feeds back into basis") {
  const fs::path a = scratch("gen_a.json");
  const fs::path b = scratch("gen_b.json");
  const std::vector<std::string> base{"gen", "--seed", "7", "--window", "0,2,0,2", "--gens", "(0,0);(1,1)*2;(2,0)"};
  auto args = base;
  args.insert(args.end(), {"--out", a.string()});
  REQUIRE(run(args).code == 0);
  args = base;
  args.insert(args.end(), {"--out", b.string()});
  REQUIRE(run(args).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run(base).out == slurp(a));

  const auto r = run({"basis", a.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "generators: 4"));
  CHECK(contains(r.out, "(1,1):2"));
}

TEST_CASE("betti") {
  auto r = run({"betti", data("hook.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "total: 2"));
  r = run({"betti", data("dims122.json"), "--format", "json"});
  CHECK(contains(r.out, "\"total\":2"));
}

TEST_CASE("support") {
  auto r = run({"support", data("staircase_punctured.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "witness: (1,1)"));
  CHECK(contains(r.out, "conclusion: NOT_PROJECTIVE_FLAT"));
  CHECK(contains(run({"support", data("principal.json")}).out, "conclusion: FREE"));
  r = run({"support", data("two_principals.json"), "--format", "json"});
  CHECK(contains(r.out, "\"conclusion\":\"NO_CONCLUSION\""));
}

TEST_CASE("PMB_MAX_DIM caps parsed dimensions") {
  ::setenv("PMB_MAX_DIM", "1", 1);
  CHECK(run({"check", data("dims122.json")}).code == 1);
  ::setenv("PMB_MAX_DIM", "abc", 1);
  CHECK(run({"check", data("dims122.json")}).code == 64);
  ::unsetenv("PMB_MAX_DIM");
  CHECK(run({"check", data("dims122.json")}).code == 0);
}

}  // TEST_SUITE
