#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrpoly/cli.hpp"

using nlohmann::ordered_json;
using lrpoly::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  ordered_json json() const { return ordered_json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lr") {
  const auto all = call({"lr", "2,1,0", "2,1,0", "3,2,1", "--method", "all"});
  CHECK(all.code == 0);
  CHECK(all.out == "{\"hive\":2,\"steinberg\":2,\"tableaux\":2,\"system\":2,\"agree\":true}\n");

  const auto mismatch = call({"lr", "1", "1", "3"});
  CHECK(mismatch.code == 0);
  CHECK(mismatch.json()["coefficient"] == 0);
  CHECK(mismatch.json()["reason"] == "sum mismatch");

  CHECK(call({"lr", "2,1", "2,1", "3,2,1", "--method", "tableaux"}).json()["coefficient"] == 2);
  CHECK(call({"lr", "2,1", "2,1", "3,2,1", "--method", "nope"}).code == 2);
  CHECK(call({"lr", "1,2", "1", "3"}).code == 2);
  CHECK(call({"lr", "1"}).code == 2);
}

TEST_CASE("stretch and ktt") {
  const auto s = call({"stretch", "2,1", "2,1", "3,2,1"});
  CHECK(s.code == 0);
  CHECK(s.json()["polynomial"] == "N+1");
  CHECK(s.json()["p0"] == "1");
  CHECK(call({"stretch", "2,1", "2,1", "3,2,1", "--method", "steinberg"}).json()["polynomial"] == "N+1");

  const auto k = call({"ktt", "2,1", "2,1", "3,2,1"});
  CHECK(k.json()["p0_is_one"] == true);
  CHECK(k.json()["coefficients_nonnegative"] == true);
  CHECK(call({"ktt", "2", "2", "1,1,1,1"}).code == 2);
}

TEST_CASE("kostant, chambers, matrix, generic") {
  CHECK(call({"kostant", "3", "1,0,-1"}).json()["count"] == 2);
  CHECK(call({"kostant", "3", "1,0,0"}).code == 2);
  CHECK(call({"kostant", "3", "1,-1"}).code == 2);
  const auto ch = call({"chambers", "2"}).json();
  CHECK(ch["regions"].size() == 2);
  CHECK(call({"chambers", "4"}).code == 2);
  const auto m = call({"matrix", "3"}).json();
  CHECK(m["E"].size() == 9);
  CHECK(m["B"][0] == ordered_json::array({1, 0, 0, 0, 0, 0, 1, 0, 0}));
  const auto g = call({"generic", "5,2", "7,3", "9,6,2"}).json();
  CHECK(g["generic"] == true);
  CHECK(g["digest"].get<std::string>().size() == 16);
  CHECK(call({"generic", "2,1", "2,1", "3,2,1"}).json()["digest"].is_null());
}

TEST_CASE("verify-k3 is deterministic") {
  const auto a = call({"verify-k3", "--samples", "2", "--seed", "9"});
  const auto b = call({"verify-k3", "--samples", "2", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["pass"] == true);
  CHECK(a.json()["cones"].size() == 18);
  CHECK(call({"verify-k3", "--samples", "0"}).code == 2);
}

TEST_CASE("usage errors, --output and reserved --cache") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"lr", "1", "1", "2", "--cache", "x"}).code == 2);

  const std::string path = "test_cli_output.json";
  const auto r = call({"lr", "1", "1", "2", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(ordered_json::parse(in)["coefficient"] == 1);
  std::remove(path.c_str());
}
