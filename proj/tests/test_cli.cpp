#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "echkit/cli.hpp"
#include "echkit/json_io.hpp"

using echkit::json_io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "echkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = echkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string e310 = R"({"kind":"elliptic","p":3,"q":10,"k_max":9})";
const std::string relclass = R"({"orbits":{"e":)" + e310 +
                             R"(},"alpha":{"side":"plus","entries":[{"orbit":"e","mult":2}]},)"
                             R"("beta":{"side":"minus","entries":[]},"c_ref":1,"q_ref":2})";
const std::string plane = R"({"orbits":{"e":)" + e310 +
                          R"(},"components":[{"name":"u","ends":[{"side":"plus","orbit":"e","mult":1}]}],)"
                          R"("q":[{"a":"u","b":"u","value":-1}]})";
}  // namespace

TEST_CASE("cz examples") {
  auto r = run({"cz", "--orbit", e310, "--k", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  r = run({"cz", "--orbit", e310, "--k", "1", "--offset", "1"});
  CHECK(r.out == "-1\n");

  r = run({"cz", "--orbit", R"({"kind":"elliptic","p":1,"q":2,"k_max":3})", "--k", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("IntegerMultiple") != std::string::npos);

  r = run({"cz", "--orbit", e310, "--k", "12"});
  CHECK(r.code == 1);
  CHECK(r.err.find("HorizonExceeded") != std::string::npos);
}

TEST_CASE("verify example") {
  auto r = run({"verify", "ce1", "--m-max", "4", "--thetas", "3/10"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["violations"].empty());
  CHECK(j["instances_checked"] == 11);
  CHECK(j["equality_cases"].size() == 4);
}

TEST_CASE("violations exit with code 2") {
  auto r = run({"verify", "huge", "--m-max", "3", "--thetas", "3/10", "--n-min", "-1", "--n-max", "1"});
  CHECK(r.code == 2);
  CHECK_FALSE(json::parse(r.out)["violations"].empty());
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"cz", "--k", "1"}).code == 1);
  CHECK(run({"cz", "--orbit", "{not json", "--k", "1"}).code == 1);
  CHECK(run({"verify", "nothing"}).code == 1);
  CHECK(run({"verify", "ce1", "--thetas", "3"}).code == 1);
  CHECK(run({"partitions", "--orbit", e310, "--m", "2", "--dir", "sideways"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("partitions") {
  auto r = run({"partitions", "--orbit", e310, "--m", "4"});
  CHECK(r.out == "(4)\n");
  r = run({"partitions", "--orbit", e310, "--m", "4", "--dir", "in", "--emit-path", "--format", "json"});
  const json j = json::parse(r.out);
  CHECK(j["partition"] == json::array({3, 1}));
  CHECK(j["corners"] == json::parse("[[0,0],[3,1],[4,2]]"));
  // Negative angles are accepted.
  r = run({"partitions", "--orbit", R"({"kind":"elliptic","p":-7,"q":10,"k_max":9})", "--m", "4"});
  CHECK(r.out == "(4)\n");
}

TEST_CASE("braid") {
  auto r = run({"braid", "--word", "[[1,1],[1,1]]", "--m", "2", "--components", R"({"a":[1],"b":[2]})"});
  CHECK(r.code == 0);
  CHECK(r.out.find("link(a, b) = 1") != std::string::npos);
  r = run({"braid", "--word", "[[1,1]]", "--m", "2", "--components", R"({"a":[1],"b":[2]})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("MalformedWord") != std::string::npos);
}

TEST_CASE("index and grade") {
  auto r = run({"index", "--relclass", relclass, "--j"});
  CHECK(r.out == "I = 5\nJ0 = 2\nJ+ = 3\nJ- = 1\n");
  r = run({"index", "--relclass", relclass, "--offsets", R"({"e":1})", "--format", "json"});
  const json j = json::parse(r.out);
  CHECK(j["I"] == 5);
  CHECK(j["c_tau"] == 3);
  CHECK(j["q_tau"] == 6);
  r = run({"index", "--relclass", relclass, "--offsets", R"({"x":1})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("MissingOffset") != std::string::npos);

  const std::string set = R"({"orbits":{"e":)" + e310 + R"(},"entries":[{"orbit":"e","mult":2}]})";
  r = run({"grade", "--orbitset", set, "--format", "json"});
  CHECK(json::parse(r.out)["offset"] == 2);
  const std::string ctx = R"({"invariant_factors":[0],"c1":[2],"orbit_class":{"e":[1]}})";
  r = run({"grade", "--orbitset", set, "--context", ctx, "--modulus", "6", "--format", "json"});
  CHECK(json::parse(r.out)["modulus"] == 6);
  CHECK(json::parse(r.out)["gamma"] == json::array({2}));
  r = run({"grade", "--orbitset", set, "--context", ctx, "--modulus", "4"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ModulusMismatch") != std::string::npos);
}

TEST_CASE("curve report and union") {
  auto r = run({"curve", "report", "--data", plane, "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["components"][0]["ind"] == 0);
  CHECK(j["components"][0]["adjunction_residual"] == 0);
  CHECK(j["index_inequality"]["holds"] == true);

  r = run({"curve", "union", "--a", plane, "--b", plane, "--format", "json"});
  REQUIRE(r.code == 0);
  const json u = json::parse(r.out);
  CHECK(u["E"] == 1);
  CHECK(u["dot"] == "-1");
  CHECK(run({"curve"}).code == 1);
}

TEST_CASE("JSON output round-trips") {
  const std::vector<std::vector<std::string>> commands = {
      {"cz", "--orbit", e310, "--k", "4"},
      {"partitions", "--orbit", e310, "--m", "5", "--emit-path"},
      {"braid", "--word", "[[0,1],[0,1],[1,-1],[1,-1]]", "--m", "2", "--reframe", "2"},
      {"index", "--relclass", relclass, "--j"},
      {"curve", "report", "--data", plane},
      {"verify", "cli", "--m-max", "4", "--thetas", "3/10,7/10"},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(json::parse(j.dump()) == j);
    // Identical inputs give identical output.
    CHECK(run(args).out == r.out);
  }

  // Payloads embedded in the output decode to the same values.
  const json idx = json::parse(run({"index", "--relclass", relclass, "--format", "json"}).out);
  const auto z = echkit::json_io::relclass_from_json(idx["relclass"], echkit::json_io::orbits_of(idx["relclass"]));
  CHECK(echkit::json_io::relclass_to_json(z) == idx["relclass"]);
  const json rep = json::parse(run({"curve", "report", "--data", plane, "--format", "json"}).out);
  const auto c = echkit::json_io::curve_data_from_json(rep["data"], echkit::json_io::orbits_of(rep["data"]));
  CHECK(echkit::json_io::curve_data_to_json(c) == rep["data"]);
  const json sweep = json::parse(run({"verify", "pick", "--m-max", "5", "--thetas", "7/11"}).out);
  json body = sweep;
  body.erase("schema_version");
  body.erase("kind");
  CHECK(echkit::json_io::sweep_report_to_json(echkit::json_io::sweep_report_from_json(body)) == body);
}

TEST_CASE("output goes to a file only with --out") {
  const std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  auto r = run({"cz", "--orbit", e310, "--k", "4", "--out", path, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  const json j = json::parse(f);
  CHECK(j["cz"] == 3);
  std::remove(path.c_str());
}
