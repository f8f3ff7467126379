#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tmcat/descent.hpp"
#include "tmcat/gallery.hpp"
#include "tmcat/json_io.hpp"

using namespace tmcat;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// Stderr is dropped so diagnostics from expected failures stay quiet.
RunResult run(const std::string& args) {
  const std::string cmd = std::string(TMCAT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

std::string fx(const std::string& name) {
  return std::string(TMCAT_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / ("tmcat_cli_" + stem)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("validating shipped fixtures succeeds") {
  const RunResult r = run("validate " + fx("word-identity.json") + " " + fx("z2-identity.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("[ok]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("json validation output carries a passing report per file") {
  const RunResult r = run("validate --format json " + fx("torsor-collapse.json"));
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.at("results").is_array());
  REQUIRE(j.at("results").size() == 1);
  const json& file_result = j.at("results").at(0);
  CHECK(file_result.at("ok").get<bool>());
  REQUIRE(file_result.at("report").is_array());
  CHECK(file_result.at("report").size() > 0);
  for (const auto& entry : file_result.at("report")) {
    CHECK(entry.at("pass").get<bool>());
    CHECK(entry.contains("check"));
    CHECK(entry.contains("witness"));
  }
}

TEST_CASE("a broken identity section is reported and exits nonzero") {
  json functor = json::parse(read_file(fx("word-inclusion.json")));
  json mc = functor.at("tgt");
  mc["s0"]["a"] = "id_b";
  const std::string path = temp_path("mutated.json");
  write_file(path, mc.dump());

  const RunResult r = run("validate " + path);
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
  CHECK(r.out.find("identity boundary") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("unreadable or unrecognized input exits with code two") {
  const std::string garbled = temp_path("garbled.json");
  write_file(garbled, "{\"kind\": ");
  CHECK(run("validate " + garbled).code == 2);

  const std::string alien = temp_path("alien.json");
  write_file(alien, "{\"kind\": \"starfish\"}");
  CHECK(run("validate " + alien).code == 2);

  CHECK(run("validate " + temp_path("no_such_file.json")).code == 2);
  CHECK(run("classify --fixture no-such-fixture").code == 2);
  CHECK(run("frobnicate").code == 2);

  std::remove(garbled.c_str());
  std::remove(alien.c_str());
}

TEST_CASE("classify reports a full profile for the torsor collapse") {
  const RunResult r = run("classify --fixture torsor-collapse --format json");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("profile").at("p0").get<bool>());
  CHECK(j.at("profile").at("p1").get<bool>());
  CHECK(j.at("profile").at("p2").get<bool>());
  CHECK(j.at("profile").at("p3").get<bool>());
  CHECK(j.at("liftedCover").get<bool>());
  CHECK(j.at("levelCover").get<bool>());
  CHECK(j.at("liftedCoverReport").is_array());
  CHECK(j.at("levelCoverReport").is_array());
}

TEST_CASE("classify flags the chain fixture with the missing pair lift") {
  const RunResult r = run("classify --fixture chain-pair-gap --format json");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("profile").at("p1").get<bool>());
  CHECK_FALSE(j.at("profile").at("p2").get<bool>());
  CHECK_FALSE(j.at("levelCover").get<bool>());
  CHECK_FALSE(j.at("liftedCover").get<bool>());
}

TEST_CASE("classify accepts a fixture file as well as a fixture name") {
  const RunResult by_name = run("classify --fixture word-collapse --format json");
  const RunResult by_file = run("classify " + fx("word-collapse.json") + " --format json");
  CHECK(by_name.code == 0);
  CHECK(by_file.code == 0);
  CHECK(json::parse(by_name.out).at("profile") == json::parse(by_file.out).at("profile"));
}

TEST_CASE("the oracle clears a collapse with fully onto levels") {
  const RunResult r = run("oracle --fixture word-collapse --max-size 2 --format json");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("oracle").at("status").get<std::string>() == "clean");
  CHECK(j.at("oracle").at("dataChecked").get<int>() >= 1);
  CHECK(j.at("oracle").at("comparisonFaithful").get<bool>());
  CHECK(j.at("oracle").at("comparisonFull").get<bool>());
  CHECK(j.at("oracle").at("failures").is_array());
  CHECK(j.at("oracle").at("failures").empty());
}

TEST_CASE("quotient rebuilds the torsor base from the shipped datum") {
  const RunResult r = run("quotient --fixture torsor-collapse --datum " +
                          fx("torsor-comparison-datum.json") + " --format json");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("kind").get<std::string>() == "quotient-result");
  CHECK(j.at("w").at("x1").size() == 2);
  CHECK(j.at("f").contains("p0"));
  CHECK(j.at("f").contains("p1"));
  CHECK(j.at("h").contains("p0"));
}

TEST_CASE("quotient handles a datum written through the library") {
  const TFunctor& p = fixture("word-collapse").functor;
  const MultiDescentDatum d = comparison_multicat_datum(p, identity_functor(p.tgt));
  const std::string path = temp_path("word_datum.json");
  write_file(path, pretty(datum_to_json(d)));

  const RunResult r = run("quotient --fixture word-collapse --datum " + path + " --format json");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("w").at("x1").size() == 1);
  std::remove(path.c_str());
}

TEST_CASE("fixture listing names the whole gallery") {
  const RunResult r = run("fixtures list");
  CHECK(r.code == 0);
  for (const Fixture& f : fixture_library()) {
    CHECK(r.out.find(f.name) != std::string::npos);
  }
}

TEST_CASE("dumping a fixture reproduces the shipped file byte for byte") {
  for (const char* name : {"word-identity", "torsor-collapse", "chain-pair-gap"}) {
    const RunResult r = run(std::string("fixtures dump ") + name);
    CHECK(r.code == 0);
    CHECK(r.out == read_file(fx(std::string(name) + ".json")));
  }
}

TEST_CASE("repeated invocations produce identical bytes") {
  const std::string cmd = "classify --fixture z3-identity --format json";
  const RunResult first = run(cmd);
  const RunResult second = run(cmd);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  const RunResult v1 = run("validate --format json " + fx("chain-identity.json"));
  const RunResult v2 = run("validate --format json " + fx("chain-identity.json"));
  CHECK(v1.out == v2.out);
}

TEST_CASE("a bare multicat file picks up the monad named on the command line") {
  json functor = json::parse(read_file(fx("z2-identity.json")));
  json mc = functor.at("src");
  mc.erase("monad");
  const std::string path = temp_path("bare.json");
  write_file(path, mc.dump());

  const RunResult with_monoid =
      run("validate " + path + " --monad monoid:" + fx("z2-monoid.json"));
  CHECK(with_monoid.code == 0);

  const RunResult with_identity = run("validate " + path + " --monad identity");
  CHECK(with_identity.code == 1);
  std::remove(path.c_str());
}
