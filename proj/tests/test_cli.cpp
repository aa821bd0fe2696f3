#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grammarcalc/cli.hpp"

using grammarcalc::cli::run_command;

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return last;
}
}  // namespace

TEST_CASE("derive", "[cli]") {
  auto r = run({"derive", "--grammar", "x -> x*y; y -> x*y", "--seed", "x", "--steps", "3", "--set", "y=1"});
  CHECK(r.code == 0);
  CHECK(r.out == "x + 4*x^2 + x^3\n");

  r = run({"derive", "--grammar", "eulerian-dumont", "--seed", "x", "--steps", "0"});
  CHECK(r.out == "x\n");

  r = run({"derive", "--grammar", "x -> x*y", "--seed", "x", "--steps", "2", "--strict"});
  CHECK(r.code == 1);
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("unruled-symbol"));
}

TEST_CASE("derive reads grammars from files", "[cli]") {
  const std::string path = "cli_test_grammar.txt";
  {
    std::ofstream f(path);
    f << "# Dumont\nx -> x*y\ny -> x*y\n";
  }
  const auto r = run({"derive", "--grammar", "@" + path, "--seed", "x", "--steps", "2"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out == "x^2*y + x*y^2\n");
}

TEST_CASE("json output shape", "[cli]") {
  const auto r = run({"poly", "dB", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["input"]["family"] == "dB");
  CHECK(j["result"] == "1 + 72*x + 144*x^2 + 16*x^3");

  const auto e = run({"derive", "--grammar", "z -> z", "--seed", "z^-1", "--steps", "0", "--set", "z=0",
                      "--format", "json"});
  CHECK(e.code == 1);
  const auto ej = nlohmann::json::parse(e.out);
  CHECK(ej["status"] == "error");
  CHECK(ej["error"]["kind"] == "domain");
}

TEST_CASE("triangle output", "[cli]") {
  auto r = run({"triangle", "runsT", "--rows", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "1,39,95,57");
  r = run({"triangle", "eulerA", "--rows", "3"});
  CHECK(last_line(r.out) == "3: 1 4 1");
  r = run({"triangle", "eulerA", "--rows", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"].back() == nlohmann::json::array({"1", "1"}));
}

TEST_CASE("enumerate", "[cli]") {
  auto r = run({"enumerate", "--family", "sym", "--n", "3", "--stats", "exc", "--vars", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 4*x + x^2\n");
  r = run({"enumerate", "--family", "hyp", "--n", "2", "--stats", "fix", "--vars", "x", "--filter", "derangement"});
  CHECK(r.out == "5\n");
  r = run({"enumerate", "--family", "sym", "--n", "3", "--stats", "desB"});
  CHECK(r.code == 2);
  r = run({"enumerate", "--family", "sym", "--n", "30", "--stats", "exc"});
  CHECK(r.code == 2);
}

TEST_CASE("verify", "[cli]") {
  auto r = run({"verify", "--check", "cor-3-3", "--profile", "quick"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS cor-3-3", 0) == 0);

  r = run({"verify", "--check", "symmetry-A", "--inject-fault", "eulerA:4:1:12"});
  CHECK(r.code == 1);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("FAIL symmetry-A"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("first failure at n=4"));

  CHECK(run({"verify", "--check", "nope"}).code == 2);
  CHECK(run({"verify", "--check", "bona", "--all"}).code == 2);
  CHECK(run({"verify", "--inject-fault", "eulerA:4"}).code == 2);
}

TEST_CASE("egf", "[cli]") {
  const auto r = run({"egf", "--name", "dB", "--order", "3"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "3: 1 + 20*x + 8*x^2");
  const auto csv = run({"egf", "--name", "G", "--order", "2", "--format", "csv"});
  CHECK(csv.out == "n,coefficient\n0,1\n1,1\n2,1 + 4*x*y\n");
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"derive", "--seed", "x", "--steps", "1"}).code == 2);
  CHECK(run({"triangle", "eulerZ", "--rows", "3"}).code == 2);
  CHECK(run({"derive", "--grammar", "x -> ", "--seed", "x", "--steps", "1"}).code == 2);
  CHECK(run({"poly", "A", "--n", "3", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic", "[cli]") {
  const std::vector<std::string> args{"derive", "--grammar", "derangement-b", "--seed", "x^2*y^2", "--steps", "4"};
  CHECK(run(args).out == run(args).out);
}
