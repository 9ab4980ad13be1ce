#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "seaweed/core.hpp"
#include "seaweed_cli/cli.hpp"

using namespace seaweed;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum") {
  CHECK(run_cli({"spectrum", "2|4 / 1|2|3"}).out == "{-2, -1^2, 0^5, 1^5, 2^2, 3}\n");
  CHECK(run_cli({"spectrum", "1|1 / 2", "--format", "json"}).out == "{\"0\":1,\"1\":1}\n");
  CHECK(run_cli({"--format", "csv", "spectrum", "1|1 / 2"}).out == "value,multiplicity\n0,1\n1,1\n");
  const auto bad = run_cli({"spectrum", "2 / 2"});
  CHECK(bad.code == 3);
  CHECK_THAT(bad.err, Catch::Matchers::ContainsSubstring("index 1"));
}

TEST_CASE("plain spectrum re-parses to the JSON multiset") {
  for (const char* spec : {"2|4 / 1|2|3", "5|2 / 7", "8|8|8|1 / 25", "1 / 1"}) {
    const auto plain = run_cli({"spectrum", spec}).out;
    const auto json = run_cli({"spectrum", spec, "--format", "json"}).out;
    CHECK(parse_exponent_multiset(plain.substr(0, plain.size() - 1)) ==
          multiset_from_json(nlohmann::json::parse(json)));
  }
}

TEST_CASE("extended and principal") {
  CHECK(run_cli({"extended", "1|1 / 2"}).out == "{-1, 0, 1}\n");
  CHECK(run_cli({"principal", "1|1 / 2"}).out == "1/2 -1/2\n");
  CHECK(run_cli({"principal", "1|1 / 2", "--format", "json"}).out ==
        "{\"spec\":\"1|1 / 2\",\"diag\":[\"1/2\",\"-1/2\"]}\n");
}

TEST_CASE("index") {
  const auto r = run_cli({"index", "2 / 2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["index"] == 1);
  CHECK(j["cycles"] == 1);
  CHECK(j["frobenius"] == false);
}

TEST_CASE("matrix") {
  const auto m = run_cli({"matrix", "5|2 / 7"});
  std::istringstream lines(m.out);
  std::string line;
  for (int i = 0; i < 3; ++i) std::getline(lines, line);
  CHECK(line == "2 3 0 2 1 4 3");
  CHECK(run_cli({"matrix", "--extended", "1|1 / 2"}).out == "0 1\n-1 0\n");
  const auto fig = run_cli({"matrix", "2|4 / 1|2|3"}).out;
  CHECK(fig.substr(0, fig.find('\n')) == "0 · · · · ·");
  CHECK(run_cli({"matrix", "2 / 2"}).code == 3);
}

TEST_CASE("render") {
  const auto svg = run_cli({"render", "2|4 / 1|2|3"}).out;
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (auto p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++c;
    return c;
  };
  CHECK(count("<circle") == 6);
  CHECK(count("class=\"top\"") == 3);
  CHECK(count("class=\"bottom\"") == 2);
  // top edge {1,2} drawn from vertex 2 (x=80) to vertex 1 (x=32)
  CHECK(svg.find("d=\"M 80 ") != std::string::npos);

  const auto one = run_cli({"render", "1 / 1"}).out;
  CHECK(one.find("<path class") == std::string::npos);

  const auto path = (std::filesystem::temp_directory_path() / "seaweed_render_test.svg").string();
  CHECK(run_cli({"render", "3|2 / 5", "--out", path}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run_cli({"render", "3|2 / 5"}).out);
}

TEST_CASE("verify-family") {
  const auto k1 = run_cli({"verify-family", "k1", "--k", "1..40"});
  CHECK(k1.code == 0);
  CHECK_THAT(k1.out, Catch::Matchers::EndsWith("k1: 40/40 pass\n"));
  const auto k2 = run_cli({"verify-family", "k2", "--k", "3..39:odd"});
  CHECK(k2.code == 0);
  CHECK_THAT(k2.out, Catch::Matchers::EndsWith("k2: 19/19 pass\n"));
  const auto even = run_cli({"verify-family", "k2", "--k", "4"});
  CHECK(even.code == 64);
  CHECK_THAT(even.err, Catch::Matchers::ContainsSubstring("odd"));
  CHECK(run_cli({"verify-family", "k9"}).code == 64);
  CHECK(run_cli({"verify-family", "k1", "--k", "5..2"}).code == 64);
  CHECK(run_cli({"verify-family", "2s-r1", "--r", "1..6", "--format", "json"}).code == 0);
}

TEST_CASE("verify-lemmas") {
  const auto r = run_cli({"verify-lemmas", "--n-max", "6", "--k-max", "4", "--m-max", "2"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("swap lemma"));
}

TEST_CASE("sweep") {
  const auto r = run_cli({"sweep", "--n-max", "5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["records"] == 1 + 4 + 16 + 64 + 256);
  CHECK(j["exit_code"] == 0);
  const auto stab = run_cli({"sweep", "--conjecture", "stability_4_17", "--k-max", "2", "--r-max", "2"});
  CHECK(stab.code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 64);
  CHECK(run_cli({"bogus"}).code == 64);
  CHECK(run_cli({"spectrum", "3|1 / 3"}).code == 64);
  CHECK(run_cli({"spectrum", "2|4 / 1|2|3", "--format", "xml"}).code == 64);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("deterministic output") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"spectrum", "5|2 / 7"}, {"render", "2|4 / 1|2|3"},
        {"matrix", "--extended", "3|2 / 5"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}
