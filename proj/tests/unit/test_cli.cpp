#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using misinfo::testing::TempDir;
using misinfo::testing::read_text;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "misinfo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = misinfo::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = MISINFO_TEST_DATA_DIR;

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("trust subcommand") {
  const auto r = invoke({"trust", "--graph", kData + "/triangle.csv", "--node-a", "a", "--node-b", "b"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.500000\n");

  TempDir dir;
  const auto isolated = dir.write("iso.csv", "source,target\nx,\ny,\n");
  const auto iso = invoke({"trust", "--graph", isolated.string(), "--node-a", "x", "--node-b", "y"});
  CHECK(iso.code == 0);
  CHECK(iso.out == "0.000000\n");

  CHECK(invoke({"trust", "--graph", kData + "/triangle.csv", "--node-a", "a", "--node-b", "a"}).code == 2);
  CHECK(invoke({"trust", "--graph", kData + "/triangle.csv", "--node-a", "a", "--node-b", "q"}).code == 2);
  CHECK(invoke({"trust", "--graph", "/nonexistent.csv", "--node-a", "a", "--node-b", "b"}).code == 2);
}

TEST_CASE("survey-dist subcommand") {
  TempDir dir;
  const auto out = dir.path() / "dist.csv";
  const auto r = invoke({"survey-dist", "--survey", kData + "/paper_tau_survey.json", "--grid", "21",
                         "--out", out.string(), "--at", "0.15"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.193750\n");
  const std::string csv = read_text(out);
  CHECK(csv.starts_with("tau,fraction\n0,0\n"));
  CHECK(csv.find("\n0.15,0.19375\n") != std::string::npos);

  const auto two = invoke({"survey-dist", "--survey", kData + "/paper_tau_survey.json", "--grid", "2",
                           "--out", out.string()});
  CHECK(two.code == 0);
  CHECK(two.out.empty());
  CHECK(count_occurrences(read_text(out), "\n") == 3);

  const auto zero = invoke({"survey-dist", "--survey", kData + "/paper_tau_survey.json", "--grid", "5",
                            "--out", out.string(), "--at", "0.0"});
  CHECK(zero.out == "0.000000\n");

  const auto bad = dir.write("bad.json", R"({"parameter": "tau", "questions": []})");
  CHECK(invoke({"survey-dist", "--survey", bad.string(), "--grid", "5", "--out", out.string()}).code == 2);
  CHECK(invoke({"survey-dist", "--survey", kData + "/paper_tau_survey.json", "--grid", "1", "--out",
                out.string()})
            .code == 2);
  CHECK(invoke({"survey-dist", "--survey", kData + "/paper_tau_survey.json", "--grid", "3", "--out",
                "/nonexistent/dir/out.csv"})
            .code == 3);
}

TEST_CASE("eval subcommand") {
  const std::vector<std::string> base = {"eval", "--alpha", "0.8", "--lambda0", "0.1", "--trust", "0.5",
                                         "--source-lambda", "0.6", "--b", "0.7"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  CHECK(with({"--t", "0"}).out == "0.1\n");
  CHECK(with({"--t", "20", "--offline"}).out == "0\n");

  const auto r = with({"--t", "20"});
  REQUIRE(r.code == 0);
  const double printed = std::stod(r.out);
  const double rk4 = misinfo::testing::rk4_logistic(0.5 * 0.6 * 0.7, 0.8, 0.1, {20.0}).front();
  CHECK(misinfo::testing::relative_error(printed, rk4) < 1e-6);

  CHECK(with({"--t", "-1"}).code == 2);
  CHECK(invoke({"eval", "--alpha", "1.5", "--lambda0", "0.1", "--trust", "0.5", "--source-lambda", "0.6",
                "--b", "0.7", "--t", "1"})
            .code == 2);
}

TEST_CASE("run subcommand") {
  TempDir dir;
  const auto csv = dir.path() / "out.csv";
  const auto svg = dir.path() / "out.svg";
  const auto r = invoke({"run", "--scenario", kData + "/minimal_scenario.json", "--out", csv.string(),
                         "--plot", svg.string()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const std::string text = read_text(csv);
  CHECK(text.starts_with("step,time,node,lambda,spreading,online\n"));
  // 2 nodes x (5 steps + initial snapshot).
  CHECK(count_occurrences(text, "\n") == 1 + 2 * 6);

  const std::string chart = read_text(svg);
  CHECK(count_occurrences(chart, "<polyline") == 2);
  CHECK(chart.find(">time</text>") != std::string::npos);
  CHECK(chart.find(">lambda</text>") != std::string::npos);

  SUBCASE("missing scenario names the path") {
    const auto missing = invoke({"run", "--scenario", "/nonexistent/scn.json", "--out", csv.string()});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("/nonexistent/scn.json") != std::string::npos);
  }
  SUBCASE("unwritable output") {
    CHECK(invoke({"run", "--scenario", kData + "/minimal_scenario.json", "--out",
                  "/nonexistent/dir/out.csv"})
              .code == 3);
  }
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"trust", "--graph", kData + "/triangle.csv", "--node-a", "a", "--node-b", "b", "--extra", "1"})
            .code == 2);
  CHECK(invoke({"eval", "--alpha", "abc"}).code == 2);
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("survey-dist") != std::string::npos);
}
