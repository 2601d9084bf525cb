#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "misinfo/dynamics.hpp"
#include "misinfo/error.hpp"
#include "misinfo/format.hpp"
#include "misinfo/graph.hpp"
#include "misinfo/scenario.hpp"
#include "misinfo/survey.hpp"
#include "svg_chart.hpp"

namespace misinfo::cli {

namespace {

struct RunArgs {
  std::string scenario;
  std::string out;
  std::string plot;
};

struct TrustArgs {
  std::string graph;
  std::string node_a;
  std::string node_b;
};

struct SurveyDistArgs {
  std::string survey;
  int grid = 0;
  std::string out;
  std::optional<double> at;
};

struct EvalArgs {
  LearningLaw law;
  double t = 0.0;
  bool offline = false;
};

// Thrown by output writers so that failures map to kExitIo.
struct OutputFailure {
  std::string message;
};

void write_output(const std::filesystem::path& path, auto&& writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputFailure{path.string() + ": cannot open for writing"};
  writer(file);
  file.flush();
  if (!file) throw OutputFailure{path.string() + ": write failed"};
}

int cmd_run(const RunArgs& args, std::ostream&) {
  const Scenario scenario = load_scenario(args.scenario);
  const TimeSeries series = simulate(scenario.graph, scenario.initial_states, scenario.params);
  write_output(args.out, [&](std::ostream& os) { write_timeseries(series, os); });
  if (!args.plot.empty()) {
    write_output(args.plot, [&](std::ostream& os) { write_svg_chart(series, os); });
  }
  return kExitOk;
}

int cmd_trust(const TrustArgs& args, std::ostream& out) {
  const SocialGraph g = load_edge_list_file(args.graph);
  out << format_fixed(g.trust(args.node_a, args.node_b), 6) << '\n';
  return kExitOk;
}

int cmd_survey_dist(const SurveyDistArgs& args, std::ostream& out) {
  const Survey survey = load_survey_file(args.survey);
  const auto curve = distribution_curve(survey, args.grid);
  std::optional<double> at_value;
  if (args.at) {
    if (!(*args.at >= 0.0 && *args.at <= 1.0)) {
      throw ValidationError("at", "tau must lie in [0,1], got " + format_significant(*args.at, 9));
    }
    at_value = population_fraction(survey, *args.at);
  }
  write_output(args.out, [&](std::ostream& os) {
    os << "tau,fraction\n";
    for (const auto& [tau, fraction] : curve) {
      os << format_significant(tau, 9) << ',' << format_significant(fraction, 9) << '\n';
    }
  });
  if (at_value) out << format_fixed(*at_value, 6) << '\n';
  return kExitOk;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  out << format_significant(lambda_closed_form(args.t, !args.offline, args.law), 9) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Misinformation dynamics on social networks", "misinfo"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario and write the level time series");
  run_cmd->add_option("--scenario", run_args.scenario, "Scenario JSON file")->required();
  run_cmd->add_option("--out", run_args.out, "Output CSV path")->required();
  run_cmd->add_option("--plot", run_args.plot, "Optional SVG chart path");

  TrustArgs trust_args;
  auto* trust_cmd = app.add_subcommand("trust", "Print the trust coefficient of two nodes");
  trust_cmd->add_option("--graph", trust_args.graph, "Edge-list CSV")->required();
  trust_cmd->add_option("--node-a", trust_args.node_a, "First node id")->required();
  trust_cmd->add_option("--node-b", trust_args.node_b, "Second node id")->required();

  SurveyDistArgs dist_args;
  double at = 0.0;
  auto* dist_cmd =
      app.add_subcommand("survey-dist", "Estimate the population distribution of a parameter");
  dist_cmd->add_option("--survey", dist_args.survey, "Survey JSON file")->required();
  dist_cmd->add_option("--grid", dist_args.grid, "Number of grid points over [0,1]")->required();
  dist_cmd->add_option("--out", dist_args.out, "Output CSV path")->required();
  auto* at_opt = dist_cmd->add_option("--at", at, "Also print the fraction at this value");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the closed-form misinformation level");
  eval_cmd->add_option("--alpha", eval_args.law.alpha, "Threshold alpha in (0,1]")->required();
  eval_cmd->add_option("--lambda0", eval_args.law.lambda0, "Initial level in (0,1]")->required();
  eval_cmd->add_option("--trust", eval_args.law.mean_trust, "Mean trust in [0,1]")->required();
  eval_cmd->add_option("--source-lambda", eval_args.law.mean_source_lambda,
                       "Mean source level in [0,1]")
      ->required();
  eval_cmd->add_option("--b", eval_args.law.b, "Integral coefficient in [0,1]")->required();
  eval_cmd->add_option("--t", eval_args.t, "Time, >= 0")->required();
  eval_cmd->add_flag("--offline", eval_args.offline, "Node is offline (xi = 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "misinfo: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_args, out);
    if (trust_cmd->parsed()) return cmd_trust(trust_args, out);
    if (dist_cmd->parsed()) {
      if (at_opt->count() > 0) dist_args.at = at;
      return cmd_survey_dist(dist_args, out);
    }
    if (eval_cmd->parsed()) return cmd_eval(eval_args, out);
  } catch (const OutputFailure& e) {
    err << "misinfo: " << e.message << '\n';
    return kExitIo;
  } catch (const Error& e) {
    // Anything raised before outputs are written concerns the inputs.
    err << "misinfo: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace misinfo::cli
