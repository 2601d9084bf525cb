#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "misinfo/dynamics.hpp"
#include "misinfo/graph.hpp"
#include "misinfo/sociopsych.hpp"
#include "misinfo/survey.hpp"

namespace misinfo {

/// A node's integral coefficient given directly instead of via a profile.
struct BOverride {
  double value = 0.0;

  friend bool operator==(const BOverride&, const BOverride&) = default;
};

/// Initial configuration of one node. Susceptibility is either a
/// socio-psychological profile (B computed from the scenario weights) or a
/// fixed B.
struct NodeConfig {
  double lambda0 = 1.0;
  bool online = true;
  std::variant<SocioPsychProfile, BOverride> susceptibility = BOverride{};

  friend bool operator==(const NodeConfig&, const NodeConfig&) = default;
};

/// A fully loaded and validated simulation scenario.
///
/// File paths are stored resolved against the scenario file's directory, so a
/// scenario written with save_scenario() reloads identically from anywhere.
struct Scenario {
  std::filesystem::path graph_path;
  std::vector<std::filesystem::path> survey_paths;
  /// Required when any node uses a profile.
  std::optional<FactorWeights> weights;
  SimParams params;
  /// Explicitly listed nodes, with defaults already merged in.
  std::map<std::string, NodeConfig> node_configs;
  /// Applied to graph nodes not listed in node_configs.
  std::optional<NodeConfig> defaults;

  SocialGraph graph;
  std::vector<Survey> surveys;
  /// One state per graph node, in graph order, with B already computed.
  std::vector<NodeState> initial_states;

  /// Effective configuration of a graph node. Throws LookupError.
  const NodeConfig& config_for(std::string_view node) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses scenario JSON. Relative paths are resolved against `base_dir`.
///
/// Top-level fields: graph, surveys (optional), weights (optional unless a
/// profile is used), alpha, dt, steps, defaults (optional), nodes (optional).
/// Node entries may omit fields present in defaults. Throws ParseError,
/// ValidationError (with field and node) or IoError for unreadable inputs.
Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir,
                        std::string_view source_name = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);

std::string scenario_to_json(const Scenario& s);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// CSV `step,time,node,lambda,spreading,online`, rows ordered by step then
/// node id, lambda with 9 significant digits.
void write_timeseries(const TimeSeries& series, std::ostream& out);
void write_timeseries(const TimeSeries& series, const std::filesystem::path& path);

}  // namespace misinfo
