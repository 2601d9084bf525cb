#include "misinfo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "misinfo/error.hpp"
#include "misinfo/format.hpp"

namespace misinfo {

namespace {

using nlohmann::json;

const std::set<std::string> kTopLevelFields = {"graph", "surveys", "weights", "alpha",
                                               "dt",    "steps",   "nodes",   "defaults"};
const std::set<std::string> kNodeFields = {"lambda0", "online", "profile", "b_override"};

// Field path plus optional node id, so errors can name both.
struct Where {
  std::string field;
  std::optional<std::string> node;

  [[noreturn]] void fail(const std::string& what) const {
    if (node) throw ValidationError(field, *node, what);
    throw ValidationError(field, what);
  }
  Where sub(const std::string& key) const { return {field + "." + key, node}; }
};

double as_number(const json& v, const Where& w) {
  if (!v.is_number()) w.fail("expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) w.fail("expected a finite number");
  return x;
}

double as_unit(const json& v, const Where& w, bool lo_open) {
  const double x = as_number(v, w);
  if ((lo_open ? !(x > 0.0) : !(x >= 0.0)) || x > 1.0) {
    w.fail(std::string("must lie in ") + (lo_open ? "(0,1]" : "[0,1]") + ", got " +
           format_significant(x, 9));
  }
  return x;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const Where& w) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) w.sub(key).fail("unknown field");
  }
}

std::array<double, kFactorCount> seven_reals(const json& v, const Where& w, bool unit_range) {
  if (!v.is_object()) w.fail("expected an object with fields f, p, phi, tau, k, s, v");
  reject_unknown(v, std::set<std::string>(kFactorNames.begin(), kFactorNames.end()), w);
  std::array<double, kFactorCount> out{};
  for (std::size_t i = 0; i < kFactorCount; ++i) {
    const std::string key(kFactorNames[i]);
    const auto it = v.find(key);
    if (it == v.end()) w.sub(key).fail("missing field");
    out[i] = unit_range ? as_unit(*it, w.sub(key), false) : as_number(*it, w.sub(key));
  }
  return out;
}

struct PartialNodeConfig {
  std::optional<double> lambda0;
  std::optional<bool> online;
  std::optional<std::variant<SocioPsychProfile, BOverride>> susceptibility;
};

PartialNodeConfig parse_node(const json& v, const Where& w) {
  if (!v.is_object()) w.fail("expected an object");
  reject_unknown(v, kNodeFields, w);
  PartialNodeConfig cfg;
  if (auto it = v.find("lambda0"); it != v.end()) {
    const double x = as_number(*it, w.sub("lambda0"));
    if (x == 0.0) {
      w.sub("lambda0").fail("initial level 0 is degenerate (the level could never grow); use a "
                            "small positive value");
    }
    cfg.lambda0 = as_unit(*it, w.sub("lambda0"), true);
  }
  if (auto it = v.find("online"); it != v.end()) {
    if (!it->is_boolean()) w.sub("online").fail("expected true or false");
    cfg.online = it->get<bool>();
  }
  const auto prof = v.find("profile");
  const auto over = v.find("b_override");
  if (prof != v.end() && over != v.end()) {
    w.fail("give either 'profile' or 'b_override', not both");
  }
  if (prof != v.end()) {
    cfg.susceptibility = SocioPsychProfile::from_array(seven_reals(*prof, w.sub("profile"), true));
  } else if (over != v.end()) {
    cfg.susceptibility = BOverride{as_unit(*over, w.sub("b_override"), false)};
  }
  return cfg;
}

NodeConfig complete(const PartialNodeConfig& p, const std::optional<NodeConfig>& defaults,
                    const Where& w) {
  NodeConfig cfg;
  if (p.lambda0) {
    cfg.lambda0 = *p.lambda0;
  } else if (defaults) {
    cfg.lambda0 = defaults->lambda0;
  } else {
    w.sub("lambda0").fail("missing field and no defaults given");
  }
  cfg.online = p.online.value_or(defaults ? defaults->online : true);
  if (p.susceptibility) {
    cfg.susceptibility = *p.susceptibility;
  } else if (defaults) {
    cfg.susceptibility = defaults->susceptibility;
  } else {
    w.fail("needs 'profile' or 'b_override' and no defaults given");
  }
  return cfg;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative()) path = base / path;
  return std::filesystem::absolute(path).lexically_normal();
}

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), std::string("cannot open ") + what);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json node_to_json(const NodeConfig& cfg) {
  json j;
  j["lambda0"] = cfg.lambda0;
  j["online"] = cfg.online;
  if (const auto* prof = std::get_if<SocioPsychProfile>(&cfg.susceptibility)) {
    const auto a = prof->as_array();
    json jp;
    for (std::size_t i = 0; i < kFactorCount; ++i) jp[std::string(kFactorNames[i])] = a[i];
    j["profile"] = std::move(jp);
  } else {
    j["b_override"] = std::get<BOverride>(cfg.susceptibility).value;
  }
  return j;
}

}  // namespace

const NodeConfig& Scenario::config_for(std::string_view node) const {
  if (!graph.contains(node)) throw LookupError(std::string(node));
  if (auto it = node_configs.find(std::string(node)); it != node_configs.end()) return it->second;
  if (defaults) return *defaults;
  throw ValidationError("nodes", std::string(node), "no configuration and no defaults");
}

Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir,
                        std::string_view source_name) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source_name), std::nullopt, e.what());
  }
  if (!doc.is_object()) throw ValidationError("scenario", "expected a JSON object");
  const Where root{"scenario", std::nullopt};
  reject_unknown(doc, kTopLevelFields, root);

  auto required = [&](const char* key) -> const json& {
    const auto it = doc.find(key);
    if (it == doc.end()) throw ValidationError(key, "missing field");
    return *it;
  };

  Scenario s;

  const json& graph = required("graph");
  if (!graph.is_string()) throw ValidationError("graph", "expected a file path string");
  s.graph_path = resolve(base_dir, graph.get<std::string>());

  if (auto it = doc.find("surveys"); it != doc.end()) {
    if (!it->is_array()) throw ValidationError("surveys", "expected an array of file paths");
    for (const auto& p : *it) {
      if (!p.is_string()) throw ValidationError("surveys", "expected a file path string");
      s.survey_paths.push_back(resolve(base_dir, p.get<std::string>()));
    }
  }

  if (auto it = doc.find("weights"); it != doc.end()) {
    s.weights = FactorWeights::from_array(seven_reals(*it, {"weights", std::nullopt}, false));
    s.weights->validate();
  }

  s.params.alpha = as_unit(required("alpha"), {"alpha", std::nullopt}, true);
  s.params.dt = as_number(required("dt"), {"dt", std::nullopt});
  const json& steps = required("steps");
  if (!steps.is_number_integer()) throw ValidationError("steps", "expected an integer");
  const auto steps_value = steps.get<long long>();
  if (steps_value < 1 || steps_value > std::numeric_limits<int>::max()) {
    throw ValidationError("steps", "must be a positive integer, got " + std::to_string(steps_value));
  }
  s.params.steps = static_cast<int>(steps_value);
  s.params.validate();

  if (auto it = doc.find("defaults"); it != doc.end()) {
    const Where w{"defaults", std::nullopt};
    s.defaults = complete(parse_node(*it, w), std::nullopt, w);
  }

  if (auto it = doc.find("nodes"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("nodes", "expected an object keyed by node id");
    for (const auto& [id, entry] : it->items()) {
      const Where w{"nodes", id};
      s.node_configs.emplace(id, complete(parse_node(entry, w), s.defaults, w));
    }
  }

  // Inputs referenced by the scenario.
  try {
    std::istringstream edges(read_file(s.graph_path, "edge list"));
    s.graph = load_edge_list(edges, s.graph_path.string());
  } catch (const IoError& e) {
    throw ValidationError("graph", e.what());
  }
  std::set<Factor> seen_parameters;
  for (const auto& p : s.survey_paths) {
    Survey survey = [&] {
      try {
        return parse_survey(read_file(p, "survey file"), p.string());
      } catch (const IoError& e) {
        throw ValidationError("surveys", e.what());
      }
    }();
    if (!seen_parameters.insert(survey.parameter()).second) {
      throw ValidationError("surveys", "more than one survey for parameter '" +
                                           std::string(factor_name(survey.parameter())) + "'");
    }
    s.surveys.push_back(std::move(survey));
  }

  for (const auto& [id, _] : s.node_configs) {
    if (!s.graph.contains(id)) throw ValidationError("nodes", id, "node is not in the graph");
  }

  const bool uses_profile = [&] {
    auto is_profile = [](const NodeConfig& c) {
      return std::holds_alternative<SocioPsychProfile>(c.susceptibility);
    };
    if (s.defaults && is_profile(*s.defaults)) return true;
    return std::any_of(s.node_configs.begin(), s.node_configs.end(),
                       [&](const auto& kv) { return is_profile(kv.second); });
  }();
  if (uses_profile && !s.weights) {
    throw ValidationError("weights", "missing field (required when any node uses a profile)");
  }

  s.initial_states.reserve(s.graph.node_count());
  for (const auto& id : s.graph.ids()) {
    const auto it = s.node_configs.find(id);
    if (it == s.node_configs.end() && !s.defaults) {
      throw ValidationError("nodes", id, "graph node has no configuration and no defaults given");
    }
    const NodeConfig& cfg = it != s.node_configs.end() ? it->second : *s.defaults;
    NodeState st;
    st.node = id;
    st.lambda = cfg.lambda0;
    st.lambda0 = cfg.lambda0;
    st.online = cfg.online;
    if (const auto* prof = std::get_if<SocioPsychProfile>(&cfg.susceptibility)) {
      st.b_coeff = integral_coefficient(*s.weights, *prof);
    } else {
      st.b_coeff = std::get<BOverride>(cfg.susceptibility).value;
    }
    st.validate();
    s.initial_states.push_back(std::move(st));
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  const std::string text = read_file(path, "scenario file");
  const auto base = std::filesystem::absolute(path).parent_path();
  return parse_scenario(text, base, path.string());
}

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["graph"] = s.graph_path.string();
  if (!s.survey_paths.empty()) {
    doc["surveys"] = json::array();
    for (const auto& p : s.survey_paths) doc["surveys"].push_back(p.string());
  }
  if (s.weights) {
    const auto a = s.weights->as_array();
    json jw;
    for (std::size_t i = 0; i < kFactorCount; ++i) jw[std::string(kFactorNames[i])] = a[i];
    doc["weights"] = std::move(jw);
  }
  doc["alpha"] = s.params.alpha;
  doc["dt"] = s.params.dt;
  doc["steps"] = s.params.steps;
  if (s.defaults) doc["defaults"] = node_to_json(*s.defaults);
  if (!s.node_configs.empty()) {
    json nodes = json::object();
    for (const auto& [id, cfg] : s.node_configs) nodes[id] = node_to_json(cfg);
    doc["nodes"] = std::move(nodes);
  }
  return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << scenario_to_json(s);
  if (!out) throw IoError(path.string(), "write failed");
}

void write_timeseries(const TimeSeries& series, std::ostream& out) {
  if (series.snapshots.empty()) throw ValidationError("series", "time series is empty");
  out << "step,time,node,lambda,spreading,online\n";
  for (std::size_t n = 0; n < series.snapshots.size(); ++n) {
    const Snapshot& snap = series.snapshots[n];
    const std::string time = format_significant(series.time(n), 9);
    for (std::size_t k = 0; k < series.nodes.size(); ++k) {
      out << n << ',' << time << ',' << series.nodes[k] << ','
          << format_significant(snap.lambda[k], 9) << ',' << (snap.spreading[k] ? "true" : "false")
          << ',' << (snap.online[k] ? "true" : "false") << '\n';
    }
  }
}

void write_timeseries(const TimeSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  write_timeseries(series, out);
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace misinfo
