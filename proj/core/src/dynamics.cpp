#include "misinfo/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "misinfo/error.hpp"

namespace misinfo {

namespace {

constexpr double kRoundOffSlack = 1e-12;

void check_range(double x, double lo, double hi, bool lo_open, const char* field) {
  const bool ok = std::isfinite(x) && (lo_open ? x > lo : x >= lo) && x <= hi;
  if (!ok) {
    throw ValidationError(field, std::string("must lie in ") + (lo_open ? "(" : "[") +
                                     std::to_string(lo) + "," + std::to_string(hi) + "], got " +
                                     std::to_string(x));
  }
}

void check_range(const std::string& node, double x, bool lo_open, const char* field) {
  const bool ok = std::isfinite(x) && (lo_open ? x > 0.0 : x >= 0.0) && x <= 1.0;
  if (!ok) {
    throw ValidationError(field, node,
                          std::string("must lie in ") + (lo_open ? "(0,1]" : "[0,1]") + ", got " +
                              std::to_string(x));
  }
}

// Snaps round-off just outside [0,1] back in; anything larger is a bug.
double snap_unit(double x) {
  if (x > 1.0) {
    assert(x - 1.0 < kRoundOffSlack);
    return 1.0;
  }
  if (x < 0.0) {
    assert(-x < kRoundOffSlack);
    return 0.0;
  }
  return x;
}

void check_indexed(const SocialGraph& g, std::span<const NodeState> states) {
  if (states.size() != g.node_count()) {
    throw ValidationError("states", "expected " + std::to_string(g.node_count()) +
                                        " node states, got " + std::to_string(states.size()));
  }
}

}  // namespace

void LearningLaw::validate() const {
  check_range(alpha, 0.0, 1.0, true, "alpha");
  check_range(lambda0, 0.0, 1.0, true, "lambda0");
  check_range(mean_trust, 0.0, 1.0, false, "trust");
  check_range(mean_source_lambda, 0.0, 1.0, false, "source_lambda");
  check_range(b, 0.0, 1.0, false, "b");
}

double lambda_closed_form(double t, bool online, const LearningLaw& law) {
  law.validate();
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ValidationError("t", "must be a finite non-negative time, got " + std::to_string(t));
  }
  const double xi = online ? 1.0 : 0.0;
  const double exponent = -law.alpha * law.mean_trust * law.mean_source_lambda * law.b * t;
  // alpha*l0 / (l0 + (alpha - l0)*e) rearranged so that l0 == alpha gives
  // alpha exactly.
  const double gap = (law.alpha - law.lambda0) / law.lambda0;
  const double value = xi * law.alpha / (1.0 + gap * std::exp(exponent));
  return snap_unit(value);
}

double logistic_advance(double lambda, double alpha, double rate, double dt) noexcept {
  if (lambda == 0.0) return 0.0;
  return alpha / (1.0 + (alpha - lambda) / lambda * std::exp(-rate * dt));
}

void NodeState::validate() const {
  if (node.empty()) throw ValidationError("node", "node id must not be empty");
  check_range(node, lambda, false, "lambda");
  check_range(node, lambda0, true, "lambda0");
  check_range(node, b_coeff, false, "b");
}

void SimParams::validate() const {
  check_range(alpha, 0.0, 1.0, true, "alpha");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("dt", "must be a positive time step, got " + std::to_string(dt));
  }
  if (steps < 1) throw ValidationError("steps", "must be at least 1, got " + std::to_string(steps));
}

std::vector<std::string> spreaders(std::span<const NodeState> states, double alpha) {
  std::vector<std::string> out;
  for (const auto& s : states) {
    if (is_spreading(s, alpha)) out.push_back(s.node);
  }
  return out;
}

NodeRate node_rate(const SocialGraph& g, std::span<const NodeState> states, NodeIndex i,
                   double alpha) {
  check_indexed(g, states);
  double trust_sum = 0.0;
  double lambda_sum = 0.0;
  std::size_t sources = 0;
  for (NodeIndex j : g.neighbors(i)) {
    if (!is_spreading(states[j], alpha)) continue;
    trust_sum += g.trust(i, j);
    lambda_sum += states[j].lambda;
    ++sources;
  }
  if (sources == 0) return {};
  NodeRate r;
  r.mean_trust = trust_sum / static_cast<double>(sources);
  r.mean_source_lambda = lambda_sum / static_cast<double>(sources);
  r.rate = alpha * r.mean_trust * r.mean_source_lambda * states[i].b_coeff;
  return r;
}

NodeRate node_rate(const SocialGraph& g, std::span<const NodeState> states, std::string_view id,
                   double alpha) {
  return node_rate(g, states, g.index_of(id), alpha);
}

std::vector<NodeState> step(const SocialGraph& g, std::span<const NodeState> states,
                            const SimParams& params) {
  check_indexed(g, states);
  std::vector<NodeState> next(states.begin(), states.end());
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (!states[i].online) continue;
    const double rate = node_rate(g, states, i, params.alpha).rate;
    if (rate == 0.0) continue;
    next[i].lambda = snap_unit(logistic_advance(states[i].lambda, params.alpha, rate, params.dt));
  }
  return next;
}

std::vector<double> TimeSeries::series(std::string_view node) const {
  const auto it = std::find(nodes.begin(), nodes.end(), node);
  if (it == nodes.end()) throw LookupError(std::string(node));
  const auto k = static_cast<std::size_t>(it - nodes.begin());
  std::vector<double> out;
  out.reserve(snapshots.size());
  for (const auto& snap : snapshots) out.push_back(snap.lambda[k]);
  return out;
}

std::vector<NodeState> align_states(const SocialGraph& g, std::span<const NodeState> initial) {
  std::vector<const NodeState*> slots(g.node_count(), nullptr);
  for (const auto& s : initial) {
    s.validate();
    const auto idx = g.find(s.node);
    if (!idx) throw ValidationError("states", s.node, "node is not in the graph");
    if (slots[*idx] != nullptr) throw ValidationError("states", s.node, "duplicate node state");
    slots[*idx] = &s;
  }
  std::vector<NodeState> aligned;
  aligned.reserve(g.node_count());
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (slots[i] == nullptr) throw ValidationError("states", g.id(i), "graph node has no state");
    aligned.push_back(*slots[i]);
  }
  return aligned;
}

namespace {

Snapshot take_snapshot(std::span<const NodeState> states, double alpha) {
  Snapshot snap;
  snap.lambda.reserve(states.size());
  snap.spreading.reserve(states.size());
  snap.online.reserve(states.size());
  for (const auto& s : states) {
    snap.lambda.push_back(s.lambda);
    snap.spreading.push_back(is_spreading(s, alpha));
    snap.online.push_back(s.online);
  }
  return snap;
}

}  // namespace

TimeSeries simulate(const SocialGraph& g, std::span<const NodeState> initial,
                    const SimParams& params) {
  params.validate();
  std::vector<NodeState> states = align_states(g, initial);

  TimeSeries ts;
  ts.nodes.assign(g.ids().begin(), g.ids().end());
  ts.alpha = params.alpha;
  ts.dt = params.dt;
  ts.snapshots.reserve(static_cast<std::size_t>(params.steps) + 1);
  ts.snapshots.push_back(take_snapshot(states, params.alpha));
  for (int n = 0; n < params.steps; ++n) {
    states = step(g, states, params);
    ts.snapshots.push_back(take_snapshot(states, params.alpha));
  }
  return ts;
}

}  // namespace misinfo
