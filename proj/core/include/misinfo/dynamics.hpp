#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "misinfo/graph.hpp"

namespace misinfo {

/// Coefficients of the logistic learning law for a single node.
struct LearningLaw {
  double alpha = 1.0;               ///< threshold and attractor, (0,1]
  double lambda0 = 1.0;             ///< initial level, (0,1]
  double mean_trust = 0.0;          ///< mean trust towards sources, [0,1]
  double mean_source_lambda = 0.0;  ///< mean level of the sources, [0,1]
  double b = 0.0;                   ///< integral coefficient, [0,1]

  /// Throws ValidationError naming the first out-of-range coefficient.
  void validate() const;
};

/// Closed-form misinformation level at time t:
///
///   xi * alpha*l0 / (l0 + (alpha - l0) * exp(-alpha * Tr * ls * B * t))
///
/// `online` plays the role of xi and multiplies the result literally, so an
/// offline node evaluates to 0 here (the simulation treats offline nodes
/// differently, see step()).
double lambda_closed_form(double t, bool online, const LearningLaw& law);

/// Advances a level by `dt` under the logistic law with a frozen growth
/// `rate` (rate already includes the alpha factor).
double logistic_advance(double lambda, double alpha, double rate, double dt) noexcept;

struct NodeState {
  std::string node;
  double lambda = 0.0;   ///< current level, [0,1]
  double lambda0 = 1.0;  ///< initial level, (0,1]
  bool online = true;
  double b_coeff = 0.0;  ///< integral coefficient, [0,1]

  void validate() const;

  friend bool operator==(const NodeState&, const NodeState&) = default;
};

struct SimParams {
  double alpha = 1.0;
  double dt = 1.0;
  int steps = 1;

  void validate() const;

  friend bool operator==(const SimParams&, const SimParams&) = default;
};

/// A node spreads when it is online and its level has reached alpha.
inline bool is_spreading(const NodeState& s, double alpha) noexcept {
  return s.online && s.lambda >= alpha;
}

/// Ids of spreading nodes, in input order.
std::vector<std::string> spreaders(std::span<const NodeState> states, double alpha);

struct NodeRate {
  double rate = 0.0;
  double mean_trust = 0.0;
  double mean_source_lambda = 0.0;
};

/// Growth rate of node i from its spreading neighbours:
/// alpha * mean trust * mean source level * B_i, or all zeros when no
/// neighbour spreads. `states` is indexed like the graph (states[k] belongs
/// to g.id(k)).
NodeRate node_rate(const SocialGraph& g, std::span<const NodeState> states, NodeIndex i,
                   double alpha);
NodeRate node_rate(const SocialGraph& g, std::span<const NodeState> states, std::string_view id,
                   double alpha);

/// One synchronous update. Every rate is computed from `states`, then each
/// online node with a positive rate is advanced by logistic_advance; all
/// other nodes keep their level. `states` must be indexed like the graph.
std::vector<NodeState> step(const SocialGraph& g, std::span<const NodeState> states,
                            const SimParams& params);

struct Snapshot {
  std::vector<double> lambda;
  std::vector<bool> spreading;
  std::vector<bool> online;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

/// Per-node levels recorded at steps 0..steps. Node order follows the graph
/// (lexicographic ids).
struct TimeSeries {
  std::vector<std::string> nodes;
  double alpha = 1.0;
  double dt = 1.0;
  std::vector<Snapshot> snapshots;

  double time(std::size_t step_index) const noexcept {
    return static_cast<double>(step_index) * dt;
  }
  /// Level history of one node. Throws LookupError for unknown ids.
  std::vector<double> series(std::string_view node) const;

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

/// Reorders `initial` into graph order. Throws ValidationError when the node
/// sets differ or a state is invalid.
std::vector<NodeState> align_states(const SocialGraph& g, std::span<const NodeState> initial);

/// Runs params.steps synchronous steps from `initial` (any order; one state
/// per graph node) and records every snapshot including step 0.
TimeSeries simulate(const SocialGraph& g, std::span<const NodeState> initial,
                    const SimParams& params);

}  // namespace misinfo
