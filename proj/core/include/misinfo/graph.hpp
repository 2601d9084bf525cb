#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace misinfo {

using NodeIndex = std::uint32_t;

/// Undirected simple graph over opaque string node ids.
///
/// Nodes are stored in lexicographic id order, so `NodeIndex` values are
/// stable for a given node set regardless of the order edges were added.
/// Adjacency lists are sorted. The graph is immutable once built and can be
/// read from any number of threads.
class SocialGraph {
 public:
  class Builder;

  SocialGraph() = default;

  std::size_t node_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Node ids in index order (lexicographic).
  std::span<const std::string> ids() const noexcept { return ids_; }
  const std::string& id(NodeIndex i) const { return ids_.at(i); }

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Throws LookupError for unknown ids.
  NodeIndex index_of(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }

  std::span<const NodeIndex> neighbors(NodeIndex i) const { return adjacency_.at(i); }
  bool adjacent(NodeIndex i, NodeIndex j) const;

  std::size_t degree(NodeIndex i) const { return adjacency_.at(i).size(); }
  std::size_t degree(std::string_view id) const { return degree(index_of(id)); }

  /// Number of third-party nodes adjacent to both i and j. Throws
  /// InvalidArgument when i == j.
  std::size_t mutual_count(NodeIndex i, NodeIndex j) const;
  std::size_t mutual_count(std::string_view i, std::string_view j) const;

  /// Trust coefficient 2*Mut(i,j) / (k_i + k_j); 0 when both nodes are
  /// isolated. Throws InvalidArgument when i == j.
  double trust(NodeIndex i, NodeIndex j) const;
  double trust(std::string_view i, std::string_view j) const;

  /// Edges as (lower index, higher index) pairs in ascending order.
  std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;

  friend bool operator==(const SocialGraph&, const SocialGraph&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Accumulates nodes and edges, then freezes them into a SocialGraph.
class SocialGraph::Builder {
 public:
  Builder& add_node(std::string id);
  /// Adds an undirected edge, creating endpoints as needed. Duplicate edges
  /// (in either orientation) are ignored. Throws ValidationError on a
  /// self-loop.
  Builder& add_edge(std::string a, std::string b);

  SocialGraph build() const;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

/// Parses an edge-list CSV with header `source,target`. Rows with an empty
/// target declare isolated nodes; blank lines are skipped. `source_name`
/// is used in error messages.
SocialGraph load_edge_list(std::istream& in, std::string_view source_name = "<edge list>");
SocialGraph load_edge_list_file(const std::filesystem::path& path);

/// Writes the graph back as an edge-list CSV (isolated nodes as `id,` rows).
void write_edge_list(std::ostream& out, const SocialGraph& g);

}  // namespace misinfo
