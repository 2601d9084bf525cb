#include "misinfo/graph.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "misinfo/error.hpp"

namespace misinfo {

std::optional<NodeIndex> SocialGraph::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

NodeIndex SocialGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw LookupError(std::string(id));
}

bool SocialGraph::adjacent(NodeIndex i, NodeIndex j) const {
  const auto& adj = adjacency_.at(i);
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::size_t SocialGraph::mutual_count(NodeIndex i, NodeIndex j) const {
  if (i == j) throw InvalidArgument("mutual count requires two distinct nodes");
  const auto& a = adjacency_.at(i);
  const auto& b = adjacency_.at(j);
  // Sorted-list intersection. Neither list contains its own node, so an
  // edge i-j contributes nothing.
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::size_t SocialGraph::mutual_count(std::string_view i, std::string_view j) const {
  return mutual_count(index_of(i), index_of(j));
}

double SocialGraph::trust(NodeIndex i, NodeIndex j) const {
  const std::size_t mutual = mutual_count(i, j);
  const std::size_t degree_sum = degree(i) + degree(j);
  if (degree_sum == 0) return 0.0;
  return 2.0 * static_cast<double>(mutual) / static_cast<double>(degree_sum);
}

double SocialGraph::trust(std::string_view i, std::string_view j) const {
  return trust(index_of(i), index_of(j));
}

std::vector<std::pair<NodeIndex, NodeIndex>> SocialGraph::edges() const {
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  out.reserve(edge_count_);
  for (NodeIndex i = 0; i < adjacency_.size(); ++i) {
    for (NodeIndex j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

SocialGraph::Builder& SocialGraph::Builder::add_node(std::string id) {
  if (id.empty()) throw ValidationError("node", "node id must not be empty");
  nodes_.push_back(std::move(id));
  return *this;
}

SocialGraph::Builder& SocialGraph::Builder::add_edge(std::string a, std::string b) {
  if (a.empty() || b.empty()) throw ValidationError("edge", "node id must not be empty");
  if (a == b) throw ValidationError("edge", a, "self-loop is not allowed");
  edges_.emplace_back(std::move(a), std::move(b));
  return *this;
}

SocialGraph SocialGraph::Builder::build() const {
  SocialGraph g;
  g.ids_ = nodes_;
  for (const auto& [a, b] : edges_) {
    g.ids_.push_back(a);
    g.ids_.push_back(b);
  }
  std::sort(g.ids_.begin(), g.ids_.end());
  g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());

  g.adjacency_.resize(g.ids_.size());
  for (const auto& [a, b] : edges_) {
    const NodeIndex ia = g.index_of(a);
    const NodeIndex ib = g.index_of(b);
    g.adjacency_[ia].push_back(ib);
    g.adjacency_[ib].push_back(ia);
  }
  std::size_t half_edges = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    half_edges += adj.size();
  }
  g.edge_count_ = half_edges / 2;
  return g;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
}

}  // namespace

SocialGraph load_edge_list(std::istream& in, std::string_view source_name) {
  const std::string source(source_name);
  SocialGraph::Builder builder;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (trim(view).empty()) continue;

    const auto fields = split_commas(view);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != "source" || fields[1] != "target") {
        throw ParseError(source, line_no, "expected header 'source,target'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError(source, line_no,
                       "expected 2 columns, found " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(source, line_no, "empty source field");
    if (fields[1].empty()) {
      builder.add_node(std::string(fields[0]));
      continue;
    }
    if (fields[0] == fields[1]) {
      throw ValidationError("edge", std::string(fields[0]),
                            source + ":" + std::to_string(line_no) + ": self-loop is not allowed");
    }
    builder.add_edge(std::string(fields[0]), std::string(fields[1]));
  }
  if (in.bad()) throw IoError(source, "read failure");
  if (!header_seen) throw ParseError(source, std::nullopt, "missing header 'source,target'");
  return builder.build();
}

SocialGraph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open edge list");
  return load_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const SocialGraph& g) {
  out << "source,target\n";
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    if (g.degree(i) == 0) out << g.id(i) << ",\n";
  }
  for (const auto& [a, b] : g.edges()) out << g.id(a) << ',' << g.id(b) << '\n';
}

}  // namespace misinfo
