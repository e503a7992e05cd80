#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace kgbs {

// Dense non-negative node index, unique within a graph.
using NodeId = std::uint32_t;
using NodeSet = std::unordered_set<NodeId>;

// Shortest-hop distance. An empty optional means no qualifying node is
// reachable; there is deliberately no magic number for "infinite".
using Distance = std::optional<std::uint32_t>;

// Immutable undirected topic graph with optional ground-truth bias labels
// (y(v) in {0,1}, present only for training and simulation) and optional
// human-readable titles.
//
// Invariants, checked by validate():
//   - adjacency is symmetric, self-loop free, duplicate free, sorted ascending
//   - if labels are present there is exactly one label in {0,1} per node
//
// Safe for concurrent reads after construction.
class KnowledgeGraph {
 public:
  // Builds from an edge list. Edge direction is discarded (traversal only
  // needs reachability among related topics); self-loops are dropped and
  // duplicates folded. Endpoints must be < node_count.
  static KnowledgeGraph from_edges(NodeId node_count,
                                   const std::vector<std::pair<NodeId, NodeId>>& edges);

  NodeId node_count() const noexcept { return static_cast<NodeId>(adj_.size()); }
  std::uint64_t edge_count() const noexcept { return edge_count_; }

  // Sorted ascending; empty for isolated nodes. Throws std::out_of_range.
  const std::vector<NodeId>& neighbors(NodeId v) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  // Ground-truth bias verdict y(v). Throws StateError when labels are absent.
  std::uint8_t label(NodeId v) const;
  const std::vector<std::uint8_t>& labels() const;
  void set_labels(std::vector<std::uint8_t> labels);

  bool has_titles() const noexcept { return !titles_.empty(); }
  const std::unordered_map<NodeId, std::string>& titles() const noexcept { return titles_; }
  void set_titles(std::unordered_map<NodeId, std::string> titles);

  // Full-scan structural check of the invariants above.
  void validate() const;

  bool structurally_equal(const KnowledgeGraph& other) const;

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::uint8_t> labels_;  // empty when absent
  std::unordered_map<NodeId, std::string> titles_;
  std::uint64_t edge_count_ = 0;
};

// Loads the TSV formats:
//   edges.tsv   parent_id<TAB>child_id
//   labels.tsv  node_id<TAB>label          (label in {0,1})
//   titles.tsv  node_id<TAB>utf8-title     (optional)
// When a labels file is given it defines the node set (ids must be dense
// 0..n-1, one label each); otherwise the node count is the largest endpoint
// in the edges file plus one.
KnowledgeGraph load_graph(const std::string& edges_path,
                          const std::optional<std::string>& labels_path = std::nullopt,
                          const std::optional<std::string>& titles_path = std::nullopt);

// Writes the same formats back (each undirected edge once, smaller id first).
void save_graph(const KnowledgeGraph& g, const std::string& edges_path,
                const std::optional<std::string>& labels_path = std::nullopt);

// Breadth-first hop count from `from` to the nearest node u with y(u)=1 and
// u not in `tested`; 0 when `from` itself qualifies. Training-time only:
// throws StateError when the graph has no ground-truth labels.
Distance dist_to_nearest_untested_bias(const KnowledgeGraph& g, NodeId from,
                                       const NodeSet& tested);

}  // namespace kgbs
