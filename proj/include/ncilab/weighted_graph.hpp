#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncilab/hypergraph.hpp"

namespace ncilab {

enum class JoinRule { J1, J2 };

struct JoinViolation {
  JoinRule rule;
  /// J1: the two intersecting hyperedges. J2: the hyperedge.
  std::vector<std::vector<std::string>> edges;
  /// J2: two members of the hyperedge with different 2-neighbor sets.
  std::vector<std::string> vertices;
};

struct JoinabilityReport {
  bool joinable = true;
  std::vector<JoinViolation> violations;
};

/// J1 (hyperedges pairwise disjoint) and J2 (members of a hyperedge share
/// their 2-neighbor set). One violation is reported per offending pair or
/// hyperedge, with the lexicographically first witnesses.
JoinabilityReport check_joinable(const Hypergraph& g);

struct WeightedVertex {
  std::string label;
  int weight = 1;
  friend bool operator==(const WeightedVertex&, const WeightedVertex&) = default;
};

/// Simple graph with positive integer vertex weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Throws on duplicate labels, loops, unknown endpoints or weights < 1.
  /// Repeated edges are merged.
  WeightedGraph(std::vector<WeightedVertex> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<WeightedVertex>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  /// Adjacency bit set of vertex k.
  VertexSet neighbors(std::size_t k) const { return adjacency_.at(k); }
  int weight(std::size_t k) const { return vertices_.at(k).weight; }
  std::size_t index_of(std::string_view label) const;
  std::vector<std::pair<std::string, std::string>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<WeightedVertex> vertices_;
  std::vector<VertexSet> adjacency_;
};

/// Collapses hyperedge `h` of a joinable hypergraph to the single vertex
/// named by joining h's labels with "+". The new vertex is adjacent to w iff
/// every member of h is. Throws NotAHyperedge / NotJoinable.
Hypergraph join_at(const Hypergraph& g, std::span<const std::string> h);

/// Joins every hyperedge, recording its cardinality as the vertex weight.
/// Hypergraphs with 1-edges have no weighted form and raise NotJoinable.
WeightedGraph join_all(const Hypergraph& g);

/// Same, but joining the hyperedges in the given order (a permutation of the
/// hyperedge list); used to check order independence.
WeightedGraph join_all(const Hypergraph& g, const std::vector<std::size_t>& hyperedge_order);

/// Each vertex of weight n > 1 becomes vertices label_1..label_n, each
/// adjacent to every neighbor, together with the edge {label_1..label_n}.
/// A weight-2 vertex therefore splays to an ordinary 2-edge.
Hypergraph splay(const WeightedGraph& w);

/// Every component is an isolated vertex or a single edge between two
/// weight-1 vertices.
bool is_ci_weighted(const WeightedGraph& w);

/// Weighted NCI criterion on graphs with at least 3 vertices (TooSmall
/// otherwise): not CI, connected, no 4-path y1-y2-y3-y4 with y1 a leaf of the
/// induced subgraph on {y1..y4} and y3 or y4 heavy, and the unweighted
/// Miller-Stone condition. Agrees with the definitional test on the splay.
bool is_nci_weighted(const WeightedGraph& w);

/// Not CI, connected, no 4-path subgraph with a heavy end, and Miller-Stone on
/// the unweighted graph. Misclassifies graphs such as the path a-b-c-d with b
/// heavy, which `is_nci_weighted` handles.
bool weighted_criterion_naive(const WeightedGraph& w);

/// Brute-force isomorphism preserving weights, pruned by (degree, weight).
bool isomorphic(const WeightedGraph& a, const WeightedGraph& b);

/// The underlying simple graph as a hypergraph (weights dropped).
Hypergraph underlying_graph(const WeightedGraph& w);

}  // namespace ncilab
