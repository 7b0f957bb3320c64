#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncilab/labels.hpp"

namespace ncilab {

/// A finite hypergraph on labelled vertices.
///
/// Vertices are kept sorted under `natural_less`, and an edge is the bit set
/// of the vertex indices it contains. Edges are kept sorted (lexicographic on
/// their index sequences) and duplicate-free, so two hypergraphs compare equal
/// exactly when they have the same vertex labels and the same edge sets.
/// A hypergraph is not required to be minimal; see `is_minimal`.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates labels (nonempty, unique) and that every edge is a nonempty
  /// subset of `vertices`.
  Hypergraph(std::vector<std::string> vertices,
             const std::vector<std::vector<std::string>>& edges);

  /// `vertices` must already be sorted and unique; edges are canonicalized.
  static Hypergraph from_sets(std::vector<std::string> vertices,
                              std::vector<VertexSet> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  VertexSet all_vertices() const noexcept { return low_bits(vertices_.size()); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view label) const;
  VertexSet set_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;
  std::vector<std::vector<std::string>> edge_labels() const;

  bool has_edge(VertexSet e) const;
  /// No edge is a proper subset of another.
  bool is_minimal() const;
  /// Every edge has exactly two vertices.
  bool is_simple_graph() const;
  /// Union of all edges.
  VertexSet support() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<VertexSet> edges_;
};

/// Sorts and deduplicates a list of edges (lexicographic index order).
void canonicalize_edges(std::vector<VertexSet>& edges);

/// Drops every edge that properly contains another edge, in place.
void minimalize_edges(std::vector<VertexSet>& edges);

/// Restricts `g` to the vertex subset `keep`, re-indexing vertices.
/// Edges are passed through `compress` and must already lie inside `keep`.
Hypergraph restrict_vertices(const Hypergraph& g, VertexSet keep,
                             std::vector<VertexSet> edges);

Hypergraph min_reduce(const Hypergraph& g);

Hypergraph induced_sub(const Hypergraph& g, VertexSet vs);
Hypergraph induced_sub(const Hypergraph& g, std::span<const std::string> vs);

/// Edges are intersected with `vs`; empty intersections are dropped.
Hypergraph weak_induced_sub(const Hypergraph& g, VertexSet vs);
Hypergraph weak_induced_sub(const Hypergraph& g, std::span<const std::string> vs);

/// Vertex inversion: min_reduce(weak_induced_sub(g, V \ {v})).
/// Throws UnitIdeal when {v} is itself an edge.
Hypergraph invert(const Hypergraph& g, std::string_view v);

/// Same vertex set, keeping only the 2-edges.
Hypergraph skeleton(const Hypergraph& g);

VertexSet two_neighbor_set(const Hypergraph& g, std::size_t v);
std::vector<std::string> two_neighbors(const Hypergraph& g, std::string_view v);

/// Adds `v` to every edge (the result is usually not minimal).
Hypergraph enlarge_edges(const Hypergraph& g, std::string_view v);

/// Hypergraph isomorphism by backtracking over vertex bijections with degree
/// pruning. Intended for the small instances used in round-trip checks.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

std::string to_string(const Hypergraph& g);

}  // namespace ncilab
