#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncilab/hypergraph.hpp"

namespace ncilab {

enum class NciStatus { CI, NCI, NEITHER };
enum class Route { Definitional, Structural, MillerStone };

std::string_view to_string(NciStatus status);
std::string_view to_string(Route route);

enum class WitnessKind {
  /// Inversion at `vertices[0]` is not a complete intersection.
  Vertex,
  /// (v1..v5) spanning a P5 or chair tree rooted at the leaf v1 (`detail`).
  ForbiddenSubgraph,
  /// A J1/J2 violation (`detail`), with witness `edges` and `vertices`.
  Joinability,
  /// Skeleton components, one per entry of `edges`.
  DisconnectedSkeleton,
};

std::string_view to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
  std::string detail;
};

struct NciVerdict {
  NciStatus status;
  Route route;
  std::optional<Witness> witness;
};

/// Edges pairwise disjoint.
bool is_ci(const Hypergraph& g);

/// A unit-ideal inversion (inverting at a 1-edge) counts as a complete
/// intersection. Everything about that convention goes through here.
bool inversion_is_ci(const Hypergraph& g, std::size_t v);

/// CI if is_ci; otherwise NCI iff every inversion is CI, else NEITHER with the
/// first failing vertex.
NciVerdict is_nci_definitional(const Hypergraph& g);

/// Joinable + connected NCI skeleton, checked with the forbidden-subgraph
/// test. 1-edges and their vertices are set aside first: they never change
/// the outcome of an inversion elsewhere.
NciVerdict is_nci_structural(const Hypergraph& g);

/// Forbidden-subgraph test on a connected simple graph with >= 3 vertices.
/// Throws NotAGraph, Disconnected or TooSmall.
NciVerdict is_nci_graph_miller_stone(const Hypergraph& g);

/// Lexicographically first (v1..v5) with v1 a leaf of the induced subgraph H
/// and H containing a spanning P5/chair tree rooted at v1, if any. Works on
/// any simple graph.
std::optional<Witness> find_forbidden_tuple(const Hypergraph& g);

/// Connected components of the skeleton (isolated vertices included).
std::vector<VertexSet> skeleton_components(const Hypergraph& g);

bool is_connected_graph(const Hypergraph& g);

// Enumeration -----------------------------------------------------------

/// Calls `visit` on every minimal hypergraph on vertices a, b, c, ... (first
/// k letters, k = 1..max_vertices) whose edges cover all k vertices. For
/// max_vertices >= 6 only simple graphs plus at most two hyperedges are
/// produced. Throws BudgetExceeded once more than `max_items` would be
/// emitted or if max_vertices > 7. `visit` returns false to stop early.
void enumerate_small(int max_vertices, const std::function<bool(const Hypergraph&)>& visit,
                     std::size_t max_items = 2'000'000);

/// Collects enumerate_small into a vector.
std::vector<Hypergraph> enumerate_small_list(int max_vertices, std::size_t max_items = 2'000'000);

/// Every labelled simple graph on exactly n vertices (a, b, ...), optionally
/// only the connected ones.
void enumerate_graphs(int n, bool connected_only,
                      const std::function<bool(const Hypergraph&)>& visit);

std::string vertex_name(std::size_t k);

}  // namespace ncilab
