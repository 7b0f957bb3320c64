#include "ncilab/nci.hpp"

#include <algorithm>
#include <array>

#include "ncilab/error.hpp"
#include "ncilab/weighted_graph.hpp"

namespace ncilab {

std::string_view to_string(NciStatus status) {
  switch (status) {
    case NciStatus::CI: return "CI";
    case NciStatus::NCI: return "NCI";
    case NciStatus::NEITHER: return "NEITHER";
  }
  return "?";
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Definitional: return "definitional";
    case Route::Structural: return "structural";
    case Route::MillerStone: return "miller_stone";
  }
  return "?";
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Vertex: return "vertex";
    case WitnessKind::ForbiddenSubgraph: return "forbidden_subgraph";
    case WitnessKind::Joinability: return "joinability";
    case WitnessKind::DisconnectedSkeleton: return "disconnected_skeleton";
  }
  return "?";
}

namespace {

bool disjoint_edges(const std::vector<VertexSet>& edges) {
  VertexSet seen = 0;
  for (VertexSet e : edges) {
    if (seen & e) return false;
    seen |= e;
  }
  return true;
}

std::vector<VertexSet> adjacency(const Hypergraph& g) {
  std::vector<VertexSet> adj(g.vertex_count(), 0);
  for (VertexSet e : g.edges()) {
    if (cardinality(e) != 2) continue;
    const std::size_t a = first_index(e);
    const std::size_t b = first_index(e & (e - 1));
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  return adj;
}

std::vector<VertexSet> components_of(const std::vector<VertexSet>& adj, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left != 0) {
    VertexSet comp = bit(first_index(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (std::size_t k : indices_of(frontier)) next |= adj[k];
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

}  // namespace

bool is_ci(const Hypergraph& g) { return disjoint_edges(g.edges()); }

bool inversion_is_ci(const Hypergraph& g, std::size_t v) {
  const VertexSet b = bit(v);
  // I(v=1) = (1) when v is a generator: treated as a complete intersection.
  if (g.has_edge(b)) return true;
  std::vector<VertexSet> edges;
  edges.reserve(g.edge_count());
  for (VertexSet e : g.edges()) {
    if (VertexSet r = e & ~b; r != 0) edges.push_back(r);
  }
  minimalize_edges(edges);
  return disjoint_edges(edges);
}

NciVerdict is_nci_definitional(const Hypergraph& g) {
  if (is_ci(g)) return {NciStatus::CI, Route::Definitional, std::nullopt};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!inversion_is_ci(g, v)) {
      Witness w{WitnessKind::Vertex, {g.vertices()[v]}, {}, "inversion is not a complete intersection"};
      return {NciStatus::NEITHER, Route::Definitional, std::move(w)};
    }
  }
  return {NciStatus::NCI, Route::Definitional, std::nullopt};
}

std::vector<VertexSet> skeleton_components(const Hypergraph& g) {
  return components_of(adjacency(g), g.all_vertices());
}

bool is_connected_graph(const Hypergraph& g) {
  return g.vertex_count() > 0 && skeleton_components(g).size() == 1;
}

std::optional<Witness> find_forbidden_tuple(const Hypergraph& g) {
  const std::vector<VertexSet> adj = adjacency(g);
  const std::size_t n = g.vertex_count();
  std::optional<std::array<std::size_t, 5>> best;
  const char* best_tree = "";
  auto offer = [&](std::array<std::size_t, 5> t, const char* tree) {
    if (!best || t < *best) {
      best = t;
      best_tree = tree;
    }
  };
  auto edge = [&](std::size_t a, std::size_t b) { return (adj[a] & bit(b)) != 0; };

  std::array<std::size_t, 5> c{};
  // All 5-subsets in lexicographic order.
  for (c[0] = 0; c[0] < n; ++c[0])
    for (c[1] = c[0] + 1; c[1] < n; ++c[1])
      for (c[2] = c[1] + 1; c[2] < n; ++c[2])
        for (c[3] = c[2] + 1; c[3] < n; ++c[3])
          for (c[4] = c[3] + 1; c[4] < n; ++c[4]) {
            VertexSet h = 0;
            for (std::size_t x : c) h |= bit(x);
            for (std::size_t v1 : c) {
              const VertexSet nb = adj[v1] & h;
              if (cardinality(nb) != 1) continue;
              const std::size_t v2 = first_index(nb);
              std::array<std::size_t, 3> rest{};
              std::size_t r = 0;
              for (std::size_t x : c) {
                if (x != v1 && x != v2) rest[r++] = x;
              }
              // P5 rooted at v1: v1-v2-x-y-z.
              std::array<std::size_t, 3> p = rest;
              do {
                if (edge(v2, p[0]) && edge(p[0], p[1]) && edge(p[1], p[2])) {
                  offer({v1, v2, p[0], p[1], p[2]}, "P5");
                }
              } while (std::next_permutation(p.begin(), p.end()));
              // Chair rooted at v1: v1-v2-v3 with leaves v4, v5 on v3.
              for (std::size_t k = 0; k < 3; ++k) {
                const std::size_t v3 = rest[k];
                const std::size_t v4 = rest[(k + 1) % 3];
                const std::size_t v5 = rest[(k + 2) % 3];
                if (edge(v2, v3) && edge(v3, v4) && edge(v3, v5)) {
                  offer({v1, v2, v3, std::min(v4, v5), std::max(v4, v5)}, "chair");
                }
              }
            }
          }
  if (!best) return std::nullopt;
  Witness w{WitnessKind::ForbiddenSubgraph, {}, {}, best_tree};
  for (std::size_t x : *best) w.vertices.push_back(g.vertices()[x]);
  return w;
}

NciVerdict is_nci_graph_miller_stone(const Hypergraph& g) {
  if (!g.is_simple_graph()) {
    throw Error(ErrorKind::NotAGraph, "the forbidden-subgraph test needs a simple graph");
  }
  if (g.vertex_count() < 3) {
    throw Error(ErrorKind::TooSmall, "the forbidden-subgraph test needs at least 3 vertices");
  }
  if (!is_connected_graph(g)) {
    throw Error(ErrorKind::Disconnected, "the forbidden-subgraph test needs a connected graph");
  }
  if (auto w = find_forbidden_tuple(g)) {
    return {NciStatus::NEITHER, Route::MillerStone, std::move(w)};
  }
  return {NciStatus::NCI, Route::MillerStone, std::nullopt};
}

NciVerdict is_nci_structural(const Hypergraph& g) {
  if (is_ci(g)) return {NciStatus::CI, Route::Structural, std::nullopt};

  VertexSet one_edge_vertices = 0;
  for (VertexSet e : g.edges()) {
    if (cardinality(e) == 1) one_edge_vertices |= e;
  }

  const JoinabilityReport report = check_joinable(g);
  if (!report.joinable) {
    const JoinViolation& v = report.violations.front();
    Witness w{WitnessKind::Joinability, v.vertices, v.edges, v.rule == JoinRule::J1 ? "J1" : "J2"};
    return {NciStatus::NEITHER, Route::Structural, std::move(w)};
  }

  const VertexSet rest = g.all_vertices() & ~one_edge_vertices;
  const Hypergraph skel = induced_sub(skeleton(g), rest);
  const std::vector<VertexSet> comps = skeleton_components(skel);
  if (comps.size() != 1) {
    Witness w{WitnessKind::DisconnectedSkeleton, {}, {}, "skeleton has several components"};
    for (VertexSet c : comps) w.edges.push_back(skel.labels_of(c));
    return {NciStatus::NEITHER, Route::Structural, std::move(w)};
  }
  if (auto w = find_forbidden_tuple(skel)) {
    return {NciStatus::NEITHER, Route::Structural, std::move(w)};
  }
  return {NciStatus::NCI, Route::Structural, std::nullopt};
}

}  // namespace ncilab
