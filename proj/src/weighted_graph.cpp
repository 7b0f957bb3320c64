#include "ncilab/weighted_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ncilab/error.hpp"
#include "ncilab/nci.hpp"

namespace ncilab {

JoinabilityReport check_joinable(const Hypergraph& g) {
  JoinabilityReport report;
  std::vector<VertexSet> hyper;
  for (VertexSet e : g.edges()) {
    if (cardinality(e) >= 3) hyper.push_back(e);
  }
  for (std::size_t a = 0; a < hyper.size(); ++a) {
    for (std::size_t b = a + 1; b < hyper.size(); ++b) {
      if (VertexSet common = hyper[a] & hyper[b]; common != 0) {
        report.violations.push_back(
            {JoinRule::J1, {g.labels_of(hyper[a]), g.labels_of(hyper[b])}, g.labels_of(common)});
      }
    }
  }
  for (VertexSet h : hyper) {
    const std::vector<std::size_t> members = indices_of(h);
    const VertexSet first = two_neighbor_set(g, members.front());
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (two_neighbor_set(g, members[k]) != first) {
        report.violations.push_back({JoinRule::J2,
                                     {g.labels_of(h)},
                                     {g.vertices()[members.front()], g.vertices()[members[k]]}});
        break;
      }
    }
  }
  report.joinable = report.violations.empty();
  return report;
}

WeightedGraph::WeightedGraph(std::vector<WeightedVertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorKind::BudgetExceeded, "too many vertices");
  }
  std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) {
    return natural_less(a.label, b.label);
  });
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k].label.empty()) throw Error(ErrorKind::Schema, "vertex labels must be nonempty");
    if (vertices[k].weight < 1) {
      throw Error(ErrorKind::Schema, "vertex '" + vertices[k].label + "' has weight < 1");
    }
    if (k > 0 && vertices[k].label == vertices[k - 1].label) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate vertex label '" + vertices[k].label + "'");
    }
  }
  vertices_ = std::move(vertices);
  adjacency_.assign(vertices_.size(), 0);
  for (const auto& [a, b] : edges) {
    const std::size_t ia = index_of(a);
    const std::size_t ib = index_of(b);
    if (ia == ib) throw Error(ErrorKind::Schema, "loop at vertex '" + a + "'");
    adjacency_[ia] |= bit(ib);
    adjacency_[ib] |= bit(ia);
  }
}

std::size_t WeightedGraph::index_of(std::string_view label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label,
                             [](const WeightedVertex& v, std::string_view l) {
                               return natural_less(v.label, l);
                             });
  if (it == vertices_.end() || it->label != label) {
    throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::pair<std::string, std::string>> WeightedGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < vertices_.size(); ++a) {
    for (std::size_t b : indices_of(adjacency_[a])) {
      if (a < b) out.emplace_back(vertices_[a].label, vertices_[b].label);
    }
  }
  return out;
}

std::size_t WeightedGraph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet s : adjacency_) twice += static_cast<std::size_t>(cardinality(s));
  return twice / 2;
}

namespace {

std::string joined_label(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) out += '+';
    out += labels[k];
  }
  return out;
}

void require_joinable(const Hypergraph& g) {
  const JoinabilityReport r = check_joinable(g);
  if (!r.joinable) {
    const JoinViolation& v = r.violations.front();
    throw Error(ErrorKind::NotJoinable, std::string("hypergraph violates ") +
                                            (v.rule == JoinRule::J1 ? "J1" : "J2"));
  }
}

}  // namespace

Hypergraph join_at(const Hypergraph& g, std::span<const std::string> h) {
  const VertexSet hs = g.set_of(h);
  if (cardinality(hs) < 3 || !g.has_edge(hs)) {
    throw Error(ErrorKind::NotAHyperedge, "not a hyperedge of the hypergraph");
  }
  require_joinable(g);
  const std::string fresh = joined_label(g.labels_of(hs));
  std::vector<std::string> vertices = g.labels_of(g.all_vertices() & ~hs);
  vertices.push_back(fresh);
  std::vector<std::vector<std::string>> edges;
  for (VertexSet e : g.edges()) {
    if ((e & hs) == 0) edges.push_back(g.labels_of(e));
  }
  VertexSet common = g.all_vertices() & ~hs;
  for (std::size_t x : indices_of(hs)) common &= two_neighbor_set(g, x);
  for (std::size_t w : indices_of(common)) edges.push_back({fresh, g.vertices()[w]});
  return Hypergraph(std::move(vertices), edges);
}

WeightedGraph join_all(const Hypergraph& g, const std::vector<std::size_t>& hyperedge_order) {
  std::vector<std::vector<std::string>> hyper;
  for (VertexSet e : g.edges()) {
    if (cardinality(e) == 1) {
      throw Error(ErrorKind::NotJoinable, "1-edges have no weighted-graph form");
    }
    if (cardinality(e) >= 3) hyper.push_back(g.labels_of(e));
  }
  require_joinable(g);
  std::vector<std::size_t> order = hyperedge_order;
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected(hyper.size());
  std::iota(expected.begin(), expected.end(), std::size_t{0});
  if (sorted != expected) throw Error(ErrorKind::Schema, "hyperedge order is not a permutation");

  std::map<std::string, int> weights;
  Hypergraph current = g;
  for (std::size_t k : order) {
    current = join_at(current, hyper[k]);
    weights[joined_label(hyper[k])] = static_cast<int>(hyper[k].size());
  }
  std::vector<WeightedVertex> vertices;
  for (const auto& label : current.vertices()) {
    auto it = weights.find(label);
    vertices.push_back({label, it == weights.end() ? 1 : it->second});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : current.edge_labels()) edges.emplace_back(e[0], e[1]);
  return WeightedGraph(std::move(vertices), edges);
}

WeightedGraph join_all(const Hypergraph& g) {
  std::size_t hyperedges = 0;
  for (VertexSet e : g.edges()) hyperedges += cardinality(e) >= 3 ? 1 : 0;
  std::vector<std::size_t> order(hyperedges);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return join_all(g, order);
}

Hypergraph splay(const WeightedGraph& w) {
  std::vector<std::vector<std::string>> copies(w.vertex_count());
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
  for (std::size_t k = 0; k < w.vertex_count(); ++k) {
    const auto& v = w.vertices()[k];
    if (v.weight == 1) {
      copies[k].push_back(v.label);
    } else {
      for (int c = 1; c <= v.weight; ++c) copies[k].push_back(v.label + "_" + std::to_string(c));
      edges.push_back(copies[k]);
    }
    vertices.insert(vertices.end(), copies[k].begin(), copies[k].end());
  }
  for (std::size_t a = 0; a < w.vertex_count(); ++a) {
    for (std::size_t b : indices_of(w.neighbors(a))) {
      if (b <= a) continue;
      for (const auto& x : copies[a])
        for (const auto& y : copies[b]) edges.push_back({x, y});
    }
  }
  return Hypergraph(std::move(vertices), edges);
}

Hypergraph underlying_graph(const WeightedGraph& w) {
  std::vector<std::string> vertices;
  for (const auto& v : w.vertices()) vertices.push_back(v.label);
  std::vector<std::vector<std::string>> edges;
  for (const auto& [a, b] : w.edges()) edges.push_back({a, b});
  return Hypergraph(std::move(vertices), edges);
}

bool is_ci_weighted(const WeightedGraph& w) {
  for (std::size_t k = 0; k < w.vertex_count(); ++k) {
    const VertexSet nb = w.neighbors(k);
    if (nb == 0) continue;
    if (cardinality(nb) != 1 || w.weight(k) != 1) return false;
    const std::size_t other = first_index(nb);
    if (cardinality(w.neighbors(other)) != 1 || w.weight(other) != 1) return false;
  }
  return true;
}

namespace {

bool connected(const WeightedGraph& w) {
  if (w.vertex_count() == 0) return false;
  VertexSet comp = 1;
  VertexSet frontier = 1;
  while (frontier != 0) {
    VertexSet next = 0;
    for (std::size_t k : indices_of(frontier)) next |= w.neighbors(k);
    next &= ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == low_bits(w.vertex_count());
}

// Calls `pred` on every ordered 4-path y1-y2-y3-y4 (as a subgraph); returns
// true as soon as it does.
template <typename Pred>
bool any_four_path(const WeightedGraph& w, Pred pred) {
  const std::size_t n = w.vertex_count();
  for (std::size_t y1 = 0; y1 < n; ++y1)
    for (std::size_t y2 : indices_of(w.neighbors(y1)))
      for (std::size_t y3 : indices_of(w.neighbors(y2) & ~bit(y1)))
        for (std::size_t y4 : indices_of(w.neighbors(y3) & ~bit(y1) & ~bit(y2)))
          if (pred(y1, y2, y3, y4)) return true;
  return false;
}

void require_three(const WeightedGraph& w) {
  if (w.vertex_count() < 3) {
    throw Error(ErrorKind::TooSmall, "the weighted criterion needs at least 3 vertices");
  }
}

}  // namespace

bool is_nci_weighted(const WeightedGraph& w) {
  require_three(w);
  if (is_ci_weighted(w) || !connected(w)) return false;
  const bool heavy_path = any_four_path(w, [&](std::size_t y1, std::size_t, std::size_t y3,
                                               std::size_t y4) {
    const bool leaf = (w.neighbors(y1) & (bit(y3) | bit(y4))) == 0;
    return leaf && (w.weight(y3) > 1 || w.weight(y4) > 1);
  });
  if (heavy_path) return false;
  return !find_forbidden_tuple(underlying_graph(w)).has_value();
}

bool weighted_criterion_naive(const WeightedGraph& w) {
  require_three(w);
  if (is_ci_weighted(w) || !connected(w)) return false;
  const bool heavy_end = any_four_path(w, [&](std::size_t y1, std::size_t, std::size_t,
                                              std::size_t y4) {
    return w.weight(y1) > 1 || w.weight(y4) > 1;
  });
  if (heavy_end) return false;
  return !find_forbidden_tuple(underlying_graph(w)).has_value();
}

namespace {

struct WeightedIso {
  const WeightedGraph& a;
  const WeightedGraph& b;
  std::vector<std::size_t> map;
  VertexSet used = 0;

  static long signature(const WeightedGraph& g, std::size_t k) {
    return static_cast<long>(cardinality(g.neighbors(k))) * 1000 + g.weight(k);
  }

  bool run(std::size_t x) {
    if (x == a.vertex_count()) return true;
    for (std::size_t y = 0; y < b.vertex_count(); ++y) {
      if ((used & bit(y)) || signature(a, x) != signature(b, y)) continue;
      bool ok = true;
      for (std::size_t p = 0; p < x && ok; ++p) {
        const bool ea = (a.neighbors(x) & bit(p)) != 0;
        const bool eb = (b.neighbors(y) & bit(map[p])) != 0;
        ok = ea == eb;
      }
      if (!ok) continue;
      map[x] = y;
      used |= bit(y);
      if (run(x + 1)) return true;
      used &= ~bit(y);
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<long> sa, sb;
  for (std::size_t k = 0; k < a.vertex_count(); ++k) {
    sa.push_back(WeightedIso::signature(a, k));
    sb.push_back(WeightedIso::signature(b, k));
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  WeightedIso iso{a, b, std::vector<std::size_t>(a.vertex_count()), 0};
  return iso.run(0);
}

}  // namespace ncilab
