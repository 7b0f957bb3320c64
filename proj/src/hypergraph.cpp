#include "ncilab/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ncilab/error.hpp"

namespace ncilab {

namespace {

void check_vertex_count(std::size_t n) {
  if (n > kMaxVertices) {
    throw Error(ErrorKind::BudgetExceeded,
                "at most " + std::to_string(kMaxVertices) +
                    " vertices are supported, got " + std::to_string(n));
  }
}

}  // namespace

void canonicalize_edges(std::vector<VertexSet>& edges) {
  std::sort(edges.begin(), edges.end(), lex_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void minimalize_edges(std::vector<VertexSet>& edges) {
  canonicalize_edges(edges);
  std::vector<VertexSet> kept;
  kept.reserve(edges.size());
  for (VertexSet e : edges) {
    bool dominated = false;
    for (VertexSet f : edges) {
      if (is_proper_subset(f, e)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(e);
  }
  edges = std::move(kept);
}

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       const std::vector<std::vector<std::string>>& edges) {
  check_vertex_count(vertices.size());
  for (const auto& v : vertices) {
    if (v.empty()) throw Error(ErrorKind::Schema, "vertex labels must be nonempty");
  }
  std::sort(vertices.begin(), vertices.end(), NaturalLess{});
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (vertices[k] == vertices[k - 1]) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate vertex label '" + vertices[k] + "'");
    }
  }
  vertices_ = std::move(vertices);
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.empty()) throw Error(ErrorKind::Schema, "edges must be nonempty");
    VertexSet s = 0;
    for (const auto& label : e) {
      const VertexSet b = bit(index_of(label));
      if (s & b) {
        throw Error(ErrorKind::DuplicateLabel,
                    "vertex '" + label + "' repeated inside one edge");
      }
      s |= b;
    }
    edges_.push_back(s);
  }
  canonicalize_edges(edges_);
}

Hypergraph Hypergraph::from_sets(std::vector<std::string> vertices,
                                 std::vector<VertexSet> edges) {
  check_vertex_count(vertices.size());
  Hypergraph g;
  g.vertices_ = std::move(vertices);
  const VertexSet all = g.all_vertices();
  for (VertexSet e : edges) {
    if (e == 0 || !is_subset(e, all)) {
      throw Error(ErrorKind::Internal, "edge outside the vertex set");
    }
  }
  canonicalize_edges(edges);
  g.edges_ = std::move(edges);
  return g;
}

std::optional<std::size_t> Hypergraph::find(std::string_view label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label, NaturalLess{});
  if (it == vertices_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Hypergraph::index_of(std::string_view label) const {
  if (auto k = find(label)) return *k;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
}

VertexSet Hypergraph::set_of(std::span<const std::string> labels) const {
  VertexSet s = 0;
  for (const auto& label : labels) s |= bit(index_of(label));
  return s;
}

std::vector<std::string> Hypergraph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  for (std::size_t k : indices_of(s)) out.push_back(vertices_.at(k));
  return out;
}

std::vector<std::vector<std::string>> Hypergraph::edge_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(edges_.size());
  for (VertexSet e : edges_) out.push_back(labels_of(e));
  return out;
}

bool Hypergraph::has_edge(VertexSet e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, lex_less);
}

bool Hypergraph::is_minimal() const {
  for (VertexSet e : edges_) {
    for (VertexSet f : edges_) {
      if (is_proper_subset(f, e)) return false;
    }
  }
  return true;
}

bool Hypergraph::is_simple_graph() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](VertexSet e) { return cardinality(e) == 2; });
}

VertexSet Hypergraph::support() const {
  return std::accumulate(edges_.begin(), edges_.end(), VertexSet{0},
                         [](VertexSet acc, VertexSet e) { return acc | e; });
}

Hypergraph restrict_vertices(const Hypergraph& g, VertexSet keep,
                             std::vector<VertexSet> edges) {
  std::vector<std::string> labels = g.labels_of(keep);
  for (VertexSet& e : edges) e = compress(e, keep);
  return Hypergraph::from_sets(std::move(labels), std::move(edges));
}

Hypergraph min_reduce(const Hypergraph& g) {
  std::vector<VertexSet> edges = g.edges();
  minimalize_edges(edges);
  return Hypergraph::from_sets(g.vertices(), std::move(edges));
}

Hypergraph induced_sub(const Hypergraph& g, VertexSet vs) {
  if (!is_subset(vs, g.all_vertices())) {
    throw Error(ErrorKind::UnknownVertex, "vertex subset outside the hypergraph");
  }
  std::vector<VertexSet> edges;
  for (VertexSet e : g.edges()) {
    if (is_subset(e, vs)) edges.push_back(e);
  }
  return restrict_vertices(g, vs, std::move(edges));
}

Hypergraph induced_sub(const Hypergraph& g, std::span<const std::string> vs) {
  return induced_sub(g, g.set_of(vs));
}

Hypergraph weak_induced_sub(const Hypergraph& g, VertexSet vs) {
  if (!is_subset(vs, g.all_vertices())) {
    throw Error(ErrorKind::UnknownVertex, "vertex subset outside the hypergraph");
  }
  std::vector<VertexSet> edges;
  for (VertexSet e : g.edges()) {
    if (VertexSet r = e & vs; r != 0) edges.push_back(r);
  }
  return restrict_vertices(g, vs, std::move(edges));
}

Hypergraph weak_induced_sub(const Hypergraph& g, std::span<const std::string> vs) {
  return weak_induced_sub(g, g.set_of(vs));
}

Hypergraph invert(const Hypergraph& g, std::string_view v) {
  const std::size_t k = g.index_of(v);
  if (g.has_edge(bit(k))) {
    throw Error(ErrorKind::UnitIdeal,
                "inverting at '" + std::string(v) + "' removes the 1-edge {" +
                    std::string(v) + "}; the substituted ideal is (1)");
  }
  return min_reduce(weak_induced_sub(g, g.all_vertices() & ~bit(k)));
}

Hypergraph skeleton(const Hypergraph& g) {
  std::vector<VertexSet> edges;
  for (VertexSet e : g.edges()) {
    if (cardinality(e) == 2) edges.push_back(e);
  }
  return Hypergraph::from_sets(g.vertices(), std::move(edges));
}

VertexSet two_neighbor_set(const Hypergraph& g, std::size_t v) {
  VertexSet out = 0;
  for (VertexSet e : g.edges()) {
    if (cardinality(e) == 2 && (e & bit(v))) out |= e & ~bit(v);
  }
  return out;
}

std::vector<std::string> two_neighbors(const Hypergraph& g, std::string_view v) {
  return g.labels_of(two_neighbor_set(g, g.index_of(v)));
}

Hypergraph enlarge_edges(const Hypergraph& g, std::string_view v) {
  const VertexSet b = bit(g.index_of(v));
  std::vector<VertexSet> edges;
  edges.reserve(g.edge_count());
  for (VertexSet e : g.edges()) edges.push_back(e | b);
  return Hypergraph::from_sets(g.vertices(), std::move(edges));
}

namespace {

struct IsoSearch {
  const Hypergraph& a;
  const Hypergraph& b;
  std::vector<int> deg_a, deg_b;
  std::vector<std::size_t> order;  // vertices of a, most constrained first
  std::vector<int> map;            // a-index -> b-index
  VertexSet used = 0;
  std::set<VertexSet> b_edges;

  IsoSearch(const Hypergraph& a_, const Hypergraph& b_) : a(a_), b(b_) {
    deg_a = degrees(a);
    deg_b = degrees(b);
    order.resize(a.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return deg_a[x] > deg_a[y]; });
    map.assign(a.vertex_count(), -1);
    b_edges.insert(b.edges().begin(), b.edges().end());
  }

  static std::vector<int> degrees(const Hypergraph& g) {
    std::vector<int> d(g.vertex_count(), 0);
    for (VertexSet e : g.edges()) {
      for (std::size_t k : indices_of(e)) d[k] += 1 + 8 * cardinality(e);
    }
    return d;
  }

  // Every edge of a whose vertices are all mapped must map onto an edge of b.
  bool consistent(VertexSet mapped) const {
    for (VertexSet e : a.edges()) {
      if (!is_subset(e, mapped)) continue;
      VertexSet image = 0;
      for (std::size_t k : indices_of(e)) image |= bit(static_cast<std::size_t>(map[k]));
      if (!b_edges.contains(image)) return false;
    }
    return true;
  }

  bool run(std::size_t depth, VertexSet mapped) {
    if (depth == order.size()) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < b.vertex_count(); ++y) {
      if ((used & bit(y)) || deg_b[y] != deg_a[x]) continue;
      map[x] = static_cast<int>(y);
      used |= bit(y);
      if (consistent(mapped | bit(x)) && run(depth + 1, mapped | bit(x))) return true;
      used &= ~bit(y);
      map[x] = -1;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  IsoSearch search(a, b);
  std::vector<int> da = search.deg_a;
  std::vector<int> db = search.deg_b;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // Edge counts agree and every edge of a maps onto an edge of b injectively,
  // so the edge map is a bijection.
  return search.run(0, 0);
}

std::string to_string(const Hypergraph& g) {
  std::ostringstream out;
  out << "V={";
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    out << (k ? "," : "") << g.vertices()[k];
  }
  out << "} E={";
  bool first = true;
  for (VertexSet e : g.edges()) {
    out << (first ? "" : ",") << "{";
    first = false;
    bool inner = true;
    for (const auto& label : g.labels_of(e)) {
      out << (inner ? "" : ",") << label;
      inner = false;
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

}  // namespace ncilab
