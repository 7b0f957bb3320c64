#include "ncilab/matching.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

#include "ncilab/error.hpp"

namespace ncilab {

namespace {

std::vector<VertexSet> adjacency(const Hypergraph& g, std::size_t max_vertices) {
  if (!g.is_simple_graph()) throw Error(ErrorKind::NotAGraph, "matching needs a simple graph");
  if (g.vertex_count() > max_vertices) {
    throw Error(ErrorKind::BudgetExceeded,
                "at most " + std::to_string(max_vertices) + " vertices are supported");
  }
  std::vector<VertexSet> adj(g.vertex_count(), 0);
  for (VertexSet e : g.edges()) {
    const std::size_t a = first_index(e);
    const std::size_t b = first_index(e & (e - 1));
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  return adj;
}

// f[S] = maximum matching of the subgraph induced on S.
std::vector<std::int8_t> matching_table(const std::vector<VertexSet>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::int8_t> f(std::size_t{1} << n, 0);
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
    const std::size_t v = first_index(s);
    const VertexSet rest = s & ~bit(v);
    std::int8_t best = f[rest];
    for (std::size_t u : indices_of(adj[v] & rest)) {
      best = std::max<std::int8_t>(best, static_cast<std::int8_t>(1 + f[rest & ~bit(u)]));
    }
    f[s] = best;
  }
  return f;
}

// Does the subgraph on the 5-set s contain a Hamiltonian cycle?
bool has_five_cycle(const std::vector<VertexSet>& adj, VertexSet s) {
  std::vector<std::size_t> v = indices_of(s);
  std::array<std::size_t, 4> rest{v[1], v[2], v[3], v[4]};
  do {
    std::size_t prev = v[0];
    bool ok = true;
    for (std::size_t x : rest) {
      if (!(adj[prev] & bit(x))) {
        ok = false;
        break;
      }
      prev = x;
    }
    if (ok && (adj[prev] & bit(v[0]))) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

bool is_induced_c5(const std::vector<VertexSet>& adj, VertexSet s) {
  for (std::size_t x : indices_of(s)) {
    if (cardinality(adj[x] & s) != 2) return false;
  }
  return has_five_cycle(adj, s);
}

VertexSet component_of(const std::vector<VertexSet>& adj, VertexSet within, std::size_t start) {
  VertexSet comp = bit(start);
  VertexSet frontier = comp;
  while (frontier != 0) {
    VertexSet next = 0;
    for (std::size_t k : indices_of(frontier)) next |= adj[k];
    next &= within & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

}  // namespace

int matching_number(const Hypergraph& g) {
  const std::vector<VertexSet> adj = adjacency(g, 20);
  if (adj.empty()) return 0;
  return matching_table(adj).back();
}

int ind_match(const Hypergraph& g) {
  const std::vector<VertexSet> adj = adjacency(g, 12);
  const std::size_t n = adj.size();
  int best = 0;
  for (VertexSet u = 1; u < (VertexSet{1} << n); ++u) {
    int size = 0;
    bool ok = true;
    for (VertexSet left = u; ok && left != 0;) {
      const VertexSet comp = component_of(adj, u, first_index(left));
      left &= ~comp;
      const int c = cardinality(comp);
      if (c == 2) {
        size += 1;
      } else if (c == 5 && is_induced_c5(adj, comp)) {
        size += 2;
      } else {
        ok = false;
      }
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

int min_match(const Hypergraph& g) {
  const std::vector<VertexSet> adj = adjacency(g, 12);
  const std::size_t n = adj.size();
  const std::size_t subsets = std::size_t{1} << n;
  constexpr int kNone = std::numeric_limits<int>::max() / 2;
  // cost[S]: cheapest partition of S into edges (1) and Hamiltonian 5-sets (2).
  std::vector<int> cost(subsets, kNone);
  cost[0] = 0;
  for (VertexSet s = 1; s < subsets; ++s) {
    const std::size_t v = first_index(s);
    const VertexSet rest = s & ~bit(v);
    int best = kNone;
    for (std::size_t u : indices_of(adj[v] & rest)) {
      best = std::min(best, 1 + cost[rest & ~bit(u)]);
    }
    if (cardinality(s) >= 5) {
      // Five-sets through v, built from four other members of s.
      const std::vector<std::size_t> others = indices_of(rest);
      const std::size_t m = others.size();
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          for (std::size_t c = b + 1; c < m; ++c)
            for (std::size_t d = c + 1; d < m; ++d) {
              const VertexSet five =
                  bit(v) | bit(others[a]) | bit(others[b]) | bit(others[c]) | bit(others[d]);
              if (cost[s & ~five] + 2 < best && has_five_cycle(adj, five)) {
                best = cost[s & ~five] + 2;
              }
            }
    }
    cost[s] = best;
  }
  int best = kNone;
  const VertexSet all = low_bits(n);
  for (VertexSet s = 0; s < subsets; ++s) {
    const VertexSet left = all & ~s;
    bool independent = true;
    for (std::size_t k : indices_of(left)) independent = independent && (adj[k] & left) == 0;
    if (independent) best = std::min(best, cost[s]);
  }
  return best;
}

Hypergraph gn_family(int n) {
  if (n < 1) throw Error(ErrorKind::Schema, "n must be positive");
  std::vector<std::string> vertices{"c"};
  std::vector<std::vector<std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    const std::string a = "a" + std::to_string(i);
    const std::string b = "b" + std::to_string(i);
    vertices.push_back(a);
    vertices.push_back(b);
    edges.push_back({"c", a});
    edges.push_back({"c", b});
    edges.push_back({a, b});
  }
  return Hypergraph(std::move(vertices), edges);
}

}  // namespace ncilab
