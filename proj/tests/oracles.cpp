#include "oracles.hpp"

#include <algorithm>
#include <optional>

#include "ncilab/labels.hpp"

namespace oracle {

Edges edges_of(const ncilab::Hypergraph& g) {
  Edges out;
  for (const auto& e : g.edge_labels()) out.emplace_back(e.begin(), e.end());
  return out;
}

bool is_ci(const Edges& edges) {
  std::set<std::string> seen;
  for (const auto& e : edges) {
    for (const auto& v : e) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

std::optional<Edges> substitute(const Edges& edges, const std::string& v) {
  Edges reduced;
  for (Edge e : edges) {
    e.erase(v);
    if (e.empty()) return std::nullopt;
    reduced.push_back(std::move(e));
  }
  Edges minimal;
  for (const auto& e : reduced) {
    bool dominated = false;
    for (const auto& f : reduced) {
      if (f != e && std::includes(e.begin(), e.end(), f.begin(), f.end())) dominated = true;
    }
    if (!dominated && std::find(minimal.begin(), minimal.end(), e) == minimal.end()) {
      minimal.push_back(e);
    }
  }
  return minimal;
}

std::string nci_status(const ncilab::Hypergraph& g) {
  const Edges edges = edges_of(g);
  if (is_ci(edges)) return "CI";
  for (const auto& v : g.vertices()) {
    const auto inverted = substitute(edges, v);
    if (inverted && !is_ci(*inverted)) return "NEITHER";
  }
  return "NCI";
}

namespace {

constexpr std::int64_t kPrime = 2147483647;

std::int64_t power(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kPrime;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
  }
  return r;
}

std::int64_t dense_rank(std::vector<std::vector<std::int64_t>> m) {
  std::int64_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const std::int64_t inv = power(m[r][c], kPrime - 2);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m[q][c] == 0) continue;
      const std::int64_t f = m[q][c] * inv % kPrime;
      for (std::size_t k = c; k < cols; ++k) {
        m[q][k] = ((m[q][k] - f * m[r][k]) % kPrime + kPrime) % kPrime;
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

std::map<std::pair<int, int>, std::int64_t> betti_upper_koszul(const ncilab::MonomialIdeal& ideal) {
  // Work over the support, relabelled 0..n-1.
  const std::vector<std::string> vars = ideal.support();
  const int n = static_cast<int>(vars.size());
  std::vector<std::uint32_t> gens;
  for (const auto& m : ideal.monomials()) {
    std::uint32_t g = 0;
    for (const auto& v : m) {
      g |= 1u << (std::find(vars.begin(), vars.end(), v) - vars.begin());
    }
    gens.push_back(g);
  }
  auto in_ideal = [&](std::uint32_t s) {
    return std::any_of(gens.begin(), gens.end(), [s](std::uint32_t g) { return (g & ~s) == 0; });
  };
  std::map<std::pair<int, int>, std::int64_t> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (!in_ideal(s)) continue;
    // faces[d + 1]: faces of dimension d.
    std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(n + 1));
    for (std::uint32_t f = s;; f = (f - 1) & s) {
      if (in_ideal(s & ~f)) faces[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
      if (f == 0) break;
    }
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(n + 2), 0);
    for (int d = 0; d + 1 <= n; ++d) {
      const auto& lower = faces[static_cast<std::size_t>(d)];
      const auto& upper = faces[static_cast<std::size_t>(d + 1)];
      if (lower.empty() || upper.empty()) continue;
      std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
      for (std::size_t c = 0; c < upper.size(); ++c) {
        int sign = 1;
        for (int v = 0; v < n; ++v) {
          if (!(upper[c] >> v & 1)) continue;
          const std::uint32_t face = upper[c] & ~(1u << v);
          const auto r = std::find(lower.begin(), lower.end(), face) - lower.begin();
          m[static_cast<std::size_t>(r)][c] = sign == 1 ? 1 : kPrime - 1;
          sign = -sign;
        }
      }
      ranks[static_cast<std::size_t>(d + 1)] = dense_rank(std::move(m));
    }
    const int size = __builtin_popcount(s);
    for (int d = -1; d + 1 <= n; ++d) {
      const auto k = static_cast<std::size_t>(d + 1);
      const std::int64_t h = static_cast<std::int64_t>(faces[k].size()) - ranks[k] - ranks[k + 1];
      if (h != 0) out[{d + 1, size}] += h;
    }
  }
  return out;
}

ncilab::BettiTable as_table(const std::map<std::pair<int, int>, std::int64_t>& entries) {
  ncilab::BettiTable t(ncilab::Subject::Ideal);
  for (const auto& [key, v] : entries) t.add(key.first, key.second, v);
  return t;
}

std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> names(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

ncilab::MonomialIdeal random_ci(std::mt19937_64& rng, int max_gens, int max_degree) {
  std::uniform_int_distribution<int> gens_d(1, max_gens);
  std::uniform_int_distribution<int> deg_d(1, max_degree);
  const int g = gens_d(rng);
  std::vector<ncilab::Monomial> monomials;
  int next = 1;
  for (int k = 0; k < g; ++k) {
    ncilab::Monomial m;
    for (int d = deg_d(rng); d > 0; --d) m.push_back("x" + std::to_string(next++));
    monomials.push_back(m);
  }
  return ncilab::MonomialIdeal::from_monomials(monomials);
}

ncilab::MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int max_gens, int max_degree) {
  std::uniform_int_distribution<int> gens_d(1, max_gens);
  std::uniform_int_distribution<int> deg_d(1, std::min(max_degree, n));
  std::uniform_int_distribution<int> var_d(1, n);
  std::vector<ncilab::Monomial> monomials;
  for (int k = gens_d(rng); k > 0; --k) {
    std::set<int> vs;
    const int d = deg_d(rng);
    while (static_cast<int>(vs.size()) < d) vs.insert(var_d(rng));
    ncilab::Monomial m;
    for (int v : vs) m.push_back("x" + std::to_string(v));
    monomials.push_back(m);
  }
  return ncilab::MonomialIdeal::from_monomials(monomials);
}

ncilab::Hypergraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  const std::vector<std::string> vs = names(n, "v");
  std::vector<std::vector<std::string>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({vs[a], vs[b]});
  return ncilab::Hypergraph(vs, edges);
}

ncilab::WeightedGraph random_weighted(std::mt19937_64& rng, int n, double p,
                                      const std::vector<int>& weights) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
  std::vector<ncilab::WeightedVertex> vs;
  for (int k = 0; k < n; ++k) vs.push_back({"w" + std::to_string(k + 1), weights[pick(rng)]});
  std::vector<std::pair<std::string, std::string>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(vs[a].label, vs[b].label);
  return ncilab::WeightedGraph(vs, edges);
}

ncilab::Hypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> n_d(1, max_vertices);
  if (std::bernoulli_distribution(0.5)(rng)) {
    // Splay of a small weighted graph, trimmed to the vertex budget.
    for (;;) {
      const int n = std::uniform_int_distribution<int>(1, std::min(6, max_vertices))(rng);
      const ncilab::WeightedGraph w =
          random_weighted(rng, n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), {1, 1, 1, 2, 3, 4});
      const ncilab::Hypergraph s = ncilab::splay(w);
      if (static_cast<int>(s.vertex_count()) <= max_vertices && s.edge_count() > 0) return s;
    }
  }
  const int n = n_d(rng);
  std::uniform_int_distribution<int> m_d(1, 2 * n);
  std::discrete_distribution<int> size_d({0, 1, 6, 2, 1});
  std::uniform_int_distribution<int> v_d(0, n - 1);
  std::vector<ncilab::VertexSet> edges;
  for (int k = m_d(rng); k > 0; --k) {
    const int size = std::min(size_d(rng), n);
    ncilab::VertexSet e = 0;
    while (ncilab::cardinality(e) < size) e |= ncilab::bit(static_cast<std::size_t>(v_d(rng)));
    edges.push_back(e);
  }
  ncilab::minimalize_edges(edges);
  // Natural order of x1..xn matches index order, so masks carry over.
  return ncilab::Hypergraph::from_sets(names(n), edges);
}

std::vector<ncilab::MonomialIdeal> nci_corpus(std::mt19937_64& rng, int count, int max_vars) {
  std::vector<ncilab::MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(3, 6)(rng);
    const ncilab::WeightedGraph w =
        random_weighted(rng, n, std::uniform_real_distribution<double>(0.4, 1.0)(rng), {1, 1, 3, 4});
    const ncilab::Hypergraph s = ncilab::splay(w);
    if (static_cast<int>(s.vertex_count()) > max_vars) continue;
    bool hyperedge = false;
    for (ncilab::VertexSet e : s.edges()) hyperedge = hyperedge || ncilab::cardinality(e) >= 3;
    if (!hyperedge || nci_status(s) != "NCI") continue;
    out.push_back(ncilab::to_ideal(s));
  }
  return out;
}

}  // namespace oracle
