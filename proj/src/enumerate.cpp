#include <algorithm>

#include "ncilab/error.hpp"
#include "ncilab/nci.hpp"

namespace ncilab {

std::string vertex_name(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "v" + std::to_string(k);
}

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(vertex_name(k));
  return out;
}

class Enumerator {
 public:
  Enumerator(const std::function<bool(const Hypergraph&)>& visit, std::size_t max_items)
      : visit_(visit), max_items_(max_items) {}

  bool emit(std::size_t k, const std::vector<VertexSet>& edges) {
    if (++count_ > max_items_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration exceeds " + std::to_string(max_items_) + " hypergraphs");
    }
    return visit_(Hypergraph::from_sets(names(k), edges));
  }

  // Antichains of nonempty subsets of [k] covering [k].
  bool full(std::size_t k) {
    candidates_.clear();
    for (VertexSet s = 1; s <= low_bits(k); ++s) candidates_.push_back(s);
    std::sort(candidates_.begin(), candidates_.end(), lex_less);
    chosen_.clear();
    return antichains(k, 0, 0);
  }

  // Simple graphs on [k] plus up to two hyperedges, covering [k].
  bool restricted(std::size_t k) {
    std::vector<VertexSet> pairs;
    std::vector<VertexSet> hyper;
    for (VertexSet s = 1; s <= low_bits(k); ++s) {
      if (cardinality(s) == 2) pairs.push_back(s);
      if (cardinality(s) >= 3) hyper.push_back(s);
    }
    std::sort(pairs.begin(), pairs.end(), lex_less);
    std::sort(hyper.begin(), hyper.end(), lex_less);
    const std::size_t graphs = std::size_t{1} << pairs.size();
    for (std::size_t mask = 0; mask < graphs; ++mask) {
      std::vector<VertexSet> edges;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (mask >> p & 1) edges.push_back(pairs[p]);
      }
      auto free_of_edges = [&](VertexSet h) {
        return std::none_of(edges.begin(), edges.end(),
                            [h](VertexSet e) { return is_subset(e, h); });
      };
      auto covers = [&](const std::vector<VertexSet>& es) {
        VertexSet u = 0;
        for (VertexSet e : es) u |= e;
        return u == low_bits(k);
      };
      if (covers(edges) && !emit(k, edges)) return false;
      for (std::size_t a = 0; a < hyper.size(); ++a) {
        if (!free_of_edges(hyper[a])) continue;
        edges.push_back(hyper[a]);
        if (covers(edges) && !emit(k, edges)) return false;
        for (std::size_t b = a + 1; b < hyper.size(); ++b) {
          if (!free_of_edges(hyper[b]) || is_subset(hyper[a], hyper[b]) ||
              is_subset(hyper[b], hyper[a])) {
            continue;
          }
          edges.push_back(hyper[b]);
          if (covers(edges) && !emit(k, edges)) return false;
          edges.pop_back();
        }
        edges.pop_back();
      }
    }
    return true;
  }

 private:
  bool antichains(std::size_t k, std::size_t from, VertexSet covered) {
    if (from == candidates_.size()) {
      if (!chosen_.empty() && covered == low_bits(k)) return emit(k, chosen_);
      return true;
    }
    if (!antichains(k, from + 1, covered)) return false;
    const VertexSet s = candidates_[from];
    const bool comparable = std::any_of(chosen_.begin(), chosen_.end(), [s](VertexSet c) {
      return is_subset(s, c) || is_subset(c, s);
    });
    if (!comparable) {
      chosen_.push_back(s);
      const bool go_on = antichains(k, from + 1, covered | s);
      chosen_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const std::function<bool(const Hypergraph&)>& visit_;
  std::size_t max_items_;
  std::size_t count_ = 0;
  std::vector<VertexSet> candidates_;
  std::vector<VertexSet> chosen_;
};

}  // namespace

void enumerate_small(int max_vertices, const std::function<bool(const Hypergraph&)>& visit,
                     std::size_t max_items) {
  if (max_vertices > 7) {
    throw Error(ErrorKind::BudgetExceeded, "enumeration is limited to 7 vertices");
  }
  Enumerator e(visit, max_items);
  for (int k = 1; k <= max_vertices; ++k) {
    const bool go_on = k <= 5 ? e.full(static_cast<std::size_t>(k))
                              : e.restricted(static_cast<std::size_t>(k));
    if (!go_on) return;
  }
}

std::vector<Hypergraph> enumerate_small_list(int max_vertices, std::size_t max_items) {
  std::vector<Hypergraph> out;
  enumerate_small(
      max_vertices,
      [&out](const Hypergraph& g) {
        out.push_back(g);
        return true;
      },
      max_items);
  return out;
}

void enumerate_graphs(int n, bool connected_only,
                      const std::function<bool(const Hypergraph&)>& visit) {
  if (n < 1 || n > 8) throw Error(ErrorKind::BudgetExceeded, "graph enumeration needs 1..8 vertices");
  const auto k = static_cast<std::size_t>(n);
  std::vector<VertexSet> pairs;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) pairs.push_back(bit(a) | bit(b));
  const std::vector<std::string> labels = names(k);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<VertexSet> adj(k);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexSet> edges;
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!(mask >> p & 1)) continue;
      edges.push_back(pairs[p]);
      const std::size_t a = first_index(pairs[p]);
      const std::size_t b = first_index(pairs[p] & (pairs[p] - 1));
      adj[a] |= bit(b);
      adj[b] |= bit(a);
    }
    if (connected_only) {
      VertexSet comp = 1;
      VertexSet frontier = 1;
      while (frontier != 0) {
        VertexSet next = 0;
        for (std::size_t v : indices_of(frontier)) next |= adj[v];
        next &= ~comp;
        comp |= next;
        frontier = next;
      }
      if (comp != low_bits(k)) continue;
    }
    if (!visit(Hypergraph::from_sets(labels, std::move(edges)))) return;
  }
}

}  // namespace ncilab
