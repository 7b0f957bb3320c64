#include "ncilab/selftest.hpp"

#include <functional>

#include "ncilab/betti.hpp"
#include "ncilab/error.hpp"
#include "ncilab/nci.hpp"
#include "ncilab/splitting.hpp"
#include "ncilab/weighted_graph.hpp"

namespace ncilab {

namespace {

SelftestResult run(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string routes_agree(int max_vertices) {
  std::size_t count = 0;
  std::string failure;
  enumerate_small(max_vertices, [&](const Hypergraph& g) {
    ++count;
    if (is_nci_definitional(g).status != is_nci_structural(g).status) {
      failure = "routes disagree on " + to_string(g);
      return false;
    }
    return true;
  });
  return failure;
}

std::string miller_stone_agrees(int max_vertices) {
  std::string failure;
  for (int n = 3; n <= max_vertices && failure.empty(); ++n) {
    enumerate_graphs(n, true, [&](const Hypergraph& g) {
      if (is_nci_graph_miller_stone(g).status != is_nci_definitional(g).status) {
        failure = "forbidden-subgraph test disagrees on " + to_string(g);
        return false;
      }
      return true;
    });
  }
  return failure;
}

std::string weighted_agrees(int max_vertices) {
  std::string failure;
  for (int n = 3; n <= max_vertices && failure.empty(); ++n) {
    enumerate_graphs(n, false, [&](const Hypergraph& g) {
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        std::vector<WeightedVertex> vs;
        for (int k = 0; k < n; ++k) vs.push_back({g.vertices()[k], (w >> k & 1) ? 3 : 1});
        std::vector<std::pair<std::string, std::string>> es;
        for (const auto& e : g.edge_labels()) es.emplace_back(e[0], e[1]);
        const WeightedGraph wg(vs, es);
        const Hypergraph s = splay(wg);
        if (s.edge_count() == 0) continue;
        const bool expected = is_nci_definitional(s).status == NciStatus::NCI;
        if (is_nci_weighted(wg) != expected) {
          failure = "weighted criterion disagrees on a graph with " + std::to_string(n) + " vertices";
          return false;
        }
      }
      return true;
    });
  }
  return failure;
}

std::string reference_table() {
  const MonomialIdeal i = parse_ideal(kReferenceNci);
  const BettiTable t = betti_table(i, Subject::Ideal);
  const int stratum2[] = {13, 42, 70, 70, 42, 14, 2};
  for (int c = 0; c < 7; ++c) {
    if (t.at(c, c + 2) != stratum2[c]) return "stratum 2 differs at column " + std::to_string(c);
  }
  const int stratum3[] = {2, 4, 2};
  for (int c = 0; c < 3; ++c) {
    if (t.at(c, c + 3) != stratum3[c]) return "stratum 3 differs at column " + std::to_string(c);
  }
  const int stratum5[] = {0, 1, 2, 1};
  for (int c = 0; c < 4; ++c) {
    if (t.at(c, c + 5) != stratum5[c]) return "stratum 5 differs at column " + std::to_string(c);
  }
  if (t.entries().size() != 7 + 3 + 3) return "unexpected extra entries";
  BettiOptions gf2;
  gf2.characteristic = 2;
  if (betti_table(i, gf2) != t) return "table depends on the characteristic";
  return "";
}

std::string koszul_matches() {
  const char* cis[] = {"a*b, c*d", "x7, x8, x4*x5*x6", "a, b*c, d*e*f, g*h*i*j", "a*b*c"};
  for (const char* text : cis) {
    const MonomialIdeal i = parse_ideal(text);
    if (betti_table(i, Subject::Quotient) != koszul_table(i.degrees())) {
      return std::string("Koszul table differs for ") + text;
    }
  }
  return "";
}

std::string decomposition_matches() {
  const DecompositionReport r = decompose_nci(parse_ideal(kReferenceNci));
  if (!r.agrees()) return "assembled table differs from the oracle";
  if (r.steps.size() != 2) return "expected two hyperedge steps";
  for (const auto& step : r.steps) {
    const MonomialIdeal k = step.remaining;
    const MonomialIdeal h = principal(step.hyperedge);
    if (!verify_splitting(h, k, canonical_splitting_function(step.hyperedge, k))) {
      return "canonical splitting function rejected at " + render(step.hyperedge);
    }
    if (!verify_betti_splitting(h, k)) return "Betti splitting fails at " + render(step.hyperedge);
  }
  return "";
}

}  // namespace

std::vector<SelftestResult> run_selftest(bool quick) {
  std::vector<SelftestResult> out;
  out.push_back(run("definitional and structural routes agree",
                    [quick] { return routes_agree(quick ? 4 : 5); }));
  out.push_back(run("forbidden-subgraph test agrees on connected graphs",
                    [quick] { return miller_stone_agrees(quick ? 5 : 6); }));
  out.push_back(run("weighted criterion agrees with the splay",
                    [quick] { return weighted_agrees(quick ? 4 : 5); }));
  out.push_back(run("reference NCI Betti table", reference_table));
  out.push_back(run("complete intersections have Koszul tables", koszul_matches));
  out.push_back(run("hyperedge decomposition matches the oracle", decomposition_matches));
  return out;
}

}  // namespace ncilab
