#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ncilab/error.hpp"
#include "ncilab/monomial_ideal.hpp"
#include "ncilab/nci.hpp"
#include "ncilab/selftest.hpp"
#include "ncilab/weighted_graph.hpp"
#include "oracles.hpp"

using namespace ncilab;

namespace {

WeightedGraph wg(std::vector<WeightedVertex> vs, std::vector<std::pair<std::string, std::string>> es) {
  return WeightedGraph(std::move(vs), es);
}

Hypergraph hg(std::vector<std::string> vs, std::vector<std::vector<std::string>> es) {
  return Hypergraph(std::move(vs), es);
}

}  // namespace

TEST(Joinability, AcceptsReference) {
  const JoinabilityReport r = check_joinable(to_hypergraph(parse_ideal(kReferenceNci)));
  EXPECT_TRUE(r.joinable);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Joinability, IntersectingHyperedgesViolateJ1) {
  const Hypergraph g = hg({"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"c", "d", "e"}});
  const JoinabilityReport r = check_joinable(g);
  ASSERT_FALSE(r.joinable);
  EXPECT_EQ(r.violations.front().rule, JoinRule::J1);
  EXPECT_EQ(r.violations.front().edges,
            (std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"c", "d", "e"}}));
}

TEST(Joinability, UnequalNeighborhoodsViolateJ2) {
  const Hypergraph g = hg({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "d"}});
  const JoinabilityReport r = check_joinable(g);
  ASSERT_FALSE(r.joinable);
  EXPECT_EQ(r.violations.front().rule, JoinRule::J2);
  EXPECT_EQ(r.violations.front().vertices, (std::vector<std::string>{"a", "b"}));
}

TEST(WeightedGraph, RejectsBadInput) {
  EXPECT_THROW(wg({{"a", 0}}, {}), Error);
  EXPECT_THROW(wg({{"a", 1}}, {{"a", "a"}}), Error);
  EXPECT_THROW(wg({{"a", 1}, {"a", 2}}, {}), Error);
  EXPECT_THROW(wg({{"a", 1}}, {{"a", "b"}}), Error);
  EXPECT_EQ(wg({{"a", 1}, {"b", 1}}, {{"a", "b"}, {"b", "a"}}).edge_count(), 1u);
}

TEST(Join, ReferenceNci) {
  const WeightedGraph w = join_all(to_hypergraph(parse_ideal(kReferenceNci)));
  EXPECT_EQ(w.vertex_count(), 4u);
  EXPECT_EQ(w.edge_count(), 5u);
  std::vector<int> weights;
  for (const auto& v : w.vertices()) weights.push_back(v.weight);
  std::sort(weights.begin(), weights.end());
  EXPECT_EQ(weights, (std::vector<int>{1, 1, 3, 3}));
  EXPECT_EQ(w.index_of("x1+x2+x3") != std::string::npos, true);
}

TEST(Join, JoinAtNamesVertex) {
  const Hypergraph g = hg({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}});
  const std::vector<std::string> h{"a", "b", "c"};
  const Hypergraph j = join_at(g, h);
  EXPECT_EQ(j, hg({"a+b+c", "d"}, {{"a+b+c", "d"}}));
  const std::vector<std::string> not_edge{"a", "b"};
  EXPECT_THROW(join_at(g, not_edge), Error);
}

TEST(Join, OneEdgesHaveNoWeightedForm) {
  try {
    join_all(hg({"a", "b"}, {{"a"}, {"a", "b"}, {"b"}}));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotJoinable);
  }
  EXPECT_THROW(join_all(to_hypergraph(parse_ideal("a, b*c"))), Error);
}

TEST(Splay, WeightThreeVertex) {
  const Hypergraph s = splay(wg({{"u", 3}, {"v", 1}}, {{"u", "v"}}));
  EXPECT_EQ(s, hg({"u_1", "u_2", "u_3", "v"},
                  {{"u_1", "u_2", "u_3"}, {"u_1", "v"}, {"u_2", "v"}, {"u_3", "v"}}));
}

TEST(Splay, WeightTwoBecomesAnEdge) {
  const Hypergraph s = splay(wg({{"u", 2}}, {}));
  EXPECT_TRUE(s.is_simple_graph());
  EXPECT_EQ(s.edge_count(), 1u);
}

TEST(Splay, JoinRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const WeightedGraph w = oracle::random_weighted(rng, 2 + static_cast<int>(t % 5), 0.5, {1, 3, 4});
    if (w.edge_count() == 0) continue;
    bool covered = true;
    for (std::size_t k = 0; k < w.vertex_count(); ++k) {
      if (w.neighbors(k) == 0 && w.weight(k) == 1) covered = false;
    }
    if (!covered) continue;
    const Hypergraph s = splay(w);
    EXPECT_TRUE(isomorphic(join_all(s), w));
  }
}

TEST(Join, OrderIndependent) {
  const Hypergraph g = splay(wg({{"p", 3}, {"q", 4}, {"r", 1}, {"s", 3}},
                                {{"p", "r"}, {"q", "r"}, {"s", "r"}, {"p", "q"}}));
  const WeightedGraph base = join_all(g);
  std::vector<std::size_t> order{0, 1, 2};
  do {
    EXPECT_EQ(join_all(g, order), base);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(WeightedCi, Cases) {
  EXPECT_TRUE(is_ci_weighted(wg({{"a", 1}, {"b", 1}, {"c", 3}}, {{"a", "b"}})));
  EXPECT_FALSE(is_ci_weighted(wg({{"a", 1}, {"b", 3}}, {{"a", "b"}})));
  EXPECT_FALSE(is_ci_weighted(wg({{"a", 1}, {"b", 1}, {"c", 1}}, {{"a", "b"}, {"b", "c"}})));
}

TEST(WeightedNci, ReferenceAndSmallCases) {
  EXPECT_TRUE(is_nci_weighted(join_all(to_hypergraph(parse_ideal(kReferenceNci)))));
  EXPECT_TRUE(is_nci_weighted(wg({{"a", 3}, {"b", 1}, {"c", 1}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})));
  EXPECT_FALSE(is_nci_weighted(
      wg({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 3}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}})));
  EXPECT_THROW(is_nci_weighted(wg({{"a", 3}, {"b", 1}}, {{"a", "b"}})), Error);
}

// The heavy vertex sits in the middle of a 4-path; the splay is not an NCI
// although no 4-path ends at a heavy vertex.
TEST(WeightedNci, NaiveCriterionMisclassifiesHeavyInterior) {
  const WeightedGraph w =
      wg({{"a", 1}, {"b", 3}, {"c", 1}, {"d", 1}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  EXPECT_EQ(oracle::nci_status(splay(w)), "NEITHER");
  EXPECT_FALSE(is_nci_weighted(w));
  EXPECT_TRUE(weighted_criterion_naive(w));
}

TEST(WeightedNci, AgreesWithSplayOracle) {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const WeightedGraph w = oracle::random_weighted(rng, 3 + static_cast<int>(t % 4), 0.55, {1, 1, 3});
    const Hypergraph s = splay(w);
    if (s.support() != s.all_vertices()) continue;
    const std::string expected = oracle::nci_status(s);
    EXPECT_EQ(is_nci_weighted(w), expected == "NCI") << to_string(s);
    EXPECT_EQ(is_ci_weighted(w), expected == "CI") << to_string(s);
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}
