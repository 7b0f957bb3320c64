#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ncilab/error.hpp"
#include "ncilab/monomial_ideal.hpp"
#include "ncilab/nci.hpp"
#include "ncilab/selftest.hpp"
#include "oracles.hpp"

using namespace ncilab;

namespace {

Hypergraph graph(std::string_view ideal) { return to_hypergraph(parse_ideal(ideal)); }

// Antichains of nonempty subsets of [k] covering [k], counted by brute force.
std::size_t covering_antichains(int k) {
  const int subsets = (1 << k) - 1;
  std::size_t count = 0;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); ++family) {
    std::vector<int> members;
    int cover = 0;
    for (int s = 0; s < subsets; ++s) {
      if (family >> s & 1) {
        members.push_back(s + 1);
        cover |= s + 1;
      }
    }
    bool antichain = true;
    for (int a : members)
      for (int b : members)
        if (a != b && (a & b) == a) antichain = false;
    if (antichain && cover == subsets) ++count;
  }
  return count;
}

}  // namespace

TEST(Nci, KnownStatuses) {
  EXPECT_EQ(is_nci_structural(graph(kReferenceNci)).status, NciStatus::NCI);
  EXPECT_EQ(is_nci_structural(graph("a*b, b*c, c*d, a*d")).status, NciStatus::NCI);
  EXPECT_EQ(is_nci_structural(graph("a*b, b*c, a*c")).status, NciStatus::NCI);
  EXPECT_EQ(is_nci_structural(graph("a*b, a*c, a*d")).status, NciStatus::NCI);
  EXPECT_EQ(is_nci_structural(graph("a*b, c*d*e")).status, NciStatus::CI);
  EXPECT_EQ(is_nci_structural(graph("a*b, b*c, c*d, d*e")).status, NciStatus::NEITHER);
  EXPECT_EQ(is_nci_structural(graph("a, b*c, c*d, b*d")).status, NciStatus::NCI);
}

TEST(Nci, DefinitionalWitnessIsFirstFailingVertex) {
  const NciVerdict v = is_nci_definitional(graph("a*b, b*c, c*d, d*e"));
  ASSERT_EQ(v.status, NciStatus::NEITHER);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->kind, WitnessKind::Vertex);
  EXPECT_EQ(v.witness->vertices, (std::vector<std::string>{"a"}));
}

TEST(Nci, ForbiddenWitnesses) {
  const auto p5 = find_forbidden_tuple(graph("a*b, b*c, c*d, d*e"));
  ASSERT_TRUE(p5);
  EXPECT_EQ(p5->detail, "P5");
  EXPECT_EQ(p5->vertices, (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  const auto chair = find_forbidden_tuple(graph("a*b, b*c, c*d, c*e"));
  ASSERT_TRUE(chair);
  EXPECT_EQ(chair->detail, "chair");
  EXPECT_EQ(chair->vertices, (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  EXPECT_FALSE(find_forbidden_tuple(graph("a*b, b*c, c*d, d*e, a*e")));
}

TEST(Nci, StructuralWitnessKinds) {
  const NciVerdict j = is_nci_structural(graph("a*b*c, c*d*e, a*d"));
  ASSERT_TRUE(j.witness);
  EXPECT_EQ(j.witness->kind, WitnessKind::Joinability);
  EXPECT_EQ(j.witness->detail, "J1");
  const NciVerdict d = is_nci_structural(graph("a*b, b*c, d*e"));
  EXPECT_EQ(d.status, NciStatus::NEITHER);
  ASSERT_TRUE(d.witness);
  EXPECT_EQ(d.witness->kind, WitnessKind::DisconnectedSkeleton);
  EXPECT_EQ(d.witness->edges.size(), 2u);
}

TEST(Nci, MillerStonePreconditions) {
  auto kind = [](const Hypergraph& g) {
    try {
      is_nci_graph_miller_stone(g);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind(graph("a*b*c")), ErrorKind::NotAGraph);
  EXPECT_EQ(kind(graph("a*b")), ErrorKind::TooSmall);
  EXPECT_EQ(kind(graph("a*b, c*d")), ErrorKind::Disconnected);
  EXPECT_EQ(is_nci_graph_miller_stone(graph("a*b, b*c, c*d, d*e")).status, NciStatus::NEITHER);
}

TEST(Nci, UnitInversionCountsAsCi) {
  const Hypergraph g = graph("a, a*b");
  EXPECT_TRUE(inversion_is_ci(g, 0));
  EXPECT_EQ(is_nci_definitional(graph("a, b*c, c*d")).status, NciStatus::NCI);
}

TEST(Enumerate, CountsMatchBruteForce) {
  std::size_t running = 0;
  for (int k = 1; k <= 4; ++k) {
    running += covering_antichains(k);
    EXPECT_EQ(enumerate_small_list(k).size(), running) << k;
  }
  EXPECT_EQ(enumerate_small_list(2).size(), 3u);
  EXPECT_THROW(enumerate_small_list(8), Error);
  EXPECT_THROW(enumerate_small_list(5, 10), Error);
}

TEST(Enumerate, ConnectedGraphs) {
  std::size_t all = 0;
  std::size_t connected = 0;
  enumerate_graphs(4, false, [&](const Hypergraph&) { return ++all, true; });
  enumerate_graphs(4, true, [&](const Hypergraph&) { return ++connected, true; });
  EXPECT_EQ(all, 64u);
  EXPECT_EQ(connected, 38u);
}

TEST(Nci, RoutesAgreeExhaustively) {
  enumerate_small(4, [](const Hypergraph& g) {
    const std::string expected = oracle::nci_status(g);
    EXPECT_EQ(to_string(is_nci_definitional(g).status), expected) << to_string(g);
    EXPECT_EQ(to_string(is_nci_structural(g).status), expected) << to_string(g);
    return true;
  });
}

TEST(Nci, RoutesAgreeRandom) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 1500; ++t) {
    const Hypergraph g = oracle::random_hypergraph(rng, 9);
    const std::string expected = oracle::nci_status(g);
    EXPECT_EQ(to_string(is_nci_structural(g).status), expected) << to_string(g);
  }
}
