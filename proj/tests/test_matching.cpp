#include <gtest/gtest.h>

#include "ncilab/betti.hpp"
#include "ncilab/error.hpp"
#include "ncilab/matching.hpp"
#include "ncilab/monomial_ideal.hpp"

using namespace ncilab;

namespace {

Hypergraph graph(std::string_view ideal) { return to_hypergraph(parse_ideal(ideal)); }

}  // namespace

TEST(Matching, SmallGraphs) {
  const Hypergraph c5 = graph("a*b, b*c, c*d, d*e, a*e");
  EXPECT_EQ(matching_number(c5), 2);
  EXPECT_EQ(ind_match(c5), 2);
  EXPECT_EQ(min_match(c5), 2);
  const Hypergraph p4 = graph("a*b, b*c, c*d");
  EXPECT_EQ(matching_number(p4), 2);
  EXPECT_EQ(ind_match(p4), 1);
  EXPECT_EQ(min_match(p4), 1);
  const Hypergraph star = graph("a*b, a*c, a*d");
  EXPECT_EQ(matching_number(star), 1);
  EXPECT_EQ(ind_match(star), 1);
  EXPECT_EQ(min_match(star), 1);
}

TEST(Matching, CycleOnSixVertices) {
  const Hypergraph c6 = graph("a*b, b*c, c*d, d*e, e*f, a*f");
  EXPECT_EQ(matching_number(c6), 3);
  EXPECT_EQ(ind_match(c6), 2);
  EXPECT_EQ(min_match(c6), 2);
}

TEST(Matching, InducedFiveCycleCounts) {
  // C5 with a pendant edge: the cycle plus nothing else is induced.
  const Hypergraph g = graph("a*b, b*c, c*d, d*e, a*e, e*f");
  EXPECT_EQ(matching_number(g), 3);
  EXPECT_EQ(ind_match(g), 2);
}

TEST(Matching, Preconditions) {
  EXPECT_THROW(matching_number(graph("a*b*c")), Error);
  std::string big;
  for (int k = 1; k < 13; ++k) big += (k > 1 ? ", " : "") + ("v" + std::to_string(k)) + "*v" + std::to_string(k + 1);
  EXPECT_THROW(ind_match(graph(big)), Error);
  EXPECT_EQ(matching_number(graph(big)), 6);
}

TEST(GnFamily, Shape) {
  const Hypergraph g = gn_family(3);
  EXPECT_EQ(g.vertex_count(), 7u);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_THROW(gn_family(0), Error);
}

TEST(GnFamily, RegularityEqualsMatchingBounds) {
  for (int n = 1; n <= 4; ++n) {
    const Hypergraph g = gn_family(n);
    const int r = reg(betti_table(to_ideal(g), Subject::Quotient));
    EXPECT_EQ(r, n);
    EXPECT_EQ(ind_match(g), n);
    EXPECT_EQ(min_match(g), n);
    EXPECT_EQ(matching_number(g), n);
  }
}
