#include <gtest/gtest.h>

#include <random>

#include "ncilab/error.hpp"
#include "ncilab/monomial_ideal.hpp"
#include "ncilab/selftest.hpp"
#include "oracles.hpp"

using namespace ncilab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(ParseIdeal, Generators) {
  const MonomialIdeal i = parse_ideal("x1, x2*x3, x3*x4*x5");
  EXPECT_EQ(i.monomials(), (std::vector<Monomial>{{"x1"}, {"x2", "x3"}, {"x3", "x4", "x5"}}));
  EXPECT_EQ(render(i), "x1, x2*x3, x3*x4*x5");
}

TEST(ParseIdeal, Normalizes) {
  EXPECT_EQ(parse_ideal("x1*x2, x1*x2*x3").monomials(), (std::vector<Monomial>{{"x1", "x2"}}));
  EXPECT_EQ(parse_ideal(" ( b*a , c ) ").monomials(), (std::vector<Monomial>{{"c"}, {"a", "b"}}));
  EXPECT_EQ(parse_ideal("x10*x2, x1").monomials(), (std::vector<Monomial>{{"x1"}, {"x2", "x10"}}));
}

TEST(ParseIdeal, Errors) {
  EXPECT_EQ(kind_of([] { parse_ideal("x1*x1"); }), ErrorKind::NotSquarefree);
  EXPECT_EQ(kind_of([] { parse_ideal(""); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_ideal("x1,,x2"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_ideal("(x1"); }), ErrorKind::ParseError);
  try {
    parse_ideal("x1 * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ToHypergraph, Shapes) {
  const Hypergraph g = to_hypergraph(parse_ideal("x1, x2*x3, x3*x4*x5"));
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(to_hypergraph(parse_ideal("x1*x2")).edge_labels(),
            (std::vector<std::vector<std::string>>{{"x1", "x2"}}));
  EXPECT_EQ(kind_of([] { to_hypergraph(MonomialIdeal{}); }), ErrorKind::EmptyIdeal);
}

TEST(ToHypergraph, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const MonomialIdeal i = oracle::random_ideal(rng, 8, 6, 4);
    EXPECT_EQ(to_ideal(to_hypergraph(i)), i);
  }
}

TEST(SubstituteOne, Cases) {
  EXPECT_EQ(substitute_one(parse_ideal("x1*x2, x2*x3"), "x2"), parse_ideal("x1, x3"));
  EXPECT_EQ(kind_of([] { substitute_one(parse_ideal("x1, x2*x3"), "x1"); }), ErrorKind::UnitIdeal);
  EXPECT_EQ(kind_of([] { substitute_one(parse_ideal("x1"), "q"); }), ErrorKind::UnknownVertex);
  EXPECT_EQ(substitute_one(parse_ideal(kReferenceNci), "x7"), parse_ideal("x1, x2, x3, x4, x5, x6, x8"));
}

TEST(IdealOps, SumIntersectionProduct) {
  const MonomialIdeal a = parse_ideal("x1*x2, x3");
  const MonomialIdeal b = parse_ideal("x2*x4");
  EXPECT_EQ(ideal_sum(a, b), parse_ideal("x3, x1*x2, x2*x4"));
  EXPECT_EQ(ideal_intersection(a, b), parse_ideal("x1*x2*x4, x2*x3*x4"));
  EXPECT_EQ(multiply({"y1", "y2"}, parse_ideal("x1, x2*x3")), parse_ideal("x1*y1*y2, x2*x3*y1*y2"));
  EXPECT_TRUE(is_complete_intersection(parse_ideal("a*b, c, d*e*f")));
  EXPECT_FALSE(is_complete_intersection(parse_ideal("a*b, b*c")));
  EXPECT_EQ(remove_generators(a, {{"x3"}}), parse_ideal("x1*x2"));
}
