#include <gtest/gtest.h>

#include <random>

#include "ncilab/betti.hpp"
#include "ncilab/error.hpp"
#include "ncilab/monomial_ideal.hpp"
#include "ncilab/selftest.hpp"
#include "ncilab/splitting.hpp"
#include "oracles.hpp"

using namespace ncilab;

namespace {

const MonomialIdeal& reference() {
  static const MonomialIdeal i = parse_ideal(kReferenceNci);
  return i;
}

const Monomial h1{"x1", "x2", "x3"};
const Monomial h2{"x4", "x5", "x6"};

BettiTable oracle_table(const MonomialIdeal& i) {
  return oracle::as_table(oracle::betti_upper_koszul(i));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(Intersection, ReferenceComponents) {
  const MonomialIdeal k1 = remove_generators(reference(), {h1});
  const PrincipalIntersection a = intersect_principal(k1, h1);
  EXPECT_EQ(a.cofactor, parse_ideal("x7, x8, x4*x5*x6"));
  EXPECT_EQ(a.factor, h1);
  const MonomialIdeal k2 = remove_generators(k1, {h2});
  const PrincipalIntersection b = intersect_principal(k2, h2);
  EXPECT_EQ(b.cofactor, parse_ideal("x7, x8"));
  EXPECT_EQ(ideal_intersection(k2, principal(h2)), multiply(h2, b.cofactor));
}

TEST(Intersection, Preconditions) {
  const MonomialIdeal k1 = remove_generators(reference(), {h1});
  EXPECT_EQ(kind_of([&] { intersect_principal(k1, {"x7", "x8"}); }), ErrorKind::DegreeTooLow);
  EXPECT_EQ(kind_of([] { intersect_principal(parse_ideal("a*b, b*c, c*d, d*e"), {"a", "f", "g"}); }),
            ErrorKind::NotNci);
}

TEST(Splitting, CanonicalFunctionOnReference) {
  const MonomialIdeal k1 = remove_generators(reference(), {h1});
  const SplittingFunction f = canonical_splitting_function(h1, k1);
  EXPECT_EQ(f.domain.size(), 3u);
  const SplittingCheck c = check_splitting(principal(h1), k1, f);
  EXPECT_TRUE(c.ok()) << c.failure;
  EXPECT_EQ(c.mode, SubsetMode::Exhaustive);
  EXPECT_EQ(c.subsets_checked, 7u);
  EXPECT_TRUE(verify_betti_splitting(principal(h1), k1));
}

TEST(Splitting, WrongPhiBreaksS1) {
  const MonomialIdeal k1 = remove_generators(reference(), {h1});
  SplittingFunction f = canonical_splitting_function(h1, k1);
  f.psi[0] = f.psi[1];
  const SplittingCheck c = check_splitting(principal(h1), k1, f);
  EXPECT_FALSE(c.s1);
  EXPECT_FALSE(c.ok());
  EXPECT_FALSE(c.failure.empty());
}

TEST(Splitting, SampledModePastBudget) {
  const MonomialIdeal k1 = remove_generators(reference(), {h1});
  Budget tiny;
  tiny.max_subsets = 3;
  const SplittingCheck c =
      check_splitting(principal(h1), k1, canonical_splitting_function(h1, k1), tiny);
  EXPECT_EQ(c.mode, SubsetMode::Sampled);
  EXPECT_TRUE(c.ok());
}

// The four-cycle split along a perfect matching is not a Betti splitting.
TEST(Splitting, FourCycleNegativeControl) {
  const MonomialIdeal j = parse_ideal("a*b, c*d");
  const MonomialIdeal k = parse_ideal("b*c, a*d");
  EXPECT_FALSE(verify_betti_splitting(j, k));
  const BettiTable sum = oracle_table(j) + oracle_table(k) +
                         shift_homological(oracle_table(ideal_intersection(j, k)), 1);
  EXPECT_NE(sum, oracle_table(ideal_sum(j, k)));
}

TEST(Splitting, CanonicalFunctionRejectsNonNci) {
  EXPECT_EQ(kind_of([] { canonical_splitting_function({"a", "b", "c"}, parse_ideal("b*d, c*d")); }),
            ErrorKind::NotNci);
}

TEST(Decompose, ReferenceSteps) {
  const DecompositionReport r = decompose_nci(reference());
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_TRUE(r.agrees());
  EXPECT_EQ(r.steps[0].hyperedge, h1);
  EXPECT_EQ(r.steps[1].hyperedge, h2);
  EXPECT_EQ(r.steps[0].cofactor, parse_ideal("x7, x8, x4*x5*x6"));
  EXPECT_EQ(r.steps[1].cofactor, parse_ideal("x7, x8"));
  for (const DecompositionStep& s : r.steps) {
    EXPECT_EQ(s.remaining_table, oracle_table(s.remaining));
    EXPECT_EQ(s.total, s.remaining_table + s.principal + s.shifted_intersection);
  }
  EXPECT_EQ(r.steps[0].total, r.oracle);
  EXPECT_EQ(r.skeleton, oracle_table(r.skeleton_ideal));
  EXPECT_EQ(r.steps[0].shifted_intersection,
            shift_homological(shift_by_degree(oracle_table(r.steps[0].cofactor), 3), 1));
}

TEST(Decompose, RandomCorpus) {
  std::mt19937_64 rng(44);
  for (const MonomialIdeal& i : oracle::nci_corpus(rng, 25, 10)) {
    const DecompositionReport r = decompose_nci(i);
    EXPECT_TRUE(r.agrees()) << render(i);
    EXPECT_EQ(r.oracle, oracle_table(i)) << render(i);
  }
}

TEST(Pdim, ReferenceBound) {
  const MonomialIdeal k1 = remove_generators(reference(), {h1});
  const PdimReport p = pdim_splitting_bound(k1, h1);
  EXPECT_EQ(p.pdim_ideal, 6);
  EXPECT_EQ(p.pdim_principal, 0);
  EXPECT_TRUE(p.bound_holds);
  EXPECT_TRUE(p.max_formula_holds);
  EXPECT_TRUE(p.holds());
  EXPECT_EQ(p.pdim_k_substituted.size(), 3u);
  EXPECT_EQ(p.pdim_intersection, 2);
}
