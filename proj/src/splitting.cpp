#include "ncilab/splitting.hpp"

#include <algorithm>
#include <random>

#include "ncilab/error.hpp"
#include "ncilab/nci.hpp"
#include "ncilab/weighted_graph.hpp"

namespace ncilab {

namespace {

Monomial sorted(Monomial m) {
  std::sort(m.begin(), m.end(), NaturalLess{});
  return m;
}

bool contains(const std::vector<Monomial>& list, const Monomial& m) {
  return std::find(list.begin(), list.end(), m) != list.end();
}

constexpr std::uint64_t kSampleSeed = 0x5eed5eedULL;
constexpr int kRandomSubsets = 10'000;

struct SubsetChecker {
  std::vector<VertexSet> w, phi, psi;
  std::uint64_t checked = 0;
  std::string failure;

  bool check(const std::vector<std::size_t>& members) {
    ++checked;
    VertexSet lw = 0, lphi = 0, lpsi = 0;
    for (std::size_t k : members) {
      lw |= w[k];
      lphi |= phi[k];
      lpsi |= psi[k];
    }
    if (!is_proper_subset(lphi, lw) || !is_proper_subset(lpsi, lw)) {
      failure = "(S2) fails on a subset of size " + std::to_string(members.size());
      return false;
    }
    return true;
  }
};

void require_nci_sum(const MonomialIdeal& k, const Monomial& h, const MonomialIdeal& sum) {
  if (h.size() < 3) {
    throw Error(ErrorKind::DegreeTooLow, "the hyperedge must have degree at least 3");
  }
  if (!contains(sum.monomials(), sorted(h))) {
    throw Error(ErrorKind::NotNci, render(h) + " is not a minimal generator of K + (h)");
  }
  if (k.is_zero() || is_nci_definitional(to_hypergraph(sum)).status != NciStatus::NCI) {
    throw Error(ErrorKind::NotNci, "K + (h) is not a nearly complete intersection");
  }
}

}  // namespace

SplittingCheck check_splitting(const MonomialIdeal& j, const MonomialIdeal& k,
                               const SplittingFunction& f, const Budget& budget) {
  SplittingCheck result;
  const MonomialIdeal sum = ideal_sum(j, k);
  const std::vector<Monomial> gj = j.monomials();
  const std::vector<Monomial> gk = k.monomials();
  {
    std::vector<Monomial> both = gj;
    both.insert(both.end(), gk.begin(), gk.end());
    std::sort(both.begin(), both.end());
    std::vector<Monomial> gi = sum.monomials();
    std::sort(gi.begin(), gi.end());
    if (both != gi) {
      result.failure = "generators of J and K do not partition the generators of J + K";
      return result;
    }
  }
  const std::vector<Monomial> domain = ideal_intersection(j, k).monomials();
  const std::size_t d = f.domain.size();
  if (f.phi.size() != d || f.psi.size() != d) {
    result.failure = "phi and psi must have one value per domain element";
    return result;
  }
  {
    std::vector<Monomial> given;
    for (const auto& w : f.domain) given.push_back(sorted(w));
    std::sort(given.begin(), given.end());
    std::vector<Monomial> expected = domain;
    std::sort(expected.begin(), expected.end());
    if (given != expected) {
      result.failure = "domain is not the minimal generating set of J ∩ K";
      return result;
    }
  }
  SubsetChecker checker;
  for (std::size_t p = 0; p < d; ++p) {
    const Monomial phi = sorted(f.phi[p]);
    const Monomial psi = sorted(f.psi[p]);
    if (!contains(gj, phi)) {
      result.failure = "phi(" + render(f.domain[p]) + ") = " + render(phi) + " is not a generator of J";
      return result;
    }
    if (!contains(gk, psi)) {
      result.failure = "psi(" + render(f.domain[p]) + ") = " + render(psi) + " is not a generator of K";
      return result;
    }
    checker.w.push_back(sum.set_of(f.domain[p]));
    checker.phi.push_back(sum.set_of(phi));
    checker.psi.push_back(sum.set_of(psi));
    if ((checker.phi.back() | checker.psi.back()) != checker.w.back()) {
      result.failure = "(S1) fails at " + render(f.domain[p]);
      return result;
    }
  }
  result.s1 = true;

  const bool exhaustive = d < 64 && ((std::uint64_t{1} << d) - 1) <= budget.max_subsets;
  result.mode = exhaustive ? SubsetMode::Exhaustive : SubsetMode::Sampled;
  bool ok = true;
  std::vector<std::size_t> members;
  if (exhaustive) {
    for (std::uint64_t mask = 1; ok && mask < (std::uint64_t{1} << d); ++mask) {
      members.clear();
      for (std::size_t p = 0; p < d; ++p) {
        if (mask >> p & 1) members.push_back(p);
      }
      ok = checker.check(members);
    }
  } else {
    for (std::size_t a = 0; ok && a < d; ++a) {
      ok = checker.check({a});
      for (std::size_t b = a + 1; ok && b < d; ++b) ok = checker.check({a, b});
    }
    std::mt19937_64 rng(kSampleSeed);
    for (int s = 0; ok && s < kRandomSubsets; ++s) {
      members.clear();
      for (std::size_t p = 0; p < d; ++p) {
        if (rng() & 1) members.push_back(p);
      }
      if (!members.empty()) ok = checker.check(members);
    }
  }
  result.s2 = ok;
  result.subsets_checked = checker.checked;
  result.failure = checker.failure;
  return result;
}

bool verify_splitting(const MonomialIdeal& j, const MonomialIdeal& k, const SplittingFunction& f,
                      const Budget& budget) {
  return check_splitting(j, k, f, budget).ok();
}

SplittingFunction canonical_splitting_function(const Monomial& h, const MonomialIdeal& k) {
  const Monomial hs = sorted(h);
  if (hs.empty()) throw Error(ErrorKind::Schema, "h must be a nonconstant monomial");
  const std::vector<Monomial> gk = k.monomials();
  SplittingFunction f;
  for (const Monomial& w : ideal_intersection(principal(hs), k).monomials()) {
    Monomial rest;
    for (const auto& v : w) {
      if (!std::binary_search(hs.begin(), hs.end(), v, NaturalLess{})) rest.push_back(v);
    }
    Monomial psi = rest;
    if (!contains(gk, psi)) {
      psi.push_back(hs.front());
      psi = sorted(std::move(psi));
      if (!contains(gk, psi)) {
        throw Error(ErrorKind::NotNci, "no generator of K fits " + render(w));
      }
    }
    f.domain.push_back(w);
    f.phi.push_back(hs);
    f.psi.push_back(std::move(psi));
  }
  return f;
}

bool verify_betti_splitting(const MonomialIdeal& j, const MonomialIdeal& k,
                            const BettiOptions& options) {
  BettiOptions ideal_options = options;
  ideal_options.subject = Subject::Ideal;
  const BettiTable bi = betti_table(ideal_sum(j, k), ideal_options);
  const BettiTable bj = betti_table(j, ideal_options);
  const BettiTable bk = betti_table(k, ideal_options);
  const BettiTable bjk = betti_table(ideal_intersection(j, k), ideal_options);
  return bi == bj + bk + shift_homological(bjk, 1);
}

PrincipalIntersection intersect_principal(const MonomialIdeal& k, const Monomial& h) {
  const Monomial hs = sorted(h);
  const MonomialIdeal sum = ideal_sum(k, principal(hs));
  require_nci_sum(k, hs, sum);

  const MonomialIdeal meet = ideal_intersection(k, principal(hs));
  const VertexSet hset = meet.set_of(hs);
  std::vector<VertexSet> gens;
  for (VertexSet g : meet.generators()) gens.push_back(g & ~hset);
  const MonomialIdeal cofactor(meet.ring_vars(), std::move(gens));

  const Hypergraph g = to_hypergraph(sum);
  const Hypergraph joined = join_at(g, hs);
  std::string fresh;
  for (const auto& v : joined.vertices()) {
    if (!g.find(v)) fresh = v;
  }
  if (to_ideal(invert(joined, fresh)) != cofactor) {
    throw Error(ErrorKind::Internal, "lcm and join routes disagree on (h) ∩ K");
  }
  if (!is_complete_intersection(cofactor)) {
    throw Error(ErrorKind::Internal, "cofactor of (h) ∩ K is not a complete intersection");
  }
  return {cofactor, hs};
}

DecompositionReport decompose_nci(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (ideal.is_zero() || is_nci_definitional(to_hypergraph(ideal)).status != NciStatus::NCI) {
    throw Error(ErrorKind::NotNci, "the ideal is not a nearly complete intersection");
  }
  BettiOptions ideal_options = options;
  ideal_options.subject = Subject::Ideal;

  std::vector<Monomial> hyperedges;
  for (const auto& m : ideal.monomials()) {
    if (m.size() >= 3) hyperedges.push_back(m);
  }
  DecompositionReport report;
  report.skeleton_ideal = remove_generators(ideal, hyperedges);
  report.skeleton = betti_table(report.skeleton_ideal, ideal_options);

  std::vector<Monomial> dropped;
  for (const auto& h : hyperedges) {
    dropped.push_back(h);
    DecompositionStep step;
    step.hyperedge = h;
    step.remaining = remove_generators(ideal, dropped);
    step.principal = principal_table(static_cast<int>(h.size())).as(Subject::Ideal);
    step.cofactor = intersect_principal(step.remaining, h).cofactor;
    const BettiTable koszul = koszul_table(step.cofactor.degrees()).as(Subject::Ideal);
    step.shifted_intersection = shift_homological(shift_by_degree(koszul, static_cast<int>(h.size())), 1);
    report.steps.push_back(std::move(step));
  }
  BettiTable running = report.skeleton;
  for (auto it = report.steps.rbegin(); it != report.steps.rend(); ++it) {
    it->remaining_table = running;
    running = running + it->principal + it->shifted_intersection;
    it->total = running;
  }
  report.assembled = running;
  report.oracle = betti_table(ideal, ideal_options);
  return report;
}

PdimReport pdim_splitting_bound(const MonomialIdeal& k, const Monomial& h,
                                const BettiOptions& options) {
  const Monomial hs = sorted(h);
  const MonomialIdeal sum = ideal_sum(k, principal(hs));
  require_nci_sum(k, hs, sum);
  BettiOptions ideal_options = options;
  ideal_options.subject = Subject::Ideal;

  PdimReport r;
  r.pdim_ideal = pdim(betti_table(sum, ideal_options));
  r.pdim_k = pdim(betti_table(k, ideal_options));
  r.pdim_principal = pdim(principal_table(static_cast<int>(hs.size())).as(Subject::Ideal));
  r.pdim_intersection = pdim(betti_table(ideal_intersection(k, principal(hs)), ideal_options));
  r.bound_holds = r.pdim_ideal <= r.pdim_k + 1;
  r.max_formula_holds =
      r.pdim_ideal == std::max({r.pdim_k, r.pdim_principal, r.pdim_intersection + 1});
  const VertexSet support = k.support_set();
  for (const auto& x : hs) {
    const std::size_t idx = k.var_index(x);
    if (idx == std::string::npos || !(support & bit(idx))) continue;
    const Monomial single{x};
    if (contains(k.monomials(), single)) continue;
    r.pdim_k_substituted.emplace_back(x, pdim(betti_table(substitute_one(k, x), ideal_options)));
  }
  r.strict_drop = !r.pdim_k_substituted.empty() &&
                  std::all_of(r.pdim_k_substituted.begin(), r.pdim_k_substituted.end(),
                              [&](const auto& p) { return p.second < r.pdim_k; });
  return r;
}

}  // namespace ncilab
