#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncilab/betti.hpp"
#include "ncilab/monomial_ideal.hpp"

namespace ncilab {

/// Maps each minimal generator w of J ∩ K to a generator phi(w) of J and a
/// generator psi(w) of K. The three vectors are parallel.
struct SplittingFunction {
  std::vector<Monomial> domain;
  std::vector<Monomial> phi;
  std::vector<Monomial> psi;
};

enum class SubsetMode { Exhaustive, Sampled };

struct SplittingCheck {
  bool s1 = false;
  bool s2 = false;
  SubsetMode mode = SubsetMode::Exhaustive;
  std::uint64_t subsets_checked = 0;
  /// Empty when both conditions hold.
  std::string failure;

  bool ok() const { return s1 && s2; }
};

/// Checks w = lcm(phi(w), psi(w)) for every w, and that lcm(phi(G')) and
/// lcm(psi(G')) strictly divide lcm(G') for every nonempty subset G' of the
/// domain. Past budget.max_subsets subsets only singletons, pairs and 10^4
/// seeded random subsets are checked (mode Sampled).
SplittingCheck check_splitting(const MonomialIdeal& j, const MonomialIdeal& k,
                               const SplittingFunction& f, const Budget& budget = {});
bool verify_splitting(const MonomialIdeal& j, const MonomialIdeal& k, const SplittingFunction& f,
                      const Budget& budget = {});

/// phi(w) = h. psi(w) = w / h when that is a generator of K, else x * (w / h)
/// with x the first variable of h. Throws NotNci if psi lands outside G(K).
SplittingFunction canonical_splitting_function(const Monomial& h, const MonomialIdeal& k);

/// beta_{i,j}(J + K) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J ∩ K)
/// entrywise, every table from the homology oracle (IDEAL subject).
bool verify_betti_splitting(const MonomialIdeal& j, const MonomialIdeal& k,
                            const BettiOptions& options = {});

struct PrincipalIntersection {
  /// J with (h) ∩ K = h * J; a complete intersection.
  MonomialIdeal cofactor;
  Monomial factor;
};

/// (h) ∩ K = h * J. Computed from lcms and checked against inverting the join
/// of K + (h) at h; a mismatch raises Internal. Throws NotNci unless K + (h)
/// is NCI, DegreeTooLow unless deg h >= 3.
PrincipalIntersection intersect_principal(const MonomialIdeal& k, const Monomial& h);

struct DecompositionStep {
  Monomial hyperedge;
  /// K_b: the ideal without h_1..h_b.
  MonomialIdeal remaining;
  /// beta(K_b), assembled from the later steps.
  BettiTable remaining_table;
  BettiTable principal;
  MonomialIdeal cofactor;
  /// beta(K_b ∩ (h_b)) moved up one homological degree.
  BettiTable shifted_intersection;
  /// beta(K_{b-1}) = remaining_table + principal + shifted_intersection.
  BettiTable total;
};

struct DecompositionReport {
  MonomialIdeal skeleton_ideal;
  BettiTable skeleton;
  std::vector<DecompositionStep> steps;
  BettiTable assembled;
  BettiTable oracle;

  bool agrees() const { return assembled == oracle; }
};

/// Splits off the hyperedges (degree >= 3 generators, by degree then label)
/// one at a time. Tables are IDEAL subject. Throws NotNci.
DecompositionReport decompose_nci(const MonomialIdeal& ideal, const BettiOptions& options = {});

struct PdimReport {
  int pdim_ideal = 0;
  int pdim_k = 0;
  int pdim_principal = 0;
  int pdim_intersection = 0;
  /// pdim I <= pdim K + 1.
  bool bound_holds = false;
  /// pdim I = max(pdim K, pdim (h), pdim(K ∩ (h)) + 1).
  bool max_formula_holds = false;
  /// pdim K(x=1) for each x in h that lies in K's support (keyed by x).
  std::vector<std::pair<std::string, int>> pdim_k_substituted;
  /// Every pdim K(x=1) < pdim K. Recorded, never required.
  bool strict_drop = false;

  bool holds() const { return bound_holds && max_formula_holds; }
};

/// pdim comparisons for I = K + (h) (IDEAL subject). Throws NotNci,
/// DegreeTooLow.
PdimReport pdim_splitting_bound(const MonomialIdeal& k, const Monomial& h,
                                const BettiOptions& options = {});

}  // namespace ncilab
