#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncilab/hypergraph.hpp"
#include "ncilab/labels.hpp"

namespace ncilab {

/// A squarefree monomial, as the sorted list of its variable names.
using Monomial = std::vector<std::string>;

/// A squarefree monomial ideal over a named list of variables.
///
/// Generators are bit sets over `ring_vars()` indices and are always held as
/// the minimal generating set (a divisibility antichain). The ring order
/// records first appearance and only matters for display; equality compares
/// generator sets by variable name.
class MonomialIdeal {
 public:
  /// The zero ideal over an empty ring.
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> ring_vars, std::vector<VertexSet> generators);

  static MonomialIdeal from_monomials(const std::vector<Monomial>& monomials);

  const std::vector<std::string>& ring_vars() const noexcept { return ring_vars_; }
  const std::vector<VertexSet>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  VertexSet support_set() const;
  std::vector<std::string> support() const;
  Monomial monomial(VertexSet generator) const;
  /// Generators as monomials, sorted by (degree, natural lexicographic).
  std::vector<Monomial> monomials() const;
  std::vector<int> degrees() const;

  /// Index of `var` in ring_vars, or npos.
  std::size_t var_index(std::string_view var) const;
  VertexSet set_of(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  std::vector<std::string> ring_vars_;
  std::vector<VertexSet> generators_;
};

/// Grammar: monomial ("," monomial)*, monomial := var ("*" var)*,
/// var := [a-zA-Z_][a-zA-Z0-9_]*. Whitespace is ignored and one pair of
/// enclosing parentheses is accepted. Throws ParseError or NotSquarefree.
MonomialIdeal parse_ideal(std::string_view text);

std::string render(const Monomial& m);
/// Canonical text: generators by (degree, lexicographic), "*" separator.
std::string render(const MonomialIdeal& ideal);

/// Throws EmptyIdeal for the zero ideal. Vertices are the support.
Hypergraph to_hypergraph(const MonomialIdeal& ideal);
/// Generators are the minimal edges; vertices outside every edge drop out.
MonomialIdeal to_ideal(const Hypergraph& g);

/// I(x=1). Throws UnitIdeal when x is itself a generator and UnknownVertex
/// when x is not in the support.
MonomialIdeal substitute_one(const MonomialIdeal& ideal, std::string_view x);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// Generated by the pairwise lcms, then minimalized.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// h * J; h must be coprime to J's support.
MonomialIdeal multiply(const Monomial& h, const MonomialIdeal& j);
MonomialIdeal principal(const Monomial& h);
/// All generators except those listed.
MonomialIdeal remove_generators(const MonomialIdeal& ideal, const std::vector<Monomial>& drop);

/// Generators are pairwise coprime.
bool is_complete_intersection(const MonomialIdeal& ideal);

}  // namespace ncilab
