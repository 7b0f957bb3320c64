#pragma once

#include "ncilab/hypergraph.hpp"

namespace ncilab {

/// Maximum matching size of a simple graph (NotAGraph otherwise). At most 20
/// vertices, else BudgetExceeded.
int matching_number(const Hypergraph& g);

/// Largest matching number over induced subgraphs whose components are all
/// K2 or C5. At most 12 vertices.
int ind_match(const Hypergraph& g);

/// Smallest matching number over maximal {K2, C5}-subgraphs: subgraphs whose
/// components are K2 or C5 and whose uncovered vertices are independent in g.
/// At most 12 vertices.
int min_match(const Hypergraph& g);

/// Vertices c, a1, b1, ..., an, bn with edges c-ai, c-bi, ai-bi.
Hypergraph gn_family(int n);

}  // namespace ncilab
