#pragma once

#include <cstdint>
#include <vector>

#include "ncilab/labels.hpp"

namespace ncilab {

/// A simplicial complex on the ground set {0..n-1}, faces as bit sets.
///
/// The face list is downward closed and includes the empty face unless the
/// complex is void. Facets are derived on demand.
class SimplicialComplex {
 public:
  /// The void complex (no faces at all).
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(std::size_t ground, const std::vector<VertexSet>& facets);
  /// Stanley-Reisner complex: the sets containing no `nonfaces` member,
  /// restricted to `within`.
  static SimplicialComplex from_minimal_nonfaces(const std::vector<VertexSet>& nonfaces,
                                                 VertexSet within);

  std::size_t ground() const noexcept { return ground_; }
  bool is_void() const noexcept { return faces_.empty(); }
  const std::vector<VertexSet>& faces() const noexcept { return faces_; }
  bool contains(VertexSet face) const;
  std::vector<VertexSet> facets() const;
  /// Faces of dimension d (d = -1 is the empty face).
  std::vector<VertexSet> faces_of_dimension(int d) const;
  int dimension() const;
  /// Sum over faces of (-1)^dim, the empty face included.
  std::int64_t reduced_euler_characteristic() const;

 private:
  std::size_t ground_ = 0;
  std::vector<VertexSet> faces_;  // sorted by (cardinality, value)
};

/// Rank of an integer matrix (row-major, rows x cols) over Q when
/// characteristic == 0, otherwise over GF(characteristic).
std::size_t matrix_rank(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols,
                        unsigned characteristic);

/// dim H~_d for d = -1 .. dimension(), at index d + 1. The void complex has
/// no homology; {empty face} has rank 1 in degree -1.
std::vector<std::int64_t> reduced_homology(const SimplicialComplex& complex,
                                           unsigned characteristic);

bool is_prime(unsigned p);

}  // namespace ncilab
