#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncilab {

/// A set of vertex (or variable) indices, bit k standing for index k.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline constexpr VertexSet bit(std::size_t k) { return VertexSet{1} << k; }

inline constexpr VertexSet low_bits(std::size_t n) {
  return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

inline int cardinality(VertexSet s) { return std::popcount(s); }

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline bool is_proper_subset(VertexSet a, VertexSet b) {
  return a != b && is_subset(a, b);
}

inline std::size_t first_index(VertexSet s) {
  return static_cast<std::size_t>(std::countr_zero(s));
}

std::vector<std::size_t> indices_of(VertexSet s);

/// Lexicographic order on the sorted index sequences of two sets.
bool lex_less(VertexSet a, VertexSet b);

/// Keeps the bits of `s` selected by `keep` and packs them downward, so that
/// the i-th kept index becomes index i.
VertexSet compress(VertexSet s, VertexSet keep);

/// Label order used everywhere for canonical forms: digit runs compare
/// numerically, so "x2" sorts before "x10".
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const {
    return natural_less(a, b);
  }
};

/// True for [a-zA-Z_][a-zA-Z0-9_]*.
bool is_identifier(std::string_view label);

}  // namespace ncilab
