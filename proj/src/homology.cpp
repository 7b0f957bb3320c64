#include "ncilab/homology.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncilab/error.hpp"

namespace ncilab {

namespace {

bool by_size(VertexSet a, VertexSet b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

using BigInt = boost::multiprecision::cpp_int;

template <class T>
using Column = std::vector<std::pair<std::uint32_t, T>>;

// out = a * x - b * y; false on overflow.
bool mul_sub(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y, std::int64_t& out) {
  std::int64_t p = 0;
  std::int64_t q = 0;
  if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q)) return false;
  return !__builtin_sub_overflow(p, q, &out);
}

bool mul_sub(const BigInt& a, const BigInt& x, const BigInt& b, const BigInt& y, BigInt& out) {
  out = a * x - b * y;
  return true;
}

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class T>
T abs_of(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Column reduction by lowest nonzero row; returns the rank over Q, or nullopt
// if T overflows.
template <class T>
std::optional<std::size_t> rank_over_q(std::vector<Column<T>> cols) {
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Column<T>& col = cols[c];
    while (!col.empty()) {
      auto it = pivot_of_row.find(col.back().first);
      if (it == pivot_of_row.end()) break;
      const Column<T>& piv = cols[it->second];
      const T g = gcd_of(abs_of(piv.back().second), abs_of(col.back().second));
      const T a = piv.back().second / g;
      const T b = col.back().second / g;
      Column<T> merged;
      merged.reserve(col.size() + piv.size());
      std::size_t x = 0;
      std::size_t y = 0;
      const T zero = 0;
      while (x < col.size() || y < piv.size()) {
        std::uint32_t row;
        const T* cv = &zero;
        const T* pv = &zero;
        if (y == piv.size() || (x < col.size() && col[x].first < piv[y].first)) {
          row = col[x].first;
          cv = &col[x++].second;
        } else if (x == col.size() || piv[y].first < col[x].first) {
          row = piv[y].first;
          pv = &piv[y++].second;
        } else {
          row = col[x].first;
          cv = &col[x++].second;
          pv = &piv[y++].second;
        }
        T v;
        if (!mul_sub(a, *cv, b, *pv, v)) return std::nullopt;
        if (v != 0) merged.emplace_back(row, std::move(v));
      }
      T content = 0;
      for (const auto& [row, v] : merged) content = gcd_of(content, abs_of(v));
      if (content > 1) {
        for (auto& entry : merged) entry.second /= content;
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      pivot_of_row.emplace(col.back().first, c);
      ++rank;
    }
  }
  return rank;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = a % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::size_t rank_mod_p(std::vector<Column<std::int64_t>> cols, std::int64_t p) {
  for (auto& col : cols) {
    Column<std::int64_t> reduced;
    for (auto& [row, v] : col) {
      const std::int64_t m = ((v % p) + p) % p;
      if (m != 0) reduced.emplace_back(row, m);
    }
    col = std::move(reduced);
  }
  std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Column<std::int64_t>& col = cols[c];
    while (!col.empty()) {
      auto it = pivot_of_row.find(col.back().first);
      if (it == pivot_of_row.end()) break;
      const Column<std::int64_t>& piv = cols[it->second];
      // Pivot columns are normalized to a trailing 1.
      const std::int64_t f = col.back().second;
      Column<std::int64_t> merged;
      merged.reserve(col.size() + piv.size());
      std::size_t x = 0;
      std::size_t y = 0;
      while (x < col.size() || y < piv.size()) {
        std::uint32_t row;
        std::int64_t v;
        if (y == piv.size() || (x < col.size() && col[x].first < piv[y].first)) {
          row = col[x].first;
          v = col[x++].second;
        } else if (x == col.size() || piv[y].first < col[x].first) {
          row = piv[y].first;
          v = (p - f * piv[y++].second % p) % p;
        } else {
          row = col[x].first;
          v = ((col[x++].second - f * piv[y++].second) % p + p) % p;
        }
        if (v != 0) merged.emplace_back(row, v);
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      const std::int64_t inv = mod_inverse(col.back().second, p);
      for (auto& entry : col) entry.second = entry.second * inv % p;
      pivot_of_row.emplace(col.back().first, c);
      ++rank;
    }
  }
  return rank;
}

std::size_t sparse_rank(const std::vector<Column<std::int64_t>>& cols, unsigned characteristic) {
  if (characteristic != 0) return rank_mod_p(cols, characteristic);
  if (auto r = rank_over_q(cols)) return *r;
  std::vector<Column<BigInt>> big;
  big.reserve(cols.size());
  for (const auto& col : cols) {
    Column<BigInt> b;
    for (const auto& [row, v] : col) b.emplace_back(row, BigInt(v));
    big.push_back(std::move(b));
  }
  return *rank_over_q(std::move(big));
}

void check_characteristic(unsigned characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1u << 31))) {
    throw Error(ErrorKind::Schema, "characteristic must be 0 or a prime below 2^31, got " +
                                       std::to_string(characteristic));
  }
}

}  // namespace

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t ground,
                                                 const std::vector<VertexSet>& facets) {
  const VertexSet all = low_bits(ground);
  std::set<VertexSet> faces;
  for (VertexSet f : facets) {
    if (!is_subset(f, all)) throw Error(ErrorKind::Internal, "facet outside the ground set");
    VertexSet s = f;
    while (true) {
      faces.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  SimplicialComplex c;
  c.ground_ = ground;
  c.faces_.assign(faces.begin(), faces.end());
  std::sort(c.faces_.begin(), c.faces_.end(), by_size);
  return c;
}

SimplicialComplex SimplicialComplex::from_minimal_nonfaces(const std::vector<VertexSet>& nonfaces,
                                                           VertexSet within) {
  SimplicialComplex c;
  c.ground_ = within == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(within));
  if (std::any_of(nonfaces.begin(), nonfaces.end(), [](VertexSet n) { return n == 0; })) {
    return c;
  }
  const std::vector<std::size_t> verts = indices_of(within);
  // Faces of one size at a time; extend each by a larger vertex.
  std::vector<VertexSet> layer{0};
  while (!layer.empty()) {
    c.faces_.insert(c.faces_.end(), layer.begin(), layer.end());
    std::vector<VertexSet> next;
    for (VertexSet f : layer) {
      const std::size_t top = f == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(f));
      for (std::size_t v : verts) {
        if (v < top) continue;
        const VertexSet g = f | bit(v);
        const bool blocked = std::any_of(nonfaces.begin(), nonfaces.end(), [&](VertexSet n) {
          return (n & bit(v)) && is_subset(n, g);
        });
        if (!blocked) next.push_back(g);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return c;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, by_size);
}

std::vector<VertexSet> SimplicialComplex::facets() const {
  std::vector<VertexSet> out;
  for (std::size_t k = faces_.size(); k-- > 0;) {
    const VertexSet f = faces_[k];
    if (std::none_of(out.begin(), out.end(), [f](VertexSet g) { return is_subset(f, g); })) {
      out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end(), by_size);
  return out;
}

std::vector<VertexSet> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces_) {
    if (cardinality(f) == d + 1) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -2 : cardinality(faces_.back()) - 1;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
  std::int64_t chi = 0;
  for (VertexSet f : faces_) chi += (cardinality(f) - 1) % 2 == 0 ? 1 : -1;
  return chi;
}

std::size_t matrix_rank(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols,
                        unsigned characteristic) {
  check_characteristic(characteristic);
  if (entries.size() != rows * cols) throw Error(ErrorKind::Internal, "matrix shape mismatch");
  std::vector<Column<std::int64_t>> columns(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (auto v = entries[r * cols + c]; v != 0) {
        columns[c].emplace_back(static_cast<std::uint32_t>(r), v);
      }
    }
  }
  return sparse_rank(columns, characteristic);
}

std::vector<std::int64_t> reduced_homology(const SimplicialComplex& complex,
                                           unsigned characteristic) {
  check_characteristic(characteristic);
  if (complex.is_void()) return {};
  const int top = complex.dimension();
  // layers[d + 1] = faces of dimension d, in increasing order.
  std::vector<std::vector<VertexSet>> layers(static_cast<std::size_t>(top + 2));
  for (VertexSet f : complex.faces()) layers[static_cast<std::size_t>(cardinality(f))].push_back(f);

  // ranks[d + 1] = rank of the boundary map from dimension d to d - 1.
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) {
    const auto& lower = layers[static_cast<std::size_t>(d)];
    const auto& upper = layers[static_cast<std::size_t>(d + 1)];
    std::unordered_map<VertexSet, std::uint32_t> row_of;
    row_of.reserve(lower.size());
    for (std::size_t k = 0; k < lower.size(); ++k) row_of.emplace(lower[k], static_cast<std::uint32_t>(k));
    std::vector<Column<std::int64_t>> cols;
    cols.reserve(upper.size());
    for (VertexSet f : upper) {
      Column<std::int64_t> col;
      std::int64_t sign = 1;
      for (std::size_t v : indices_of(f)) {
        auto it = row_of.find(f & ~bit(v));
        if (it == row_of.end()) throw Error(ErrorKind::Internal, "complex is not downward closed");
        col.emplace_back(it->second, sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    ranks[static_cast<std::size_t>(d + 1)] = static_cast<std::int64_t>(sparse_rank(cols, characteristic));
  }

  std::vector<std::int64_t> out(static_cast<std::size_t>(top + 2), 0);
  for (int d = -1; d <= top; ++d) {
    const auto k = static_cast<std::size_t>(d + 1);
    out[k] = static_cast<std::int64_t>(layers[k].size()) - ranks[k] - ranks[k + 1];
  }
  return out;
}

}  // namespace ncilab
