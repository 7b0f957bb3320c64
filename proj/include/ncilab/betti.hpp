#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "ncilab/monomial_ideal.hpp"

namespace ncilab {

enum class Subject { Ideal, Quotient };

std::string_view to_string(Subject subject);
Subject subject_from_string(std::string_view text);

/// Sparse graded Betti numbers, (homological degree i, internal degree j).
/// Zero entries are never stored. IDEAL and QUOTIENT tables of the same ideal
/// are related by beta_{i,j}(I) = beta_{i+1,j}(R/I).
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  explicit BettiTable(Subject subject = Subject::Ideal) : subject_(subject) {}

  Subject subject() const noexcept { return subject_; }
  const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t value);
  /// Sum over j of beta_{i,j}.
  std::int64_t total(int i) const;
  /// Converts between subjects with the offset law.
  BettiTable as(Subject subject) const;

  BettiTable& operator+=(const BettiTable& other);
  friend BettiTable operator+(BettiTable a, const BettiTable& b) { return a += b; }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Subject subject_;
  std::map<Key, std::int64_t> entries_;
};

struct Budget {
  std::size_t max_vars = 16;
  std::uint64_t max_subsets = 65536;

  /// Defaults overridden by NCILAB_MAX_VARS / NCILAB_MAX_SUBSETS.
  static Budget from_environment();
};

struct BettiOptions {
  Subject subject = Subject::Ideal;
  /// 0 computes over Q; a prime p computes over GF(p).
  unsigned characteristic = 0;
  Budget budget{};
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Graded Betti numbers by Hochster's formula: for every subset s of the
/// support, beta_{i,|s|}(I) = dim H~_{|s|-i-2}(Delta restricted to s),
/// Delta the Stanley-Reisner complex. Throws BudgetExceeded.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});
BettiTable betti_table(const MonomialIdeal& ideal, Subject subject);

/// QUOTIENT table of a complete intersection with the given generator
/// degrees: coefficients of prod_k (1 + t u^{d_k}).
BettiTable koszul_table(std::span<const int> degrees);

/// QUOTIENT table of R/(h), deg h = d: {(0,0):1, (1,d):1}.
BettiTable principal_table(int degree);

/// (i, j) -> (i, j + d).
BettiTable shift_by_degree(const BettiTable& table, int d);
/// (i, j) -> (i + d, j).
BettiTable shift_homological(const BettiTable& table, int d);

/// Largest i with an entry. Throws EmptyTable.
int pdim(const BettiTable& table);
/// Largest j - i over the entries. Throws EmptyTable.
int reg(const BettiTable& table);

/// Aligned text matrix: one row per j - i (labelled), one column per i,
/// "-" for zeros.
std::string render_table(const BettiTable& table);

}  // namespace ncilab
