#include "ncilab/betti.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "ncilab/error.hpp"
#include "ncilab/homology.hpp"

namespace ncilab {

std::string_view to_string(Subject subject) {
  return subject == Subject::Ideal ? "IDEAL" : "QUOTIENT";
}

Subject subject_from_string(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "IDEAL") return Subject::Ideal;
  if (upper == "QUOTIENT") return Subject::Quotient;
  throw Error(ErrorKind::Schema, "subject must be IDEAL or QUOTIENT, got '" + std::string(text) + "'");
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t value) {
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t sum = 0;
  for (const auto& [key, v] : entries_) {
    if (key.first == i) sum += v;
  }
  return sum;
}

BettiTable BettiTable::as(Subject subject) const {
  if (subject == subject_) return *this;
  BettiTable out(subject);
  if (subject == Subject::Quotient) {
    out.add(0, 0, 1);
    for (const auto& [key, v] : entries_) out.add(key.first + 1, key.second, v);
  } else {
    for (const auto& [key, v] : entries_) {
      if (key.first > 0) out.add(key.first - 1, key.second, v);
    }
  }
  return out;
}

BettiTable& BettiTable::operator+=(const BettiTable& other) {
  if (other.subject_ != subject_) {
    throw Error(ErrorKind::Internal, "adding Betti tables of different subjects");
  }
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
  return *this;
}

namespace {

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw Error(ErrorKind::Schema, std::string(name) + " must be a positive integer");
  }
  return v;
}

// Subsets of the support that are unions of generators. Every other subset
// has a cone as its restricted complex and contributes nothing.
std::vector<VertexSet> generator_unions(const std::vector<VertexSet>& gens,
                                        std::uint64_t max_subsets) {
  std::unordered_set<VertexSet> seen{0};
  std::vector<VertexSet> order{0};
  for (VertexSet g : gens) {
    const std::size_t n = order.size();
    for (std::size_t k = 0; k < n; ++k) {
      const VertexSet u = order[k] | g;
      if (seen.insert(u).second) {
        order.push_back(u);
        if (order.size() > max_subsets + 1) {
          throw Error(ErrorKind::BudgetExceeded,
                      "more than " + std::to_string(max_subsets) + " subsets to examine");
        }
      }
    }
  }
  order.erase(order.begin());
  std::sort(order.begin(), order.end());
  return order;
}

void add_subset(const std::vector<VertexSet>& gens, VertexSet sigma, unsigned characteristic,
                BettiTable& table) {
  std::vector<VertexSet> inside;
  for (VertexSet g : gens) {
    if (is_subset(g, sigma)) inside.push_back(g);
  }
  const SimplicialComplex delta = SimplicialComplex::from_minimal_nonfaces(inside, sigma);
  const std::vector<std::int64_t> h = reduced_homology(delta, characteristic);
  std::int64_t alternating = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] < 0) throw Error(ErrorKind::Internal, "negative homology rank");
    alternating += (k % 2 == 1 ? 1 : -1) * h[k];
  }
  if (alternating != delta.reduced_euler_characteristic()) {
    throw Error(ErrorKind::Internal, "Euler characteristic check failed");
  }
  const int size = cardinality(sigma);
  for (std::size_t k = 0; k < h.size(); ++k) {
    const int d = static_cast<int>(k) - 1;
    const int i = size - d - 2;
    if (h[k] != 0 && i >= 0) table.add(i, size, h[k]);
  }
}

}  // namespace

Budget Budget::from_environment() {
  Budget b;
  b.max_vars = static_cast<std::size_t>(env_number("NCILAB_MAX_VARS", b.max_vars));
  b.max_subsets = env_number("NCILAB_MAX_SUBSETS", b.max_subsets);
  return b;
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (options.characteristic != 0 && !is_prime(options.characteristic)) {
    throw Error(ErrorKind::Schema, "characteristic must be 0 or a prime");
  }
  const std::size_t n = static_cast<std::size_t>(cardinality(ideal.support_set()));
  if (n > options.budget.max_vars) {
    throw Error(ErrorKind::BudgetExceeded, "support has " + std::to_string(n) +
                                               " variables, budget is " +
                                               std::to_string(options.budget.max_vars));
  }
  const std::vector<VertexSet>& gens = ideal.generators();
  const std::vector<VertexSet> subsets = generator_unions(gens, options.budget.max_subsets);

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(subsets.size() / 16 + 1)));

  BettiTable table(Subject::Ideal);
  if (threads == 1) {
    for (VertexSet s : subsets) add_subset(gens, s, options.characteristic, table);
  } else {
    std::vector<BettiTable> partial(threads, BettiTable(Subject::Ideal));
    std::vector<std::exception_ptr> failures(threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k; (k = next.fetch_add(1)) < subsets.size();) {
            add_subset(gens, subsets[k], options.characteristic, partial[t]);
          }
        } catch (...) {
          failures[t] = std::current_exception();
          next = subsets.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    for (const auto& p : partial) table += p;
  }
  return table.as(options.subject);
}

BettiTable betti_table(const MonomialIdeal& ideal, Subject subject) {
  BettiOptions options;
  options.subject = subject;
  return betti_table(ideal, options);
}

BettiTable koszul_table(std::span<const int> degrees) {
  // poly[i] maps internal degree -> count, for homological degree i.
  std::vector<std::map<int, std::int64_t>> poly{{{0, 1}}};
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorKind::Schema, "generator degrees must be positive");
    poly.emplace_back();
    for (std::size_t i = poly.size() - 1; i > 0; --i) {
      for (const auto& [j, v] : poly[i - 1]) poly[i][j + d] += v;
    }
  }
  BettiTable table(Subject::Quotient);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    for (const auto& [j, v] : poly[i]) table.add(static_cast<int>(i), j, v);
  }
  return table;
}

BettiTable principal_table(int degree) {
  if (degree < 1) throw Error(ErrorKind::Schema, "degree must be positive");
  const int d[] = {degree};
  return koszul_table(d);
}

BettiTable shift_by_degree(const BettiTable& table, int d) {
  BettiTable out(table.subject());
  for (const auto& [key, v] : table.entries()) out.add(key.first, key.second + d, v);
  return out;
}

BettiTable shift_homological(const BettiTable& table, int d) {
  BettiTable out(table.subject());
  for (const auto& [key, v] : table.entries()) out.add(key.first + d, key.second, v);
  return out;
}

int pdim(const BettiTable& table) {
  if (table.empty()) throw Error(ErrorKind::EmptyTable, "pdim of an empty table");
  int best = 0;
  for (const auto& [key, v] : table.entries()) best = std::max(best, key.first);
  return best;
}

int reg(const BettiTable& table) {
  if (table.empty()) throw Error(ErrorKind::EmptyTable, "reg of an empty table");
  int best = std::numeric_limits<int>::min();
  for (const auto& [key, v] : table.entries()) best = std::max(best, key.second - key.first);
  return best;
}

std::string render_table(const BettiTable& table) {
  if (table.empty()) return "(empty)\n";
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [key, v] : table.entries()) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  const int cols = pdim(table) + 1;
  std::size_t width = 1;
  for (const auto& [key, v] : table.entries()) width = std::max(width, std::to_string(v).size());
  width = std::max(width, std::to_string(cols - 1).size());
  std::size_t label = 1;
  for (int r = lo; r <= hi; ++r) label = std::max(label, std::to_string(r).size());

  std::ostringstream out;
  auto pad = [&out](const std::string& s, std::size_t w) {
    out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
  };
  pad("", label + 1);
  for (int i = 0; i < cols; ++i) {
    out << ' ';
    pad(std::to_string(i), width);
  }
  out << '\n';
  for (int r = lo; r <= hi; ++r) {
    pad(std::to_string(r), label);
    out << ':';
    for (int i = 0; i < cols; ++i) {
      const std::int64_t v = table.at(i, i + r);
      out << ' ';
      pad(v == 0 ? "-" : std::to_string(v), width);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ncilab
