#include "ncilab/monomial_ideal.hpp"

#include <algorithm>
#include <cctype>

#include "ncilab/error.hpp"

namespace ncilab {

namespace {

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), NaturalLess{});
}

// Re-expresses `generators` (over `from`) as sets over `to`, which must
// contain every variable they use.
std::vector<VertexSet> translate(const std::vector<std::string>& from,
                                 const std::vector<VertexSet>& generators,
                                 const MonomialIdeal& to) {
  std::vector<VertexSet> out;
  out.reserve(generators.size());
  for (VertexSet g : generators) {
    VertexSet s = 0;
    for (std::size_t k : indices_of(g)) s |= bit(to.var_index(from[k]));
    out.push_back(s);
  }
  return out;
}

std::vector<std::string> merged_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<std::string> ring = a.ring_vars();
  for (const auto& v : b.ring_vars()) {
    if (a.var_index(v) == std::string::npos) ring.push_back(v);
  }
  return ring;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> ring_vars,
                             std::vector<VertexSet> generators)
    : ring_vars_(std::move(ring_vars)), generators_(std::move(generators)) {
  if (ring_vars_.size() > kMaxVertices) {
    throw Error(ErrorKind::BudgetExceeded,
                "at most " + std::to_string(kMaxVertices) + " variables are supported");
  }
  const VertexSet all = low_bits(ring_vars_.size());
  for (VertexSet g : generators_) {
    if (!is_subset(g, all)) throw Error(ErrorKind::Internal, "generator outside the ring");
    if (g == 0) throw Error(ErrorKind::UnitIdeal, "the unit monomial is not allowed");
  }
  minimalize_edges(generators_);
  std::sort(generators_.begin(), generators_.end(), [this](VertexSet a, VertexSet b) {
    return monomial_less(monomial(a), monomial(b));
  });
}

MonomialIdeal MonomialIdeal::from_monomials(const std::vector<Monomial>& monomials) {
  std::vector<std::string> ring;
  auto index = [&ring](const std::string& v) {
    auto it = std::find(ring.begin(), ring.end(), v);
    if (it != ring.end()) return static_cast<std::size_t>(it - ring.begin());
    ring.push_back(v);
    return ring.size() - 1;
  };
  std::vector<VertexSet> gens;
  for (const auto& m : monomials) {
    VertexSet s = 0;
    for (const auto& v : m) {
      const std::size_t k = index(v);
      if (k >= kMaxVertices) {
        throw Error(ErrorKind::BudgetExceeded, "too many variables");
      }
      if (s & bit(k)) {
        throw Error(ErrorKind::NotSquarefree, "variable '" + v + "' repeats in one monomial");
      }
      s |= bit(k);
    }
    gens.push_back(s);
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

VertexSet MonomialIdeal::support_set() const {
  VertexSet s = 0;
  for (VertexSet g : generators_) s |= g;
  return s;
}

std::vector<std::string> MonomialIdeal::support() const {
  std::vector<std::string> out;
  for (std::size_t k : indices_of(support_set())) out.push_back(ring_vars_[k]);
  std::sort(out.begin(), out.end(), NaturalLess{});
  return out;
}

Monomial MonomialIdeal::monomial(VertexSet generator) const {
  Monomial m;
  for (std::size_t k : indices_of(generator)) m.push_back(ring_vars_.at(k));
  std::sort(m.begin(), m.end(), NaturalLess{});
  return m;
}

std::vector<Monomial> MonomialIdeal::monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (VertexSet g : generators_) out.push_back(monomial(g));
  return out;
}

std::vector<int> MonomialIdeal::degrees() const {
  std::vector<int> out;
  for (VertexSet g : generators_) out.push_back(cardinality(g));
  return out;
}

std::size_t MonomialIdeal::var_index(std::string_view var) const {
  auto it = std::find(ring_vars_.begin(), ring_vars_.end(), var);
  return it == ring_vars_.end() ? std::string::npos
                                : static_cast<std::size_t>(it - ring_vars_.begin());
}

VertexSet MonomialIdeal::set_of(const Monomial& m) const {
  VertexSet s = 0;
  for (const auto& v : m) {
    const std::size_t k = var_index(v);
    if (k == std::string::npos) {
      throw Error(ErrorKind::UnknownVertex, "variable '" + v + "' is not in the ring");
    }
    s |= bit(k);
  }
  return s;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.monomials() == b.monomials();
}

namespace {

class IdealParser {
 public:
  explicit IdealParser(std::string_view text) : text_(text) {}

  MonomialIdeal parse() {
    skip_space();
    bool parens = false;
    if (peek() == '(') {
      parens = true;
      ++pos_;
    }
    std::vector<Monomial> monomials;
    monomials.push_back(parse_monomial());
    skip_space();
    while (peek() == ',') {
      ++pos_;
      monomials.push_back(parse_monomial());
      skip_space();
    }
    if (parens) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return MonomialIdeal::from_monomials(monomials);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  Monomial parse_monomial() {
    Monomial m;
    const std::size_t start = (skip_space(), pos_);
    m.push_back(parse_var());
    skip_space();
    while (peek() == '*') {
      ++pos_;
      m.push_back(parse_var());
      skip_space();
    }
    Monomial sorted = m;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorKind::NotSquarefree, "at position " + std::to_string(start) +
                                                ": variable '" + *dup +
                                                "' repeats in one monomial");
    }
    return m;
  }

  std::string parse_var() {
    skip_space();
    const std::size_t start = pos_;
    auto is_head = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto is_tail = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (!is_head(peek())) {
      fail(pos_ < text_.size() ? "expected a variable name" : "unexpected end of input");
    }
    while (pos_ < text_.size() && is_tail(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) { return IdealParser(text).parse(); }

std::string render(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) out += '*';
    out += m[k];
  }
  return out;
}

std::string render(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& m : ideal.monomials()) {
    if (!first) out += ", ";
    first = false;
    out += render(m);
  }
  return out;
}

Hypergraph to_hypergraph(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw Error(ErrorKind::EmptyIdeal, "the zero ideal has no hypergraph");
  }
  std::vector<std::vector<std::string>> edges;
  for (const auto& m : ideal.monomials()) edges.push_back(m);
  return Hypergraph(ideal.support(), edges);
}

MonomialIdeal to_ideal(const Hypergraph& g) {
  std::vector<Monomial> monomials;
  Hypergraph reduced = g.is_minimal() ? g : min_reduce(g);
  for (const auto& e : reduced.edge_labels()) monomials.push_back(e);
  return MonomialIdeal::from_monomials(monomials);
}

MonomialIdeal substitute_one(const MonomialIdeal& ideal, std::string_view x) {
  const std::size_t k = ideal.var_index(x);
  if (k == std::string::npos || !(ideal.support_set() & bit(k))) {
    throw Error(ErrorKind::UnknownVertex,
                "variable '" + std::string(x) + "' is not in the support");
  }
  std::vector<VertexSet> gens;
  for (VertexSet g : ideal.generators()) {
    const VertexSet r = g & ~bit(k);
    if (r == 0) {
      throw Error(ErrorKind::UnitIdeal,
                  "'" + std::string(x) + "' is a generator, so I(" + std::string(x) + "=1) = (1)");
    }
    gens.push_back(r);
  }
  return MonomialIdeal(ideal.ring_vars(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal ring(merged_ring(a, b), {});
  std::vector<VertexSet> gens = translate(a.ring_vars(), a.generators(), ring);
  for (VertexSet g : translate(b.ring_vars(), b.generators(), ring)) gens.push_back(g);
  return MonomialIdeal(ring.ring_vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal ring(merged_ring(a, b), {});
  const std::vector<VertexSet> ga = translate(a.ring_vars(), a.generators(), ring);
  const std::vector<VertexSet> gb = translate(b.ring_vars(), b.generators(), ring);
  std::vector<VertexSet> gens;
  gens.reserve(ga.size() * gb.size());
  for (VertexSet x : ga) {
    for (VertexSet y : gb) gens.push_back(x | y);
  }
  return MonomialIdeal(ring.ring_vars(), std::move(gens));
}

MonomialIdeal principal(const Monomial& h) { return MonomialIdeal::from_monomials({h}); }

MonomialIdeal multiply(const Monomial& h, const MonomialIdeal& j) {
  const MonomialIdeal hp = principal(h);
  MonomialIdeal ring(merged_ring(j, hp), {});
  const VertexSet hs = ring.set_of(h);
  std::vector<VertexSet> gens = translate(j.ring_vars(), j.generators(), ring);
  for (VertexSet& g : gens) {
    if (g & hs) throw Error(ErrorKind::Internal, "multiplier shares variables with the ideal");
    g |= hs;
  }
  if (gens.empty()) return MonomialIdeal(ring.ring_vars(), {});
  return MonomialIdeal(ring.ring_vars(), std::move(gens));
}

MonomialIdeal remove_generators(const MonomialIdeal& ideal, const std::vector<Monomial>& drop) {
  std::vector<VertexSet> dropped;
  for (const auto& m : drop) dropped.push_back(ideal.set_of(m));
  std::vector<VertexSet> gens;
  for (VertexSet g : ideal.generators()) {
    if (std::find(dropped.begin(), dropped.end(), g) == dropped.end()) gens.push_back(g);
  }
  return MonomialIdeal(ideal.ring_vars(), std::move(gens));
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  VertexSet seen = 0;
  for (VertexSet g : ideal.generators()) {
    if (seen & g) return false;
    seen |= g;
  }
  return true;
}

}  // namespace ncilab
