#include "ncilab/labels.hpp"

#include <cctype>

namespace ncilab {

std::vector<std::size_t> indices_of(VertexSet s) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s != 0) {
    out.push_back(first_index(s));
    s &= s - 1;
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    const std::size_t ia = first_index(a);
    const std::size_t ib = first_index(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

VertexSet compress(VertexSet s, VertexSet keep) {
  VertexSet out = 0;
  std::size_t pos = 0;
  while (keep != 0) {
    const std::size_t k = first_index(keep);
    if (s & bit(k)) out |= bit(pos);
    ++pos;
    keep &= keep - 1;
  }
  return out;
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::string_view ra = a.substr(i, ie - i);
      std::string_view rb = b.substr(j, je - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  // Equal under the natural order (e.g. "x01" vs "x1"): fall back to bytes.
  return a < b;
}

bool is_identifier(std::string_view label) {
  if (label.empty()) return false;
  auto head = static_cast<unsigned char>(label.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : label.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

}  // namespace ncilab
