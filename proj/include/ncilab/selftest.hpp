#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ncilab {

/// Eight-variable NCI with two cubic hyperedges: x7, x8 joined to each other
/// and to x1..x6, plus x1*x2*x3 and x4*x5*x6.
inline constexpr std::string_view kReferenceNci =
    "x1*x7, x2*x7, x3*x7, x4*x7, x5*x7, x6*x7, x1*x8, x2*x8, x3*x8, x4*x8, x5*x8, x6*x8, "
    "x7*x8, x1*x2*x3, x4*x5*x6";

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-checks between independent routes. `quick` shrinks the exhaustive
/// ranges.
std::vector<SelftestResult> run_selftest(bool quick);

}  // namespace ncilab
