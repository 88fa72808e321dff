#pragma once
// Windowing of modules built from C ⊗ K[u^{±1}]-style expansions: which
// (generator, exponent) pairs land in a degree window, and where the
// result still agrees with the untruncated object.

#include <optional>
#include <utility>
#include <vector>

#include "floer/circle.hpp"

namespace floer::detail {

struct ExpRange {
  std::optional<int> lo, hi;
  bool contains(int n) const { return (!lo || n >= *lo) && (!hi || n <= *hi); }
};

// Exponents n of u^n present in each flavor.
ExpRange exponents(Flavor f);

int floor_div(int a, int b);
int ceil_div(int a, int b);

// Completeness of a windowed module whose degree-k part is built from C at
// degrees k + off + 2n over the exponent range.
Completeness windowed_completeness(const GradedModule& C, const ExpRange& r, const Window& w,
                                   const std::vector<int>& offsets);
// (generator, n) with degree(generator) + offset − 2n inside the window.
std::vector<std::pair<std::size_t, int>> windowed_pairs(const GradedModule& C, const ExpRange& r, const Window& w,
                                                        int offset);

}  // namespace floer::detail
