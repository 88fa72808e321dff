#include "windowing.hpp"

#include <algorithm>
#include <climits>

namespace floer::detail {

ExpRange exponents(Flavor f) {
  switch (f) {
    case Flavor::minus: return {1, std::nullopt};
    case Flavor::infinity: return {std::nullopt, std::nullopt};
    case Flavor::plus: return {std::nullopt, 0};
    case Flavor::hat: return {0, 0};
  }
  return {};
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
int ceil_div(int a, int b) { return -floor_div(-a, b); }

namespace {

// No generators and full completeness over [a, b]; LONG_MIN / LONG_MAX mean unbounded.
bool empty_over(const GradedModule& C, long a, long b) {
  for (const auto& g : C.gens())
    if (g.degree >= a && g.degree <= b) return false;
  const Completeness& c = C.completeness();
  if (c.is_full()) return true;
  if (a < c.lo && !c.below) return false;
  if (b > c.hi && !c.above) return false;
  for (long k = std::max<long>(a, c.lo); k <= std::min<long>(b, c.hi); ++k)
    if (!c.at(static_cast<int>(k))) return false;
  return true;
}

// C is complete at every degree k + 2n, n in the range.
bool complete_along(const GradedModule& C, int k, const ExpRange& r) {
  const Completeness& c = C.completeness();
  if (c.is_full()) return true;
  const int nlo = floor_div(c.lo - k, 2) - 1, nhi = ceil_div(c.hi - k, 2) + 1;
  int from = r.lo ? std::max(*r.lo, nlo) : nlo;
  int to = r.hi ? std::min(*r.hi, nhi) : nhi;
  for (int n = from; n <= to; ++n)
    if (!c.at(k + 2 * n)) return false;
  if (!r.lo || *r.lo < nlo)
    if (!c.below) return false;
  if (!r.hi || *r.hi > nhi)
    if (!c.above) return false;
  return true;
}

bool empty_along(const GradedModule& C, int k, const ExpRange& r) {
  const long a = r.lo ? static_cast<long>(k) + 2L * *r.lo : LONG_MIN;
  const long b = r.hi ? static_cast<long>(k) + 2L * *r.hi : LONG_MAX;
  return empty_over(C, a, b);
}

}  // namespace

Completeness windowed_completeness(const GradedModule& C, const ExpRange& r, const Window& w,
                                   const std::vector<int>& offsets) {
  auto complete = [&](int k) {
    bool in_window = k >= w.lo && k <= w.hi;
    bool all_complete = in_window, all_empty = true;
    for (int off : offsets) {
      if (all_complete && !complete_along(C, k + off, r)) all_complete = false;
      if (all_empty && !empty_along(C, k + off, r)) all_empty = false;
    }
    return all_complete || all_empty;
  };
  bool below = true, above = true;
  for (int off : offsets) {
    const long bl = r.hi ? static_cast<long>(w.lo) - 2 + off + 2L * *r.hi : LONG_MAX;
    if (!empty_over(C, LONG_MIN, bl)) below = false;
    const long ab = r.lo ? static_cast<long>(w.hi) + 2 + off + 2L * *r.lo : LONG_MIN;
    if (!empty_over(C, ab, LONG_MAX)) above = false;
  }
  return Completeness::tabulate(w.lo - 1, w.hi + 1, complete, below, above);
}

std::vector<std::pair<std::size_t, int>> windowed_pairs(const GradedModule& C, const ExpRange& r, const Window& w,
                                                        int offset) {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t i = 0; i < C.size(); ++i) {
    const int dg = C.degree(i) + offset;
    int from = ceil_div(dg - w.hi, 2), to = floor_div(dg - w.lo, 2);
    if (r.lo) from = std::max(from, *r.lo);
    if (r.hi) to = std::min(to, *r.hi);
    for (int n = from; n <= to; ++n) out.push_back({i, n});
  }
  return out;
}


}  // namespace floer::detail
