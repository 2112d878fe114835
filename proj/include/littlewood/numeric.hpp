#pragma once

#include <cstddef>
#include <span>

namespace littlewood {

/// Pairwise (cascade) summation of f(x[i]). The association order depends only
/// on the length, so results are reproducible bit for bit.
template <class T, class F>
double pairwise_sum(std::span<const T> x, F&& f) {
  constexpr std::size_t kLeaf = 64;
  if (x.size() <= kLeaf) {
    double s = 0.0;
    for (const T& v : x) s += f(v);
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half), f) + pairwise_sum(x.subspan(half), f);
}

inline double pairwise_sum(std::span<const double> x) {
  return pairwise_sum(x, [](double v) { return v; });
}

}  // namespace littlewood
