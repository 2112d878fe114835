#pragma once

// Independent reference computations for tests: direct summation in long
// double, no FFT and no library evaluation code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "littlewood/core.hpp"

namespace oracle {

using LComplex = std::complex<long double>;

inline LComplex e(long double x) {
  const long double a = 2.0L * std::numbers::pi_v<long double> * (x - std::floor(x));
  return {std::cos(a), std::sin(a)};
}

/// sum_n c_n e(n . t).
inline LComplex eval(const littlewood::TrigPoly& f, const std::vector<long double>& t) {
  LComplex s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto n = f.frequency(i);
    long double phase = 0;
    for (std::size_t a = 0; a < f.rank(); ++a) {
      // reduce each product mod 1 before summing to keep precision
      const long double p = static_cast<long double>(n[a]) * t[a];
      phase += p - std::floor(p);
    }
    const auto c = f.coefficient(i);
    s += LComplex(c.real(), c.imag()) * e(phase);
  }
  return s;
}

inline LComplex eval(const littlewood::TrigPoly& f, long double t) { return eval(f, std::vector<long double>{t}); }

/// (1/N) sum_{j<N} |f(j/N)| by direct summation, rank 1.
inline double grid_mean(const littlewood::TrigPoly& f, std::int64_t n) {
  long double s = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    s += std::abs(eval(f, static_cast<long double>(j) / static_cast<long double>(n)));
  }
  return static_cast<double>(s / static_cast<long double>(n));
}

/// Midpoint-rule L1 norm with many samples via a phase recurrence, rank 1.
/// Accurate to ~ (2 pi d)^2 / (24 N^2) relative for smooth |f|; used only
/// as a loose reference.
inline double dense_l1(const littlewood::TrigPoly& f, std::int64_t n) {
  long double s = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    s += std::abs(eval(f, (static_cast<long double>(j) + 0.5L) / static_cast<long double>(n)));
  }
  return static_cast<double>(s / static_cast<long double>(n));
}

inline long double harmonic(std::int64_t n) {
  long double s = 0;
  for (std::int64_t j = n; j >= 1; --j) s += 1.0L / static_cast<long double>(j);
  return s;
}

/// sum_{|n|<=N} e(nt).
inline LComplex dirichlet_sum(std::int64_t order, long double t) {
  LComplex s = 0;
  for (std::int64_t n = -order; n <= order; ++n) s += e(static_cast<long double>(n) * t);
  return s;
}

/// sum_{|n|<=N} (1 - |n|/(N+1)) e(nt).
inline LComplex fejer_sum(std::int64_t order, long double t) {
  LComplex s = 0;
  for (std::int64_t n = -order; n <= order; ++n) {
    s += (1.0L - static_cast<long double>(std::llabs(n)) / static_cast<long double>(order + 1)) *
         e(static_cast<long double>(n) * t);
  }
  return s;
}

/// Flat-top kernel value M^2 K(k) as an integer, from the defining sum.
inline std::int64_t flat_top_scaled(std::int64_t m, std::int64_t n, std::int64_t k) {
  std::int64_t s = 0;
  for (std::int64_t j = -(m - 1); j <= m - 1; ++j) {
    if (std::llabs(j - k) <= n + m) s += m - std::llabs(j);
  }
  return s;
}

}  // namespace oracle
