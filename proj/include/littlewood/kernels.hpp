#pragma once

// Dirichlet, Fejer and flat-top kernels.
//
//   D_N(t) = sum_{|n|<=N} e(nt)
//   F_N(t) = sum_{|n|<=N} (1 - |n|/(N+1)) e(nt)
//   K_{M,N}(k) = (1/M) sum_{|n|<=M-1, |n-k|<=N+M} (1 - |n|/M)
//
// K_{M,N} equals 1 on |k| <= N, vanishes on |k| >= N+2M, and its transform
// factors as (1/M) D_{N+M} F_{M-1}.

#include <cstdint>
#include <map>
#include <string>

#include "littlewood/core.hpp"

namespace littlewood {

/// Exact rational with positive denominator, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Closed form sin(pi(2N+1)t)/sin(pi t); 2N+1 at integer t.
Complex dirichlet(std::int64_t order, double t);

/// Closed form sin^2(pi(N+1)t) / ((N+1) sin^2(pi t)); N+1 at integer t.
double fejer(std::int64_t order, double t);

class FlatTopKernel {
 public:
  /// Wraps explicit values (used for serialization and fault injection). No
  /// property of the flat-top construction is assumed; transforms then fall
  /// back to direct summation over the stored values.
  FlatTopKernel(std::int64_t m, std::int64_t n, std::map<std::int64_t, Rational> values);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }

  /// K(k); zero off the stored support.
  Rational value(std::int64_t k) const;
  const std::map<std::int64_t, Rational>& values() const noexcept { return values_; }

  /// Every stored value is nonzero and lies on |k| < N+2M.
  std::int64_t support_radius() const noexcept { return n_ + 2 * m_; }

  /// True when built by flat_top_build and not modified since.
  bool canonical() const noexcept { return canonical_; }

  /// Smallest period R for which the kernel's periodization is well separated.
  std::int64_t min_period() const noexcept { return 2 * n_ + 4 * m_ + 1; }

  friend FlatTopKernel flat_top_build(std::int64_t m, std::int64_t n);

 private:
  std::int64_t m_;
  std::int64_t n_;
  std::map<std::int64_t, Rational> values_;
  bool canonical_ = false;
};

/// Evaluates the defining sum in exact arithmetic. Requires 2 <= M < N.
FlatTopKernel flat_top_build(std::int64_t m, std::int64_t n);

/// Checks K = 1 on |k| <= N, K = 0 on |k| >= N+2M, values in [0,1] with
/// denominators dividing M^2. Exact comparisons; returns the first failure or
/// an empty string.
std::string check_flat_top_properties(const FlatTopKernel& kernel);

/// sum_k K(k) e(kt). Canonical kernels use (1/M) D_{N+M}(t) F_{M-1}(t).
Complex flat_top_transform(const FlatTopKernel& kernel, double t);

/// Direct summation of sum_k K(k) e(kt) over the stored values.
Complex flat_top_transform_direct(const FlatTopKernel& kernel, double t);

/// (1/R) sum_{j=1}^R |K^(j/R)|. Throws HypothesisError when R < 2N+4M+1.
double flat_top_discrete_l1(const FlatTopKernel& kernel, std::int64_t period);

/// 32 pi (2 + log(1 + N/M)).
double flat_top_l1_bound(std::int64_t m, std::int64_t n);

}  // namespace littlewood
