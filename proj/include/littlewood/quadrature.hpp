#pragma once

// Uniform-grid evaluation of trigonometric polynomials and certified L1 norms.
//
// For a degree-d polynomial f on [0,1] the Riemann mean S = (1/N) sum |f(j/N)|
// satisfies |S - ||f||_1| <= (4 pi d / N) ||f||_1, so with rho = 4 pi d / N < 1
// the true norm lies in [S/(1+rho), S/(1-rho)]. In several variables the bound
// is applied one axis at a time and the factors multiply.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "littlewood/core.hpp"

namespace littlewood {

struct QuadratureOptions {
  /// Budget for the logical sample grid, at 16 bytes per complex sample.
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
  /// Worker threads for slice-parallel reductions; 0 picks hardware concurrency.
  unsigned threads = 0;

  /// Defaults, with the budget overridden by LITTLEWOOD_MEMORY_BUDGET (bytes)
  /// when that variable is set.
  static QuadratureOptions from_environment();
};

/// Certified enclosure of an L1 norm.
struct NormInterval {
  double lo = 0.0;
  double hi = 0.0;
  /// Grid mean of |f| that produced the enclosure.
  double riemann = 0.0;
  std::vector<std::int64_t> grid;
  /// Degrees after recentring (the ones that enter the error bound).
  std::vector<std::int64_t> degree;
  /// Per-axis 4 pi d_i / N_i actually achieved.
  std::vector<double> axis_rel_err;

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool overlaps(const NormInterval& o) const noexcept { return lo <= o.hi && o.lo <= hi; }
  /// prod(1 + rho_i) - 1.
  double compounded_rel_err() const;
};

/// Samples f(j_1/N_1, ..., j_r/N_r), row-major with the last axis fastest.
struct GridEvaluation {
  std::vector<std::int64_t> shape;
  std::vector<Complex> values;

  const Complex& at(std::span<const std::int64_t> index) const;
};

/// Evaluates f on the full grid by an r-dimensional FFT of the coefficient
/// array (frequencies reduced mod N_i). Requires N_i >= 2 d_i + 1 where d_i
/// is the recentred degree; throws AliasingError otherwise.
GridEvaluation eval_grid(const TrigPoly& f, std::span<const std::int64_t> samples,
                         const QuadratureOptions& options = {});

/// Grid mean of |f| over the same grid as eval_grid. For rank >= 2 the grid
/// is streamed one axis-0 column at a time and never fully materialized.
double riemann_l1(const TrigPoly& f, std::span<const std::int64_t> samples,
                  const QuadratureOptions& options = {});

/// Per-axis sample counts certified_l1 would use for the recentred degrees.
std::vector<std::int64_t> certified_grid(std::span<const std::int64_t> degree, double rel_err);

/// Certified enclosure of ||f||_1 with compounded relative error at most
/// rel_err (0 < rel_err < 1). The zero polynomial yields [0, 0].
/// Throws ResourceError when the grid exceeds the memory budget.
NormInterval certified_l1(const TrigPoly& f, double rel_err, const QuadratureOptions& options = {});

/// Partial derivative along `axis`: c_n -> 2 pi i n_axis c_n.
TrigPoly derivative(const TrigPoly& f, std::size_t axis = 0);

struct BernsteinReport {
  NormInterval lhs;   ///< certified ||f'||_1
  NormInterval norm;  ///< certified ||f||_1
  std::int64_t degree = 0;
  double rhs_bound = 0.0;  ///< 2 pi d * norm.hi, rounded up
  bool pass = false;       ///< lhs.lo <= rhs_bound
};

/// Checks ||f'||_1 <= 2 pi d ||f||_1 with d = max |n| over the support of f.
BernsteinReport bernstein_check(const TrigPoly& f, double rel_err = 0.05,
                                const QuadratureOptions& options = {});

/// Smallest 7-smooth integer >= n.
std::int64_t next_smooth(std::int64_t n);

}  // namespace littlewood
