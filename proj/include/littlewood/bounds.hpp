#pragma once

// Lower bounds for L1 norms of exponential sums, realized as verdicts:
// a certified left-hand side against a right-hand side built only from
// upper-safe ingredients, plus the named hypotheses each bound needs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/core.hpp"
#include "littlewood/modulus.hpp"
#include "littlewood/quadrature.hpp"
#include "littlewood/structures.hpp"

namespace littlewood {

/// Default value for the abstract constant in the harmonic-weighted bound.
inline constexpr double kDefaultCMps = 0.25;

struct InequalityVerdict {
  std::string theorem;
  NormInterval lhs;
  double rhs = 0.0;
  double constant_used = 0.0;
  double margin = 0.0;  ///< lhs.lo - rhs
  bool pass = false;    ///< margin >= 0
  /// Every hypothesis held, so the verdict is an instance of the theorem.
  bool certified = false;
  std::vector<HypothesisCheck> hypotheses;
};

/// sum_j |u_j| / j with j the 1-based position; the constant is not applied.
double mps_rhs(std::span<const Complex> coefficients);

/// ||f||_1 >= C sum_j |u_j|/j for a rank-1 polynomial with coefficients in
/// increasing frequency order.
InequalityVerdict verify_mps(const TrigPoly& f, double c_mps, double rel_err,
                             const QuadratureOptions& options = {});

/// ||F||_{L1([0,1]^r)} >= C sum_j (1/j) ||fibre_j||_{L1([0,1]^{r-1})} with
/// fibres over the ordered first projection. Fibre norms enter through their
/// certified lower ends.
InequalityVerdict verify_basic_multidim(const LatticeSet& set, double c_mps, double rel_err,
                                        const QuadratureOptions& options = {});

/// ||F||_1 >= C^r prod log(n_i) for a certified strongly r-dimensional lattice set.
InequalityVerdict verify_multidim(const LatticeSet& set, const DimCertificate& cert, double c_mps,
                                  double rel_err, const QuadratureOptions& options = {});

/// C_{delta_1..delta_{r-1}} = C^r (2^9 pi)^{-r} prod_j (2 + log(1 + 2/delta_j))^{-1}.
double multidimz_constant(double c_mps, std::span<const double> deltas);

/// pi^3 2^21 C^p prod_{j>=i} (log n_j)^3 for each i, with p = 3 (as stated)
/// or p = -3 (the alternative reading).
std::vector<double> multidimz_size_thresholds(double c_mps, std::span<const std::int64_t> sizes, int power);

/// ||F||_1 >= C_{delta} prod log(n_i) for a certified strongly r-dimensional
/// integer set. Size hypotheses are reported; when they fail the verdict is
/// still computed but not certified. Rank 1 delegates to verify_mps.
InequalityVerdict verify_multidimz(const IntegerSet& set, const DimCertificate& cert, double c_mps,
                                   double rel_err, const QuadratureOptions& options = {});

// ---------------------------------------------------------------------------
// Block-thinned lower bound

struct MainPropInput {
  BlockDecomposition blocks;
  double delta = 0.0;
  std::int64_t q = 0;
  std::int64_t s = 0;
};

struct SelectedBlock {
  std::int64_t j = 0;  ///< 1-based position in I(q;s)
  std::int64_t k = 0;  ///< k_j = b q + s
  std::int64_t b = 0;
  NormInterval norm;   ///< certified ||f_{k_j}||_1
  double bracket = 0.0;  ///< C/(2j) - 2 pi d1/(q d2), raw
};

struct MainPropReport {
  InequalityVerdict verdict;
  std::vector<SelectedBlock> selected;
  double thinning_factor = 0.0;  ///< 32 pi (2 + log(1 + 2/delta))
  NormInterval thinned;          ///< certified ||sum_j f_{k_j} e(k_j d2 t)||_1
  NormInterval t1;               ///< main term, certified
  double t1_mps_lower = 0.0;     ///< C/(q d2) sum_m sum_j |f_{k_j}((m-1)/(q d2))|/j
  double t2_bound = 0.0;         ///< 2 pi d1/(q d2) sum_j ||f_{k_j}||_1 (upper ends)
  /// thinned.hi >= t1.lo - t2_bound, the split ||thinned|| >= T1 - T2.
  bool decomposition_consistent = false;
  /// Grid means (1/qd2) sum_m |f((m-1)/qd2)| >= ||f||/2 on every selected block.
  bool sampling_half_bound = false;
};

MainPropReport verify_main_prop(const MainPropInput& input, double c_mps, double rel_err,
                                const QuadratureOptions& options = {});

// ---------------------------------------------------------------------------
// Empirical constants

enum class ScanMode { mps, multidim, multidimz };

struct ScanFamily {
  /// Intervals {1..N} for each N.
  std::vector<std::int64_t> intervals;
  /// Rank-2 GAPs (a, b, M, N).
  struct Gap {
    std::int64_t a, b, m, n;
  };
  std::vector<Gap> gaps;
  /// `random_count` seeded random sets of `random_size` elements in [0, random_span].
  std::int64_t random_count = 0;
  std::int64_t random_size = 0;
  std::int64_t random_span = 0;
  /// Lattice boxes / strongly r-dimensional integer boxes given by size lists.
  std::vector<std::vector<std::int64_t>> boxes;
  /// delta used for every level of multidimz boxes.
  double delta = 1.0;
  std::uint64_t seed = 1;
};

struct ScanRow {
  std::string label;
  NormInterval lhs;
  double rhs_without_constant = 0.0;
  double ratio = 0.0;  ///< lhs.lo / rhs_without_constant
};

struct ScanReport {
  ScanMode mode = ScanMode::mps;
  std::vector<ScanRow> rows;
  double min_ratio = 0.0;
  double median_ratio = 0.0;
};

/// Estimates the constant each bound leaves abstract: per instance the ratio
/// of the certified lower end to the constant-free right-hand side.
ScanReport constant_scan(const ScanFamily& family, ScanMode mode, double rel_err,
                         const QuadratureOptions& options = {});

std::string to_string(ScanMode mode);

}  // namespace littlewood
