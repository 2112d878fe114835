#pragma once

// Residue classes I(q;s) = {k in I : k = s mod q}, the 4^j modulus ladder,
// and thinning of block-structured polynomials by a periodized flat-top kernel.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "littlewood/core.hpp"
#include "littlewood/kernels.hpp"

namespace littlewood {

struct ResidueFilter {
  std::int64_t q = 1;
  std::int64_t s = 0;

  /// Reduces s into [0, q). Throws ParameterError for q < 1.
  ResidueFilter(std::int64_t modulus, std::int64_t residue);
  bool accepts(std::int64_t k) const noexcept;
};

/// Ascending elements of I congruent to s mod q; may be empty.
std::vector<Frequency> residue_filter(const IntegerSet& set, const ResidueFilter& filter);

struct ModulusStep {
  std::int64_t q;
  std::int64_t s;           ///< smallest residue among the largest classes
  std::int64_t class_size;
};

struct GoodModulusResult {
  int j0 = 0;
  std::int64_t q = 0;  ///< 4^j0
  std::int64_t s = 0;
  IntegerSet filtered;
  std::vector<ModulusStep> trace;  ///< one row per j = 1..j0
};

/// Walks q = 4, 16, 64, ... and stops at the first q whose largest residue
/// class has at most sqrt(q) elements. Requires |I| >= 8.
GoodModulusResult good_modulus(const IntegerSet& set);

// ---------------------------------------------------------------------------
// Block decomposition and thinning

/// F = sum_{k} f_k(t) e(d2 k t) with every f_k of degree at most d1.
struct BlockDecomposition {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::map<std::int64_t, TrigPoly> blocks;
};

/// Splits a rank-1 polynomial into blocks m = d2 k + l, |l| <= d1. Needs
/// d2 > 2 d1 so that the split is unique; throws HypothesisError naming the
/// first frequency that falls outside every block.
BlockDecomposition decompose_blocks(const TrigPoly& f, std::int64_t d1, std::int64_t d2);

/// Reassembles sum_k f_k e(d2 k t), optionally keeping only k in a residue class.
TrigPoly assemble_blocks(const BlockDecomposition& blocks);
TrigPoly assemble_blocks(const BlockDecomposition& blocks, const ResidueFilter& keep);

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Reported for reference only; does not gate certification.
  bool informational = false;
};

struct ThinningParams {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  double delta = 0.0;
  ResidueFilter filter{1, 0};
};

struct ThinningResult {
  TrigPoly thinned;
  /// 32 pi (2 + log(1 + 2/delta)): ||thinned||_1 <= bound_factor ||F||_1.
  double bound_factor = 0.0;
  /// Kernel parameters M = ceil(delta d1 / 2), N = d1 and period q d2.
  std::int64_t kernel_m = 0;
  std::int64_t kernel_n = 0;
  std::int64_t period = 0;
  /// Block indices kept, ascending.
  std::vector<std::int64_t> kept;
  /// Kernel multiplication reproduced direct block selection exactly.
  bool identity_holds = false;
  /// Every hypothesis held, including q >= 4, so the norm bound is claimed.
  bool bound_applies = false;
  std::vector<HypothesisCheck> hypotheses;
};

/// Multiplies F's coefficients by the (q d2)-periodized flat-top kernel after
/// moving the residue class to 0, then moves back. The result is compared
/// coefficient by coefficient with direct selection of the blocks k = s mod q;
/// kernel values at surviving and removed frequencies must be exactly 1 and 0.
/// Throws HypothesisError naming the first failed hypothesis, except q >= 4,
/// which only withdraws the norm bound (bound_applies = false).
ThinningResult thinning_transform(const TrigPoly& f, const ThinningParams& params);

/// Hypotheses of thinning_transform without running it.
std::vector<HypothesisCheck> thinning_hypotheses(const TrigPoly& f, const ThinningParams& params);

}  // namespace littlewood
