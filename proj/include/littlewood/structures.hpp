#pragma once

// Structured sets: rank-2 generalized arithmetic progressions and strongly
// r-dimensional sets, both as lattice sets in Z^r and as integer sets built
// from well-separated translated blocks
//
//     A = union_{k in I} (A_k + k d2),   A_k in [-d1, d1],   d2 > (2 + delta) d1.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/core.hpp"
#include "littlewood/random.hpp"

namespace littlewood {

// ---------------------------------------------------------------------------
// Generalized arithmetic progressions

struct GapCollision {
  std::int64_t m1, n1, m2, n2;
  Frequency value;
};

struct GapResult {
  std::vector<Frequency> elements;  ///< distinct values, ascending
  std::vector<GapCollision> collisions;
};

/// {a m + b n : 1 <= m <= M, 1 <= n <= N}. Requires a, b != 0 and a M < b
/// unless `force` is set; forced runs report every colliding pair.
GapResult gap_rank2(Frequency a, Frequency b, std::int64_t m_count, std::int64_t n_count,
                    bool force = false);

// ---------------------------------------------------------------------------
// Certificates

struct DimBlock;

/// Recursive witness that a set is strongly r-dimensional.
///
/// Integer flavor, rank > 1: A = union over `blocks` of (subset + k d2) with
/// every subset inside [-d1, d1] and itself certified by the child.
/// Lattice flavor, rank > 1: one child per first coordinate, certifying the
/// fibre above it. Rank 1 in either flavor only claims |A| >= sizes[0].
struct DimCertificate {
  enum class Flavor { integer, lattice };

  Flavor flavor = Flavor::integer;
  /// (n_1, ..., n_r) at this level; rank is sizes.size().
  std::vector<std::int64_t> sizes;
  /// (delta_1, ..., delta_{r-1}); integer flavor only.
  std::vector<double> deltas;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::vector<DimBlock> blocks;

  std::size_t rank() const noexcept { return sizes.size(); }
};

struct DimBlock {
  /// Block index k in I (integer flavor) or first coordinate a_1 (lattice flavor).
  std::int64_t key = 0;
  /// A_k, integer flavor only.
  std::vector<Frequency> subset;
  DimCertificate child;
};

struct ValidationReport {
  bool pass = true;
  /// First violated condition, e.g. "gap condition d2 > (2+delta)d1".
  std::string condition;
  std::string detail;
  /// Location in the certificate tree, e.g. "/k=3/k=-1".
  std::string path;
  std::int64_t checks = 0;
};

ValidationReport validate_certificate(const IntegerSet& set, const DimCertificate& cert);
ValidationReport validate_certificate(const LatticeSet& set, const DimCertificate& cert);

// ---------------------------------------------------------------------------
// Constructions

enum class Shape { box, random };

struct StrongLattice {
  LatticeSet set;
  DimCertificate certificate;
};

/// Box {1..n_1} x ... x {1..n_r}, or a seeded random fibred set whose first
/// projection and every fibre meet the requested sizes.
StrongLattice build_strong_lattice(const std::vector<std::int64_t>& sizes, Shape shape, Rng& rng);

struct StrongInteger {
  IntegerSet set;
  DimCertificate certificate;
};

struct StrongIntegerParams {
  std::vector<double> deltas;        ///< r-1 positive values
  std::vector<std::int64_t> sizes;   ///< r positive values
  Shape shape = Shape::box;
  /// d2 = floor(stretch * (2+delta) d1) + 1; stretch 1 is the minimum legal gap.
  double stretch = 1.0;
};

/// Recursive construction. Box shape uses I = {0..n_1-1} and intervals at the
/// leaves; random shape uses seeded sparse index sets and leaves.
StrongInteger build_strong_integer(const StrongIntegerParams& params, Rng& rng);

// ---------------------------------------------------------------------------
// Projections and fibres

enum class Rank1Policy { reject, identity };

struct Projection {
  IntegerSet values;
  /// Remaining coordinates of the points above each value (rank r-1).
  std::map<Frequency, LatticeSet> fibres;
};

/// A_i = pi_i(A) and its fibres, axis 0-based. Rank-1 input throws unless the
/// policy is identity, in which case the fibre map is empty.
Projection project_and_fibre(const LatticeSet& set, std::size_t axis,
                             Rank1Policy policy = Rank1Policy::reject);

}  // namespace littlewood
