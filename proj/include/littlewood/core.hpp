#pragma once

// Foundational types: finite integer and lattice sets, trigonometric
// polynomials with complex coefficients, and the character e(z) = exp(2 pi i z).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "littlewood/errors.hpp"

namespace littlewood {

using Frequency = std::int64_t;
using Complex = std::complex<double>;

/// e(z) = cos(2 pi z) + i sin(2 pi z).
Complex char_e(double z);

/// Overflow-checked 64-bit arithmetic; throws OverflowError instead of wrapping.
Frequency checked_add(Frequency a, Frequency b);
Frequency checked_mul(Frequency a, Frequency b);

/// Finite, nonempty set of distinct integers kept in ascending order.
class IntegerSet {
 public:
  /// Sorts the input. Throws ParameterError on an empty input or duplicates.
  explicit IntegerSet(std::vector<Frequency> elements);

  /// {first, first+1, ..., last}.
  static IntegerSet interval(Frequency first, Frequency last);

  std::span<const Frequency> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Frequency min() const noexcept { return elements_.front(); }
  Frequency max() const noexcept { return elements_.back(); }
  Frequency operator[](std::size_t i) const noexcept { return elements_[i]; }
  bool contains(Frequency x) const;

  IntegerSet translated(Frequency shift) const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<Frequency> elements_;
};

/// Finite, nonempty set of distinct points of Z^r, stored in lexicographic order.
class LatticeSet {
 public:
  /// Each point must have exactly `rank` coordinates. Points are sorted;
  /// duplicates and empty input are rejected with ParameterError.
  LatticeSet(std::size_t rank, const std::vector<std::vector<Frequency>>& points);

  /// Embeds an integer set as a rank-1 lattice set.
  explicit LatticeSet(const IntegerSet& set);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return coords_.size() / rank_; }
  std::span<const Frequency> point(std::size_t i) const noexcept {
    return {coords_.data() + i * rank_, rank_};
  }
  std::span<const Frequency> coordinates() const noexcept { return coords_; }
  bool contains(std::span<const Frequency> p) const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  LatticeSet(std::size_t rank, std::vector<Frequency> sorted_coords, bool);

  std::size_t rank_;
  std::vector<Frequency> coords_;
};

/// Trigonometric polynomial sum_n c_n e(n . t) over frequencies n in Z^r.
///
/// Terms are kept in lexicographic frequency order with nonzero coefficients
/// only, so for rank 1 the coefficient list is ordered by increasing
/// frequency. The zero polynomial has no terms and degree 0 on every axis.
class TrigPoly {
 public:
  struct Term {
    std::vector<Frequency> frequency;
    Complex coefficient;
  };

  /// Zero polynomial of the given rank.
  explicit TrigPoly(std::size_t rank = 1);

  /// Repeated frequencies are summed; exact zeros are dropped.
  TrigPoly(std::size_t rank, std::vector<Term> terms);

  /// Rank-1 convenience constructor from (frequency, coefficient) pairs.
  static TrigPoly from_1d(const std::vector<std::pair<Frequency, Complex>>& terms);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::span<const Frequency> frequency(std::size_t i) const noexcept {
    return {freqs_.data() + i * rank_, rank_};
  }
  const Complex& coefficient(std::size_t i) const noexcept { return coeffs_[i]; }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  /// Coefficient at frequency n (zero when absent).
  Complex coefficient_at(std::span<const Frequency> n) const;

  /// Per-axis max |n_i| over the support.
  const std::vector<Frequency>& degree() const noexcept { return degree_; }
  /// Per-axis smallest and largest frequency (zeros for the zero polynomial).
  std::vector<Frequency> support_min() const;
  std::vector<Frequency> support_max() const;

  /// Direct summation at t in [0,1]^r.
  Complex evaluate(std::span<const double> t) const;
  Complex evaluate(double t) const { return evaluate(std::span<const double>(&t, 1)); }

  /// Multiplies every frequency's coefficient by e(shift . t), i.e. moves the
  /// support by `shift`.
  TrigPoly translated(std::span<const Frequency> shift) const;

  /// Sum of |c_n|^2.
  double energy() const;

 private:
  TrigPoly(std::size_t rank, std::vector<Frequency> freqs, std::vector<Complex> coeffs);
  void compute_degree();

  std::size_t rank_;
  std::vector<Frequency> freqs_;
  std::vector<Complex> coeffs_;
  std::vector<Frequency> degree_;
};

/// Exponential sum of a set: coefficient 1 at each element.
TrigPoly indicator_poly(const IntegerSet& set);
TrigPoly indicator_poly(const LatticeSet& set);

struct Recentred {
  TrigPoly poly;
  /// Original frequencies are poly's frequencies plus `shift`.
  std::vector<Frequency> shift;
};

/// Translates the support so that on every axis it sits in
/// [-ceil(diam/2), ceil(diam/2)]. The L1 norm is unchanged.
Recentred recentre(const TrigPoly& f);

}  // namespace littlewood
