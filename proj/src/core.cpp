#include "littlewood/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace littlewood {

Complex char_e(double z) {
  // Reduce to [0,1) first so large arguments keep full precision in the phase.
  const double frac = z - std::floor(z);
  const double phase = 2.0 * std::numbers::pi * frac;
  return {std::cos(phase), std::sin(phase)};
}

Frequency checked_add(Frequency a, Frequency b) {
  Frequency out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("64-bit frequency overflow in addition");
  }
  return out;
}

Frequency checked_mul(Frequency a, Frequency b) {
  Frequency out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("64-bit frequency overflow in multiplication");
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntegerSet

IntegerSet::IntegerSet(std::vector<Frequency> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ParameterError("empty set");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw ParameterError("duplicate element in integer set");
  }
}

IntegerSet IntegerSet::interval(Frequency first, Frequency last) {
  if (last < first) throw ParameterError("empty set");
  std::vector<Frequency> v(static_cast<std::size_t>(last - first) + 1);
  std::iota(v.begin(), v.end(), first);
  return IntegerSet(std::move(v));
}

bool IntegerSet::contains(Frequency x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

IntegerSet IntegerSet::translated(Frequency shift) const {
  std::vector<Frequency> v;
  v.reserve(elements_.size());
  for (Frequency a : elements_) v.push_back(checked_add(a, shift));
  return IntegerSet(std::move(v));
}

// ---------------------------------------------------------------------------
// LatticeSet

namespace {

// Sorts rows of a row-major rank-r table lexicographically.
std::vector<Frequency> sort_rows(std::size_t rank, std::span<const Frequency> flat) {
  const std::size_t n = flat.size() / rank;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto row = [&](std::size_t i) { return flat.subspan(i * rank, rank); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ra = row(a);
    auto rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  std::vector<Frequency> out;
  out.reserve(flat.size());
  for (std::size_t i : order) {
    auto r = row(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

bool rows_equal(std::span<const Frequency> a, std::span<const Frequency> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

LatticeSet::LatticeSet(std::size_t rank, const std::vector<std::vector<Frequency>>& points)
    : rank_(rank) {
  if (rank == 0) throw ParameterError("lattice rank must be positive");
  if (points.empty()) throw ParameterError("empty set");
  std::vector<Frequency> flat;
  flat.reserve(points.size() * rank);
  for (const auto& p : points) {
    if (p.size() != rank) {
      throw ParameterError("lattice point has " + std::to_string(p.size()) +
                           " coordinates, expected " + std::to_string(rank));
    }
    flat.insert(flat.end(), p.begin(), p.end());
  }
  coords_ = sort_rows(rank, flat);
  for (std::size_t i = 1; i < size(); ++i) {
    if (rows_equal(point(i - 1), point(i))) throw ParameterError("duplicate lattice point");
  }
}

LatticeSet::LatticeSet(const IntegerSet& set)
    : rank_(1), coords_(set.elements().begin(), set.elements().end()) {}

bool LatticeSet::contains(std::span<const Frequency> p) const {
  if (p.size() != rank_) return false;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto q = point(mid);
    if (std::lexicographical_compare(q.begin(), q.end(), p.begin(), p.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && rows_equal(point(lo), p);
}

// ---------------------------------------------------------------------------
// TrigPoly

TrigPoly::TrigPoly(std::size_t rank) : rank_(rank), degree_(rank, 0) {
  if (rank == 0) throw ParameterError("polynomial rank must be positive");
}

TrigPoly::TrigPoly(std::size_t rank, std::vector<Frequency> freqs, std::vector<Complex> coeffs)
    : rank_(rank), freqs_(std::move(freqs)), coeffs_(std::move(coeffs)) {
  compute_degree();
}

TrigPoly::TrigPoly(std::size_t rank, std::vector<Term> terms) : rank_(rank) {
  if (rank == 0) throw ParameterError("polynomial rank must be positive");
  for (const auto& t : terms) {
    if (t.frequency.size() != rank) {
      throw ParameterError("term frequency has " + std::to_string(t.frequency.size()) +
                           " coordinates, expected " + std::to_string(rank));
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.frequency < b.frequency;
  });
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    Complex sum{0.0, 0.0};
    while (j < terms.size() && terms[j].frequency == terms[i].frequency) {
      sum += terms[j].coefficient;
      ++j;
    }
    if (sum != Complex{0.0, 0.0}) {
      freqs_.insert(freqs_.end(), terms[i].frequency.begin(), terms[i].frequency.end());
      coeffs_.push_back(sum);
    }
    i = j;
  }
  compute_degree();
}

TrigPoly TrigPoly::from_1d(const std::vector<std::pair<Frequency, Complex>>& terms) {
  std::vector<Term> t;
  t.reserve(terms.size());
  for (const auto& [n, c] : terms) t.push_back({{n}, c});
  return TrigPoly(1, std::move(t));
}

void TrigPoly::compute_degree() {
  degree_.assign(rank_, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    auto n = frequency(i);
    for (std::size_t a = 0; a < rank_; ++a) {
      if (n[a] == std::numeric_limits<Frequency>::min()) {
        throw OverflowError("frequency magnitude does not fit in 64 bits");
      }
      degree_[a] = std::max(degree_[a], n[a] < 0 ? -n[a] : n[a]);
    }
  }
}

Complex TrigPoly::coefficient_at(std::span<const Frequency> n) const {
  if (n.size() != rank_) return {0.0, 0.0};
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto q = frequency(mid);
    if (std::lexicographical_compare(q.begin(), q.end(), n.begin(), n.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && rows_equal(frequency(lo), n)) return coeffs_[lo];
  return {0.0, 0.0};
}

std::vector<Frequency> TrigPoly::support_min() const {
  std::vector<Frequency> out(rank_, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    auto n = frequency(i);
    for (std::size_t a = 0; a < rank_; ++a) out[a] = i == 0 ? n[a] : std::min(out[a], n[a]);
  }
  return out;
}

std::vector<Frequency> TrigPoly::support_max() const {
  std::vector<Frequency> out(rank_, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    auto n = frequency(i);
    for (std::size_t a = 0; a < rank_; ++a) out[a] = i == 0 ? n[a] : std::max(out[a], n[a]);
  }
  return out;
}

Complex TrigPoly::evaluate(std::span<const double> t) const {
  if (t.size() != rank_) throw ParameterError("evaluation point has the wrong rank");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < size(); ++i) {
    auto n = frequency(i);
    // Phase reduced mod 1 term by term; n*t can be large.
    double phase = 0.0;
    for (std::size_t a = 0; a < rank_; ++a) {
      const double x = static_cast<double>(n[a]) * t[a];
      phase += x - std::floor(x);
    }
    sum += coeffs_[i] * char_e(phase);
  }
  return sum;
}

TrigPoly TrigPoly::translated(std::span<const Frequency> shift) const {
  if (shift.size() != rank_) throw ParameterError("shift has the wrong rank");
  std::vector<Frequency> freqs(freqs_.size());
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    freqs[i] = checked_add(freqs_[i], shift[i % rank_]);
  }
  // A uniform shift preserves lexicographic order.
  return TrigPoly(rank_, std::move(freqs), coeffs_);
}

double TrigPoly::energy() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

TrigPoly indicator_poly(const IntegerSet& set) {
  std::vector<TrigPoly::Term> terms;
  terms.reserve(set.size());
  for (Frequency a : set.elements()) terms.push_back({{a}, {1.0, 0.0}});
  return TrigPoly(1, std::move(terms));
}

TrigPoly indicator_poly(const LatticeSet& set) {
  std::vector<TrigPoly::Term> terms;
  terms.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto p = set.point(i);
    terms.push_back({{p.begin(), p.end()}, {1.0, 0.0}});
  }
  return TrigPoly(set.rank(), std::move(terms));
}

Recentred recentre(const TrigPoly& f) {
  const auto lo = f.support_min();
  const auto hi = f.support_max();
  std::vector<Frequency> shift(f.rank(), 0);
  for (std::size_t a = 0; a < f.rank(); ++a) {
    // floor of the midpoint, computed without overflowing lo+hi
    Frequency diam;
    if (__builtin_sub_overflow(hi[a], lo[a], &diam)) {
      throw OverflowError("frequency diameter does not fit in 64 bits");
    }
    shift[a] = lo[a] + diam / 2;
  }
  std::vector<Frequency> neg(shift.size());
  for (std::size_t a = 0; a < shift.size(); ++a) neg[a] = -shift[a];
  return {f.translated(neg), std::move(shift)};
}

}  // namespace littlewood
