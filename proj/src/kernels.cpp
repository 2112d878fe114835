#include "littlewood/kernels.hpp"

#include "littlewood/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <vector>

namespace littlewood {

namespace {

constexpr double kSingularity = 1e-12;

// sin(pi x) with the argument reduced mod 2 first, so that for large integer
// multiples of t the zeros stay accurate.
double sin_pi(double x) {
  const double r = std::fmod(x, 2.0);
  return std::sin(std::numbers::pi * r);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ParameterError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g == 0 ? 0 : n / g;
  den = g == 0 ? 1 : d / g;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Complex dirichlet(std::int64_t order, double t) {
  const double s = sin_pi(t);
  if (std::abs(s) < kSingularity) {
    // At integer t every term is e(n t) = 1.
    return {static_cast<double>(2 * order + 1), 0.0};
  }
  return {sin_pi(static_cast<double>(2 * order + 1) * t) / s, 0.0};
}

double fejer(std::int64_t order, double t) {
  const double s = sin_pi(t);
  const double n1 = static_cast<double>(order + 1);
  if (std::abs(s) < kSingularity) return n1;
  const double num = sin_pi(n1 * t);
  return (num * num) / (n1 * s * s);
}

FlatTopKernel::FlatTopKernel(std::int64_t m, std::int64_t n, std::map<std::int64_t, Rational> values)
    : m_(m), n_(n), values_(std::move(values)) {
  std::erase_if(values_, [](const auto& kv) { return kv.second.num == 0; });
}

FlatTopKernel flat_top_build(std::int64_t m, std::int64_t n) {
  if (m < 2 || m >= n) {
    throw ParameterError("flat-top kernel requires 2 <= M < N (got M=" + std::to_string(m) +
                         ", N=" + std::to_string(n) + ")");
  }
  // K(k) = (1/M) sum (1 - |n|/M) = (1/M^2) sum (M - |n|) over the admissible n.
  const std::int64_t den = checked_mul(m, m);
  std::map<std::int64_t, Rational> values;
  const std::int64_t reach = n + 2 * m;
  for (std::int64_t k = -reach; k <= reach; ++k) {
    std::int64_t acc = 0;
    for (std::int64_t j = -(m - 1); j <= m - 1; ++j) {
      if (std::abs(j - k) <= n + m) acc += m - std::abs(j);
    }
    if (acc != 0) values.emplace(k, Rational(acc, den));
  }
  FlatTopKernel kernel(m, n, std::move(values));
  kernel.canonical_ = true;
  return kernel;
}

Rational FlatTopKernel::value(std::int64_t k) const {
  auto it = values_.find(k);
  return it == values_.end() ? Rational{} : it->second;
}

std::string check_flat_top_properties(const FlatTopKernel& kernel) {
  const std::int64_t m = kernel.m();
  const std::int64_t n = kernel.n();
  const Rational one(1, 1);
  for (std::int64_t k = -n; k <= n; ++k) {
    if (!(kernel.value(k) == one)) {
      return "K(" + std::to_string(k) + ") = " + kernel.value(k).to_string() + ", expected 1";
    }
  }
  const std::int64_t m2 = m * m;
  for (const auto& [k, v] : kernel.values()) {
    if (std::abs(k) >= n + 2 * m) {
      return "K(" + std::to_string(k) + ") = " + v.to_string() + " outside |k| < N+2M";
    }
    if (v.num < 0 || v.num > v.den) {
      return "K(" + std::to_string(k) + ") = " + v.to_string() + " not in [0,1]";
    }
    if (m2 % v.den != 0) {
      return "K(" + std::to_string(k) + ") = " + v.to_string() + " denominator does not divide M^2";
    }
  }
  return {};
}

Complex flat_top_transform_direct(const FlatTopKernel& kernel, double t) {
  Complex sum{0.0, 0.0};
  for (const auto& [k, v] : kernel.values()) {
    sum += v.to_double() * char_e(static_cast<double>(k) * t);
  }
  return sum;
}

Complex flat_top_transform(const FlatTopKernel& kernel, double t) {
  if (!kernel.canonical()) return flat_top_transform_direct(kernel, t);
  const double scale = 1.0 / static_cast<double>(kernel.m());
  return scale * dirichlet(kernel.n() + kernel.m(), t) * fejer(kernel.m() - 1, t);
}

double flat_top_discrete_l1(const FlatTopKernel& kernel, std::int64_t period) {
  if (period < kernel.min_period()) {
    throw HypothesisError("R >= 2N+4M+1", "R=" + std::to_string(period) + " but 2N+4M+1=" +
                                              std::to_string(kernel.min_period()));
  }
  std::vector<double> terms(static_cast<std::size_t>(period));
  const double r = static_cast<double>(period);
  for (std::int64_t j = 1; j <= period; ++j) {
    terms[static_cast<std::size_t>(j - 1)] = std::abs(flat_top_transform(kernel, static_cast<double>(j) / r));
  }
  return pairwise_sum(terms) / r;
}

double flat_top_l1_bound(std::int64_t m, std::int64_t n) {
  return 32.0 * std::numbers::pi *
         (2.0 + std::log(1.0 + static_cast<double>(n) / static_cast<double>(m)));
}

}  // namespace littlewood
