#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "littlewood/core.hpp"
#include "littlewood/numeric.hpp"
#include "littlewood/random.hpp"
#include "oracles.hpp"

using namespace littlewood;

TEST_CASE("char_e at rational points") {
  auto close = [](Complex a, Complex b) { return std::abs(a - b) < 1e-15; };
  CHECK(close(char_e(0.0), {1.0, 0.0}));
  CHECK(close(char_e(0.5), {-1.0, 0.0}));
  CHECK(close(char_e(0.25), {0.0, 1.0}));
  CHECK(close(char_e(-0.75), {0.0, 1.0}));
  CHECK(close(char_e(1e9 + 0.25), {0.0, 1.0}));
}

TEST_CASE("char_e has unit modulus") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double z = rng.uniform_real(-1e6, 1e6);
    CHECK(std::abs(std::abs(char_e(z)) - 1.0) < 1e-14);
  }
}

TEST_CASE("IntegerSet sorts and rejects bad input") {
  const IntegerSet a({5, -2, 9});
  REQUIRE(a.size() == 3);
  CHECK(a[0] == -2);
  CHECK(a.max() == 9);
  CHECK(a.contains(5));
  CHECK_FALSE(a.contains(4));
  CHECK_THROWS_AS(IntegerSet({}), ParameterError);
  CHECK_THROWS_WITH(IntegerSet({}), doctest::Contains("empty set"));
  CHECK_THROWS_AS(IntegerSet({1, 2, 1}), ParameterError);
  CHECK(IntegerSet::interval(3, 6) == IntegerSet({3, 4, 5, 6}));
  CHECK(a.translated(2) == IntegerSet({0, 7, 11}));
}

TEST_CASE("LatticeSet keeps points in lexicographic order") {
  const LatticeSet s(2, {{1, 2}, {0, 5}, {1, -1}});
  REQUIRE(s.size() == 3);
  CHECK(s.point(0)[0] == 0);
  CHECK(s.point(1)[1] == -1);
  const std::vector<Frequency> p{1, 2};
  CHECK(s.contains(p));
  CHECK_THROWS_AS(LatticeSet(2, {{1, 2}, {1, 2}}), ParameterError);
  CHECK_THROWS_AS(LatticeSet(2, {{1, 2, 3}}), ParameterError);
  CHECK_THROWS_AS(LatticeSet(2, {}), ParameterError);
  CHECK(LatticeSet(IntegerSet({4, 1})).rank() == 1);
}

TEST_CASE("indicator_poly examples") {
  const TrigPoly zero = indicator_poly(IntegerSet({0}));
  CHECK(zero.size() == 1);
  CHECK(zero.degree()[0] == 0);

  const TrigPoly three = indicator_poly(IntegerSet({1, 2, 3}));
  CHECK(three.size() == 3);
  CHECK(three.degree()[0] == 3);
  for (const auto& c : three.coefficients()) CHECK(c == Complex(1.0, 0.0));

  const TrigPoly two = indicator_poly(LatticeSet(2, {{0, 0}, {1, 2}}));
  CHECK(two.rank() == 2);
  CHECK(two.degree() == std::vector<Frequency>{1, 2});
}

TEST_CASE("TrigPoly merges repeated frequencies and drops zeros") {
  const TrigPoly f = TrigPoly::from_1d({{3, {1.0, 0.0}}, {-1, {2.0, 0.0}}, {3, {-1.0, 0.0}}, {5, {0.0, 0.0}}});
  REQUIRE(f.size() == 1);
  CHECK(f.frequency(0)[0] == -1);
  CHECK(f.degree()[0] == 1);
  CHECK(TrigPoly(2).is_zero());
  CHECK(TrigPoly(2).degree() == std::vector<Frequency>{0, 0});
  CHECK_THROWS_AS(TrigPoly(2, {{{1}, {1.0, 0.0}}}), ParameterError);
}

TEST_CASE("degree invariant and direct evaluation agree with the oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rank = 1 + static_cast<std::size_t>(rng.uniform_int(0, 2));
    std::vector<TrigPoly::Term> terms;
    std::vector<Frequency> maxabs(rank, 0);
    const auto count = rng.uniform_int(1, 30);
    for (std::int64_t i = 0; i < count; ++i) {
      std::vector<Frequency> n(rank);
      for (std::size_t a = 0; a < rank; ++a) {
        n[a] = rng.uniform_int(-100, 100);
        maxabs[a] = std::max<std::int64_t>(maxabs[a], std::llabs(n[a]));
      }
      terms.push_back({n, {rng.uniform_real(-1, 1), rng.uniform_real(-1, 1)}});
    }
    const TrigPoly f(rank, terms);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.coefficient(i) != Complex(0.0, 0.0));
    CHECK(f.degree() == maxabs);

    std::vector<double> t(rank);
    std::vector<long double> tl(rank);
    for (std::size_t a = 0; a < rank; ++a) {
      t[a] = rng.uniform_real();
      tl[a] = t[a];
    }
    const auto ref = oracle::eval(f, tl);
    const Complex got = f.evaluate(t);
    CHECK(std::abs(got.real() - static_cast<double>(ref.real())) < 1e-10);
    CHECK(std::abs(got.imag() - static_cast<double>(ref.imag())) < 1e-10);
  }
}

TEST_CASE("recentre examples") {
  const auto r1 = recentre(indicator_poly(IntegerSet({100, 101, 102})));
  CHECK(r1.shift == std::vector<Frequency>{101});
  CHECK(r1.poly.frequency(0)[0] == -1);
  CHECK(r1.poly.frequency(2)[0] == 1);

  const auto r2 = recentre(indicator_poly(IntegerSet({0})));
  CHECK(r2.shift == std::vector<Frequency>{0});
  CHECK(r2.poly.frequency(0)[0] == 0);

  const auto r3 = recentre(indicator_poly(IntegerSet({5, 9})));
  CHECK(r3.shift == std::vector<Frequency>{7});
  CHECK(r3.poly.frequency(0)[0] == -2);
  CHECK(r3.poly.frequency(1)[0] == 2);
}

TEST_CASE("recentre preserves |f| pointwise and coefficient moduli") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<Frequency, Complex>> t;
    const auto lo = rng.uniform_int(-1000, 1000);
    for (auto n : rng.distinct_sample(lo, lo + 40, 10)) t.emplace_back(n, Complex(rng.uniform_real(), 1.0));
    const TrigPoly f = TrigPoly::from_1d(t);
    const auto r = recentre(f);
    const auto d = r.poly.degree()[0];
    const auto diam = f.support_max()[0] - f.support_min()[0];
    CHECK(d == (diam + 1) / 2);
    REQUIRE(r.poly.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(r.poly.frequency(i)[0] + r.shift[0] == f.frequency(i)[0]);
      CHECK(r.poly.coefficient(i) == f.coefficient(i));
    }
    const double x = rng.uniform_real();
    CHECK(std::abs(std::abs(f.evaluate(x)) - std::abs(r.poly.evaluate(x))) < 1e-9);
  }
}

TEST_CASE("frequency arithmetic is overflow checked") {
  constexpr auto big = std::numeric_limits<Frequency>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK(checked_mul(-4, 5) == -20);
  const TrigPoly f = indicator_poly(IntegerSet({big - 1}));
  const std::vector<Frequency> shift{5};
  CHECK_THROWS_AS(f.translated(shift), OverflowError);
}

TEST_CASE("pairwise_sum is exact on integers and order-stable") {
  std::vector<double> v(10000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  CHECK(pairwise_sum(v) == 49995000.0);
  Rng rng(2);
  for (auto& x : v) x = rng.uniform_real();
  CHECK(pairwise_sum(v) == pairwise_sum(v));
}
