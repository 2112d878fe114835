#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "littlewood/modulus.hpp"
#include "littlewood/quadrature.hpp"
#include "littlewood/random.hpp"

using namespace littlewood;

namespace {

// Exhaustive ladder: counts every residue class with a map.
struct Scan {
  int j0;
  std::int64_t size;
};

Scan exhaustive(const IntegerSet& set) {
  std::int64_t q = 1;
  for (int j = 1;; ++j) {
    q *= 4;
    std::map<std::int64_t, std::int64_t> counts;
    for (auto k : set.elements()) ++counts[((k % q) + q) % q];
    std::int64_t best = 0;
    for (const auto& [r, c] : counts) best = std::max(best, c);
    if (best <= (std::int64_t{1} << j)) return {j, best};
  }
}

TrigPoly block_poly(Rng& rng, const std::vector<std::int64_t>& keys, std::int64_t d1, std::int64_t d2) {
  std::vector<TrigPoly::Term> t;
  for (auto k : keys) {
    for (auto l : rng.distinct_sample(-d1, d1, static_cast<std::size_t>(rng.uniform_int(1, 2 * d1 + 1)))) {
      t.push_back({{k * d2 + l}, std::polar(1.0, 6.283185307179586 * rng.uniform_real())});
    }
  }
  return TrigPoly(1, std::move(t));
}

}  // namespace

TEST_CASE("residue_filter examples") {
  const IntegerSet i07 = IntegerSet::interval(0, 7);
  CHECK(residue_filter(i07, ResidueFilter(4, 0)) == std::vector<Frequency>{0, 4});
  CHECK(residue_filter(i07, ResidueFilter(1, 0)) == std::vector<Frequency>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(residue_filter(IntegerSet({3, 7, 11}), ResidueFilter(4, 3)) == std::vector<Frequency>{3, 7, 11});
  CHECK(residue_filter(IntegerSet({-5, -1, 2}), ResidueFilter(4, -1)) == std::vector<Frequency>{-5, -1});
  CHECK(residue_filter(IntegerSet({1, 2}), ResidueFilter(5, 4)).empty());
  CHECK(ResidueFilter(4, -1).s == 3);
  CHECK_THROWS_AS(ResidueFilter(0, 0), ParameterError);
}

TEST_CASE("good_modulus examples") {
  const GoodModulusResult a = good_modulus(IntegerSet::interval(0, 7));
  CHECK(a.j0 == 1);
  CHECK(a.q == 4);
  CHECK(a.s == 0);
  CHECK(a.filtered == IntegerSet({0, 4}));

  const GoodModulusResult b = good_modulus(IntegerSet::interval(0, 63));
  CHECK(b.j0 == 2);
  CHECK(b.q == 16);
  CHECK(b.s == 0);
  CHECK(b.filtered.size() == 4);
  REQUIRE(b.trace.size() == 2);
  CHECK(b.trace[0].class_size == 16);

  CHECK_THROWS_AS(good_modulus(IntegerSet::interval(0, 6)), HypothesisError);
}

TEST_CASE("property: good_modulus invariants and exhaustive agreement") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto n = rng.uniform_int(8, 2000);
    const auto spread = rng.uniform_int(1, 4);
    const std::int64_t step = i % 4 == 0 ? 16 : 1;
    auto elems = rng.distinct_sample(0, n * spread * 50, static_cast<std::size_t>(n));
    for (auto& e : elems) e *= step;
    const IntegerSet set(elems);
    const GoodModulusResult g = good_modulus(set);
    const auto size = static_cast<std::int64_t>(g.filtered.size());
    CHECK(size <= (std::int64_t{1} << g.j0));
    if (g.j0 > 1) CHECK(g.trace[static_cast<std::size_t>(g.j0 - 2)].class_size > (std::int64_t{1} << (g.j0 - 1)));
    CHECK(std::cbrt(static_cast<double>(set.size())) / 8.0 <= static_cast<double>(size));
    CHECK(static_cast<double>(size) <= std::sqrt(static_cast<double>(g.q)));
    for (auto k : g.filtered.elements()) CHECK(((k % g.q) + g.q) % g.q == g.s);
    const Scan s = exhaustive(set);
    CHECK(s.j0 == g.j0);
    CHECK(s.size == size);
  }
}

TEST_CASE("decompose and assemble round trip") {
  Rng rng(3);
  const TrigPoly f = block_poly(rng, {-3, 0, 2, 5}, 4, 11);
  const BlockDecomposition b = decompose_blocks(f, 4, 11);
  CHECK(b.blocks.size() == 4);
  for (const auto& [k, fk] : b.blocks) CHECK(fk.degree()[0] <= 4);
  const TrigPoly g = assemble_blocks(b);
  REQUIRE(g.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(g.frequency(i)[0] == f.frequency(i)[0]);
    CHECK(g.coefficient(i) == f.coefficient(i));
  }
  const TrigPoly even = assemble_blocks(b, ResidueFilter(2, 0));
  for (std::size_t i = 0; i < even.size(); ++i) {
    const auto m = even.frequency(i)[0];
    const auto k = static_cast<std::int64_t>(std::llround(static_cast<double>(m) / 11.0));
    CHECK(k % 2 == 0);
  }
  CHECK_THROWS_AS(decompose_blocks(indicator_poly(IntegerSet({5})), 4, 11), HypothesisError);
  CHECK_THROWS_AS(decompose_blocks(f, 4, 8), HypothesisError);
}

TEST_CASE("thinning keeps exactly the selected blocks") {
  Rng rng(4);
  const std::int64_t d1 = 10;
  const std::int64_t d2 = 44;
  const TrigPoly f = block_poly(rng, {0, 1, 2}, d1, d2);
  // q = 2 is below the lemma's q >= 4: the identity still holds, the bound is withdrawn.
  const ThinningResult t = thinning_transform(f, {d1, d2, 1.0, ResidueFilter(2, 0)});
  CHECK(t.identity_holds);
  CHECK_FALSE(t.bound_applies);
  CHECK(t.kept == std::vector<std::int64_t>{0, 2});
  const TrigPoly direct = assemble_blocks(decompose_blocks(f, d1, d2), ResidueFilter(2, 0));
  REQUIRE(t.thinned.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(t.thinned.frequency(i)[0] == direct.frequency(i)[0]);
    CHECK(t.thinned.coefficient(i) == direct.coefficient(i));
  }
  CHECK(t.kernel_m == 5);
  CHECK(t.kernel_n == 10);
  CHECK(t.bound_factor == doctest::Approx(32.0 * 3.141592653589793 * (2.0 + std::log(3.0))));
}

TEST_CASE("a residue class with one block leaves that block") {
  Rng rng(5);
  const TrigPoly f = block_poly(rng, {3, 4, 5, 6}, 6, 30);
  const ThinningResult t = thinning_transform(f, {6, 30, 1.0, ResidueFilter(7, 5)});
  CHECK(t.bound_applies);
  CHECK(t.kept == std::vector<std::int64_t>{5});
  for (std::size_t i = 0; i < t.thinned.size(); ++i) CHECK(std::llabs(t.thinned.frequency(i)[0] - 150) <= 6);
}

TEST_CASE("thinning norm bound with unit coefficients") {
  Rng rng(6);
  std::vector<std::int64_t> keys;
  for (std::int64_t k = 0; k < 20; ++k) keys.push_back(k);
  const TrigPoly f = block_poly(rng, keys, 10, 44);
  const ThinningResult t = thinning_transform(f, {10, 44, 1.0, ResidueFilter(5, 2)});
  CHECK(t.identity_holds);
  const NormInterval fn = certified_l1(f, 0.05);
  const NormInterval tn = certified_l1(t.thinned, 0.05);
  CHECK(tn.lo <= t.bound_factor * fn.hi);
  CHECK(tn.hi <= t.bound_factor * fn.hi * (1 + 2 * 0.05));
}

TEST_CASE("thinning names failed hypotheses") {
  const TrigPoly f = indicator_poly(IntegerSet({0, 44, 88}));
  auto condition = [&](ThinningParams p) {
    try {
      thinning_transform(f, p);
    } catch (const HypothesisError& e) {
      return e.condition();
    }
    return std::string();
  };
  CHECK(condition({10, 30, 1.0, ResidueFilter(4, 0)}) == "thinning gap (2+2delta)d1+4 <= d2");
  CHECK(condition({10, 44, 0.1, ResidueFilter(4, 0)}) == "kernel M >= 2");
  CHECK(condition({10, 44, 0.0, ResidueFilter(4, 0)}) == "d1, d2 positive, delta > 0");
  const TrigPoly wide = indicator_poly(IntegerSet({0, 100, 200}));
  try {
    thinning_transform(wide, {10, 100, 3.0, ResidueFilter(4, 0)});
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    CHECK(e.condition() == "kernel M < N");
  }
  const TrigPoly off = indicator_poly(IntegerSet({0, 20}));
  try {
    thinning_transform(off, {10, 44, 1.0, ResidueFilter(4, 0)});
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    CHECK(e.condition() == "support m = d2 k + l with |l| <= d1");
  }
  const auto hyps = thinning_hypotheses(f, {10, 44, 1.0, ResidueFilter(4, 0)});
  CHECK(hyps.size() == 7);
  for (const auto& h : hyps) CHECK(h.pass);
}

TEST_CASE("property: thinning identity over seeded configurations") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto d1 = rng.uniform_int(4, 30);
    const auto m = rng.uniform_int(2, d1 - 1);
    const double delta = static_cast<double>(2 * m - 1) / static_cast<double>(d1);
    const auto d2 = static_cast<std::int64_t>(std::ceil((2 + 2 * delta) * static_cast<double>(d1) + 4)) +
                    rng.uniform_int(0, 10);
    const auto q = rng.uniform_int(4, 9);
    const auto s = rng.uniform_int(-20, 20);
    const TrigPoly f = block_poly(rng, rng.distinct_sample(-15, 15, 8), d1, d2);
    const ThinningResult t = thinning_transform(f, {d1, d2, delta, ResidueFilter(q, s)});
    CHECK(t.identity_holds);
    CHECK(t.kernel_m == m);
    const TrigPoly direct = assemble_blocks(decompose_blocks(f, d1, d2), ResidueFilter(q, s));
    CHECK(direct.size() == t.thinned.size());
  }
}
