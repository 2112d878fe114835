#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "littlewood/structures.hpp"

using namespace littlewood;

namespace {

// Smallest distance between consecutive translated blocks, from the certificate.
std::int64_t min_block_gap(const DimCertificate& cert) {
  std::int64_t gap = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 1; i < cert.blocks.size(); ++i) {
    const auto& a = cert.blocks[i - 1];
    const auto& b = cert.blocks[i];
    const auto end_a = a.key * cert.d2 + a.subset.back();
    const auto start_b = b.key * cert.d2 + b.subset.front();
    gap = std::min(gap, start_b - end_a);
  }
  return gap;
}

}  // namespace

TEST_CASE("gap_rank2 examples") {
  const GapResult g = gap_rank2(1, 10, 3, 2);
  CHECK(g.elements == std::vector<Frequency>{11, 12, 13, 21, 22, 23});
  CHECK(g.collisions.empty());

  try {
    gap_rank2(1, 2, 3, 1);
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    CHECK(e.condition() == "a*M < b");
  }

  const GapResult h = gap_rank2(2, 100, 5, 4);
  CHECK(h.elements.size() == 20);
  std::set<Frequency> brute;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 4; ++n) brute.insert(2 * m + 100 * n);
  }
  CHECK(brute.size() == 20);
  CHECK(std::vector<Frequency>(brute.begin(), brute.end()) == h.elements);

  CHECK_THROWS_AS(gap_rank2(0, 5, 2, 2), ParameterError);
  CHECK_THROWS_AS(gap_rank2(1, 5, 0, 2), ParameterError);
}

TEST_CASE("forced GAPs report collisions") {
  const GapResult g = gap_rank2(1, 2, 3, 2, true);
  // {1+2, 2+2, 3+2, 1+4, 2+4, 3+4} = {3,4,5,5,6,7}
  CHECK(g.elements == std::vector<Frequency>{3, 4, 5, 6, 7});
  REQUIRE(g.collisions.size() == 1);
  CHECK(g.collisions[0].value == 5);
}

TEST_CASE("build_strong_lattice examples") {
  Rng rng(1);
  const StrongLattice box = build_strong_lattice({3, 2}, Shape::box, rng);
  CHECK(box.set.size() == 6);
  CHECK(validate_certificate(box.set, box.certificate).pass);

  const StrongLattice one = build_strong_lattice({5}, Shape::box, rng);
  CHECK(one.set.size() == 5);
  CHECK(validate_certificate(one.set, one.certificate).pass);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r(seed);
    const StrongLattice s = build_strong_lattice({4, 4}, Shape::random, r);
    const ValidationReport rep = validate_certificate(s.set, s.certificate);
    CHECK_MESSAGE(rep.pass, rep.condition << " " << rep.detail);
  }
  Rng r3(7);
  const StrongLattice s3 = build_strong_lattice({3, 2, 4}, Shape::random, r3);
  CHECK(validate_certificate(s3.set, s3.certificate).pass);
  CHECK_THROWS_AS(build_strong_lattice({3, 0}, Shape::box, rng), ParameterError);
}

TEST_CASE("build_strong_integer examples") {
  Rng rng(1);
  StrongIntegerParams p;
  p.deltas = {1.0};
  p.sizes = {3, 4};
  const StrongInteger z = build_strong_integer(p, rng);
  CHECK(z.set.size() == 12);
  CHECK(validate_certificate(z.set, z.certificate).pass);
  CHECK(z.certificate.d2 == static_cast<std::int64_t>(std::floor(3.0 * static_cast<double>(z.certificate.d1))) + 1);
  CHECK(min_block_gap(z.certificate) >= static_cast<std::int64_t>(std::floor(1.0 * z.certificate.d1)));

  StrongIntegerParams q;
  q.sizes = {7};
  const StrongInteger seven = build_strong_integer(q, rng);
  CHECK(seven.set == IntegerSet::interval(0, 6));

  StrongIntegerParams r;
  r.deltas = {1.0, 1.0};
  r.sizes = {3, 3, 3};
  r.shape = Shape::random;
  const StrongInteger z3 = build_strong_integer(r, rng);
  CHECK(validate_certificate(z3.set, z3.certificate).pass);

  StrongIntegerParams bad;
  bad.deltas = {-1.0};
  bad.sizes = {2, 2};
  CHECK_THROWS_AS(build_strong_integer(bad, rng), ParameterError);
}

TEST_CASE("stretch widens the gap") {
  Rng rng(2);
  StrongIntegerParams p;
  p.deltas = {0.5};
  p.sizes = {4, 5};
  p.stretch = 3.0;
  const StrongInteger z = build_strong_integer(p, rng);
  CHECK(z.certificate.d2 > 3 * (2 + 0.5) * z.certificate.d1 - 1);
  CHECK(validate_certificate(z.set, z.certificate).pass);
}

TEST_CASE("huge parameters overflow loudly") {
  Rng rng(3);
  StrongIntegerParams p;
  p.deltas = {1e12, 1e12};
  p.sizes = {1000, 1000, 1000};
  CHECK_THROWS_AS(build_strong_integer(p, rng), OverflowError);
}

TEST_CASE("property: 100 seeded integer constructions validate") {
  Rng meta(99);
  for (int i = 0; i < 100; ++i) {
    StrongIntegerParams p;
    const auto r = meta.uniform_int(1, 3);
    for (std::int64_t j = 0; j < r; ++j) p.sizes.push_back(meta.uniform_int(1, r == 3 ? 6 : 16));
    for (std::int64_t j = 1; j < r; ++j) p.deltas.push_back(meta.uniform_real(0.1, 3.0));
    p.shape = i % 2 == 0 ? Shape::box : Shape::random;
    Rng rng(static_cast<std::uint64_t>(i));
    const StrongInteger z = build_strong_integer(p, rng);
    const ValidationReport rep = validate_certificate(z.set, z.certificate);
    CHECK_MESSAGE(rep.pass, "case " << i << ": " << rep.condition << " at " << rep.path << " " << rep.detail);
    if (p.shape == Shape::box) {
      std::int64_t prod = 1;
      for (auto n : p.sizes) prod *= n;
      CHECK(static_cast<std::int64_t>(z.set.size()) == prod);
    }
    if (r >= 2 && z.certificate.blocks.size() >= 2) {
      const double delta = p.deltas[0];
      CHECK(static_cast<double>(min_block_gap(z.certificate)) >= delta * static_cast<double>(z.certificate.d1) - 1.0);
    }
  }
}

TEST_CASE("validator rejects tampered certificates") {
  Rng rng(4);
  StrongIntegerParams p;
  p.deltas = {1.0};
  p.sizes = {4, 3};
  const StrongInteger z = build_strong_integer(p, rng);

  DimCertificate lowered = z.certificate;
  lowered.d2 = 3 * lowered.d1;  // = (2+delta) d1, not strictly above
  ValidationReport r = validate_certificate(z.set, lowered);
  CHECK_FALSE(r.pass);
  CHECK(r.condition == "gap condition d2 > (2+delta)d1");

  DimCertificate missing = z.certificate;
  missing.blocks.pop_back();
  r = validate_certificate(z.set, missing);
  CHECK_FALSE(r.pass);

  DimCertificate wide = z.certificate;
  wide.blocks[0].subset.push_back(wide.d1 + 1);
  CHECK_FALSE(validate_certificate(z.set, wide).pass);

  DimCertificate bigger = z.certificate;
  bigger.sizes[0] = 5;
  r = validate_certificate(z.set, bigger);
  CHECK_FALSE(r.pass);

  DimCertificate empty_block = z.certificate;
  empty_block.blocks[1].subset.clear();
  r = validate_certificate(z.set, empty_block);
  CHECK_FALSE(r.pass);
  CHECK(r.condition == "A_k nonempty");

  // {0..11} presented as 4 blocks {-1,0,1} + 3k: the gap condition fails.
  DimCertificate ap;
  ap.sizes = {4, 3};
  ap.deltas = {1.0};
  ap.d1 = 1;
  ap.d2 = 3;
  for (std::int64_t k = 0; k < 4; ++k) {
    DimBlock b;
    b.key = k;
    b.subset = {-1, 0, 1};
    b.child.sizes = {3};
    ap.blocks.push_back(b);
  }
  r = validate_certificate(IntegerSet::interval(0, 11), ap);
  CHECK_FALSE(r.pass);
  CHECK(r.condition == "gap condition d2 > (2+delta)d1");
}

TEST_CASE("project_and_fibre examples") {
  const LatticeSet a(2, {{1, 5}, {1, 6}, {2, 5}});
  const Projection p = project_and_fibre(a, 0);
  CHECK(p.values == IntegerSet({1, 2}));
  CHECK(p.fibres.at(1) == LatticeSet(IntegerSet({5, 6})));
  CHECK(p.fibres.at(2) == LatticeSet(IntegerSet({5})));

  std::vector<std::vector<Frequency>> pts;
  for (Frequency i = 1; i <= 3; ++i) {
    for (Frequency j = 1; j <= 2; ++j) pts.push_back({i, j});
  }
  const Projection q = project_and_fibre(LatticeSet(2, pts), 1);
  CHECK(q.values == IntegerSet({1, 2}));
  std::size_t total = 0;
  for (const auto& [v, f] : q.fibres) {
    CHECK(f.size() == 3);
    total += f.size();
  }
  CHECK(total == 6);

  const LatticeSet line(IntegerSet({3, 4}));
  CHECK_THROWS_AS(project_and_fibre(line, 0), ParameterError);
  const Projection id = project_and_fibre(line, 0, Rank1Policy::identity);
  CHECK(id.values == IntegerSet({3, 4}));
  CHECK(id.fibres.empty());
  CHECK_THROWS_AS(project_and_fibre(a, 2), ParameterError);
}

TEST_CASE("property: fibres partition the set") {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const StrongLattice s = build_strong_lattice({3, 4, 2}, Shape::random, rng);
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const Projection p = project_and_fibre(s.set, axis);
      std::size_t total = 0;
      for (const auto& [v, f] : p.fibres) total += f.size();
      CHECK(total == s.set.size());
      CHECK(p.fibres.size() == p.values.size());
    }
  }
}
