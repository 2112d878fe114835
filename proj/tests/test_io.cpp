#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "littlewood/io.hpp"
#include "littlewood/random.hpp"

using namespace littlewood;

TEST_CASE("sets round trip") {
  const IntegerSet a({-4, 0, 9});
  const Json ja = to_json(a);
  CHECK(ja["rank"] == 1);
  CHECK(std::get<IntegerSet>(set_from_json(ja)) == a);

  const LatticeSet b(2, {{1, 5}, {2, -3}, {0, 0}});
  CHECK(std::get<LatticeSet>(set_from_json(to_json(b))) == b);

  CHECK_THROWS(set_from_json(Json::parse(R"({"rank": 2, "points": [[1]]})")));
}

TEST_CASE("polynomials round trip bit for bit") {
  Rng rng(9);
  std::vector<std::vector<Frequency>> pts;
  for (int i = 0; i < 20; ++i) pts.push_back({rng.uniform_int(-50, 50), rng.uniform_int(-50, 50)});
  TrigPoly f = indicator_poly(LatticeSet(2, pts));
  std::vector<TrigPoly::Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto n = f.frequency(i);
    terms.push_back({{n[0], n[1]}, {rng.uniform_real(-1, 1), rng.uniform_real(-1, 1)}});
  }
  const TrigPoly g(2, terms);
  const TrigPoly h = poly_from_json(Json::parse(to_json(g).dump()));
  REQUIRE(h.size() == g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(h.coefficient(i) == g.coefficient(i));
    CHECK(h.frequency(i)[1] == g.frequency(i)[1]);
  }
}

TEST_CASE("poly_or_indicator accepts sets") {
  const TrigPoly f = poly_or_indicator(Json::parse(R"({"rank": 1, "points": [3, 1, 2]})"));
  CHECK(f.size() == 3);
  CHECK(f.coefficient(0) == Complex(1.0));
}

TEST_CASE("certificates and verdicts round trip") {
  Rng rng(2);
  StrongIntegerParams p;
  p.deltas = {0.5};
  p.sizes = {4, 3};
  p.shape = Shape::random;
  const StrongInteger z = build_strong_integer(p, rng);
  const DimCertificate c = certificate_from_json(Json::parse(to_json(z.certificate).dump()));
  CHECK(to_json(c) == to_json(z.certificate));
  CHECK(validate_certificate(z.set, c).pass);

  InequalityVerdict v;
  v.theorem = "mps";
  v.lhs = {1.0, 2.0};
  v.rhs = 0.5;
  v.margin = 0.5;
  v.pass = true;
  v.hypotheses.push_back({"q > 4 pi", false, "q = 7", true});
  const InequalityVerdict w = verdict_from_json(to_json(v));
  CHECK(to_json(w) == to_json(v));
  CHECK(w.hypotheses[0].informational);
}

TEST_CASE("non-finite values survive as strings") {
  CHECK(real_to_json(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(real_to_json(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(std::isnan(real_from_json(real_to_json(std::nan("")))));
  CHECK(real_from_json(Json(2.5)) == 2.5);
  CHECK(std::isinf(real_from_json(Json("inf"))));
}

TEST_CASE("scan reports in JSON and CSV") {
  ScanReport empty;
  CHECK(scan_to_csv(empty) == "label,lo,hi,riemann,rhs_without_constant,ratio\n");

  ScanFamily fam;
  fam.intervals = {1, 8};
  const ScanReport r = constant_scan(fam, ScanMode::mps, 0.05);
  const ScanReport back = scan_from_json(Json::parse(to_json(r).dump()));
  CHECK(to_json(back) == to_json(r));
  const std::string csv = scan_to_csv(r);
  CHECK(csv.find("interval:8,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("kernel CSV") {
  const std::string csv = kernel_to_csv(flat_top_build(2, 5));
  CHECK(csv.starts_with("k,K_exact,K_float\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 19);
  CHECK(csv.find("\n8,1/4,0.25") != std::string::npos);
  CHECK(csv.find("\n0,1,1") != std::string::npos);
}

TEST_CASE("set_from_spec") {
  CHECK(set_from_spec("interval:4") == IntegerSet({1, 2, 3, 4}));
  CHECK(set_from_spec("interval:-1,2") == IntegerSet({-1, 0, 1, 2}));
  CHECK(set_from_spec("dirichlet:2") == IntegerSet::interval(-2, 2));
  CHECK_THROWS_AS(set_from_spec("blob:3"), Error);
  CHECK_THROWS_AS(set_from_spec("interval:x"), Error);
}
