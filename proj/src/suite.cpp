#include "littlewood/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>

#include "littlewood/kernels.hpp"
#include "littlewood/modulus.hpp"
#include "littlewood/random.hpp"
#include "littlewood/structures.hpp"

namespace littlewood {

namespace {

struct CriterionInfo {
  const char* name;
  double limit_seconds;  // 0: no stated limit
};

constexpr std::array<CriterionInfo, 11> kCriteria{{
    {"kernel exactness", 10.0},
    {"kernel transform factorization", 0.0},
    {"kernel discrete L1 bound", 30.0},
    {"Riemann-sum error lemma", 60.0},
    {"Bernstein inequality", 120.0},
    {"good modulus", 30.0},
    {"thinning identity and norm bound", 300.0},
    {"harmonic-weighted empirical constant", 300.0},
    {"strongly 2-dimensional lattice box", 600.0},
    {"strongly 2-dimensional integer box", 120.0},
    {"determinism", 0.0},
}};

Rng criterion_rng(const SuiteConfig& config, int id) {
  return Rng(config.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id));
}

FlatTopKernel suite_kernel(std::int64_t m, std::int64_t n, const SuiteConfig& config) {
  FlatTopKernel k = flat_top_build(m, n);
  if (!config.corrupt_kernel) return k;
  auto values = k.values();
  values[n] = Rational(m * m - 1, m * m);
  return FlatTopKernel(m, n, std::move(values));
}

// -- 1 ----------------------------------------------------------------------

void kernel_exactness(const SuiteConfig& config, CriterionResult& r) {
  std::int64_t built = 0;
  Json failures = Json::array();
  for (std::int64_t n = 3; n <= 40; ++n) {
    for (std::int64_t m = 2; m < n; ++m) {
      const FlatTopKernel k = suite_kernel(m, n, config);
      ++built;
      const std::string problem = check_flat_top_properties(k);
      if (!problem.empty()) failures.push_back(Json{{"M", m}, {"N", n}, {"problem", problem}});
    }
  }
  r.pass = failures.empty();
  r.summary = std::to_string(built) + " kernels, " + std::to_string(failures.size()) + " failures";
  if (failures.size() > 5) failures.erase(failures.begin() + 5, failures.end());
  r.details = Json{{"kernels", built}, {"failures", std::move(failures)}};
}

// -- 2 ----------------------------------------------------------------------

void kernel_factorization(const SuiteConfig& config, CriterionResult& r) {
  constexpr std::array<std::array<std::int64_t, 2>, 3> params{{{2, 5}, {3, 10}, {5, 23}}};
  constexpr int points = 1000;
  double worst = 0.0;
  Json rows = Json::array();
  for (const auto& [m, n] : params) {
    const FlatTopKernel k = suite_kernel(m, n, config);
    double err = 0.0;
    for (int i = 0; i < points; ++i) {
      const double t = static_cast<double>(i) / points;
      const Complex closed = dirichlet(n + m, t) * (fejer(m - 1, t) / static_cast<double>(m));
      err = std::max(err, std::abs(flat_top_transform_direct(k, t) - closed));
    }
    worst = std::max(worst, err);
    rows.push_back(Json{{"M", m}, {"N", n}, {"max_error", err}});
  }
  r.pass = worst <= 1e-9;
  r.summary = "max |direct - closed form| = " + std::to_string(worst);
  r.details = Json{{"points", points}, {"cases", std::move(rows)}, {"max_error", worst}};
}

// -- 3 ----------------------------------------------------------------------

void kernel_l1_bound(const SuiteConfig& config, CriterionResult& r) {
  constexpr std::array<std::array<std::int64_t, 2>, 9> params{
      {{2, 3}, {2, 12}, {2, 64}, {5, 6}, {5, 20}, {5, 100}, {12, 13}, {12, 40}, {12, 200}}};
  Json rows = Json::array();
  bool ok = true;
  double worst_fraction = 0.0;
  for (const auto& [m, n] : params) {
    const FlatTopKernel k = suite_kernel(m, n, config);
    const double bound = flat_top_l1_bound(m, n);
    for (std::int64_t mult : {1, 4, 16}) {
      const std::int64_t period = mult * k.min_period();
      const double l1 = flat_top_discrete_l1(k, period);
      ok = ok && l1 <= bound;
      worst_fraction = std::max(worst_fraction, l1 / bound);
      rows.push_back(Json{{"M", m}, {"N", n}, {"R", period}, {"l1", l1}, {"bound", bound}});
    }
  }
  r.pass = ok;
  r.summary = "largest l1/bound = " + std::to_string(worst_fraction);
  r.details = Json{{"cases", std::move(rows)}, {"max_fraction", worst_fraction}};
}

// -- 4 ----------------------------------------------------------------------

void riemann_lemma(const SuiteConfig& config, CriterionResult& r) {
  constexpr std::int64_t reference_points = 1'000'000;
  const std::vector<std::int64_t> ref_grid{reference_points};
  Json rows = Json::array();
  bool ok = true;
  for (std::int64_t d : {10, 50, 200}) {
    const TrigPoly f = indicator_poly(IntegerSet::interval(-d, d));
    const double rho_bound = 4.0 * std::numbers::pi * static_cast<double>(d);
    const auto coarse_n = 4 * static_cast<std::int64_t>(std::ceil(rho_bound));
    const std::vector<std::int64_t> coarse_grid{coarse_n};
    const double coarse = riemann_l1(f, coarse_grid, config.quadrature);
    const double reference = riemann_l1(f, ref_grid, config.quadrature);
    const double allowed = rho_bound / static_cast<double>(coarse_n) * reference;
    const double diff = std::abs(coarse - reference);
    ok = ok && diff <= allowed;
    rows.push_back(Json{{"d", d}, {"N", coarse_n}, {"coarse", coarse}, {"reference", reference},
                        {"difference", diff}, {"allowed", allowed}});
  }
  const TrigPoly interval = indicator_poly(IntegerSet::interval(1, 101));
  const double ref101 = riemann_l1(interval, ref_grid, config.quadrature);
  const NormInterval cert101 = certified_l1(interval, config.rel_err, config.quadrature);
  const bool ref_ok = std::abs(ref101 - 2.856) <= 0.01;
  const bool cert_ok = cert101.contains(ref101);
  r.pass = ok && ref_ok && cert_ok;
  r.summary = "interval {1..101}: reference " + std::to_string(ref101) + ", certified [" +
              std::to_string(cert101.lo) + ", " + std::to_string(cert101.hi) + "]";
  r.details = Json{{"dirichlet", std::move(rows)},
                   {"interval_101_reference", ref101},
                   {"interval_101_certified", to_json(cert101)},
                   {"reference_within_tolerance", ref_ok},
                   {"certified_contains_reference", cert_ok}};
}

// -- 5 ----------------------------------------------------------------------

void bernstein_suite(const SuiteConfig& config, CriterionResult& r) {
  Rng rng = criterion_rng(config, 5);
  constexpr int count = 200;
  int failures = 0;
  double worst = 0.0;
  Json failed = Json::array();
  for (int i = 0; i < count; ++i) {
    const std::int64_t d = rng.uniform_int(1, 64);
    const auto terms = static_cast<std::size_t>(rng.uniform_int(1, 2 * d + 1));
    auto freqs = rng.distinct_sample(-d, d, terms);
    std::vector<std::pair<Frequency, Complex>> t;
    for (Frequency n : freqs) t.emplace_back(n, Complex(rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0)));
    const TrigPoly f = TrigPoly::from_1d(t);
    if (f.is_zero()) continue;
    const BernsteinReport b = bernstein_check(f, config.rel_err, config.quadrature);
    if (b.rhs_bound > 0.0) worst = std::max(worst, b.lhs.lo / b.rhs_bound);
    if (!b.pass) {
      ++failures;
      if (failed.size() < 5) failed.push_back(Json{{"index", i}, {"report", to_json(b)}});
    }
  }
  r.pass = failures == 0;
  r.summary = std::to_string(count) + " polynomials, " + std::to_string(failures) +
              " failures, largest lhs.lo/rhs = " + std::to_string(worst);
  r.details = Json{{"count", count}, {"failures", failures}, {"max_fraction", worst}, {"failed", std::move(failed)}};
}

// -- 6 ----------------------------------------------------------------------

struct LadderStep {
  int j;
  std::int64_t s;
  std::int64_t size;
};

// Sort-based recount of the modulus ladder.
LadderStep brute_force_ladder(std::span<const Frequency> elems) {
  std::vector<std::int64_t> residues(elems.size());
  std::int64_t q = 1;
  for (int j = 1;; ++j) {
    q *= 4;
    for (std::size_t i = 0; i < elems.size(); ++i) residues[i] = ((elems[i] % q) + q) % q;
    std::sort(residues.begin(), residues.end());
    std::int64_t best = 0;
    std::int64_t best_s = 0;
    for (std::size_t i = 0; i < residues.size();) {
      std::size_t e = i;
      while (e < residues.size() && residues[e] == residues[i]) ++e;
      if (static_cast<std::int64_t>(e - i) > best) {
        best = static_cast<std::int64_t>(e - i);
        best_s = residues[i];
      }
      i = e;
    }
    if (best * best <= q) return {j, best_s, best};
  }
}

IntegerSet random_modulus_set(Rng& rng, int variant) {
  const double logn = rng.uniform_real(std::log(8.0), std::log(10000.0));
  const auto n = std::clamp<std::int64_t>(std::llround(std::exp(logn)), 8, 10000);
  switch (variant % 3) {
    case 0: {
      const std::int64_t span = n * rng.uniform_int(1, 2000);
      return IntegerSet(rng.distinct_sample(-span, span, static_cast<std::size_t>(n)));
    }
    case 1: {
      // progression with a power-of-4 step, which keeps classes large for
      // several rungs of the ladder
      const std::int64_t step = std::int64_t{1} << (2 * rng.uniform_int(0, 5));
      const std::int64_t start = rng.uniform_int(-1000, 1000);
      std::vector<Frequency> v;
      for (std::int64_t i = 0; i < n; ++i) v.push_back(start + i * step);
      return IntegerSet(std::move(v));
    }
    default: {
      // random multiples of 4^e plus a few outliers
      const std::int64_t step = std::int64_t{1} << (2 * rng.uniform_int(1, 4));
      auto idx = rng.distinct_sample(0, 4 * n, static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = idx[i] * step + (i % 7 == 0 ? 1 : 0);
      std::sort(idx.begin(), idx.end());
      idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
      return IntegerSet(std::move(idx));
    }
  }
}

void good_modulus_suite(const SuiteConfig& config, CriterionResult& r) {
  Rng rng = criterion_rng(config, 6);
  constexpr int count = 500;
  int bound_failures = 0;
  int oracle_mismatches = 0;
  int max_j0 = 0;
  std::int64_t elements = 0;
  Json failed = Json::array();
  for (int i = 0; i < count; ++i) {
    const IntegerSet set = random_modulus_set(rng, i);
    elements += static_cast<std::int64_t>(set.size());
    const GoodModulusResult g = good_modulus(set);
    const auto size = static_cast<std::int64_t>(g.filtered.size());
    const auto total = static_cast<std::int64_t>(set.size());
    // |I|^(1/3)/8 <= size <= sqrt(q), in integers
    const bool bounds = 512 * size * size * size >= total && size * size <= g.q;
    const LadderStep oracle = brute_force_ladder(set.elements());
    const bool agree = oracle.j == g.j0 && oracle.size == size && oracle.s == g.s;
    max_j0 = std::max(max_j0, g.j0);
    if (!bounds) ++bound_failures;
    if (!agree) ++oracle_mismatches;
    if ((!bounds || !agree) && failed.size() < 5) {
      failed.push_back(Json{{"index", i}, {"size", total}, {"j0", g.j0}, {"class_size", size},
                            {"oracle_j0", oracle.j}, {"oracle_class_size", oracle.size}});
    }
  }
  r.pass = bound_failures == 0 && oracle_mismatches == 0;
  r.summary = std::to_string(count) + " sets, " + std::to_string(bound_failures) + " bound failures, " +
              std::to_string(oracle_mismatches) + " oracle mismatches";
  r.details = Json{{"count", count},          {"elements", elements},
                   {"max_j0", max_j0},        {"bound_failures", bound_failures},
                   {"oracle_mismatches", oracle_mismatches}, {"failed", std::move(failed)}};
}

// -- 7 ----------------------------------------------------------------------

void thinning_suite(const SuiteConfig& config, CriterionResult& r) {
  Rng rng = criterion_rng(config, 7);
  constexpr int count = 50;
  int identity_failures = 0;
  int bound_failures = 0;
  double worst = 0.0;
  Json rows = Json::array();
  for (int i = 0; i < count; ++i) {
    const std::int64_t d1 = rng.uniform_int(5, 40);
    const std::int64_t m = rng.uniform_int(2, d1 - 1);
    // ceil(delta d1 / 2) = M exactly
    const double delta = static_cast<double>(2 * m - 1) / static_cast<double>(d1);
    const auto min_d2 = static_cast<std::int64_t>(std::ceil((2.0 + 2.0 * delta) * static_cast<double>(d1) + 4.0));
    const std::int64_t d2 = min_d2 + rng.uniform_int(0, 3 * d1);
    const std::int64_t q = rng.uniform_int(4, 12);
    const std::int64_t s = rng.uniform_int(0, q - 1);

    auto keys = rng.distinct_sample(-2 * q, 2 * q, static_cast<std::size_t>(rng.uniform_int(1, 3 * q)));
    if (std::none_of(keys.begin(), keys.end(), [&](std::int64_t k) { return ((k % q) + q) % q == s; })) {
      keys.push_back(s);
    }
    const bool unimodular = i % 2 == 1;
    std::vector<TrigPoly::Term> terms;
    for (std::int64_t k : keys) {
      const auto width = static_cast<std::size_t>(rng.uniform_int(1, std::min<std::int64_t>(2 * d1 + 1, 12)));
      for (Frequency l : rng.distinct_sample(-d1, d1, width)) {
        const Complex c = unimodular ? std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform_real()) : Complex(1.0);
        terms.push_back({{k * d2 + l}, c});
      }
    }
    const TrigPoly f(1, std::move(terms));
    const ThinningResult t = thinning_transform(f, {d1, d2, delta, ResidueFilter(q, s)});
    const NormInterval fn = certified_l1(f, config.rel_err, config.quadrature);
    const NormInterval tn = certified_l1(t.thinned, config.rel_err, config.quadrature);
    const double ratio_lo = tn.lo / fn.hi;
    const bool bound_ok = tn.lo <= t.bound_factor * fn.hi;
    worst = std::max(worst, ratio_lo / t.bound_factor);
    if (!t.identity_holds) ++identity_failures;
    if (!bound_ok) ++bound_failures;
    rows.push_back(Json{{"d1", d1}, {"d2", d2}, {"delta", delta}, {"q", q}, {"s", s},
                        {"kept_blocks", t.kept.size()}, {"identity", t.identity_holds},
                        {"norm", to_json(fn)}, {"thinned", to_json(tn)}, {"bound_factor", t.bound_factor}});
  }
  r.pass = identity_failures == 0 && bound_failures == 0;
  r.summary = std::to_string(count) + " configurations, " + std::to_string(identity_failures) +
              " identity failures, " + std::to_string(bound_failures) +
              " bound failures, largest ratio/bound = " + std::to_string(worst);
  r.details = Json{{"count", count},
                   {"identity_failures", identity_failures},
                   {"bound_failures", bound_failures},
                   {"max_fraction", worst},
                   {"configurations", std::move(rows)}};
}

// -- 8 ----------------------------------------------------------------------

ScanFamily mps_family_structured() {
  ScanFamily f;
  for (std::int64_t n = 4; n <= 512; ++n) f.intervals.push_back(n);
  f.gaps = {{1, 10, 3, 2}, {1, 8, 4, 4},   {1, 17, 16, 16}, {2, 50, 10, 10},
            {3, 200, 50, 8}, {1, 65, 64, 8}, {5, 301, 60, 20}};
  return f;
}

double min_ratio_with_prefix(const ScanReport& r, const std::string& prefix) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& row : r.rows) {
    if (row.label.starts_with(prefix)) m = std::min(m, row.ratio);
  }
  return m;
}

double mps_scan(const SuiteConfig& config, CriterionResult* r) {
  const ScanReport structured = constant_scan(mps_family_structured(), ScanMode::mps, config.rel_err,
                                              config.quadrature);
  ScanFamily random;
  random.random_count = 10;
  random.random_size = 64;
  random.random_span = 1'000'000;
  random.seed = config.seed;
  // Spread-out sets need ~4 pi 10^6 / rho samples; a coarser target keeps the
  // grid inside the default budget. The enclosure is still certified.
  const double random_rel_err = std::max(config.rel_err, 0.2);
  const ScanReport sparse = constant_scan(random, ScanMode::mps, random_rel_err, config.quadrature);

  const double intervals = min_ratio_with_prefix(structured, "interval:");
  const double gaps = min_ratio_with_prefix(structured, "gap:");
  const double randoms = min_ratio_with_prefix(sparse, "random:");
  const double overall = std::min({intervals, gaps, randoms});
  if (r != nullptr) {
    r->pass = overall >= 0.25 && intervals >= 0.3 && randoms > 0.0;
    r->summary = "min ratio " + std::to_string(overall) + " (intervals " + std::to_string(intervals) + ", GAPs " +
                 std::to_string(gaps) + ", random " + std::to_string(randoms) + ")";
    Json random_rows = to_json(sparse).at("rows");
    r->details = Json{{"min_ratio", overall},
                      {"interval_min_ratio", intervals},
                      {"interval_median_ratio", structured.median_ratio},
                      {"gap_min_ratio", gaps},
                      {"random_min_ratio", randoms},
                      {"random_rel_err", random_rel_err},
                      {"interval_512_ratio", structured.rows[508].ratio},
                      {"random_rows", std::move(random_rows)}};
  }
  return overall;
}

// -- 9 ----------------------------------------------------------------------

void multidim_box(const SuiteConfig& config, CriterionResult& r) {
  Rng unused(0);
  const StrongLattice box = build_strong_lattice({32, 32}, Shape::box, unused);
  const InequalityVerdict v = verify_multidim(box.set, box.certificate, 0.25, config.rel_err, config.quadrature);
  // The box norm factors as the square of the 1-D interval norm.
  const NormInterval side = certified_l1(indicator_poly(IntegerSet::interval(1, 32)), config.rel_err,
                                         config.quadrature);
  const bool factors = v.lhs.lo <= side.hi * side.hi && side.lo * side.lo <= v.lhs.hi;
  r.pass = v.pass && v.certified && factors;
  r.summary = "lhs [" + std::to_string(v.lhs.lo) + ", " + std::to_string(v.lhs.hi) + "] vs rhs " +
              std::to_string(v.rhs);
  r.details = Json{{"verdict", to_json(v)}, {"side_norm", to_json(side)}, {"product_consistent", factors}};
}

// -- 10 ---------------------------------------------------------------------

void multidimz_box(const SuiteConfig& config, SuiteState& state, CriterionResult& r) {
  if (!state.empirical_c_mps) state.empirical_c_mps = mps_scan(config, nullptr);
  StrongIntegerParams params;
  params.deltas = {1.0};
  params.sizes = {16, 16};
  Rng unused(0);
  const StrongInteger built = build_strong_integer(params, unused);
  const InequalityVerdict paper = verify_multidimz(built.set, built.certificate, config.c_mps, config.rel_err,
                                                   config.quadrature);
  const InequalityVerdict empirical = verify_multidimz(built.set, built.certificate, *state.empirical_c_mps,
                                                       config.rel_err, config.quadrature);
  bool size_reported_unmet = false;
  bool certificate_ok = false;
  for (const auto& h : paper.hypotheses) {
    if (!h.informational && h.name.starts_with("size n_") && !h.pass) size_reported_unmet = true;
    if (h.name.starts_with("strongly")) certificate_ok = h.pass;
  }
  r.pass = paper.pass && empirical.pass && size_reported_unmet && certificate_ok && !paper.certified;
  r.summary = "paper constant margin " + std::to_string(paper.margin) + ", empirical C=" +
              std::to_string(*state.empirical_c_mps) + " margin " + std::to_string(empirical.margin) +
              (size_reported_unmet ? ", size hypothesis reported unmet" : ", size hypothesis not reported unmet");
  r.details = Json{{"set_size", built.set.size()},
                   {"certificate", Json{{"d1", built.certificate.d1}, {"d2", built.certificate.d2}}},
                   {"paper_constant", to_json(paper)},
                   {"empirical_constant", to_json(empirical)},
                   {"size_hypothesis_reported_unmet", size_reported_unmet}};
}

// -- 11 ---------------------------------------------------------------------

Json run_reference(const SuiteConfig& config) {
  SuiteState fresh;
  Json out = Json::object();
  for (int id = 1; id <= 10; ++id) out[std::to_string(id)] = run_criterion(id, config, fresh).details;
  return out;
}

void determinism(const SuiteConfig& config, SuiteState& state, CriterionResult& r) {
  if (state.reference.size() < 10) state.reference = run_reference(config);
  const Json again = run_reference(config);
  Json differing = Json::array();
  for (const auto& [key, value] : state.reference.items()) {
    if (!again.contains(key) || again.at(key).dump() != value.dump()) differing.push_back(key);
  }
  r.pass = differing.empty();
  r.summary = differing.empty() ? "criteria 1-10 reproduced identically"
                                : std::to_string(differing.size()) + " criteria differ between runs";
  r.details = Json{{"compared", state.reference.size()}, {"differing", std::move(differing)}};
}

}  // namespace

int criterion_count() { return static_cast<int>(kCriteria.size()); }

std::string criterion_name(int id) {
  if (id < 1 || id > criterion_count()) throw ParameterError("no criterion " + std::to_string(id));
  return kCriteria[static_cast<std::size_t>(id - 1)].name;
}

CriterionResult run_criterion(int id, const SuiteConfig& config, SuiteState& state) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  r.limit_seconds = kCriteria[static_cast<std::size_t>(id - 1)].limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: kernel_exactness(config, r); break;
      case 2: kernel_factorization(config, r); break;
      case 3: kernel_l1_bound(config, r); break;
      case 4: riemann_lemma(config, r); break;
      case 5: bernstein_suite(config, r); break;
      case 6: good_modulus_suite(config, r); break;
      case 7: thinning_suite(config, r); break;
      case 8: state.empirical_c_mps = mps_scan(config, &r); break;
      case 9: multidim_box(config, r); break;
      case 10: multidimz_box(config, state, r); break;
      case 11: determinism(config, state, r); break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.summary = std::string("error: ") + e.what();
    r.details = Json{{"error", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.limit_seconds > 0.0 && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.summary += " (over the " + std::to_string(static_cast<int>(r.limit_seconds)) + " s limit)";
  }
  if (id <= 10) state.reference[std::to_string(id)] = r.details;
  return r;
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  SuiteState state;
  for (int id = 1; id <= criterion_count(); ++id) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), id) == config.only.end()) {
      continue;
    }
    report.criteria.push_back(run_criterion(id, config, state));
  }
  report.empirical_c_mps = state.empirical_c_mps;
  report.all_pass = std::all_of(report.criteria.begin(), report.criteria.end(),
                                [](const CriterionResult& c) { return c.pass; });
  return report;
}

Json to_json(const SuiteConfig& config) {
  return Json{{"rel_err", config.rel_err},
              {"c_mps", config.c_mps},
              {"seed", config.seed},
              {"memory_budget_bytes", config.quadrature.memory_budget_bytes},
              {"corrupt_kernel", config.corrupt_kernel},
              {"only", config.only}};
}

Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id},
              {"name", r.name},
              {"pass", r.pass},
              {"summary", r.summary},
              {"details", r.details},
              {"timing", Json{{"seconds", r.seconds},
                              {"limit_seconds", r.limit_seconds > 0.0 ? Json(r.limit_seconds) : Json(nullptr)}}}};
}

Json to_json(const SuiteReport& report, const SuiteConfig& config) {
  Json criteria = Json::array();
  double total = 0.0;
  for (const auto& c : report.criteria) {
    criteria.push_back(to_json(c));
    total += c.seconds;
  }
  return Json{{"command", "suite"},
              {"config", to_json(config)},
              {"criteria", std::move(criteria)},
              {"empirical_c_mps", report.empirical_c_mps ? Json(*report.empirical_c_mps) : Json(nullptr)},
              {"all_pass", report.all_pass},
              {"timing", Json{{"seconds", total}}}};
}

}  // namespace littlewood
