#include "littlewood/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "littlewood/numeric.hpp"
#include "littlewood/random.hpp"

namespace littlewood {

namespace {

void finish(InequalityVerdict& v) {
  v.margin = v.lhs.lo - v.rhs;
  v.pass = v.margin >= 0.0;
  v.certified = std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                            [](const HypothesisCheck& h) { return h.pass || h.informational; });
}

HypothesisCheck certificate_check(const ValidationReport& report) {
  return {"strongly r-dimensional certificate valid", report.pass,
          report.pass ? std::to_string(report.checks) + " checks passed"
                      : report.condition + " at " + report.path + ": " + report.detail};
}

double log_product(std::span<const std::int64_t> sizes) {
  double p = 1.0;
  for (std::int64_t n : sizes) p *= std::log(static_cast<double>(n));
  return p;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

double mps_rhs(std::span<const Complex> coefficients) {
  if (coefficients.empty()) throw ParameterError("harmonic sum needs at least one coefficient");
  double sum = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    sum += std::abs(coefficients[j]) / static_cast<double>(j + 1);
  }
  return sum;
}

InequalityVerdict verify_mps(const TrigPoly& f, double c_mps, double rel_err, const QuadratureOptions& options) {
  if (f.rank() != 1) throw ParameterError("harmonic-weighted bound needs a rank-1 polynomial");
  if (f.is_zero()) throw ParameterError("harmonic-weighted bound needs a nonzero polynomial");
  InequalityVerdict v;
  v.theorem = "mps";
  v.constant_used = c_mps;
  v.lhs = certified_l1(f, rel_err, options);
  v.rhs = c_mps * mps_rhs(f.coefficients());
  v.hypotheses.push_back({"frequencies strictly increasing", true, std::to_string(f.size()) + " terms"});
  finish(v);
  return v;
}

InequalityVerdict verify_basic_multidim(const LatticeSet& set, double c_mps, double rel_err,
                                        const QuadratureOptions& options) {
  if (set.rank() < 2) throw ParameterError("fibred bound needs rank >= 2");
  InequalityVerdict v;
  v.theorem = "basic-multidim";
  v.constant_used = c_mps;
  v.lhs = certified_l1(indicator_poly(set), rel_err, options);
  const Projection proj = project_and_fibre(set, 0);
  double weighted = 0.0;
  std::int64_t j = 1;
  for (const auto& [a1, fibre] : proj.fibres) {
    const NormInterval fn = certified_l1(indicator_poly(fibre), rel_err, options);
    weighted += fn.lo / static_cast<double>(j++);
  }
  v.rhs = c_mps * weighted;
  v.hypotheses.push_back({"rank >= 2", true, "rank " + std::to_string(set.rank())});
  finish(v);
  return v;
}

InequalityVerdict verify_multidim(const LatticeSet& set, const DimCertificate& cert, double c_mps, double rel_err,
                                  const QuadratureOptions& options) {
  InequalityVerdict v;
  v.theorem = "multidim";
  v.constant_used = c_mps;
  v.hypotheses.push_back(certificate_check(validate_certificate(set, cert)));
  v.lhs = certified_l1(indicator_poly(set), rel_err, options);
  v.rhs = std::pow(c_mps, static_cast<double>(cert.rank())) * log_product(cert.sizes);
  finish(v);
  return v;
}

double multidimz_constant(double c_mps, std::span<const double> deltas) {
  const double r = static_cast<double>(deltas.size() + 1);
  double c = std::pow(c_mps, r) * std::pow(512.0 * std::numbers::pi, -r);
  for (double d : deltas) c /= 2.0 + std::log(1.0 + 2.0 / d);
  return c;
}

std::vector<double> multidimz_size_thresholds(double c_mps, std::span<const std::int64_t> sizes, int power) {
  std::vector<double> out(sizes.size());
  const double lead = std::pow(std::numbers::pi, 3) * std::pow(2.0, 21) * std::pow(c_mps, power);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    double p = 1.0;
    for (std::size_t j = i; j < sizes.size(); ++j) p *= std::pow(std::log(static_cast<double>(sizes[j])), 3);
    out[i] = lead * p;
  }
  return out;
}

InequalityVerdict verify_multidimz(const IntegerSet& set, const DimCertificate& cert, double c_mps, double rel_err,
                                   const QuadratureOptions& options) {
  const HypothesisCheck valid = certificate_check(validate_certificate(set, cert));
  if (cert.rank() == 1) {
    InequalityVerdict v = verify_mps(indicator_poly(set), c_mps, rel_err, options);
    v.theorem = "multidimz";
    v.hypotheses.insert(v.hypotheses.begin(), valid);
    finish(v);
    return v;
  }
  InequalityVerdict v;
  v.theorem = "multidimz";
  v.constant_used = c_mps;
  v.hypotheses.push_back(valid);
  const auto literal = multidimz_size_thresholds(c_mps, cert.sizes, 3);
  const auto inverse = multidimz_size_thresholds(c_mps, cert.sizes, -3);
  for (std::size_t i = 0; i < cert.sizes.size(); ++i) {
    const auto n = static_cast<double>(cert.sizes[i]);
    const std::string idx = std::to_string(i + 1);
    v.hypotheses.push_back({"size n_" + idx + " >= pi^3 2^21 C^3 prod_{j>=" + idx + "} (log n_j)^3",
                            n >= literal[i], "n=" + fmt_double(n) + ", threshold=" + fmt_double(literal[i])});
    v.hypotheses.push_back({"size n_" + idx + " >= pi^3 2^21 C^-3 prod_{j>=" + idx + "} (log n_j)^3 (alternative reading)",
                            n >= inverse[i], "n=" + fmt_double(n) + ", threshold=" + fmt_double(inverse[i]), true});
  }
  v.lhs = certified_l1(indicator_poly(set), rel_err, options);
  v.rhs = multidimz_constant(c_mps, cert.deltas) * log_product(cert.sizes);
  finish(v);
  return v;
}

// ---------------------------------------------------------------------------

MainPropReport verify_main_prop(const MainPropInput& input, double c_mps, double rel_err,
                                const QuadratureOptions& options) {
  const auto& bd = input.blocks;
  const std::int64_t d1 = bd.d1;
  const std::int64_t d2 = bd.d2;
  if (input.q < 1) throw ParameterError("modulus q must be >= 1");
  if (bd.blocks.empty()) throw ParameterError("no blocks");
  const ResidueFilter filter(input.q, input.s);

  MainPropReport out;
  auto& v = out.verdict;
  v.theorem = "main-prop";
  v.constant_used = c_mps;

  const long double gap = (2.0L + input.delta) * static_cast<long double>(d1);
  v.hypotheses.push_back({"(2+delta)d1 < d2", input.delta > 0.0 && gap < static_cast<long double>(d2),
                          "(2+delta)d1=" + fmt_double(static_cast<double>(gap)) + ", d2=" + std::to_string(d2)});
  v.hypotheses.push_back({"q > 4 pi", static_cast<double>(input.q) > 4.0 * std::numbers::pi,
                          "q=" + std::to_string(input.q)});
  bool degrees_ok = true;
  for (const auto& [k, f] : bd.blocks) degrees_ok = degrees_ok && f.degree()[0] <= d1;
  v.hypotheses.push_back({"deg f_k <= d1", degrees_ok, "d1=" + std::to_string(d1)});

  for (const auto& [k, f] : bd.blocks) {
    if (filter.accepts(k)) {
      SelectedBlock b;
      b.j = static_cast<std::int64_t>(out.selected.size()) + 1;
      b.k = k;
      b.b = (k - filter.s) / filter.q;
      out.selected.push_back(std::move(b));
    }
  }
  v.hypotheses.push_back({"I(q;s) nonempty", !out.selected.empty(),
                          "J=" + std::to_string(out.selected.size())});
  // The thinning step's own gap condition is stricter; tracked separately.
  const long double thin_gap = (2.0L + 2.0L * input.delta) * static_cast<long double>(d1) + 4.0L;
  v.hypotheses.push_back({"thinning gap (2+2delta)d1+4 <= d2", thin_gap <= static_cast<long double>(d2),
                          "(2+2delta)d1+4=" + fmt_double(static_cast<double>(thin_gap)) + ", d2=" + std::to_string(d2),
                          true});

  const TrigPoly full = assemble_blocks(bd);
  v.lhs = certified_l1(full, rel_err, options);
  out.thinning_factor = 32.0 * std::numbers::pi * (2.0 + std::log(1.0 + 2.0 / input.delta));

  const std::int64_t period = checked_mul(input.q, d2);
  const double drift = 2.0 * std::numbers::pi * static_cast<double>(d1) / static_cast<double>(period);
  double weighted = 0.0;
  double norm_hi_sum = 0.0;
  for (auto& b : out.selected) {
    const TrigPoly& f = bd.blocks.at(b.k);
    b.norm = certified_l1(f, rel_err, options);
    b.bracket = c_mps / (2.0 * static_cast<double>(b.j)) - drift;
    weighted += (b.bracket >= 0.0 ? b.norm.lo : b.norm.hi) * b.bracket;
    norm_hi_sum += b.norm.hi;
  }
  v.rhs = weighted / out.thinning_factor;
  finish(v);

  if (out.selected.empty()) return out;
  out.thinned = certified_l1(assemble_blocks(bd, filter), rel_err, options);
  out.t2_bound = drift * norm_hi_sum;

  // Main term: for each grid point m, the L1 norm in u of
  // sum_j f_{k_j}(m/(q d2)) e(b_j u).
  std::vector<std::vector<Complex>> samples;
  samples.reserve(out.selected.size());
  bool half_bound = true;
  for (const auto& b : out.selected) {
    const std::vector<std::int64_t> grid{period};
    GridEvaluation g = eval_grid(bd.blocks.at(b.k), grid, options);
    const double mean = pairwise_sum(std::span<const Complex>(g.values), [](const Complex& z) { return std::abs(z); }) /
                        static_cast<double>(period);
    half_bound = half_bound && mean >= 0.5 * b.norm.hi;
    samples.push_back(std::move(g.values));
  }
  out.sampling_half_bound = half_bound;

  std::vector<double> lo_terms(static_cast<std::size_t>(period));
  std::vector<double> hi_terms(static_cast<std::size_t>(period));
  std::vector<double> riemann_terms(static_cast<std::size_t>(period));
  std::vector<double> mps_terms(static_cast<std::size_t>(period));
  for (std::size_t m = 0; m < static_cast<std::size_t>(period); ++m) {
    std::vector<std::pair<Frequency, Complex>> terms;
    double harmonic = 0.0;
    for (std::size_t j = 0; j < out.selected.size(); ++j) {
      terms.emplace_back(out.selected[j].b, samples[j][m]);
      harmonic += std::abs(samples[j][m]) / static_cast<double>(j + 1);
    }
    const TrigPoly slice = TrigPoly::from_1d(terms);
    const NormInterval n = certified_l1(slice, rel_err, options);
    lo_terms[m] = n.lo;
    hi_terms[m] = n.hi;
    riemann_terms[m] = n.riemann;
    mps_terms[m] = harmonic;
  }
  const double p = static_cast<double>(period);
  out.t1.lo = pairwise_sum(lo_terms) / p;
  out.t1.hi = pairwise_sum(hi_terms) / p;
  out.t1.riemann = pairwise_sum(riemann_terms) / p;
  out.t1.grid = {period};
  out.t1_mps_lower = c_mps * pairwise_sum(mps_terms) / p;
  out.decomposition_consistent = out.thinned.hi >= out.t1.lo - out.t2_bound;
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::mps:
      return "mps";
    case ScanMode::multidim:
      return "multidim";
    case ScanMode::multidimz:
      return "multidimz";
  }
  return "unknown";
}

namespace {

std::string size_label(const std::vector<std::int64_t>& sizes) {
  std::string s;
  for (std::int64_t n : sizes) s += (s.empty() ? "" : "x") + std::to_string(n);
  return s;
}

void add_row(ScanReport& report, std::string label, const TrigPoly& f, double rhs, double rel_err,
             const QuadratureOptions& options) {
  ScanRow row;
  row.label = std::move(label);
  row.lhs = certified_l1(f, rel_err, options);
  row.rhs_without_constant = rhs;
  row.ratio = rhs > 0.0 ? row.lhs.lo / rhs : std::numeric_limits<double>::infinity();
  report.rows.push_back(std::move(row));
}

}  // namespace

ScanReport constant_scan(const ScanFamily& family, ScanMode mode, double rel_err, const QuadratureOptions& options) {
  ScanReport report;
  report.mode = mode;
  Rng rng(family.seed);

  switch (mode) {
    case ScanMode::mps: {
      for (std::int64_t n : family.intervals) {
        const TrigPoly f = indicator_poly(IntegerSet::interval(1, n));
        add_row(report, "interval:" + std::to_string(n), f, mps_rhs(f.coefficients()), rel_err, options);
      }
      for (const auto& g : family.gaps) {
        const GapResult gap = gap_rank2(g.a, g.b, g.m, g.n);
        const TrigPoly f = indicator_poly(IntegerSet(gap.elements));
        add_row(report,
                "gap:" + std::to_string(g.a) + "," + std::to_string(g.b) + "," + std::to_string(g.m) + "," +
                    std::to_string(g.n),
                f, mps_rhs(f.coefficients()), rel_err, options);
      }
      for (std::int64_t i = 0; i < family.random_count; ++i) {
        const auto elems = rng.distinct_sample(0, family.random_span, static_cast<std::size_t>(family.random_size));
        const TrigPoly f = indicator_poly(IntegerSet(elems));
        add_row(report, "random:" + std::to_string(i), f, mps_rhs(f.coefficients()), rel_err, options);
      }
      break;
    }
    case ScanMode::multidim: {
      for (const auto& sizes : family.boxes) {
        Rng unused(0);
        const StrongLattice box = build_strong_lattice(sizes, Shape::box, unused);
        add_row(report, "box:" + size_label(sizes), indicator_poly(box.set), log_product(sizes), rel_err, options);
      }
      break;
    }
    case ScanMode::multidimz: {
      for (const auto& sizes : family.boxes) {
        StrongIntegerParams params;
        params.sizes = sizes;
        params.deltas.assign(sizes.size() - 1, family.delta);
        Rng unused(0);
        const StrongInteger built = build_strong_integer(params, unused);
        const double rhs = multidimz_constant(1.0, params.deltas) * log_product(sizes);
        add_row(report, "zbox:" + size_label(sizes), indicator_poly(built.set), rhs, rel_err, options);
      }
      break;
    }
  }

  std::vector<double> ratios;
  for (const auto& r : report.rows) ratios.push_back(r.ratio);
  std::sort(ratios.begin(), ratios.end());
  if (!ratios.empty()) {
    report.min_ratio = ratios.front();
    const std::size_t n = ratios.size();
    report.median_ratio = n % 2 == 1 ? ratios[n / 2] : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
  }
  return report;
}

}  // namespace littlewood
