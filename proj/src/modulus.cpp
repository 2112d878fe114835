#include "littlewood/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

namespace littlewood {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

bool same_poly(const TrigPoly& a, const TrigPoly& b) {
  if (a.rank() != b.rank() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto fa = a.frequency(i);
    auto fb = b.frequency(i);
    if (!std::equal(fa.begin(), fa.end(), fb.begin(), fb.end())) return false;
    if (a.coefficient(i) != b.coefficient(i)) return false;
  }
  return true;
}

}  // namespace

ResidueFilter::ResidueFilter(std::int64_t modulus, std::int64_t residue) : q(modulus) {
  if (modulus < 1) throw ParameterError("modulus q must be >= 1");
  s = mod_floor(residue, modulus);
}

bool ResidueFilter::accepts(std::int64_t k) const noexcept { return mod_floor(k, q) == s; }

std::vector<Frequency> residue_filter(const IntegerSet& set, const ResidueFilter& filter) {
  std::vector<Frequency> out;
  for (Frequency k : set.elements()) {
    if (filter.accepts(k)) out.push_back(k);
  }
  return out;
}

GoodModulusResult good_modulus(const IntegerSet& set) {
  if (set.size() < 8) {
    throw HypothesisError("|I| >= 8", "|I|=" + std::to_string(set.size()));
  }
  std::vector<ModulusStep> trace;
  std::int64_t q = 1;
  for (int j = 1;; ++j) {
    if (q > std::numeric_limits<std::int64_t>::max() / 4) {
      throw OverflowError("modulus 4^j exceeds 64 bits before the ladder stopped");
    }
    q *= 4;
    std::unordered_map<std::int64_t, std::int64_t> counts;
    counts.reserve(set.size());
    for (Frequency k : set.elements()) ++counts[mod_floor(k, q)];
    ModulusStep step{q, 0, 0};
    for (const auto& [residue, count] : counts) {
      if (count > step.class_size || (count == step.class_size && residue < step.s)) {
        step.class_size = count;
        step.s = residue;
      }
    }
    trace.push_back(step);
    if (step.class_size <= (std::int64_t{1} << j)) {
      return {j, q, step.s, IntegerSet(residue_filter(set, ResidueFilter(q, step.s))), std::move(trace)};
    }
  }
}

BlockDecomposition decompose_blocks(const TrigPoly& f, std::int64_t d1, std::int64_t d2) {
  if (f.rank() != 1) throw ParameterError("block decomposition needs a rank-1 polynomial");
  if (d1 < 0 || d2 <= 2 * d1) {
    throw HypothesisError("d2 > 2 d1", "d1=" + std::to_string(d1) + ", d2=" + std::to_string(d2));
  }
  std::map<std::int64_t, std::vector<TrigPoly::Term>> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Frequency m = f.frequency(i)[0];
    // nearest block index: floor((2m + d2) / (2 d2))
    const Frequency r = mod_floor(m, d2);
    Frequency k = (m - r) / d2;
    Frequency l = r;
    if (l > d2 / 2) {
      ++k;
      l -= d2;
    }
    if (l < -d1 || l > d1) {
      throw HypothesisError("support m = d2 k + l with |l| <= d1",
                            "frequency " + std::to_string(m) + " is at offset " + std::to_string(l) +
                                " from block " + std::to_string(k));
    }
    terms[k].push_back({{l}, f.coefficient(i)});
  }
  BlockDecomposition out{d1, d2, {}};
  for (auto& [k, t] : terms) out.blocks.emplace(k, TrigPoly(1, std::move(t)));
  return out;
}

namespace {

TrigPoly assemble_if(const BlockDecomposition& blocks, const ResidueFilter* keep) {
  std::vector<TrigPoly::Term> terms;
  for (const auto& [k, f] : blocks.blocks) {
    if (keep != nullptr && !keep->accepts(k)) continue;
    const Frequency base = checked_mul(k, blocks.d2);
    for (std::size_t i = 0; i < f.size(); ++i) {
      terms.push_back({{checked_add(base, f.frequency(i)[0])}, f.coefficient(i)});
    }
  }
  return TrigPoly(1, std::move(terms));
}

}  // namespace

TrigPoly assemble_blocks(const BlockDecomposition& blocks) { return assemble_if(blocks, nullptr); }

TrigPoly assemble_blocks(const BlockDecomposition& blocks, const ResidueFilter& keep) {
  return assemble_if(blocks, &keep);
}

namespace {

// delta d1, snapped to the nearest integer when within rounding of it, so
// that delta = a/d1 given as a double behaves like the rational it stands for.
long double delta_d1(double delta, std::int64_t d1) {
  const long double x = static_cast<long double>(delta) * static_cast<long double>(d1);
  const long double r = std::round(x);
  return std::fabs(x - r) <= 1e-12L * std::max(1.0L, std::fabs(x)) ? r : x;
}

std::int64_t kernel_m_for(double delta, std::int64_t d1) {
  return static_cast<std::int64_t>(std::ceil(delta_d1(delta, d1) / 2.0L));
}

}  // namespace

std::vector<HypothesisCheck> thinning_hypotheses(const TrigPoly& f, const ThinningParams& p) {
  std::vector<HypothesisCheck> out;
  auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  const bool params_ok = p.d1 >= 1 && p.d2 >= 1 && p.delta > 0.0 && std::isfinite(p.delta);
  add("d1, d2 positive, delta > 0", params_ok,
      "d1=" + std::to_string(p.d1) + ", d2=" + std::to_string(p.d2) + ", delta=" + std::to_string(p.delta));
  if (!params_ok) return out;

  const long double gap = 2.0L * static_cast<long double>(p.d1) + 2.0L * delta_d1(p.delta, p.d1) + 4.0L;
  add("thinning gap (2+2delta)d1+4 <= d2", gap <= static_cast<long double>(p.d2),
      "(2+2delta)d1+4=" + std::to_string(static_cast<double>(gap)) + ", d2=" + std::to_string(p.d2));
  add("q >= 4", p.filter.q >= 4, "q=" + std::to_string(p.filter.q));

  bool support = f.rank() == 1;
  std::string support_detail = support ? "ok" : "polynomial is not rank 1";
  if (support) {
    try {
      decompose_blocks(f, p.d1, p.d2);
    } catch (const HypothesisError& e) {
      support = false;
      support_detail = e.what();
    }
  }
  add("support m = d2 k + l with |l| <= d1", support, support_detail);

  const auto m = kernel_m_for(p.delta, p.d1);
  const std::int64_t n = p.d1;
  add("kernel M >= 2", m >= 2, "M=ceil(delta d1/2)=" + std::to_string(m));
  add("kernel M < N", m < n, "M=" + std::to_string(m) + ", N=d1=" + std::to_string(n));
  const long double period = static_cast<long double>(p.filter.q) * static_cast<long double>(p.d2);
  add("period q d2 >= 2N+4M+1", period >= static_cast<long double>(2 * n + 4 * m + 1),
      "q d2=" + std::to_string(static_cast<double>(period)) + ", 2N+4M+1=" + std::to_string(2 * n + 4 * m + 1));
  return out;
}

ThinningResult thinning_transform(const TrigPoly& f, const ThinningParams& p) {
  ThinningResult out;
  out.hypotheses = thinning_hypotheses(f, p);
  // q >= 4 is needed for the norm bound only; the coefficient identity holds
  // for every q once the other conditions do.
  out.bound_applies = true;
  for (const auto& h : out.hypotheses) {
    if (h.pass) continue;
    out.bound_applies = false;
    if (h.name != "q >= 4") throw HypothesisError(h.name, h.detail);
  }

  const BlockDecomposition blocks = decompose_blocks(f, p.d1, p.d2);
  out.kernel_m = kernel_m_for(p.delta, p.d1);
  out.kernel_n = p.d1;
  out.period = checked_mul(p.filter.q, p.d2);
  out.bound_factor = 32.0 * std::numbers::pi * (2.0 + std::log(1.0 + 2.0 / p.delta));
  const FlatTopKernel kernel = flat_top_build(out.kernel_m, out.kernel_n);

  // Move the class s to 0, multiply by the periodized kernel, move back.
  const Frequency shift = checked_mul(p.filter.s, p.d2);
  const TrigPoly moved = f.translated(std::vector<Frequency>{-shift});
  const std::int64_t period = out.period;
  const Rational one(1, 1);
  bool exact = true;
  std::vector<TrigPoly::Term> terms;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    const Frequency m = moved.frequency(i)[0];
    Frequency r = mod_floor(m, period);
    if (r > period / 2) r -= period;
    const Rational k = kernel.value(r);
    if (!(k.num == 0 || k == one)) exact = false;
    terms.push_back({{m}, k.to_double() * moved.coefficient(i)});
  }
  out.thinned = TrigPoly(1, std::move(terms)).translated(std::vector<Frequency>{shift});

  const TrigPoly direct = assemble_blocks(blocks, p.filter);
  out.identity_holds = exact && same_poly(out.thinned, direct);
  for (const auto& [k, fk] : blocks.blocks) {
    if (p.filter.accepts(k)) out.kept.push_back(k);
  }
  return out;
}

}  // namespace littlewood
