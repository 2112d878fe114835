// Command-line front end.
//
//   littlewood gen    --kind gap --params '{"a":1,"b":10,"M":3,"N":2}'
//   littlewood norm   --set interval:101 --rel-err 0.01
//   littlewood kernel --M 3 --N 10
//   littlewood thin   --input f.json --d1 10 --d2 44 --delta 1 --q 13 --s 0
//   littlewood verify --theorem mps --input set.json --c-mps 0.25
//   littlewood suite  --seed 1
//
// Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 usage or input
// error, 3 resource limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "littlewood/bounds.hpp"
#include "littlewood/io.hpp"
#include "littlewood/kernels.hpp"
#include "littlewood/modulus.hpp"
#include "littlewood/quadrature.hpp"
#include "littlewood/structures.hpp"
#include "littlewood/suite.hpp"

using namespace littlewood;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Settings {
  std::string config_path;
  std::uint64_t seed = 1;
  double rel_err = 0.05;
  double c_mps = kDefaultCMps;
  std::size_t memory_budget = 0;
  std::string output;
  std::string format = "json";
  bool no_fail = false;

  std::string kind;
  std::string params = "{}";
  std::string set_spec;
  std::string input;
  std::string theorem;
  std::string csv_path;
  std::int64_t kernel_m = 0;
  std::int64_t kernel_n = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  double delta = 0.0;
  std::int64_t q = 0;
  std::int64_t s = 0;
  std::string criteria;
  bool corrupt_kernel = false;
};

QuadratureOptions quadrature(const Settings& st) {
  QuadratureOptions o = QuadratureOptions::from_environment();
  if (st.memory_budget > 0) o.memory_budget_bytes = st.memory_budget;
  return o;
}

Json config_echo(const Settings& st, const std::string& command) {
  Json j{{"command", command}, {"seed", st.seed}, {"rel_err", st.rel_err}, {"c_mps", st.c_mps},
         {"memory_budget_bytes", quadrature(st).memory_budget_bytes}};
  if (!st.config_path.empty()) j["config"] = st.config_path;
  if (!st.input.empty()) j["input"] = st.input;
  if (!st.theorem.empty()) j["theorem"] = st.theorem;
  if (!st.kind.empty()) j["kind"] = st.kind;
  if (!st.set_spec.empty()) j["set"] = st.set_spec;
  return j;
}

void emit(const Settings& st, const std::string& text) {
  if (st.output.empty() || st.output == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(st.output, text);
  }
}

int finish(const Settings& st, const std::string& command, Json result, bool pass,
           std::chrono::steady_clock::time_point start) {
  Json report{{"config", config_echo(st, command)}, {"result", std::move(result)}, {"pass", pass}};
  report["timing"] = Json{
      {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  emit(st, report.dump(2) + "\n");
  return pass || st.no_fail ? 0 : kExitFail;
}

Json load_input(const Settings& st) {
  if (st.input.empty()) throw ParameterError("--input is required");
  return read_json_file(st.input);
}

// Accepts a set object, a poly object, or a gen report carrying "set".
Json unwrap(const Json& j) {
  if (j.contains("result") && j.at("result").is_object()) return unwrap(j.at("result"));
  return j;
}

// ---------------------------------------------------------------------------

int cmd_gen(const Settings& st) {
  const auto start = std::chrono::steady_clock::now();
  const Json p = Json::parse(st.params);
  Rng rng(st.seed);
  Json result{{"kind", st.kind}, {"params", p}};
  if (st.kind == "gap") {
    const GapResult g = gap_rank2(p.at("a").get<std::int64_t>(), p.at("b").get<std::int64_t>(),
                                  p.at("M").get<std::int64_t>(), p.at("N").get<std::int64_t>(),
                                  p.value("force", false));
    result["set"] = to_json(IntegerSet(g.elements));
    Json coll = Json::array();
    for (const auto& c : g.collisions) {
      coll.push_back(Json{{"m1", c.m1}, {"n1", c.n1}, {"m2", c.m2}, {"n2", c.n2}, {"value", c.value}});
    }
    result["collisions"] = std::move(coll);
  } else if (st.kind == "lattice-box" || st.kind == "lattice-random") {
    const auto sizes = p.at("sizes").get<std::vector<std::int64_t>>();
    const StrongLattice l = build_strong_lattice(sizes, st.kind == "lattice-box" ? Shape::box : Shape::random, rng);
    result["set"] = to_json(l.set);
    result["certificate"] = to_json(l.certificate);
  } else if (st.kind == "zstrong-box" || st.kind == "zstrong-random") {
    StrongIntegerParams params;
    params.sizes = p.at("sizes").get<std::vector<std::int64_t>>();
    if (p.contains("deltas")) {
      params.deltas = p.at("deltas").get<std::vector<double>>();
    } else {
      params.deltas.assign(params.sizes.empty() ? 0 : params.sizes.size() - 1, p.value("delta", 1.0));
    }
    params.stretch = p.value("stretch", 1.0);
    params.shape = st.kind == "zstrong-box" ? Shape::box : Shape::random;
    const StrongInteger z = build_strong_integer(params, rng);
    result["set"] = to_json(z.set);
    result["certificate"] = to_json(z.certificate);
  } else {
    throw ParameterError("unknown --kind " + st.kind);
  }
  return finish(st, "gen", std::move(result), true, start);
}

int cmd_norm(const Settings& st) {
  const auto start = std::chrono::steady_clock::now();
  const TrigPoly f = st.set_spec.empty() ? poly_or_indicator(unwrap(load_input(st)))
                                         : indicator_poly(set_from_spec(st.set_spec));
  const NormInterval n = certified_l1(f, st.rel_err, quadrature(st));
  Json result = to_json(n);
  result["terms"] = f.size();
  return finish(st, "norm", std::move(result), true, start);
}

int cmd_kernel(const Settings& st) {
  const auto start = std::chrono::steady_clock::now();
  const FlatTopKernel k = flat_top_build(st.kernel_m, st.kernel_n);
  if (st.format == "csv") {
    emit(st, kernel_to_csv(k));
    return 0;
  }
  Json values = Json::array();
  for (const auto& [key, v] : k.values()) values.push_back(Json{{"k", key}, {"K", v.to_string()}, {"K_float", v.to_double()}});
  const std::string problem = check_flat_top_properties(k);
  const double l1 = flat_top_discrete_l1(k, k.min_period());
  const double bound = flat_top_l1_bound(k.m(), k.n());
  Json result{{"M", k.m()},
              {"N", k.n()},
              {"values", std::move(values)},
              {"properties_hold", problem.empty()},
              {"problem", problem},
              {"discrete_l1", l1},
              {"discrete_l1_period", k.min_period()},
              {"l1_bound", bound}};
  return finish(st, "kernel", std::move(result), problem.empty() && l1 <= bound, start);
}

Json thin_report(const Settings& st, const TrigPoly& f, bool& pass) {
  const ThinningParams params{st.d1, st.d2, st.delta, ResidueFilter(st.q, st.s)};
  const auto hyps = thinning_hypotheses(f, params);
  if (!std::all_of(hyps.begin(), hyps.end(), [](const HypothesisCheck& h) { return h.pass || h.name == "q >= 4"; })) {
    Json hj = Json::array();
    for (const auto& h : hyps) hj.push_back(to_json(h));
    pass = false;
    return Json{{"hypotheses", std::move(hj)}};
  }
  const ThinningResult t = thinning_transform(f, params);
  const NormInterval fn = certified_l1(f, st.rel_err, quadrature(st));
  const NormInterval tn = certified_l1(t.thinned, st.rel_err, quadrature(st));
  const bool bound_ok = tn.lo <= t.bound_factor * fn.hi;
  pass = t.identity_holds && (bound_ok || !t.bound_applies);
  Json j = to_json(t);
  j["norm"] = to_json(fn);
  j["thinned_norm"] = to_json(tn);
  j["bound_holds"] = bound_ok;
  return j;
}

int cmd_thin(const Settings& st) {
  const auto start = std::chrono::steady_clock::now();
  const TrigPoly f = poly_or_indicator(unwrap(load_input(st)));
  bool pass = false;
  Json result = thin_report(st, f, pass);
  return finish(st, "thin", std::move(result), pass, start);
}

// ---------------------------------------------------------------------------

SuiteConfig suite_config(const Settings& st) {
  SuiteConfig c;
  c.rel_err = st.rel_err;
  c.c_mps = st.c_mps;
  c.seed = st.seed;
  c.quadrature = quadrature(st);
  c.corrupt_kernel = st.corrupt_kernel;
  return c;
}

Json run_criteria(const Settings& st, std::initializer_list<int> ids, bool& pass) {
  const SuiteConfig config = suite_config(st);
  SuiteState state;
  Json out = Json::array();
  pass = true;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, config, state);
    pass = pass && r.pass;
    out.push_back(to_json(r));
  }
  return out;
}

int verify_scan(const Settings& st, ScanMode mode, std::chrono::steady_clock::time_point start) {
  ScanFamily family;
  family.seed = st.seed;
  switch (mode) {
    case ScanMode::mps:
      for (std::int64_t n = 4; n <= 512; ++n) family.intervals.push_back(n);
      family.gaps = {{1, 10, 3, 2}, {1, 8, 4, 4}, {1, 17, 16, 16}, {2, 50, 10, 10}};
      break;
    case ScanMode::multidim:
      family.boxes = {{4, 4}, {8, 8}, {16, 16}, {32, 32}};
      break;
    case ScanMode::multidimz:
      family.boxes = {{4, 4}, {8, 8}, {16, 16}};
      break;
  }
  const ScanReport r = constant_scan(family, mode, st.rel_err, quadrature(st));
  if (!st.csv_path.empty()) write_text_file(st.csv_path, scan_to_csv(r));
  if (st.format == "csv") {
    emit(st, scan_to_csv(r));
    return 0;
  }
  Json result = to_json(r);
  result["constant_used"] = st.c_mps;
  const double needed = mode == ScanMode::mps ? st.c_mps : std::pow(st.c_mps, 2.0);
  return finish(st, "verify", std::move(result), r.min_ratio >= needed, start);
}

int cmd_verify(const Settings& st) {
  const auto start = std::chrono::steady_clock::now();
  const std::string& th = st.theorem;
  const QuadratureOptions opts = quadrature(st);
  bool pass = false;

  if (st.input.empty()) {
    if (th == "mps") return verify_scan(st, ScanMode::mps, start);
    if (th == "multidim") return verify_scan(st, ScanMode::multidim, start);
    if (th == "multidimz") return verify_scan(st, ScanMode::multidimz, start);
    Json result;
    if (th == "kernel") {
      result = run_criteria(st, {1, 2, 3}, pass);
    } else if (th == "numerical") {
      result = run_criteria(st, {4}, pass);
    } else if (th == "bernstein") {
      result = run_criteria(st, {5}, pass);
    } else if (th == "good-modulus") {
      result = run_criteria(st, {6}, pass);
    } else if (th == "thinning") {
      result = run_criteria(st, {7}, pass);
    } else {
      throw ParameterError("--theorem " + th + " needs --input");
    }
    return finish(st, "verify", Json{{"theorem", th}, {"criteria", std::move(result)}}, pass, start);
  }

  const Json in = unwrap(load_input(st));
  Json result;
  if (th == "mps") {
    const InequalityVerdict v = verify_mps(poly_or_indicator(in), st.c_mps, st.rel_err, opts);
    pass = v.pass;
    result = to_json(v);
  } else if (th == "basic-multidim") {
    const AnySet set = set_from_json(in.contains("set") ? in.at("set") : in);
    if (!std::holds_alternative<LatticeSet>(set)) throw ParameterError("basic-multidim needs a lattice set of rank >= 2");
    const InequalityVerdict v = verify_basic_multidim(std::get<LatticeSet>(set), st.c_mps, st.rel_err, opts);
    pass = v.pass;
    result = to_json(v);
  } else if (th == "multidim" || th == "multidimz") {
    if (!in.contains("set") || !in.contains("certificate")) {
      throw ParameterError(th + " input needs \"set\" and \"certificate\"");
    }
    const AnySet set = set_from_json(in.at("set"));
    const DimCertificate cert = certificate_from_json(in.at("certificate"));
    InequalityVerdict v;
    if (th == "multidim") {
      const LatticeSet lattice = std::holds_alternative<LatticeSet>(set) ? std::get<LatticeSet>(set)
                                                                          : LatticeSet(std::get<IntegerSet>(set));
      v = verify_multidim(lattice, cert, st.c_mps, st.rel_err, opts);
    } else {
      if (!std::holds_alternative<IntegerSet>(set)) throw ParameterError("multidimz needs an integer set");
      v = verify_multidimz(std::get<IntegerSet>(set), cert, st.c_mps, st.rel_err, opts);
    }
    pass = v.pass;
    result = to_json(v);
  } else if (th == "main-prop") {
    const TrigPoly f = poly_or_indicator(in);
    MainPropInput mp;
    mp.blocks = decompose_blocks(f, in.at("d1").get<std::int64_t>(), in.at("d2").get<std::int64_t>());
    mp.delta = in.at("delta").get<double>();
    mp.q = in.at("q").get<std::int64_t>();
    mp.s = in.at("s").get<std::int64_t>();
    const MainPropReport r = verify_main_prop(mp, st.c_mps, st.rel_err, opts);
    pass = r.verdict.pass;
    result = to_json(r);
  } else if (th == "bernstein") {
    const BernsteinReport b = bernstein_check(poly_or_indicator(in), st.rel_err, opts);
    pass = b.pass;
    result = to_json(b);
  } else if (th == "numerical") {
    const TrigPoly f = poly_or_indicator(in);
    if (f.rank() != 1 || f.is_zero()) throw ParameterError("numerical check needs a nonzero rank-1 polynomial");
    const std::int64_t d = recentre(f).poly.degree()[0];
    const double spread = 4.0 * std::numbers::pi * static_cast<double>(std::max<std::int64_t>(d, 1));
    const std::int64_t coarse_n = in.value("samples", 4 * static_cast<std::int64_t>(std::ceil(spread)));
    const std::int64_t ref_n = std::max<std::int64_t>(1'000'000, 64 * coarse_n);
    const std::vector<std::int64_t> coarse_grid{coarse_n};
    const std::vector<std::int64_t> ref_grid{ref_n};
    const double coarse = riemann_l1(f, coarse_grid, opts);
    const double reference = riemann_l1(f, ref_grid, opts);
    const double allowed = spread / static_cast<double>(coarse_n) * reference;
    pass = std::abs(coarse - reference) <= allowed;
    result = Json{{"degree", d},      {"samples", coarse_n},     {"coarse", coarse},
                  {"reference", reference}, {"reference_samples", ref_n}, {"allowed", allowed},
                  {"difference", std::abs(coarse - reference)}};
  } else if (th == "kernel") {
    const FlatTopKernel k = flat_top_build(in.at("M").get<std::int64_t>(), in.at("N").get<std::int64_t>());
    const std::string problem = check_flat_top_properties(k);
    const double l1 = flat_top_discrete_l1(k, in.value("R", k.min_period()));
    pass = problem.empty() && l1 <= flat_top_l1_bound(k.m(), k.n());
    result = Json{{"M", k.m()}, {"N", k.n()}, {"problem", problem}, {"discrete_l1", l1},
                  {"l1_bound", flat_top_l1_bound(k.m(), k.n())}};
  } else if (th == "thinning") {
    Settings local = st;
    local.d1 = in.at("d1").get<std::int64_t>();
    local.d2 = in.at("d2").get<std::int64_t>();
    local.delta = in.at("delta").get<double>();
    local.q = in.at("q").get<std::int64_t>();
    local.s = in.at("s").get<std::int64_t>();
    result = thin_report(local, poly_or_indicator(in), pass);
  } else if (th == "good-modulus") {
    const AnySet set = set_from_json(in.contains("set") ? in.at("set") : in);
    if (!std::holds_alternative<IntegerSet>(set)) throw ParameterError("good-modulus needs an integer set");
    const IntegerSet& I = std::get<IntegerSet>(set);
    const GoodModulusResult g = good_modulus(I);
    const auto size = static_cast<double>(g.filtered.size());
    pass = std::cbrt(static_cast<double>(I.size())) / 8.0 <= size && size <= std::sqrt(static_cast<double>(g.q));
    result = to_json(g);
  } else {
    throw ParameterError("unknown --theorem " + th);
  }
  return finish(st, "verify", std::move(result), pass, start);
}

int cmd_suite(const Settings& st) {
  SuiteConfig config = suite_config(st);
  if (!st.criteria.empty()) {
    std::stringstream ss(st.criteria);
    std::string item;
    while (std::getline(ss, item, ',')) config.only.push_back(std::stoi(item));
  }
  const SuiteReport report = run_suite(config);
  for (const auto& c : report.criteria) {
    std::fprintf(stderr, "[%2d] %s %s: %s (%.1f s)\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str(),
                 c.summary.c_str(), c.seconds);
  }
  emit(st, to_json(report, config).dump(2) + "\n");
  return report.all_pass || st.no_fail ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// Config files: keys are long option names with '_' for '-'. They are spliced
// in ahead of the command-line arguments so that explicit flags win.

std::vector<std::string> config_arguments(const Json& config) {
  std::vector<std::string> out;
  for (const auto& [key, value] : config.items()) {
    if (key == "command") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (value.is_boolean()) {
      if (value.get<bool>()) out.push_back(flag);
    } else if (value.is_string()) {
      out.push_back(flag);
      out.push_back(value.get<std::string>());
    } else if (value.is_array() && key == "criteria") {
      std::string list;
      for (const auto& v : value) list += (list.empty() ? "" : ",") + v.dump();
      out.push_back(flag);
      out.push_back(list);
    } else if (value.is_object() || value.is_array()) {
      out.push_back(flag);
      out.push_back(value.dump());
    } else {
      out.push_back(flag);
      out.push_back(value.dump());
    }
  }
  return out;
}

std::vector<std::string> merge_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;
  const Json config = read_json_file(path);
  if (!config.is_object()) throw ParameterError("config file must hold a JSON object");
  std::vector<std::string> extra = config_arguments(config);
  std::size_t sub = 1;
  while (sub < args.size() && args[sub].starts_with("-")) ++sub;
  if (sub >= args.size() && config.contains("command")) {
    args.push_back(config.at("command").get<std::string>());
    sub = args.size() - 1;
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(std::min(sub + 1, args.size())), extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified L1 norms of exponential sums and checks of the accompanying bounds"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  Settings st;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", st.config_path, "JSON config; explicit flags override it");
    sub->add_option("--seed", st.seed, "64-bit seed");
    sub->add_option("--rel-err", st.rel_err, "Target relative error of certified norms")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--c-mps", st.c_mps, "Constant of the harmonic-weighted bound");
    sub->add_option("--memory-budget", st.memory_budget, "Sample grid budget in bytes");
    sub->add_option("--output,-o", st.output, "Output path (default stdout)");
    sub->add_option("--format", st.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--no-fail", st.no_fail, "Exit 0 even when a verdict fails");
  };

  auto* gen = app.add_subcommand("gen", "Generate a structured set and its certificate");
  common(gen);
  gen->add_option("--kind", st.kind, "Set family")
      ->required()
      ->check(CLI::IsMember({"gap", "lattice-box", "lattice-random", "zstrong-box", "zstrong-random"}));
  gen->add_option("--params", st.params, "Family parameters as JSON");

  auto* norm = app.add_subcommand("norm", "Certified L1 norm of a set or polynomial");
  common(norm);
  norm->add_option("--set", st.set_spec, "interval:N, interval:a,b or dirichlet:d");
  norm->add_option("--input", st.input, "Set or poly JSON file");

  auto* kernel = app.add_subcommand("kernel", "Flat-top kernel values");
  common(kernel);
  kernel->add_option("--M", st.kernel_m)->required();
  kernel->add_option("--N", st.kernel_n)->required();

  auto* thin = app.add_subcommand("thin", "Thin a block-structured set by a residue class");
  common(thin);
  thin->add_option("--input", st.input, "Set or poly JSON file")->required();
  thin->add_option("--d1", st.d1)->required();
  thin->add_option("--d2", st.d2)->required();
  thin->add_option("--delta", st.delta)->required();
  thin->add_option("--q", st.q)->required();
  thin->add_option("--s", st.s)->required();

  auto* verify = app.add_subcommand("verify", "Check one lemma or theorem");
  common(verify);
  verify->add_option("--theorem", st.theorem)
      ->required()
      ->check(CLI::IsMember({"mps", "basic-multidim", "multidim", "main-prop", "multidimz", "bernstein", "numerical",
                             "kernel", "thinning", "good-modulus"}));
  verify->add_option("--input", st.input, "Input JSON; without it the seeded property run is used");
  verify->add_option("--csv", st.csv_path, "Also write scan rows as CSV");

  auto* suite = app.add_subcommand("suite", "Run every acceptance criterion");
  common(suite);
  suite->add_option("--criteria", st.criteria, "Comma-separated criterion numbers");
  suite->add_flag("--corrupt-kernel", st.corrupt_kernel, "Negative control: perturb flat-top kernel values");

  try {
    std::vector<std::string> args = merge_config(argc, argv);
    std::reverse(args.begin(), args.end());
    args.pop_back();
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(st);
    if (norm->parsed()) {
      if (st.set_spec.empty() == st.input.empty()) throw ParameterError("give exactly one of --set and --input");
      return cmd_norm(st);
    }
    if (kernel->parsed()) return cmd_kernel(st);
    if (thin->parsed()) return cmd_thin(st);
    if (verify->parsed()) return cmd_verify(st);
    if (suite->parsed()) return cmd_suite(st);
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return kExitResource;
  } catch (const HypothesisError& e) {
    std::fprintf(stderr, "hypothesis failed: %s\n", e.what());
    return kExitFail;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "bad JSON: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
