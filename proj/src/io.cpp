#include "littlewood/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace littlewood {

namespace {

Json reals(std::span<const double> xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(real_to_json(x));
  return a;
}

std::vector<double> reals_from(const Json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(real_from_json(x));
  return out;
}

std::string csv_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw ParameterError("not a number: " + s);
  }
  return j.get<double>();
}

// ---------------------------------------------------------------------------
// Sets and polynomials

Json to_json(const IntegerSet& set) {
  return Json{{"rank", 1}, {"points", std::vector<Frequency>(set.elements().begin(), set.elements().end())}};
}

Json to_json(const LatticeSet& set) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto p = set.point(i);
    pts.push_back(std::vector<Frequency>(p.begin(), p.end()));
  }
  return Json{{"rank", set.rank()}, {"points", std::move(pts)}};
}

Json to_json(const TrigPoly& f) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto n = f.frequency(i);
    const Complex c = f.coefficient(i);
    terms.push_back(Json::array({std::vector<Frequency>(n.begin(), n.end()), Json::array({c.real(), c.imag()})}));
  }
  return Json{{"rank", f.rank()}, {"terms", std::move(terms)}};
}

AnySet set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points")) throw ParameterError("set JSON needs a \"points\" array");
  const auto& pts = j.at("points");
  std::size_t rank = j.value("rank", std::size_t{0});
  if (rank == 0) rank = (!pts.empty() && pts.front().is_array()) ? pts.front().size() : 1;
  if (rank == 1 && (pts.empty() || !pts.front().is_array())) {
    return IntegerSet(pts.get<std::vector<Frequency>>());
  }
  auto points = pts.get<std::vector<std::vector<Frequency>>>();
  if (rank == 1) {
    std::vector<Frequency> flat;
    for (const auto& p : points) {
      if (p.size() != 1) throw ParameterError("rank-1 point with " + std::to_string(p.size()) + " coordinates");
      flat.push_back(p[0]);
    }
    return IntegerSet(std::move(flat));
  }
  return LatticeSet(rank, points);
}

TrigPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw ParameterError("poly JSON needs a \"terms\" array");
  const auto rank = j.at("rank").get<std::size_t>();
  std::vector<TrigPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw ParameterError("poly term must be [[freqs], [re, im]]");
    std::vector<Frequency> n = t[0].is_array() ? t[0].get<std::vector<Frequency>>()
                                               : std::vector<Frequency>{t[0].get<Frequency>()};
    Complex c = t[1].is_array() ? Complex(real_from_json(t[1].at(0)), real_from_json(t[1].at(1)))
                                : Complex(real_from_json(t[1]), 0.0);
    terms.push_back({std::move(n), c});
  }
  return TrigPoly(rank, std::move(terms));
}

TrigPoly indicator_poly(const AnySet& set) {
  return std::visit([](const auto& s) { return indicator_poly(s); }, set);
}

TrigPoly poly_or_indicator(const Json& j) {
  if (j.contains("terms")) return poly_from_json(j);
  if (j.contains("points")) return indicator_poly(set_from_json(j));
  if (j.contains("poly")) return poly_from_json(j.at("poly"));
  if (j.contains("set")) return indicator_poly(set_from_json(j.at("set")));
  throw ParameterError("expected a poly or set JSON object");
}

IntegerSet set_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParameterError("set spec must look like kind:args, got " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  try {
    if (kind == "interval") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) return IntegerSet::interval(1, std::stoll(args));
      return IntegerSet::interval(std::stoll(args.substr(0, comma)), std::stoll(args.substr(comma + 1)));
    }
    if (kind == "dirichlet") {
      const auto d = std::stoll(args);
      return IntegerSet::interval(-d, d);
    }
  } catch (const std::logic_error&) {
    throw ParameterError("bad set spec arguments: " + spec);
  }
  throw ParameterError("unknown set spec kind: " + kind);
}

// ---------------------------------------------------------------------------
// Certificates

Json to_json(const DimCertificate& cert) {
  Json j{{"flavor", cert.flavor == DimCertificate::Flavor::integer ? "integer" : "lattice"},
         {"sizes", cert.sizes},
         {"deltas", reals(cert.deltas)},
         {"d1", cert.d1},
         {"d2", cert.d2}};
  Json blocks = Json::array();
  for (const auto& b : cert.blocks) {
    Json bj{{"key", b.key}};
    if (cert.flavor == DimCertificate::Flavor::integer) bj["subset"] = b.subset;
    bj["child"] = to_json(b.child);
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

DimCertificate certificate_from_json(const Json& j) {
  DimCertificate c;
  const auto flavor = j.value("flavor", std::string("integer"));
  if (flavor == "integer") {
    c.flavor = DimCertificate::Flavor::integer;
  } else if (flavor == "lattice") {
    c.flavor = DimCertificate::Flavor::lattice;
  } else {
    throw ParameterError("unknown certificate flavor: " + flavor);
  }
  c.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
  if (j.contains("deltas")) c.deltas = reals_from(j.at("deltas"));
  c.d1 = j.value("d1", std::int64_t{0});
  c.d2 = j.value("d2", std::int64_t{0});
  if (j.contains("blocks")) {
    for (const auto& bj : j.at("blocks")) {
      DimBlock b;
      b.key = bj.at("key").get<std::int64_t>();
      if (bj.contains("subset")) b.subset = bj.at("subset").get<std::vector<Frequency>>();
      b.child = certificate_from_json(bj.at("child"));
      c.blocks.push_back(std::move(b));
    }
  }
  return c;
}

Json to_json(const ValidationReport& r) {
  return Json{{"pass", r.pass}, {"condition", r.condition}, {"detail", r.detail}, {"path", r.path},
              {"checks", r.checks}};
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const NormInterval& n) {
  return Json{{"lo", real_to_json(n.lo)},
              {"hi", real_to_json(n.hi)},
              {"riemann", real_to_json(n.riemann)},
              {"grid", n.grid},
              {"degree", n.degree},
              {"axis_rel_err", reals(n.axis_rel_err)}};
}

NormInterval interval_from_json(const Json& j) {
  NormInterval n;
  n.lo = real_from_json(j.at("lo"));
  n.hi = real_from_json(j.at("hi"));
  n.riemann = real_from_json(j.at("riemann"));
  n.grid = j.at("grid").get<std::vector<std::int64_t>>();
  n.degree = j.at("degree").get<std::vector<std::int64_t>>();
  n.axis_rel_err = reals_from(j.at("axis_rel_err"));
  return n;
}

Json to_json(const HypothesisCheck& h) {
  return Json{{"name", h.name}, {"pass", h.pass}, {"detail", h.detail}, {"informational", h.informational}};
}

HypothesisCheck hypothesis_from_json(const Json& j) {
  return {j.at("name").get<std::string>(), j.at("pass").get<bool>(), j.value("detail", std::string()),
          j.value("informational", false)};
}

Json to_json(const InequalityVerdict& v) {
  Json hyps = Json::array();
  for (const auto& h : v.hypotheses) hyps.push_back(to_json(h));
  return Json{{"theorem", v.theorem},
              {"lhs", to_json(v.lhs)},
              {"rhs", real_to_json(v.rhs)},
              {"constant_used", real_to_json(v.constant_used)},
              {"margin", real_to_json(v.margin)},
              {"pass", v.pass},
              {"certified", v.certified},
              {"hypotheses", std::move(hyps)}};
}

InequalityVerdict verdict_from_json(const Json& j) {
  InequalityVerdict v;
  v.theorem = j.at("theorem").get<std::string>();
  v.lhs = interval_from_json(j.at("lhs"));
  v.rhs = real_from_json(j.at("rhs"));
  v.constant_used = real_from_json(j.at("constant_used"));
  v.margin = real_from_json(j.at("margin"));
  v.pass = j.at("pass").get<bool>();
  v.certified = j.at("certified").get<bool>();
  for (const auto& h : j.at("hypotheses")) v.hypotheses.push_back(hypothesis_from_json(h));
  return v;
}

Json to_json(const ScanReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"label", row.label},
                        {"lhs", to_json(row.lhs)},
                        {"rhs_without_constant", real_to_json(row.rhs_without_constant)},
                        {"ratio", real_to_json(row.ratio)}});
  }
  return Json{{"mode", to_string(r.mode)},
              {"rows", std::move(rows)},
              {"min_ratio", real_to_json(r.min_ratio)},
              {"median_ratio", real_to_json(r.median_ratio)}};
}

ScanReport scan_from_json(const Json& j) {
  ScanReport r;
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "mps") {
    r.mode = ScanMode::mps;
  } else if (mode == "multidim") {
    r.mode = ScanMode::multidim;
  } else if (mode == "multidimz") {
    r.mode = ScanMode::multidimz;
  } else {
    throw ParameterError("unknown scan mode: " + mode);
  }
  for (const auto& rj : j.at("rows")) {
    r.rows.push_back({rj.at("label").get<std::string>(), interval_from_json(rj.at("lhs")),
                      real_from_json(rj.at("rhs_without_constant")), real_from_json(rj.at("ratio"))});
  }
  r.min_ratio = real_from_json(j.at("min_ratio"));
  r.median_ratio = real_from_json(j.at("median_ratio"));
  return r;
}

Json to_json(const BernsteinReport& r) {
  return Json{{"lhs", to_json(r.lhs)},
              {"norm", to_json(r.norm)},
              {"degree", r.degree},
              {"rhs_bound", real_to_json(r.rhs_bound)},
              {"pass", r.pass}};
}

Json to_json(const GoodModulusResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) trace.push_back(Json{{"q", s.q}, {"s", s.s}, {"class_size", s.class_size}});
  return Json{{"j0", r.j0},
              {"q", r.q},
              {"s", r.s},
              {"class_size", r.filtered.size()},
              {"filtered", to_json(r.filtered)},
              {"trace", std::move(trace)}};
}

Json to_json(const ThinningResult& r) {
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) hyps.push_back(to_json(h));
  return Json{{"thinned", to_json(r.thinned)},
              {"bound_factor", real_to_json(r.bound_factor)},
              {"kernel_m", r.kernel_m},
              {"kernel_n", r.kernel_n},
              {"period", r.period},
              {"kept", r.kept},
              {"identity_holds", r.identity_holds},
              {"bound_applies", r.bound_applies},
              {"hypotheses", std::move(hyps)}};
}

Json to_json(const MainPropReport& r) {
  Json sel = Json::array();
  for (const auto& b : r.selected) {
    sel.push_back(Json{{"j", b.j}, {"k", b.k}, {"b", b.b}, {"norm", to_json(b.norm)},
                       {"bracket", real_to_json(b.bracket)}});
  }
  return Json{{"verdict", to_json(r.verdict)},
              {"J", r.selected.size()},
              {"selected", std::move(sel)},
              {"thinning_factor", real_to_json(r.thinning_factor)},
              {"thinned", to_json(r.thinned)},
              {"t1", to_json(r.t1)},
              {"t1_mps_lower", real_to_json(r.t1_mps_lower)},
              {"t2_bound", real_to_json(r.t2_bound)},
              {"decomposition_consistent", r.decomposition_consistent},
              {"sampling_half_bound", r.sampling_half_bound}};
}

// ---------------------------------------------------------------------------
// CSV and files

std::string scan_to_csv(const ScanReport& r) {
  std::string out = "label,lo,hi,riemann,rhs_without_constant,ratio\n";
  for (const auto& row : r.rows) {
    out += csv_field(row.label) + ',' + csv_real(row.lhs.lo) + ',' + csv_real(row.lhs.hi) + ',' +
           csv_real(row.lhs.riemann) + ',' + csv_real(row.rhs_without_constant) + ',' + csv_real(row.ratio) + '\n';
  }
  return out;
}

std::string kernel_to_csv(const FlatTopKernel& kernel) {
  std::string out = "k,K_exact,K_float\n";
  const std::int64_t r = kernel.support_radius();
  for (std::int64_t k = -r; k <= r; ++k) {
    const Rational v = kernel.value(k);
    out += std::to_string(k) + ',' + v.to_string() + ',' + csv_real(v.to_double()) + '\n';
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out.flush()) throw Error("write failed: " + path);
}

}  // namespace littlewood
