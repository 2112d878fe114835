#pragma once

// JSON and CSV forms of sets, polynomials, certificates and reports.
//
//   set       {"rank": 1, "points": [a, ...]}  or  {"rank": r, "points": [[..], ...]}
//   poly      {"rank": r, "terms": [[[n_1, ..., n_r], [re, im]], ...]}
//   interval  {"lo", "hi", "riemann", "grid", "degree", "axis_rel_err"}
//
// Non-finite doubles are written as the strings "inf", "-inf" and "nan".

#include <string>
#include <variant>

#include <json.hpp>

#include "littlewood/bounds.hpp"
#include "littlewood/core.hpp"
#include "littlewood/kernels.hpp"
#include "littlewood/modulus.hpp"
#include "littlewood/quadrature.hpp"
#include "littlewood/structures.hpp"

namespace littlewood {

using Json = nlohmann::ordered_json;

using AnySet = std::variant<IntegerSet, LatticeSet>;

Json real_to_json(double x);
double real_from_json(const Json& j);

Json to_json(const IntegerSet& set);
Json to_json(const LatticeSet& set);
Json to_json(const TrigPoly& f);
Json to_json(const DimCertificate& cert);
Json to_json(const NormInterval& n);
Json to_json(const HypothesisCheck& h);
Json to_json(const ValidationReport& r);
Json to_json(const InequalityVerdict& v);
Json to_json(const ScanReport& r);
Json to_json(const BernsteinReport& r);
Json to_json(const GoodModulusResult& r);
Json to_json(const ThinningResult& r);
Json to_json(const MainPropReport& r);

/// Rank-1 sets come back as IntegerSet, higher ranks as LatticeSet.
AnySet set_from_json(const Json& j);
TrigPoly poly_from_json(const Json& j);
DimCertificate certificate_from_json(const Json& j);
NormInterval interval_from_json(const Json& j);
HypothesisCheck hypothesis_from_json(const Json& j);
InequalityVerdict verdict_from_json(const Json& j);
ScanReport scan_from_json(const Json& j);

/// A polynomial from either a poly object or a set object (its indicator).
TrigPoly poly_or_indicator(const Json& j);
TrigPoly indicator_poly(const AnySet& set);

/// Short set descriptions: "interval:N" is {1..N}, "interval:a,b" is {a..b},
/// "dirichlet:d" is {-d..d}.
IntegerSet set_from_spec(const std::string& spec);

std::string scan_to_csv(const ScanReport& r);
/// Columns k, K_exact, K_float over -(N+2M) <= k <= N+2M.
std::string kernel_to_csv(const FlatTopKernel& kernel);

/// Throws Error on IO or parse failure.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace littlewood
