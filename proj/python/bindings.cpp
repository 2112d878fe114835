// Python module _littlewood. Structured values cross the boundary as JSON
// text in the same shapes the command-line tool reads and writes; the
// package wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "littlewood/io.hpp"
#include "littlewood/suite.hpp"

namespace py = pybind11;
using namespace littlewood;

namespace {

QuadratureOptions options(std::optional<std::size_t> budget) {
  QuadratureOptions o = QuadratureOptions::from_environment();
  if (budget) o.memory_budget_bytes = *budget;
  return o;
}

IntegerSet integer_set(const std::string& text) {
  const AnySet s = set_from_json(Json::parse(text));
  if (!std::holds_alternative<IntegerSet>(s)) throw ParameterError("expected a rank-1 set");
  return std::get<IntegerSet>(s);
}

LatticeSet lattice_set(const std::string& text) {
  const AnySet s = set_from_json(Json::parse(text));
  if (const auto* z = std::get_if<IntegerSet>(&s)) return LatticeSet(*z);
  return std::get<LatticeSet>(s);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_littlewood, m) {
  m.doc() = "Certified L1 norms of exponential sums";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<AliasingError>(m, "AliasingError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());

  m.def(
      "certified_l1",
      [](const std::string& poly, double rel_err, std::optional<std::size_t> budget) {
        return dump(to_json(certified_l1(poly_or_indicator(Json::parse(poly)), rel_err, options(budget))));
      },
      py::arg("poly"), py::arg("rel_err") = 0.05, py::arg("memory_budget") = py::none());

  m.def(
      "riemann_l1",
      [](const std::string& poly, const std::vector<std::int64_t>& samples, std::optional<std::size_t> budget) {
        return riemann_l1(poly_or_indicator(Json::parse(poly)), samples, options(budget));
      },
      py::arg("poly"), py::arg("samples"), py::arg("memory_budget") = py::none());

  m.def("set_from_spec", [](const std::string& spec) { return dump(to_json(set_from_spec(spec))); });

  m.def("gap_rank2", [](std::int64_t a, std::int64_t b, std::int64_t mm, std::int64_t n) {
    return gap_rank2(a, b, mm, n).elements;
  });

  m.def(
      "strong_integer",
      [](const std::vector<std::int64_t>& sizes, const std::vector<double>& deltas, bool random,
         std::uint64_t seed) {
        Rng rng(seed);
        StrongIntegerParams p;
        p.sizes = sizes;
        p.deltas = deltas;
        p.shape = random ? Shape::random : Shape::box;
        const StrongInteger z = build_strong_integer(p, rng);
        Json j;
        j["set"] = to_json(z.set);
        j["certificate"] = to_json(z.certificate);
        return dump(j);
      },
      py::arg("sizes"), py::arg("deltas"), py::arg("random") = false, py::arg("seed") = 1);

  m.def(
      "strong_lattice",
      [](const std::vector<std::int64_t>& sizes, bool random, std::uint64_t seed) {
        Rng rng(seed);
        const StrongLattice s = build_strong_lattice(sizes, random ? Shape::random : Shape::box, rng);
        Json j;
        j["set"] = to_json(s.set);
        j["certificate"] = to_json(s.certificate);
        return dump(j);
      },
      py::arg("sizes"), py::arg("random") = false, py::arg("seed") = 1);

  m.def("validate_certificate", [](const std::string& set, const std::string& cert) {
    const AnySet s = set_from_json(Json::parse(set));
    const DimCertificate c = certificate_from_json(Json::parse(cert));
    return dump(std::visit([&](const auto& x) { return to_json(validate_certificate(x, c)); }, s));
  });

  m.def("flat_top_kernel", [](std::int64_t mm, std::int64_t n) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    const FlatTopKernel kernel = flat_top_build(mm, n);
    for (const auto& [k, v] : kernel.values()) out.emplace_back(k, v.num, v.den);
    return out;
  });

  m.def("good_modulus", [](const std::string& set) { return dump(to_json(good_modulus(integer_set(set)))); });

  m.def("thinning", [](const std::string& poly, std::int64_t d1, std::int64_t d2, double delta, std::int64_t q,
                       std::int64_t s) {
    return dump(to_json(thinning_transform(poly_or_indicator(Json::parse(poly)), {d1, d2, delta, ResidueFilter(q, s)})));
  });

  m.def(
      "verify_mps",
      [](const std::string& poly, double c, double rel_err) {
        return dump(to_json(verify_mps(poly_or_indicator(Json::parse(poly)), c, rel_err, options({}))));
      },
      py::arg("poly"), py::arg("c_mps") = kDefaultCMps, py::arg("rel_err") = 0.05);

  m.def(
      "verify_basic_multidim",
      [](const std::string& set, double c, double rel_err) {
        return dump(to_json(verify_basic_multidim(lattice_set(set), c, rel_err, options({}))));
      },
      py::arg("set"), py::arg("c_mps") = kDefaultCMps, py::arg("rel_err") = 0.05);

  m.def(
      "verify_multidim",
      [](const std::string& set, const std::string& cert, double c, double rel_err) {
        return dump(to_json(verify_multidim(lattice_set(set), certificate_from_json(Json::parse(cert)), c, rel_err,
                                            options({}))));
      },
      py::arg("set"), py::arg("certificate"), py::arg("c_mps") = kDefaultCMps, py::arg("rel_err") = 0.05);

  m.def(
      "verify_multidimz",
      [](const std::string& set, const std::string& cert, double c, double rel_err) {
        return dump(to_json(verify_multidimz(integer_set(set), certificate_from_json(Json::parse(cert)), c, rel_err,
                                             options({}))));
      },
      py::arg("set"), py::arg("certificate"), py::arg("c_mps") = kDefaultCMps, py::arg("rel_err") = 0.05);

  m.def(
      "run_suite",
      [](const std::vector<int>& only, double rel_err, std::uint64_t seed) {
        SuiteConfig config;
        config.only = only;
        config.rel_err = rel_err;
        config.seed = seed;
        SuiteReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(config);
        }
        return dump(to_json(report, config));
      },
      py::arg("only") = std::vector<int>{}, py::arg("rel_err") = 0.05, py::arg("seed") = 1);
}
