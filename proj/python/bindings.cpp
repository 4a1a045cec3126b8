#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galtrunc/cache.hpp"
#include "galtrunc/factor.hpp"
#include "galtrunc/galois.hpp"
#include "galtrunc/pade.hpp"
#include "galtrunc/padic.hpp"
#include "galtrunc/repro.hpp"
#include "galtrunc/schur.hpp"
#include "galtrunc/series.hpp"

namespace py = pybind11;
using namespace galtrunc;
using nlohmann::json;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SeriesId series_arg(const std::string& name) {
  auto id = parse_series(name);
  if (!id) throw py::value_error("unknown series '" + name + "'");
  return *id;
}

IntPoly int_poly(const std::string& text) {
  RatPoly f = parse_any_poly(text);
  if (auto p = to_int_exact(f)) return *p;
  return primitive_integer(f).primitive;
}

json factor_json(const IntPoly& f) {
  auto fac = factor_over_integers(f);
  json factors = json::array();
  for (const auto& e : fac.factors) {
    factors.push_back(json{{"factor", to_string(e.factor)}, {"coefficients", coefficient_strings(e.factor)}, {"multiplicity", e.multiplicity}});
  }
  return json{{"unit", to_string(fac.unit)}, {"factors", factors}};
}

}  // namespace

PYBIND11_MODULE(galtrunc, m) {
  m.doc() = "Galois groups of truncated series and their Pade approximants";
  py::register_exception<Error>(m, "GaltruncError", PyExc_ValueError);

  m.def("version", [] { return std::string(library_version()); });
  m.def("series_names", [] {
    std::vector<std::string> out;
    for (auto id : all_series()) out.emplace_back(cli_name(id));
    return out;
  });
  m.def("table_ids", [] {
    std::vector<std::string> out;
    for (auto id : all_tables()) out.emplace_back(cli_name(id));
    return out;
  });

  m.def(
      "taylor",
      [](const std::string& series, unsigned order) { return coefficient_strings(taylor(series_arg(series), order)); },
      py::arg("series"), py::arg("order"), "Coefficients of the truncation, constant term first, as strings.");

  m.def(
      "pade",
      [](const std::string& series, unsigned order, bool factor) {
        PadePair p = pade_diagonal(series_arg(series), order);
        json j{{"order", order},
               {"overall_sign", p.overall_sign},
               {"scale", to_string(p.scale)},
               {"numerator", to_string(p.numerator)},
               {"denominator", to_string(p.denominator)},
               {"numerator_coefficients", coefficient_strings(p.numerator)},
               {"denominator_coefficients", coefficient_strings(p.denominator)}};
        if (factor) {
          j["numerator_factors"] = factor_json(p.numerator);
          j["denominator_factors"] = factor_json(p.denominator);
        }
        return to_py(j);
      },
      py::arg("series"), py::arg("order"), py::arg("factor") = false);

  m.def(
      "factor", [](const std::string& poly) { return to_py(factor_json(int_poly(poly))); }, py::arg("polynomial"));

  m.def(
      "newton",
      [](const std::string& poly, std::uint64_t prime) {
        RatPoly f = parse_any_poly(poly);
        auto np = newton_polygon(f, prime);
        json vertices = json::array(), shape = json::array();
        for (const auto& v : np.vertices) vertices.push_back({v.index, v.valuation});
        for (const auto& s : qp_factor_shape(f, prime)) shape.push_back(json{{"degree", s.degree}, {"slope", to_string(s.slope)}});
        return to_py(json{{"vertices", vertices}, {"factor_shape", shape}});
      },
      py::arg("polynomial"), py::arg("prime"));

  m.def(
      "galois",
      [](const std::string& poly, std::uint64_t prime_bound) {
        GaloisConfig cfg;
        cfg.prime_bound = prime_bound;
        GaloisIdentification id;
        {
          py::gil_scoped_release release;
          id = classify(int_poly(poly), cfg);
        }
        json j = to_json(id);
        j["verified"] = verify_identification(id).empty();
        return to_py(j);
      },
      py::arg("polynomial"), py::arg("prime_bound") = 10000);

  m.def(
      "schur",
      [](unsigned n, bool all_checks) { return to_py(to_json(schur_report(n, all_checks))); }, py::arg("n"),
      py::arg("all_checks") = false);

  m.def(
      "reproduce",
      [](const std::string& table, std::uint64_t prime_bound, bool verify, bool use_cache, unsigned jobs) {
        auto id = parse_table_id(table);
        if (!id) throw py::value_error("unknown table '" + table + "'");
        ResultCache cache(ResultCache::default_dir(), use_cache);
        ReproOptions opt;
        opt.galois.prime_bound = prime_bound;
        opt.cache = &cache;
        opt.verify = verify;
        opt.jobs = jobs;
        TableReport report;
        {
          py::gil_scoped_release release;
          report = reproduce(*id, opt);
        }
        return to_py(to_json(report));
      },
      py::arg("table"), py::arg("prime_bound") = 10000, py::arg("verify") = false, py::arg("use_cache") = false,
      py::arg("jobs") = 0);
}
