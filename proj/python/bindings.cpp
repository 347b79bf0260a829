#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqlv/run.hpp"

namespace py = pybind11;
using namespace eqlv;

namespace {

GaloisContext make_context(std::uint32_t q, const std::string& family, int m, const std::string& conductor) {
  auto k = Field::prime(q);
  if (family == "trivial") return trivial_context(k);
  if (family == "constant") return build_constant_context(k, m);
  if (family == "cyclotomic") return build_cyclotomic_context(k, parse_poly(k, conductor));
  throw ConfigError("context must be trivial, constant or cyclotomic");
}

// run() with the report fields unpacked; config keys as in the CLI
py::dict run_config(const std::map<std::string, std::string>& kv) {
  const RunResult r = run(RunConfig::from_kv(kv));
  py::dict d;
  d["verdict"] = verdict_name(r.verdict);
  d["exit_code"] = exit_code(r.verdict);
  d["json"] = r.json;
  d["summary"] = r.summary;
  return d;
}

std::vector<std::string> strs(const std::vector<Laurent>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equivariant L-values and class formulas for t-modules over F_q[t]";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<GroupRingError>(m, "GroupRingError", PyExc_ValueError);
  py::register_exception<ContextError>(m, "ContextError", PyExc_ValueError);
  py::register_exception<TModuleError>(m, "TModuleError", PyExc_ValueError);

  m.attr("REPORT_SCHEMA") = kReportSchema;

  m.def("run", &run_config, py::arg("config"),
        "Run a pipeline from a {key: value} config; returns verdict, exit code, JSON report and summary.");
  m.def("parse_config_text", &parse_kv_text, py::arg("text"));
  m.def("render_config_text", &render_kv_text, py::arg("config"));

  m.def("primes", [](std::uint32_t q, int d) {
    std::vector<std::string> out;
    for (const Poly& p : primes_upto(Field::prime(q), d)) out.push_back(p.str());
    return out;
  }, py::arg("q"), py::arg("max_degree"), "Monic irreducibles of degree <= max_degree in (degree, lex) order.");

  m.def("zeta_monic_sum", [](std::uint32_t q, int n, int prec) {
    return zeta_monic_sum_oracle(Field::prime(q), n, prec).str();
  }, py::arg("q"), py::arg("n"), py::arg("prec"));

  m.def("euler_product", [](std::uint32_t q, int n, const std::string& context, int m_, const std::string& conductor,
                            int prec) {
    const GaloisContext ctx = make_context(q, context, m_, conductor);
    const auto ct = decompose(ctx.G, ctx.k);
    return strs(euler_product_equivariant(make_carlitz_power(ctx.k, n), ctx, ct, prec).value);
  }, py::arg("q"), py::arg("n") = 1, py::arg("context") = "trivial", py::arg("m") = 3,
        py::arg("conductor") = "t^2 + t + 1", py::arg("prec") = 8,
        "L(C^n, G) per character of G.");

  m.def("class_formula", [](std::uint32_t q, int n, const std::string& context, int m_, const std::string& conductor,
                            int prec) {
    const GaloisContext ctx = make_context(q, context, m_, conductor);
    const auto ct = decompose(ctx.G, ctx.k);
    const ClassFormula R = verify_class_formula(make_carlitz_power(ctx.k, n), ctx, ct, prec);
    py::dict d;
    d["verdict"] = verdict_name(R.verdict);
    d["lhs"] = strs(R.lhs);
    d["rhs"] = strs(R.rhs);
    d["certified"] = R.analytic.certified;
    d["class_module_dim"] = R.analytic.class_dim;
    return d;
  }, py::arg("q"), py::arg("n") = 1, py::arg("context") = "trivial", py::arg("m") = 3,
        py::arg("conductor") = "t^2 + t + 1", py::arg("prec") = 8);

  m.def("exp_coefficients", [](std::uint32_t q, int n, int order) {
    const ExpSeries es(make_carlitz_power(Field::prime(q), n), order);
    std::vector<std::vector<std::vector<std::string>>> out;
    for (int s = 0; s <= order; ++s) {
      std::vector<std::vector<std::string>> mat;
      for (const auto& row : es.coeff(s)) {
        std::vector<std::string> r;
        for (const auto& x : row) r.push_back(x.str());
        mat.push_back(r);
      }
      out.push_back(mat);
    }
    return out;
  }, py::arg("q"), py::arg("n"), py::arg("order"), "Coefficient matrices e_0..e_order of exp for C^n.");

  m.def("trace_check_qpower", [](std::uint32_t q, int prec) {
    const TraceCheck R = verify_trace_formula(qpower_demo(Field::prime(q)), prec);
    return verdict_name(R.verdict);
  }, py::arg("q"), py::arg("prec"));
}
