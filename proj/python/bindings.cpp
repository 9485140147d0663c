#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "../tools/commands.hpp"
#include "mlv/catalog.hpp"
#include "mlv/conj.hpp"
#include "mlv/error.hpp"
#include "mlv/hodge.hpp"
#include "mlv/period.hpp"
#include "mlv/special.hpp"
#include "mlv/symbols.hpp"
#include "mlv/zeta.hpp"

namespace py = pybind11;
using mlv::PeriodValue;

namespace {

std::vector<std::string> rationals(const mlv::UPoly& p) {
  std::vector<std::string> out;
  for (auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

py::dict verdict_dict(const mlv::Verdict& v) {
  py::dict d;
  d["check"] = v.check;
  d["label"] = v.label;
  d["status"] = mlv::verdict_name(v.status);
  py::dict details;
  for (auto& [k, x] : v.details) details[py::str(k)] = x;
  d["details"] = details;
  d["witness"] = v.witness;
  return d;
}

mlv::VarietySpec variety(const std::string& kind, unsigned ambient_dim, const std::vector<std::string>& equations) {
  mlv::VarietySpec v;
  if (kind == "projective") v.kind = mlv::VarietySpec::Kind::Projective;
  else if (kind == "affine") v.kind = mlv::VarietySpec::Kind::Affine;
  else throw mlv::Error(mlv::ErrorCode::InvalidInput, "kind must be 'affine' or 'projective'");
  v.ambient_dim = ambient_dim;
  v.equations = equations;
  return v;
}

}  // namespace

PYBIND11_MODULE(_mlv, m) {
  m.doc() = "Exact period-field arithmetic, zeta functions and conjecture checks";
  static py::exception<mlv::Error> error_type(m, "MlvError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mlv::Error& e) {
      error_type(e.what());
    }
  });

  py::class_<PeriodValue>(m, "PeriodValue")
      .def(py::init([](const std::string& text) { return PeriodValue::parse(text); }), py::arg("text") = "0")
      .def(py::init([](long n) { return PeriodValue(n); }))
      .def_static("symbol", [](const std::string& name) { return PeriodValue::symbol(name); })
      .def_static("i", &PeriodValue::imaginary_unit)
      .def("__add__", &PeriodValue::operator+)
      .def("__sub__", [](const PeriodValue& a, const PeriodValue& b) { return a - b; })
      .def("__mul__", &PeriodValue::operator*)
      .def("__truediv__", &PeriodValue::operator/)
      .def("__neg__", [](const PeriodValue& a) { return -a; })
      .def("__pow__", &PeriodValue::pow)
      .def("__eq__", [](const PeriodValue& a, const PeriodValue& b) { return a == b; })
      .def("__hash__", [](const PeriodValue& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &PeriodValue::to_string)
      .def("__repr__", [](const PeriodValue& a) { return "PeriodValue('" + a.to_string() + "')"; })
      .def("conj", &PeriodValue::conj)
      .def("inverse", &PeriodValue::inverse)
      .def("is_zero", &PeriodValue::is_zero)
      .def("is_real", &PeriodValue::is_real)
      .def("is_rational", &PeriodValue::is_rational)
      .def("approx", &PeriodValue::approx);

  m.def("declare_symbol", [](const std::string& name, bool negated) {
    mlv::declare_symbol(name, negated ? mlv::Conjugation::Negated : mlv::Conjugation::Fixed);
  }, py::arg("name"), py::arg("negated") = false);

  m.def("rational_ratio", [](const PeriodValue& a, const PeriodValue& b) -> std::optional<std::string> {
    auto r = mlv::pf_rational_ratio(a, b);
    if (!r) return std::nullopt;
    return r->get_str();
  }, "a / b as a rational string when it is rational, else None");

  m.def("point_count", [](const std::string& kind, unsigned ambient_dim, const std::vector<std::string>& equations, long p, int k) {
    return mlv::point_count(variety(kind, ambient_dim, equations), p, k).get_str();
  }, py::arg("kind"), py::arg("ambient_dim"), py::arg("equations"), py::arg("p"), py::arg("k"));

  m.def("zeta_from_counts", [](const std::vector<std::string>& counts, int deg_num, int deg_den) {
    std::vector<mpz_class> zs;
    for (auto& c : counts) zs.emplace_back(c);
    auto z = mlv::zeta_from_counts(zs, deg_num, deg_den);
    return std::make_pair(rationals(z.num), rationals(z.den));
  }, "Numerator and denominator coefficients (constant term first)");

  m.def("zeta_at_integer", [](long n) {
    auto l = mlv::zeta_at_integer(n);
    return std::make_pair(l.order, l.leading);
  }, "Order and leading Laurent coefficient of the Riemann zeta function at n");

  m.def("tate_weak_dims", [](long n) {
    auto w = mlv::weak_cohomology(mlv::tate(n));
    return std::make_pair(w.hw0.dim, w.hw1.dim);
  }, "Dimensions of the weak Hodge cohomology of the Tate object of twist n");

  m.def("catalog_names", &mlv::catalog_names);

  m.def("check_all", [](const std::string& name) {
    py::list out;
    for (auto& v : mlv::check_all(mlv::builtin_datum(name))) out.append(verdict_dict(v));
    return out;
  }, "Run every applicable check on a built-in datum");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"mlv"};
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = mlv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run the command line tool in-process; returns (exit code, stdout, stderr)");
}
