#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modcurve/factor.hpp"
#include "modcurve/genus2.hpp"
#include "modcurve/number_field.hpp"
#include "modcurve/pipelines.hpp"

namespace py = pybind11;
using namespace modcurve;

namespace {

UniPoly<Rational> parse_poly(const std::vector<std::string>& coeffs) {
  std::vector<Rational> cs;
  for (const auto& c : coeffs) cs.push_back(Rational::parse(c));
  return UniPoly<Rational>(std::move(cs), Rational());
}

std::vector<std::string> poly_strings(const UniPoly<Rational>& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

NFElement nf_from(const std::vector<std::string>& coeffs) {
  if (coeffs.size() > kFieldDegree) throw Error("at most 6 coordinates");
  NFElement acc;
  NFElement power(1);
  const NFElement a = NFElement::from_coeffs({0, 1, 0, 0, 0, 0});
  for (const auto& c : coeffs) {
    acc += NFElement(Rational::parse(c)) * power;
    power *= a;
  }
  return acc;
}

SuiteConfig suite_config(std::vector<std::string> only, std::vector<std::string> skip, std::uint64_t seed,
                         unsigned precision, long max_k, std::optional<std::string> jmap) {
  SuiteConfig c;
  c.only = std::move(only);
  c.skip = std::move(skip);
  c.rng_seed = seed;
  c.precision_bits = precision;
  c.max_k = max_k;
  if (jmap) c.jmap = load_jmap(*jmap);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic on X1(13) and X0(37)";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationFailed>(m, "ValidationFailed", base.ptr());
  py::register_exception<PointNotOnCurve>(m, "PointNotOnCurve", base.ptr());
  py::register_exception<BadReduction>(m, "BadReduction", base.ptr());

  py::class_<NFElement>(m, "NFElement")
      .def(py::init(&nf_from), py::arg("coeffs"), "c0 + c1 a + ... + c5 a^5 from rational strings")
      .def("coeffs",
           [](const NFElement& x) {
             std::vector<std::string> out;
             for (std::size_t i = 0; i < kFieldDegree; ++i) out.push_back(x.coeff(i).to_string());
             return out;
           })
      .def("inv", &NFElement::inv)
      .def("is_zero", &NFElement::is_zero)
      .def("__add__", [](const NFElement& a, const NFElement& b) { return a + b; })
      .def("__sub__", [](const NFElement& a, const NFElement& b) { return a - b; })
      .def("__mul__", [](const NFElement& a, const NFElement& b) { return a * b; })
      .def("__truediv__", [](const NFElement& a, const NFElement& b) { return a / b; })
      .def("__neg__", [](const NFElement& a) { return -a; })
      .def("__eq__", [](const NFElement& a, const NFElement& b) { return a == b; })
      .def("__str__", &NFElement::to_string)
      .def("__repr__", [](const NFElement& x) { return "NFElement(" + x.to_string() + ")"; });

  m.def("minimal_polynomial", [] { return poly_strings(NumberFieldDesc::instance().minimal_polynomial()); });

  m.def(
      "factor_mod_p",
      [](const std::vector<std::string>& coeffs, std::uint64_t p, std::uint64_t seed) {
        std::vector<std::pair<std::vector<long>, unsigned>> out;
        for (const auto& fp : factor_mod_p(parse_poly(coeffs), p, seed)) {
          std::vector<long> cs;
          for (const auto& c : fp.factor.coeffs()) cs.push_back(static_cast<long>(c.value()));
          out.emplace_back(std::move(cs), fp.multiplicity);
        }
        return out;
      },
      py::arg("coeffs"), py::arg("p"), py::arg("seed") = 0);

  m.def(
      "jacobian_order",
      [](const std::vector<std::string>& coeffs, std::uint64_t p, unsigned k) {
        return py::int_(py::str(jacobian_order(reduce_curve_mod_p(parse_poly(coeffs), p), k).get_str()));
      },
      py::arg("coeffs"), py::arg("p"), py::arg("k"));

  m.def(
      "division_polynomial",
      [](const std::string& a4, const std::string& a6, long n) {
        const auto c = WeierstrassCurve<Rational>::short_form(Rational(0), Rational::parse(a4), Rational::parse(a6));
        return poly_strings(division_polynomial(c, n));
      },
      py::arg("a4"), py::arg("a6"), py::arg("n"));

  m.def(
      "e37_multiple",
      [](long k) -> std::optional<std::pair<std::string, std::string>> {
        const auto P = ec_scalar_mul(ref::e37(), Integer(k), ref::e37_generator());
        if (P.infinity) return std::nullopt;
        return std::make_pair(P.x.to_string(), P.y.to_string());
      },
      py::arg("k"));

  m.def(
      "run_x1_13_json",
      [](std::vector<std::string> only, std::vector<std::string> skip, std::uint64_t seed, unsigned precision) {
        const auto c = suite_config(std::move(only), std::move(skip), seed, precision, 15, std::nullopt);
        py::gil_scoped_release release;
        return report_json("x13-verify", seed, run_x1_13(c)).dump();
      },
      py::arg("only") = std::vector<std::string>{}, py::arg("skip") = std::vector<std::string>{},
      py::arg("rng_seed") = 0, py::arg("precision") = 256);

  m.def(
      "run_x0_37_json",
      [](std::vector<std::string> only, std::vector<std::string> skip, std::uint64_t seed, long max_k,
         std::optional<std::string> jmap) {
        const auto c = suite_config(std::move(only), std::move(skip), seed, 256, max_k, jmap);
        return report_json("x37-verify", seed, run_x0_37(c)).dump();
      },
      py::arg("only") = std::vector<std::string>{}, py::arg("skip") = std::vector<std::string>{},
      py::arg("rng_seed") = 0, py::arg("max_k") = 15, py::arg("jmap") = std::nullopt);

  m.def(
      "generate_table_json",
      [](long k_max, std::optional<std::string> jmap) {
        std::optional<JMapData> data;
        if (jmap) data = load_jmap(*jmap);
        return table_json(generate_table(k_max, data ? &*data : nullptr)).dump();
      },
      py::arg("k_max") = 15, py::arg("jmap") = std::nullopt);

  m.def("table_csv", [](long k_max) { return table_csv(generate_table(k_max)); }, py::arg("k_max") = 15);

  m.def("x13_check_ids", &x13_check_ids);
  m.def("x37_check_ids", &x37_check_ids);
}
