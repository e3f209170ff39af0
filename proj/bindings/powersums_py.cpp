#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "powersums/engine.hpp"
#include "powersums/format.hpp"
#include "powersums/oracle.hpp"

namespace py = pybind11;
using namespace powersums;

namespace {

py::object to_py_int(const mpz_class& z) {
  static py::object int_cls = py::module_::import("builtins").attr("int");
  return int_cls(z.get_str());
}

mpz_class to_mpz(const py::int_& v) { return mpz_class(py::repr(v).cast<std::string>()); }

py::tuple mismatch_tuple(const SweepMismatch& m) {
  return py::make_tuple(m.n, to_py_int(m.expected), m.got);
}

}  // namespace

PYBIND11_MODULE(_powersums, m) {
  m.doc() = "Exact power-sum polynomials: closed forms, S_1/S_2 representations, "
            "Faulhaber decompositions, relation polynomials, brute-force verification";
  m.attr("__version__") = "0.1.0";

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::int_& num) { return Rational(to_mpz(num)); }), py::arg("num"))
      .def(py::init([](const py::int_& num, const py::int_& den) {
             return Rational(to_mpz(num), to_mpz(den));
           }),
           py::arg("num"), py::arg("den"))
      .def_static("from_string", &Rational::from_string, py::arg("text"))
      .def_property_readonly("num", [](const Rational& r) { return to_py_int(r.numerator()); })
      .def_property_readonly("den", [](const Rational& r) { return to_py_int(r.denominator()); })
      .def("is_zero", &Rational::is_zero)
      .def("is_integer", &Rational::is_integer)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def("__str__", &Rational::to_string)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.to_string() + "')"; });

  py::class_<UniPoly>(m, "UniPoly")
      .def(py::init<>())
      .def_static("variable", &UniPoly::variable)
      .def_static("constant", &UniPoly::constant, py::arg("c"))
      .def_static("monomial", &UniPoly::monomial, py::arg("c"), py::arg("exp"))
      .def_static("from_json",
                  [](const std::string& text) { return unipoly_from_json(nlohmann::json::parse(text)); },
                  py::arg("text"))
      .def("is_zero", &UniPoly::is_zero)
      .def("degree", &UniPoly::degree)
      .def("coefficient", &UniPoly::coefficient, py::arg("exp"))
      .def("terms", [](const UniPoly& p) { return p.terms(); })
      .def("evaluate", &UniPoly::evaluate, py::arg("v"))
      .def("evaluate", [](const UniPoly& p, const py::int_& v) { return p.evaluate(Rational(to_mpz(v))); },
           py::arg("v"))
      .def("shift_minus_one", &UniPoly::shift_minus_one)
      .def("shift_plus_one", &UniPoly::shift_plus_one)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * Rational())
      .def("to_latex", [](const UniPoly& p) { return to_latex(p); })
      .def("to_json", [](const UniPoly& p) { return to_json(p).dump(); })
      .def("__str__", [](const UniPoly& p) { return to_plain(p); })
      .def("__repr__", [](const UniPoly& p) { return "UniPoly('" + to_plain(p) + "')"; });

  py::class_<BiPoly>(m, "BiPoly")
      .def(py::init<>())
      .def_static("x", &BiPoly::x)
      .def_static("y", &BiPoly::y)
      .def_static("constant", &BiPoly::constant, py::arg("c"))
      .def_static("monomial", &BiPoly::monomial, py::arg("c"), py::arg("a"), py::arg("b"))
      .def_static("from_json",
                  [](const std::string& text) { return bipoly_from_json(nlohmann::json::parse(text)); },
                  py::arg("text"))
      .def("is_zero", &BiPoly::is_zero)
      .def("weighted_degree", &BiPoly::weighted_degree)
      .def("coefficient", &BiPoly::coefficient, py::arg("a"), py::arg("b"))
      .def("terms", [](const BiPoly& p) { return p.terms(); })
      .def("substitute", &BiPoly::substitute, py::arg("xs"), py::arg("ys"))
      .def("evaluate", &BiPoly::evaluate, py::arg("x"), py::arg("y"))
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * Rational())
      .def("to_latex", [](const BiPoly& p) { return to_latex(p); })
      .def("to_json", [](const BiPoly& p) { return to_json(p).dump(); })
      .def("__str__", [](const BiPoly& p) { return to_plain(p); })
      .def("__repr__", [](const BiPoly& p) { return "BiPoly('" + to_plain(p) + "')"; });

  py::class_<DecompResult>(m, "DecompResult")
      .def_property_readonly("ok", &DecompResult::ok)
      .def_readonly("value", &DecompResult::value)
      .def_readonly("residual", &DecompResult::residual)
      .def("__repr__", [](const DecompResult& r) {
        return r.ok() ? "DecompResult(ok, '" + to_plain(r.value) + "')"
                      : "DecompResult(obstructed, residual '" + to_plain(r.residual) + "')";
      });

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("k", &SweepReport::k)
      .def_readonly("n_max", &SweepReport::n_max)
      .def("ok", &SweepReport::ok)
      .def_property_readonly("mismatches",
                             [](const SweepReport& r) {
                               py::list out;
                               for (const auto& mm : r.mismatches) out.append(mismatch_tuple(mm));
                               return out;
                             })
      .def("__repr__", [](const SweepReport& r) {
        return "SweepReport(k=" + std::to_string(r.k) + ", n_max=" + std::to_string(r.n_max) +
               ", mismatches=" + std::to_string(r.mismatches.size()) + ")";
      });

  py::class_<PowerSumTable>(m, "PowerSumTable")
      .def(py::init<>())
      .def("power_sum",
           [](PowerSumTable& t, unsigned k) -> UniPoly { return halfterm_power_sum(k, t); },
           py::arg("k"))
      .def("pascal_power_sum",
           [](PowerSumTable& t, unsigned k) -> UniPoly { return pascal_power_sum(k, t); },
           py::arg("k"))
      .def("halfterm_power_sum",
           [](PowerSumTable& t, unsigned k) -> UniPoly { return halfterm_power_sum(k, t); },
           py::arg("k"))
      .def("g_poly", [](PowerSumTable& t, unsigned k) -> BiPoly { return g_poly(k, t); },
           py::arg("k"))
      .def("leading_coefficients",
           [](PowerSumTable& t, unsigned k) {
             const LeadingCoefficients lc = leading_coefficients(k, t);
             return py::make_tuple(lc.leading, lc.subleading, lc.constant);
           },
           py::arg("k"))
      .def("odd_step",
           [](PowerSumTable& t, unsigned r) {
             HalfTermStep s = odd_step(r, t);
             return py::make_tuple(s.expansion.coeffs, s.power_sum);
           },
           py::arg("r"))
      .def("even_step",
           [](PowerSumTable& t, unsigned r) {
             HalfTermStep s = even_step(r, t);
             return py::make_tuple(s.expansion.coeffs, s.power_sum);
           },
           py::arg("r"))
      .def("faulhaber_in_a",
           [](PowerSumTable& t, unsigned k) { return faulhaber_in_a(k, t); }, py::arg("k"))
      .def("even_factor",
           [](PowerSumTable& t, unsigned k) { return faulhaber_even_factor(k, t); }, py::arg("k"))
      .def("relation",
           [](PowerSumTable& t, unsigned i, unsigned j) { return relation_polynomial(i, j, t); },
           py::arg("i"), py::arg("j"))
      .def("resultant",
           [](PowerSumTable& t, unsigned i, unsigned j) { return power_sum_resultant(i, j, t); },
           py::arg("i"), py::arg("j"))
      .def("verify",
           [](PowerSumTable& t, unsigned k, unsigned long n_max, unsigned jobs) {
             return verify_poly(k, halfterm_power_sum(k, t), n_max, jobs);
           },
           py::arg("k"), py::arg("n_max") = 200, py::arg("jobs") = 1);

  m.def("decompose_greedy", &decompose_greedy_ab, py::arg("p"),
        "Degree descent of p into x^a y^b terms; x stands for S_1, y for S_2");
  m.def("decompose_pure_a", &decompose_pure_a, py::arg("p"));
  m.def("brute_force_sum",
        [](unsigned k, unsigned long n) { return to_py_int(brute_force_sum(k, n)); },
        py::arg("k"), py::arg("n"), "1^k + 2^k + ... + n^k by direct summation");
  m.def("term_counts",
        [](unsigned k) {
          const TermCountReport r = term_count_report(k);
          return py::make_tuple(r.pascal_terms, r.halfterm_terms);
        },
        py::arg("k"));
}
