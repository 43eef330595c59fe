// pybind11 bindings for the main operations.  Exact rationals cross the
// boundary as canonical "num/den" strings; the python package converts them
// to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lgenus/indexcalc.hpp"

namespace py = pybind11;
using namespace lgenus;

namespace {

py::object extint_to_py(const ExtInt& v) {
    if (v.is_infinite()) return py::none();
    return py::int_(v.value());
}

std::vector<std::string> series_strings(const PowerSeries& f) {
    std::vector<std::string> out;
    out.reserve(f.coefficients().size());
    for (const Rational& c : f.coefficients()) out.push_back(c.str());
    return out;
}

PowerSeries series_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(Rational::parse(s));
    return PowerSeries(std::move(c));
}

BundleCoefficients bundle_from_strings(int k, const std::vector<std::string>& m) {
    std::vector<Rational> parsed;
    parsed.reserve(m.size());
    for (const auto& s : m) parsed.push_back(Rational::parse(s));
    return BundleCoefficients(k, std::move(parsed));
}

py::dict report_to_dict(const IndexReport& report) {
    py::dict d;
    d["k"] = report.k;
    d["r"] = report.r;
    py::list m;
    for (const auto& mj : report.m) m.append(mj.str());
    d["m"] = m;
    d["index"] = report.index.str();
    d["linear_term"] = report.linear_term.str();
    d["congruence_margin"] = extint_to_py(report.congruence_margin);
    d["verdict"] = to_string(report.verdict);
    return d;
}

}  // namespace

PYBIND11_MODULE(_lgenus, m) {
    m.doc() = "Exact 2-adic Hirzebruch index verification kernel";

    m.def("nu2", [](const std::string& q) { return extint_to_py(nu2(Rational::parse(q))); },
          py::arg("q"), "2-order of a rational given as 'a' or 'a/b'; None at 0");
    m.def("kappa2", [](const std::string& n) { return kappa2(Int(n)); }, py::arg("n"),
          "binary digit sum of a nonnegative integer");
    m.def("nu2_factorial",
          [](const std::string& n) { return nu2_factorial(Int(n)).get_str(); },
          py::arg("n"));
    m.def("nu2_binomial",
          [](const std::string& n, const std::string& k) {
              return nu2_binomial(Int(n), Int(k));
          },
          py::arg("n"), py::arg("k"));
    m.def("nu2_power_pm",
          [](const std::string& n, unsigned long i) {
              return extint_to_py(nu2_power_pm(Int(n), i));
          },
          py::arg("n"), py::arg("i"));

    m.def("bernoulli", [](int n) { return bernoulli(n).str(); }, py::arg("n"));
    m.def("a_coefficients",
          [](int i_max) {
              std::vector<std::string> out;
              for (const Rational& v : CoefficientFamily::a(i_max).values)
                  out.push_back(v.str());
              return out;
          },
          py::arg("i_max"), "a_0..a_{i_max}, the x^{2i} coefficients of x/tanh x");
    m.def("b_coefficients",
          [](int i_max) {
              std::vector<std::string> out;
              for (const Rational& v : CoefficientFamily::b(i_max).values)
                  out.push_back(v.str());
              return out;
          },
          py::arg("i_max"));
    m.def("adams_t_polynomial",
          [](int j) {
              std::vector<std::string> out;
              for (const Int& c : adams_T_polynomial(j)) out.push_back(c.get_str());
              return out;
          },
          py::arg("j"), "coefficients of z^0..z^j");

    m.def("revert", [](const std::vector<std::string>& coeffs) {
        return series_strings(revert(series_from_strings(coeffs)));
    });
    m.def("qth_root",
          [](const std::vector<std::string>& coeffs, unsigned long q, unsigned long p) {
              return series_strings(qth_root(series_from_strings(coeffs), q, p));
          },
          py::arg("coeffs"), py::arg("q"), py::arg("p"));

    m.def("c_value",
          [](int k, const std::vector<int>& js) { return c_value(CSpec(k, js)).str(); },
          py::arg("k"), py::arg("js"), "dual-route coefficient functional");
    m.def("c_closed_form", [](int s, int k) { return c_closed_form(s, k).str(); },
          py::arg("s"), py::arg("k"));
    m.def("index_value",
          [](int k, const std::vector<std::string>& m_) {
              return index_value(bundle_from_strings(k, m_)).str();
          },
          py::arg("k"), py::arg("m"));
    m.def("congruence_margin",
          [](int k, const std::vector<std::string>& m_) {
              return extint_to_py(index_congruence_margin(bundle_from_strings(k, m_)));
          },
          py::arg("k"), py::arg("m"));
    m.def("p1",
          [](int k, const std::vector<std::string>& m_) {
              return p1_of_zeta(bundle_from_strings(k, m_)).str();
          },
          py::arg("k"), py::arg("m"));
    m.def("divisibility_verdict",
          [](int k, const std::vector<std::string>& m_) {
              return report_to_dict(divisibility_verdict(bundle_from_strings(k, m_)));
          },
          py::arg("k"), py::arg("m"));
    m.def("solution_search",
          [](int k, int box) {
              const SearchResult result = solution_search(k, box);
              py::dict d;
              d["complete"] = result.complete;
              d["candidates_checked"] = result.candidates_checked;
              py::list sols;
              for (const auto& sol : result.solutions) sols.append(report_to_dict(sol));
              d["solutions"] = sols;
              return d;
          },
          py::arg("k"), py::arg("box"));
}
