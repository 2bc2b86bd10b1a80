#include "cgd4/asym.hpp"
#include "cgd4/cache.hpp"
#include "cgd4/cg.hpp"
#include "cgd4/ffield.hpp"
#include "cgd4/residue.hpp"
#include "cgd4/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cgd4;

/* exact values cross the boundary as strings ("p/q"); the Python layer turns
 * them into fractions.Fraction */
namespace {

std::vector<std::string> coeff_strs(const UPoly& p) {
    std::vector<std::string> r;
    for (auto& c : p.coeffs()) r.push_back(c.str());
    return r;
}

std::pair<std::string, std::string> sqrtq_pair(const SqrtQNumber& x) { return {x.a().str(), x.b().str()}; }

Monomial to_monomial(const std::vector<int>& v) {
    if (v.size() != 5) throw std::invalid_argument("a monomial needs exactly 5 exponents");
    return {v[0], v[1], v[2], v[3], v[4]};
}

/* (exponents, coefficients) pairs; the Python side keys them by tuple */
std::vector<std::pair<std::vector<int>, std::vector<std::string>>> series_dict(const TruncSeries& s) {
    std::vector<std::pair<std::vector<int>, std::vector<std::string>>> r;
    s.for_each([&](const Monomial& m, const UPoly& c) { r.emplace_back(std::vector<int>(m.begin(), m.end()), coeff_strs(c)); });
    return r;
}

}

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weyl group multiple Dirichlet series of type D4^(1)";

    m.def("z_tilde", [](int order) { return series_dict(z_tilde(order)); }, py::arg("order"),
          "coefficients of Z~ through total degree order, as {exponents: [u^0, u^1, ...]}",
          py::call_guard<py::gil_scoped_release>());
    m.def("z_w", [](int order) { return series_dict(z_w(order)); }, py::arg("order"),
          py::call_guard<py::gil_scoped_release>());
    m.def("slices_json", [](int order, int dmax) { return extract_slices(z_tilde(order), dmax).to_json().dump(); },
          py::arg("order"), py::arg("dmax"), py::call_guard<py::gil_scoped_release>());
    m.def("diagonal_slices_json", [](int dmax) { return diagonal_slices(dmax).to_json().dump(); }, py::arg("dmax"),
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "c_g",
        [](const std::vector<int>& a) {
            std::map<int, std::vector<std::string>> r;
            for (auto& [k, p] : c_g(to_monomial(a))) r[k] = coeff_strs(p);
            return r;
        },
        py::arg("exponents"), "C_g as {power of z: [u^0, u^1, ...]}");

    m.def("quad_symbol",
          [](long q, const std::vector<long>& d, const std::vector<long>& mm) {
              Fq F(q);
              return quad_symbol(F, FqPoly(d), FqPoly(mm));
          },
          py::arg("q"), py::arg("d"), py::arg("m"), "(d/m) over F_q, polynomials as coefficient lists, constant first");
    m.def("l_function_json",
          [](long q, const std::vector<long>& d0) { return l_function(Fq(q), FqPoly(d0)).to_json().dump(); },
          py::arg("q"), py::arg("d0"));

    m.def("moment_cost", &moment_cost, py::arg("q"), py::arg("D"));
    m.def(
        "moment_bruteforce",
        [](long q, int D, int jobs) { return sqrtq_pair(moment_bruteforce(q, D, diagonal_slices(D), jobs)); },
        py::arg("q"), py::arg("D"), py::arg("jobs") = 1, "(a, b) with the moment equal to a + b sqrt(q)",
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "moment_via_series", [](long q, int D) { return sqrtq_pair(moment_via_series(q, D, diagonal_slices(D))); },
        py::arg("q"), py::arg("D"), py::call_guard<py::gil_scoped_release>());

    m.def(
        "q_n",
        [](int n, long q, int D) { return QnEvaluator(n, BigRational(q)).q_n(D).get_d(); }, py::arg("n"),
        py::arg("q"), py::arg("D"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "asym_json",
        [](long q, int dmin, int dmax, int terms, double theta) {
            return asym_compare(q, dmin, dmax, terms, theta, diagonal_slices(dmax)).to_json().dump();
        },
        py::arg("q"), py::arg("dmin"), py::arg("dmax"), py::arg("terms") = 2, py::arg("theta") = 0.0,
        py::call_guard<py::gil_scoped_release>());

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite_json",
        [](const std::string& name, int order, const std::vector<long>& qs, const std::string& cache_dir) {
            RunConfig cfg;
            cfg.order = order;
            cfg.qs = qs;
            Cache cache(cache_dir);
            return run_suite(name, cfg, cache).to_json().dump();
        },
        py::arg("name"), py::arg("order") = 0, py::arg("qs") = std::vector<long>{5}, py::arg("cache_dir") = "",
        py::call_guard<py::gil_scoped_release>());
}
