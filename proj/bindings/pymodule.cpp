// Python bindings: a thin string-based surface over the extended-precision
// core, so values cross the boundary at full printed precision.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetalab/apery.hpp"
#include "zetalab/finite_sums.hpp"
#include "zetalab/iterint.hpp"
#include "zetalab/suite.hpp"

namespace py = pybind11;
using namespace zetalab;

namespace {

std::string xs(const XReal &x, int digits) {
    return x.str(digits, std::ios_base::fmtflags(0));
}

TComp comp(const std::string &s) { return parse_comp(s); }

} // namespace

PYBIND11_MODULE(_zetalab, m) {
    m.doc() = "central-binomial series, finite harmonic sums, and colored "
              "multiple zeta values";

    m.def("dual",
          [](const std::string &c) { return print_comp(hoffman_dual(comp(c).parts)); },
          py::arg("comp"), "Hoffman dual of an untwisted composition");

    m.def(
        "eval_series",
        [](const std::string &spec, int digits, long budget) {
            SeriesResult r = eval_series(parse_series_spec(spec), digits, budget);
            py::dict d;
            d["value"] = xs(r.value, digits);
            d["err"] = xs(r.err, 3);
            d["terms"] = r.terms;
            return d;
        },
        py::arg("spec"), py::arg("digits") = 32, py::arg("budget") = 1000000,
        "evaluate a central-binomial series spec; returns value/err strings");

    m.def(
        "eval_series_integral",
        [](const std::string &spec, int digits) {
            XReal err = 0;
            XReal v = eval_series_integral(parse_series_spec(spec), &err);
            py::dict d;
            d["value"] = xs(v, digits);
            d["err"] = xs(err, 3);
            return d;
        },
        py::arg("spec"), py::arg("digits") = 32,
        "evaluate a spec through its iterated-integral/quadrature route");

    m.def(
        "cmzv",
        [](const std::string &c, int digits) {
            XComplex v = cmzv(comp(c));
            return py::make_tuple(xs(v.re, digits), xs(v.im, digits));
        },
        py::arg("comp"), py::arg("digits") = 32,
        "colored multiple zeta value of level <= 4, as (re, im) strings");

    m.def(
        "mtv",
        [](const std::string &c, int digits) {
            XComplex v = mtv(comp(c));
            return py::make_tuple(xs(v.re, digits), xs(v.im, digits));
        },
        py::arg("comp"), py::arg("digits") = 32, "multiple t-value, as (re, im) strings");

    m.def(
        "finsum",
        [](const std::string &kind, const std::string &c, long n) {
            bool star = kind.size() > 1 && kind[1] == '*';
            bool tkind = !kind.empty() && kind[0] == 't';
            if (!tkind && (kind.empty() || kind[0] != 'z'))
                throw std::invalid_argument("kind must be z, z*, t, or t*");
            GaussRat v = tkind ? t_n_tw(comp(c), n, star) : zeta_n_tw(comp(c), n, star);
            std::string s = v.re.str();
            if (!(v.im == 0)) s += " + (" + v.im.str() + ") i";
            return s;
        },
        py::arg("kind"), py::arg("comp"), py::arg("n"),
        "finite (t-)harmonic sum as an exact rational string");

    m.def(
        "verify_json",
        [](const std::string &filter, int workers) {
            return suite::to_json(suite::run(filter, workers));
        },
        py::arg("filter") = "*", py::arg("workers") = 1,
        "run the identity registry; returns the JSON report");

    m.def("explain", &suite::explain, py::arg("id"),
          "describe a registered identity (raises on unknown id)");

    m.def("registry_ids", [] {
        std::vector<std::string> ids;
        for (const auto &e : suite::registry()) ids.push_back(e.id);
        return ids;
    });
}
