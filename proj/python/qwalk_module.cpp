// pybind11 bindings for the core pipeline.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwalk/elim.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/fixtures.hpp"
#include "qwalk/report.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

py::int_ to_py(const mpz_class& z) {
    std::string s = z.get_str();
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(s.c_str(), nullptr, 10));
}

StepSet parse(const std::string& text) { return parse_stepset(text); }

}  // namespace

PYBIND11_MODULE(_qwalk, m) {
    m.doc() = "exact certification of non-D-finite quarter-plane excursions";

    py::register_exception<Error>(m, "QwalkError");

    py::class_<StepSet>(m, "StepSet")
        .def(py::init(&parse), py::arg("text"))
        .def("__str__", &StepSet::format)
        .def("__repr__",
             [](const StepSet& s) { return "StepSet(\"" + s.format() + "\")"; })
        .def("transposed", &StepSet::transposed)
        .def_property_readonly("small_step", &StepSet::small_step)
        .def("__eq__", [](const StepSet& a, const StepSet& b) { return a == b; });

    m.def(
        "count_excursions",
        [](const std::string& steps, long n_max) {
            ExcursionSeq seq = count_excursions(parse(steps), n_max);
            py::list out;
            for (const auto& t : seq.terms) out.append(to_py(t));
            return out;
        },
        py::arg("steps"), py::arg("n_max"));

    m.def(
        "detect_period",
        [](const std::string& steps) { return detect_period(parse(steps)); },
        py::arg("steps"));

    m.def(
        "classify",
        [](const std::string& steps, long precision, long max_n, long fit_n) {
            ClassifyOptions opt;
            opt.precision = precision;
            opt.max_n = max_n;
            opt.fit_n = fit_n;
            return classify(parse(steps), opt).to_json().dump();
        },
        py::arg("steps"), py::arg("precision") = 64, py::arg("max_n") = 8,
        py::arg("fit_n") = 0,
        "Full pipeline; returns the JSON report as a string.");

    m.def(
        "eliminants",
        [](const std::string& steps) {
            StepSet s = parse(steps);
            return py::make_tuple(format_poly(eliminant_rho(s).poly),
                                  format_poly(eliminant_c(s).poly));
        },
        py::arg("steps"));

    m.def(
        "check_tables",
        [](int table, const std::vector<std::string>& tags) {
            TableCheck res = check_tables(table, tags);
            return py::make_tuple(res.checked, res.passed, res.failures);
        },
        py::arg("table"), py::arg("tags") = std::vector<std::string>{});

    m.def("fixture_tags", [] {
        std::vector<std::string> tags;
        for (const Fixture& f : fixtures()) tags.push_back(f.tag);
        return tags;
    });

    m.def(
        "group_order_from_alpha",
        [](long num, long den) {
            mpq_class a(num, den);
            a.canonicalize();
            return to_py(group_order_from_alpha(a));
        },
        py::arg("num"), py::arg("den") = 1);
}
