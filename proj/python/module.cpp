// Python bindings for the grpdet core: groups, elements, determinants,
// membership decisions, and witness construction.  Exact integers cross the
// boundary as native Python ints (via decimal strings).

#include "grpdet/conditions.hpp"
#include "grpdet/detengine.hpp"
#include "grpdet/group.hpp"
#include "grpdet/quadratic.hpp"
#include "grpdet/realize.hpp"
#include "grpdet/selftest.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace grpdet;

namespace {

Int to_int(const py::object& v) {
    return Int(py::str(v).cast<std::string>());
}

py::object from_int(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::dict report_dict(const DetReport& rep) {
    py::dict d;
    d["A"] = from_int(rep.A);
    d["B"] = from_int(rep.B);
    d["D"] = from_int(rep.D);
    py::list blocks;
    for (const auto& b : rep.B_blocks) blocks.append(b.to_string());
    d["B_blocks"] = blocks;
    return d;
}

py::dict decision_dict(const MembershipDecision& dec) {
    py::dict d;
    d["status"] = std::string(status_name(dec.status));
    d["exact"] = dec.exact;
    d["reason"] = dec.reason;
    if (dec.m) d["m"] = from_int(*dec.m);
    if (dec.b) d["b"] = from_int(*dec.b);
    if (dec.xi) d["xi"] = dec.xi->to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_grpdet, m) {
    m.doc() = "integer group determinants of Z_p x| Z_n";

    py::class_<GroupSpec>(m, "Group")
        .def(py::init([](unsigned p, unsigned r, unsigned n) { return make_group(p, r, n); }),
             py::arg("p"), py::arg("r"), py::arg("n"))
        .def_readonly("p", &GroupSpec::p)
        .def_readonly("r", &GroupSpec::r)
        .def_readonly("n", &GroupSpec::n)
        .def_readonly("t", &GroupSpec::t)
        .def_readonly("name", &GroupSpec::name)
        .def_readonly("coset_reps", &GroupSpec::coset_reps)
        .def("__repr__", [](const GroupSpec& g) {
            return "Group(" + std::to_string(g.p) + ", " + std::to_string(g.r) + ", " +
                   std::to_string(g.n) + ")";
        });

    py::class_<GroupRingElement>(m, "Element")
        .def(py::init([](const std::string& text, const GroupSpec& g) {
                 return parse_element(text, g);
             }),
             py::arg("text"), py::arg("group"))
        .def("coeff",
             [](const GroupRingElement& e, unsigned i, unsigned j) {
                 return from_int(e.coeff(i, j));
             },
             py::arg("i"), py::arg("j"), "coefficient of X^i Y^j")
        .def("set_coeff",
             [](GroupRingElement& e, unsigned i, unsigned j, const py::object& v) {
                 e.set_coeff(i, j, to_int(v));
             },
             py::arg("i"), py::arg("j"), py::arg("value"))
        .def("support", &GroupRingElement::support, "number of nonzero coefficients")
        .def("__str__", [](const GroupRingElement& e) { return render_element(e); })
        .def("__repr__", [](const GroupRingElement& e) {
            return "Element(\"" + render_element(e) + "\")";
        })
        .def("__eq__", [](const GroupRingElement& a, const GroupRingElement& b) { return a == b; });

    m.def("identity", &identity_element, py::arg("group"));
    m.def("all_ones", &all_ones_element, py::arg("group"));
    m.def(
        "mul",
        [](const GroupRingElement& a, const GroupRingElement& b, const GroupSpec& g) {
            return mul(a, b, g);
        },
        py::arg("a"), py::arg("b"), py::arg("group"), "product in the group ring");

    m.def(
        "direct_det",
        [](const GroupRingElement& e, const GroupSpec& g) {
            return from_int(direct_determinant(e, g));
        },
        py::arg("element"), py::arg("group"), "determinant of the full |G| x |G| matrix");

    m.def(
        "factored_det",
        [](const GroupRingElement& e, const GroupSpec& g) {
            return report_dict(factored_determinant(e, g));
        },
        py::arg("element"), py::arg("group"),
        "determinant as A * B^n with the block values; returns a dict");

    m.def(
        "necessary_conditions",
        [](const GroupRingElement& e, const GroupSpec& g) {
            DetReport rep = factored_determinant(e, g);
            ConditionReport c = check_necessary(g, rep);
            py::dict d;
            d["zn_ok"] = c.zn_ok;
            d["congruence_ok"] = c.congruence_ok;
            d["p_power_ok"] = c.p_power_ok;
            d["all_ok"] = c.all_ok();
            d["violations"] = c.violations;
            return d;
        },
        py::arg("element"), py::arg("group"),
        "divisibility and congruence conditions every determinant satisfies");

    m.def(
        "member",
        [](const GroupSpec& g, const py::object& D, unsigned long orbit_bound) {
            return decision_dict(member_decide(g, to_int(D), orbit_bound));
        },
        py::arg("group"), py::arg("D"), py::arg("orbit_bound") = 0,
        "decide whether D is an integer group determinant of the group");

    m.def(
        "realize",
        [](const GroupSpec& g, const py::object& D) {
            Realization res = realize_value(g, to_int(D));
            py::dict d;
            d["element"] = render_element(res.element);
            d["tag"] = std::string(tag_name(res.tag));
            d["negated"] = res.negated;
            py::dict params;
            for (const auto& [k, v] : res.params) params[py::str(k)] = from_int(v);
            d["params"] = params;
            d["report"] = report_dict(res.report);
            return d;
        },
        py::arg("group"), py::arg("D"),
        "construct a verified element whose determinant is exactly D");

    m.def("selftest", [] {
        py::list out;
        for (const auto& res : run_selftest()) {
            py::dict d;
            d["name"] = res.name;
            d["passed"] = res.passed;
            d["detail"] = res.detail;
            out.append(d);
        }
        return out;
    });
}
