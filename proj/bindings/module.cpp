// Python bindings for the main operations: volume from lengths or angles,
// the angle/length conversions, the quadrature oracle, and the special
// functions underneath.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "hytet/dilog.hpp"
#include "hytet/errors.hpp"
#include "hytet/gram.hpp"
#include "hytet/oracle.hpp"
#include "hytet/volume.hpp"

namespace py = pybind11;
using namespace hytet;

namespace {

Lengths6 as_lengths(const std::array<double, 6>& v) {
    Lengths6 l;
    l.v = v;
    return l;
}

Angles6 as_angles(const std::array<double, 6>& v) {
    Angles6 a;
    a.v = v;
    return a;
}

py::dict result_dict(const VolumeResult& r) {
    py::dict d;
    d["volume"] = r.volume;
    d["shape"] = to_string(r.shape);
    d["method"] = r.method == VolumeMethod::AnglesThm1 ? "angles" : "lengths";
    d["z_minus"] = r.z_pair.z_minus;
    d["z_plus"] = r.z_pair.z_plus;
    d["residues"] = py::make_tuple(r.residues.first, r.residues.second);
    if (r.partials)
        d["partials"] = *r.partials;
    else
        d["partials"] = py::none();
    py::dict diag;
    for (const auto& [k, v] : r.diagnostics) diag[py::str(k)] = v;
    d["diagnostics"] = diag;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hytet, m) {
    m.doc() = "Hyperbolic tetrahedron volumes from edge lengths or dihedral angles";

    // Translators run newest-first: the base class goes first so that the
    // specific categories below take precedence.
    py::register_exception<error>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<realizability_error>(m, "RealizabilityError", PyExc_ValueError);
    py::register_exception<shape_error>(m, "ShapeError", PyExc_ValueError);

    m.def(
        "volume_from_lengths",
        [](const std::array<double, 6>& l) { return result_dict(volume_from_lengths(as_lengths(l))); },
        py::arg("lengths"),
        "Volume of the hyperbolic tetrahedron with the six edge lengths l1..l6.");

    m.def(
        "volume_from_angles",
        [](const std::array<double, 6>& a) { return result_dict(volume_from_angles(as_angles(a))); },
        py::arg("angles"),
        "Volume of the tetrahedron with the six dihedral angles A1..A6 (radians).");

    m.def(
        "lengths_to_angles",
        [](const std::array<double, 6>& l) { return lengths_to_angles(as_lengths(l)).v; },
        py::arg("lengths"));

    m.def(
        "angles_to_lengths",
        [](const std::array<double, 6>& a) { return angles_to_lengths(as_angles(a)).v; },
        py::arg("angles"));

    m.def(
        "oracle_volume",
        [](const std::array<double, 6>& l, double rel_tol) {
            QuadratureSpec spec;
            spec.rel_tol = rel_tol;
            return oracle_volume_from_lengths(as_lengths(l), spec);
        },
        py::arg("lengths"), py::arg("rel_tol") = 1e-8,
        "Formula-free volume by adaptive quadrature in the Klein model.");

    m.def(
        "schlafli_defect",
        [](const std::array<double, 6>& a, double h) { return schlafli_defect(as_angles(a), h); },
        py::arg("angles"), py::arg("h") = 1e-5);

    m.def("classify",
          [](const std::array<double, 6>& a) { return std::string(to_string(classify(as_angles(a)))); },
          py::arg("angles"));

    m.def("li2", [](cplx z) { return li2(z); }, py::arg("z"),
          "Principal dilogarithm, cut along [1, inf).");
    m.def("clog", [](cplx z) { return clog(z); }, py::arg("z"),
          "Principal logarithm with Im in (-pi, pi].");
    m.def("lobachevsky", &lobachevsky, py::arg("theta"));
}
