#include "cylqd/app.hpp"
#include "cylqd/errors.hpp"
#include "cylqd/magnetics.hpp"
#include "cylqd/moments.hpp"
#include "cylqd/oracle/highprec.hpp"
#include "cylqd/specfun.hpp"
#include "cylqd/spectrum.hpp"
#include "cylqd/units.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cylqd;

namespace {

py::dict row_to_dict(const app::SpectrumRow& r)
{
    py::dict d;
    d["m"] = r.m;
    d["k"] = r.k;
    d["kz"] = r.kz;
    d["E_xy_meV"] = r.e_xy_mev;
    d["E_z_meV"] = r.e_z_mev;
    d["E_meV"] = r.e_mev;
    d["E1_meV"] = r.e1_mev;
    d["E2_meV"] = r.e2_mev;
    d["parity"] = std::string(parity_tag(r.parity));
    d["flags"] = r.flags;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Cylindrical quantum-well spectrum and quadratic magnetic corrections";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    m.def("bessel_j", &specfun::bessel_j, py::arg("n"), py::arg("x"));
    m.def("bessel_k", &specfun::bessel_k, py::arg("n"), py::arg("x"));
    m.def("bessel_k_scaled", &specfun::bessel_k_scaled, py::arg("n"), py::arg("x"));
    m.def("bessel_j_zero", &oracle::bessel_j_zero, py::arg("m"), py::arg("k"),
          "k-th positive zero of J_m from the high-precision oracle.");
    m.def("energy_to_mev", [](double e) { return energy_to_mev(e); });

    py::class_<WellGeometry>(m, "WellGeometry")
        .def(py::init<double, double, double>(), py::arg("radius"), py::arg("height"), py::arg("barrier"))
        .def_static("from_lab_units", &WellGeometry::from_lab_units, py::arg("radius_nm"), py::arg("height_nm"),
                    py::arg("barrier_ev"))
        .def_property_readonly("radius", &WellGeometry::radius)
        .def_property_readonly("height", &WellGeometry::height)
        .def_property_readonly("barrier", &WellGeometry::barrier)
        .def_property_readonly("strength", &WellGeometry::strength);

    py::class_<BoundState>(m, "BoundState")
        .def_property_readonly("m", [](const BoundState& s) { return s.qn.m; })
        .def_property_readonly("k", [](const BoundState& s) { return s.qn.k; })
        .def_property_readonly("kz", [](const BoundState& s) { return s.qn.kz; })
        .def_readonly("exy", &BoundState::exy)
        .def_readonly("ez", &BoundState::ez)
        .def_readonly("etotal", &BoundState::etotal)
        .def_readonly("kin", &BoundState::kin)
        .def_readonly("kappa", &BoundState::kappa)
        .def("__repr__", [](const BoundState& s) {
            return "<BoundState m=" + std::to_string(s.qn.m) + " k=" + std::to_string(s.qn.k)
                   + " kz=" + std::to_string(s.qn.kz) + " E=" + std::to_string(energy_to_mev(s.etotal)) + " meV>";
        });

    m.def("solve_radial_levels", [](int mm, const WellGeometry& g) { return solve_radial_levels(mm, g); },
          py::arg("m"), py::arg("geometry"), "In-plane bound-state energies (hartree), ascending.");
    m.def("axial_energy", &axial_energy, py::arg("kz"), py::arg("geometry"));
    m.def(
        "enumerate_states",
        [](const WellGeometry& g, int m_max, int count) { return enumerate_states(g, m_max, count).per_m; },
        py::arg("geometry"), py::arg("m_max"), py::arg("count_per_m"));

    py::class_<MomentSet>(m, "MomentSet")
        .def_readonly("z_mean", &MomentSet::z_mean)
        .def_readonly("z2_mean", &MomentSet::z2_mean)
        .def_readonly("var_z", &MomentSet::var_z)
        .def_readonly("rho2_mean", &MomentSet::rho2_mean)
        .def_readonly("x2_mean", &MomentSet::x2_mean)
        .def_readonly("norm_residual", &MomentSet::norm_residual)
        .def("shifted_z", &MomentSet::shifted_z, py::arg("d"));

    m.def(
        "compute_moments",
        [](const BoundState& s, const WellGeometry& g, const std::string& parity) {
            return compute_moments(s, g, parse_parity(parity));
        },
        py::arg("state"), py::arg("geometry"), py::arg("parity") = "avg");

    m.def(
        "field_from_kOe", [](double kOe) { return FieldSpec::from_kOe(kOe).magnitude(); }, py::arg("kOe"),
        "Field magnitude in Gaussian atomic units.");
    m.def(
        "circular_correction",
        [](const MomentSet& ms, double kOe) { return circular_correction(ms, FieldSpec::from_kOe(kOe)).e_h2; },
        py::arg("moments"), py::arg("field_kOe"), "Quadratic field correction (hartree), gauge f = mu x.");
    m.def(
        "elliptic_correction",
        [](const MomentSet& ms, double kOe) { return elliptic_correction(ms, FieldSpec::from_kOe(kOe)).e_h2; },
        py::arg("moments"), py::arg("field_kOe"), "Quadratic field correction (hartree), gauge f = lambda x z + mu x.");

    m.def(
        "solve",
        [](const std::string& config_json) {
            const app::SolveResult r = app::solve(app::parse_config(config_json));
            py::list rows;
            for (const auto& row : r.rows) rows.append(row_to_dict(row));
            return rows;
        },
        py::arg("config_json") = "{}", "Spectrum rows for a JSON configuration.");
    m.def(
        "spectrum_csv", [](const std::string& config_json) { return app::spectrum_csv(app::solve(app::parse_config(config_json))); },
        py::arg("config_json") = "{}");
    m.def(
        "audit_reference_table",
        [](const std::string& parity) {
            const app::Table1Audit a = app::audit_table1(parse_parity(parity));
            py::dict d;
            d["ordering_ok"] = a.ordering_ok();
            d["cells_within_2meV"] = a.cells_within_2mev;
            d["report"] = a.report;
            return d;
        },
        py::arg("parity") = "avg");
}
