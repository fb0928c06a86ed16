#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rieszdisk/disk.hpp"
#include "rieszdisk/specfun.hpp"
#include "rieszdisk/fields.hpp"
#include "rieszdisk/oracle.hpp"
#include "rieszdisk/ring.hpp"
#include "rieszdisk/support.hpp"

namespace py = pybind11;
using namespace rieszdisk;

namespace {

RadialFunction field_from_spec(const std::string& spec, const RieszParams& params) {
    return FieldSpec::parse(spec).to_radial(params);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted Riesz equilibrium measures on the hyperdisk";

    py::class_<RieszParams>(m, "RieszParams")
        .def_static("from_lambda", &RieszParams::from_lambda, py::arg("d"), py::arg("lam"))
        .def_static("from_s", &RieszParams::from_s, py::arg("d"), py::arg("s"))
        .def_readonly("d", &RieszParams::d)
        .def_readonly("lam", &RieszParams::lambda)
        .def_readonly("s", &RieszParams::s)
        .def("__repr__", [](const RieszParams& p) {
            return "RieszParams(d=" + std::to_string(p.d) + ", lambda=" +
                   std::to_string(p.lambda) + ", s=" + std::to_string(p.s) + ")";
        });

    // special functions
    m.def("gamma_fn", &gamma_fn, py::arg("x"));
    m.def("beta_fn", &beta_fn, py::arg("a"), py::arg("b"));
    m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("n"));
    m.def("digamma", &digamma, py::arg("x"));
    m.def("incomplete_beta", &incomplete_beta, py::arg("z"), py::arg("a"), py::arg("b"));
    m.def(
        "gauss_2f1",
        [](double a, double b, double c, double z) { return gauss_2f1(a, b, c, z); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    // disk basics
    m.def("disk_capacity", &disk_capacity, py::arg("params"), py::arg("R"));
    m.def("disk_robin_constant", &disk_robin_constant, py::arg("params"), py::arg("R"));
    m.def("equilibrium_density", &equilibrium_density, py::arg("params"), py::arg("R"),
          py::arg("r"));

    // closed-form fields
    py::class_<MonomialField>(m, "MonomialField")
        .def(py::init<double, double>(), py::arg("q"), py::arg("alpha"))
        .def_readonly("q", &MonomialField::q)
        .def_readonly("alpha", &MonomialField::alpha);
    py::class_<PointChargeField>(m, "PointChargeField")
        .def(py::init<double, double>(), py::arg("q"), py::arg("h"))
        .def_readonly("q", &PointChargeField::q)
        .def_readonly("h", &PointChargeField::h);
    m.def("monomial_support_radius", &monomial_support_radius);
    m.def("monomial_density", &monomial_density);
    m.def("point_charge_density", &point_charge_density);
    m.def("h_minus", &h_minus);
    m.def("p_of_h", &p_of_h);
    m.def("coulomb3d_p", &coulomb3d_p, py::arg("q"), py::arg("h"));
    m.def("coulomb3d_density", &coulomb3d_density, py::arg("q"), py::arg("h"), py::arg("r"));
    m.def("newtonian_p", &newtonian_p, py::arg("m"), py::arg("q"), py::arg("h"));
    m.def("newtonian_density", &newtonian_density, py::arg("m"), py::arg("q"), py::arg("h"),
          py::arg("r"));

    // support selection
    m.def(
        "critical_radius",
        [](const std::string& field, const RieszParams& params) {
            return critical_radius(field_from_spec(field, params), params);
        },
        py::arg("field"), py::arg("params"));
    m.def(
        "ms_functional",
        [](const std::string& field, const RieszParams& params, double R) {
            return ms_functional(field_from_spec(field, params), params, R);
        },
        py::arg("field"), py::arg("params"), py::arg("R"));
    py::class_<CriticalHeight>(m, "CriticalHeight")
        .def_readonly("h_minus", &CriticalHeight::h_minus)
        .def_readonly("h_plus", &CriticalHeight::h_plus)
        .def_readonly("h_plus_candidates", &CriticalHeight::h_plus_candidates)
        .def_readonly("threshold", &CriticalHeight::threshold)
        .def_readonly("root_found", &CriticalHeight::root_found);
    m.def("critical_height", &critical_height, py::arg("field"), py::arg("params"));

    // verification report
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("max_potential_deviation_on_support",
                      &VerificationReport::max_potential_deviation_on_support)
        .def_readonly("min_inequality_slack_off_support",
                      &VerificationReport::min_inequality_slack_off_support)
        .def_readonly("mass_error", &VerificationReport::mass_error)
        .def_readonly("min_density", &VerificationReport::min_density)
        .def_readonly("passed", &VerificationReport::passed)
        .def("to_json", &VerificationReport::to_json);

    // disk solve
    py::class_<EquilibriumResult>(m, "EquilibriumResult")
        .def_readonly("F_Q", &EquilibriumResult::F_Q)
        .def_readonly("C_Q", &EquilibriumResult::C_Q)
        .def_readonly("mass", &EquilibriumResult::mass)
        .def_readonly("min_density", &EquilibriumResult::min_density)
        .def_readonly("valid", &EquilibriumResult::valid)
        .def_property_readonly("R",
                               [](const EquilibriumResult& r) { return r.support.b; })
        .def_property_readonly("grid_r",
                               [](const EquilibriumResult& r) { return r.grid.r; })
        .def_property_readonly("grid_f",
                               [](const EquilibriumResult& r) { return r.grid.f; })
        .def("density", [](const EquilibriumResult& r, double x) { return r.density(x); })
        .def("potential", [](const EquilibriumResult& r, double x) {
            return potential_of_density(resample_density(r.density), r.params, x);
        });
    m.def(
        "solve_on_disk",
        [](const std::string& field, const RieszParams& params, double R, int grid_n) {
            return solve_on_disk(field_from_spec(field, params), params, R, grid_n);
        },
        py::arg("field"), py::arg("params"), py::arg("R"), py::arg("grid_n") = 128);
    m.def(
        "verify_disk",
        [](const EquilibriumResult& res, const std::string& field) {
            return verify(res, field_from_spec(field, res.params));
        },
        py::arg("result"), py::arg("field"));

    // ring solve
    py::class_<RingSolution>(m, "RingSolution")
        .def_readonly("F_Q", &RingSolution::F_Q)
        .def_readonly("a", &RingSolution::a)
        .def_readonly("b", &RingSolution::b)
        .def_readonly("mass", &RingSolution::mass)
        .def_readonly("residual_norm", &RingSolution::residual_norm)
        .def_readonly("condition", &RingSolution::condition)
        .def_readonly("min_density", &RingSolution::min_density)
        .def_readonly("nonnegative", &RingSolution::nonnegative)
        .def_property_readonly("grid_r", [](const RingSolution& r) { return r.grid.r; })
        .def_property_readonly("grid_f", [](const RingSolution& r) { return r.grid.f; })
        .def("density", [](const RingSolution& r, double x) { return r.density(x); })
        .def("potential", [](const RingSolution& r, double x) {
            return potential_of_density(resample_density(r.density), r.params, x);
        });
    m.def(
        "ring_solve",
        [](const std::string& field, const RieszParams& params, double a, double b, int nodes) {
            NystromConfig config;
            config.n_nodes = nodes;
            return ring_solve(field_from_spec(field, params), params, a, b, config);
        },
        py::arg("field"), py::arg("params"), py::arg("a"), py::arg("b"),
        py::arg("nodes") = 128);
    m.def(
        "verify_ring", [](const RingSolution& res) { return verify(res); }, py::arg("result"));
}
