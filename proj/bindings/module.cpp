// Python bindings for the core operations: field preparations, closed-form
// observables, the classical-drive limit, scenario runs and the
// brute-force verification entry point.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramansim/analytic.hpp"
#include "ramansim/errors.hpp"
#include "ramansim/model.hpp"
#include "ramansim/photon_statistics.hpp"
#include "ramansim/revivals.hpp"
#include "ramansim/scenario.hpp"
#include "ramansim/semiclassical.hpp"
#include "ramansim/verify.hpp"

namespace py = pybind11;
using namespace ramansim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Raman coupled-model simulator (effective two-level atom, two cavity modes)";

    py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);

    py::enum_<FieldKind>(m, "FieldKind")
        .value("fock", FieldKind::fock)
        .value("coherent", FieldKind::coherent)
        .value("thermal", FieldKind::thermal);

    py::class_<PhotonDistribution>(m, "PhotonDistribution")
        .def_readonly("kind", &PhotonDistribution::kind)
        .def_readonly("mean", &PhotonDistribution::mean)
        .def_readonly("weights", &PhotonDistribution::weights)
        .def_readonly("tail_bound", &PhotonDistribution::tail_bound)
        .def_property_readonly("n_max", &PhotonDistribution::n_max)
        .def("weight", &PhotonDistribution::weight, py::arg("n"))
        .def("weight_sum", &PhotonDistribution::weight_sum)
        .def("mean_occupation", &PhotonDistribution::mean_occupation)
        .def("__repr__", [](const PhotonDistribution& d) {
            const char* names[] = {"fock", "coherent", "thermal"};
            return "PhotonDistribution(" + std::string(names[static_cast<int>(d.kind)]) + ", " +
                   std::to_string(d.mean) + ", n_max=" + std::to_string(d.n_max()) + ")";
        });

    m.def("fock_dist", &fock_dist, py::arg("photons"));
    m.def("coherent_dist", &coherent_dist, py::arg("nbar"),
          py::arg("epsilon") = kDefaultTailEpsilon);
    m.def("thermal_dist", &thermal_dist, py::arg("nbar"),
          py::arg("epsilon") = kDefaultTailEpsilon);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init())
        .def(py::init([](double r, double delta_over_g1) {
                 return ModelParams::from_ratio(r, delta_over_g1);
             }),
             py::arg("r"), py::arg("delta_over_g1") = 10.0)
        .def_readwrite("g1", &ModelParams::g1)
        .def_readwrite("g2", &ModelParams::g2)
        .def_readwrite("delta", &ModelParams::delta)
        .def_readwrite("omega1", &ModelParams::omega1)
        .def_readwrite("omega2", &ModelParams::omega2)
        .def_property_readonly("ratio", &ModelParams::ratio)
        .def("dispersive_ok", &ModelParams::dispersive_ok);

    py::class_<EvolutionCoeffs>(m, "EvolutionCoeffs")
        .def_readonly("k1", &EvolutionCoeffs::k1)
        .def_readonly("k2", &EvolutionCoeffs::k2)
        .def_readonly("rabi", &EvolutionCoeffs::rabi);

    py::class_<ReducedState>(m, "ReducedState")
        .def_readonly("pop_1n", &ReducedState::pop_1n)
        .def_readonly("pop_2nm1", &ReducedState::pop_2nm1)
        .def_readonly("coherence", &ReducedState::coherence)
        .def_readonly("free_phase", &ReducedState::free_phase);

    m.def("rabi_frequency", &rabi_frequency, py::arg("n1"), py::arg("n2"), py::arg("params"));
    m.def("evolution_coeffs", &evolution_coeffs, py::arg("n1"), py::arg("n2"), py::arg("params"),
          py::arg("tau"));
    m.def("atomic_inversion", &atomic_inversion, py::arg("mode1"), py::arg("mode2"),
          py::arg("params"), py::arg("tau"));
    m.def("reduced_atom_mode1", &reduced_atom_mode1, py::arg("fock_n"), py::arg("nbar"),
          py::arg("params"), py::arg("tau"), py::arg("epsilon") = kDefaultTailEpsilon);
    m.def("negativity", &negativity, py::arg("fock_n"), py::arg("nbar"), py::arg("params"),
          py::arg("tau"), py::arg("epsilon") = kDefaultTailEpsilon);
    m.def("linear_entropy", &linear_entropy, py::arg("fock_n"), py::arg("nbar"), py::arg("params"),
          py::arg("tau"), py::arg("epsilon") = kDefaultTailEpsilon);

    m.def("semiclassical_period", &semiclassical::period, py::arg("fock_n"), py::arg("ratio"));
    m.def("semiclassical_inversion", &semiclassical::inversion, py::arg("fock_n"),
          py::arg("ratio"), py::arg("tau"));
    m.def("semiclassical_negativity", &semiclassical::negativity, py::arg("fock_n"),
          py::arg("ratio"), py::arg("tau"));

    py::enum_<ModelKind>(m, "ModelKind")
        .value("quantum", ModelKind::quantum)
        .value("semiclassical", ModelKind::semiclassical);

    py::enum_<ObservableKind>(m, "ObservableKind")
        .value("inversion", ObservableKind::inversion)
        .value("negativity", ObservableKind::negativity)
        .value("linear_entropy", ObservableKind::linear_entropy);

    py::class_<PrepSpec>(m, "PrepSpec")
        .def(py::init())
        .def(py::init([](const std::string& text) { return parse_prep(text); }), py::arg("text"))
        .def_readwrite("kind", &PrepSpec::kind)
        .def_readwrite("value", &PrepSpec::value)
        .def("__repr__", [](const PrepSpec& p) { return to_string(p); });

    py::class_<Scenario>(m, "Scenario")
        .def(py::init())
        .def_readwrite("model", &Scenario::model)
        .def_readwrite("mode1", &Scenario::mode1)
        .def_readwrite("mode2", &Scenario::mode2)
        .def_readwrite("ratio", &Scenario::ratio)
        .def_readwrite("delta_over_g1", &Scenario::delta_over_g1)
        .def_readwrite("observables", &Scenario::observables)
        .def_readwrite("tau_max", &Scenario::tau_max)
        .def_readwrite("steps", &Scenario::steps)
        .def_readwrite("epsilon", &Scenario::epsilon)
        .def("validate", &Scenario::validate)
        .def("rephasing_time", &Scenario::rephasing_time)
        .def("resolved_tau_max", &Scenario::resolved_tau_max);

    py::class_<TimeSeries>(m, "TimeSeries")
        .def_readonly("tau", &TimeSeries::tau)
        .def_property_readonly("columns",
                               [](const TimeSeries& ts) {
                                   py::dict d;
                                   for (const auto& [label, values] : ts.columns)
                                       d[py::str(label)] = values;
                                   return d;
                               });

    m.def("run_scenario", &run_scenario, py::arg("scenario"));
    m.def("preset_scenario", [](const std::string& name) { return preset_scenario(name); },
          py::arg("name"));
    m.def("preset_names", &preset_names);

    py::class_<VerifyReport::Entry>(m, "VerifyEntry")
        .def_readonly("observable", &VerifyReport::Entry::observable)
        .def_readonly("max_abs_deviation", &VerifyReport::Entry::max_abs_deviation);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("entries", &VerifyReport::entries)
        .def_readonly("n1_max", &VerifyReport::n1_max)
        .def_readonly("n2_max", &VerifyReport::n2_max)
        .def_readonly("tolerance", &VerifyReport::tolerance)
        .def("ok", &VerifyReport::ok)
        .def("worst", &VerifyReport::worst);

    m.def("verify_scenario", &verify_scenario, py::arg("scenario"), py::arg("n1_max") = 0,
          py::arg("n2_max") = 0);

    m.def(
        "detect_revivals",
        [](const std::vector<double>& tau, const std::vector<double>& values, int window,
           double prominence) { return detect_revivals(tau, values, window, prominence); },
        py::arg("tau"), py::arg("values"), py::arg("window"), py::arg("prominence") = 0.5);
    m.def(
        "detect_revival_indices",
        [](const std::vector<double>& values, int window, double prominence) {
            return detect_revival_indices(values, window, prominence);
        },
        py::arg("values"), py::arg("window"), py::arg("prominence") = 0.5);
}
