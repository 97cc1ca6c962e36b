#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "latwave/analysis.hpp"
#include "latwave/asymptotics.hpp"
#include "latwave/errors.hpp"
#include "latwave/experiment.hpp"
#include "latwave/fdm.hpp"
#include "latwave/model.hpp"
#include "latwave/specfun.hpp"

namespace py = pybind11;
using namespace latwave;

PYBIND11_MODULE(_core, m) {
    m.doc() = "anti-plane waves in a square mass-spring lattice";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<instability_error>(m, "InstabilityError", PyExc_RuntimeError);
    py::register_exception<io_error>(m, "IoError", PyExc_IOError);

    py::class_<LatticeParams>(m, "LatticeParams")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("mass"),
             py::arg("stiffness"), py::arg("spacing"), py::arg("load_amplitude"))
        .def_readonly("mass", &LatticeParams::mass)
        .def_readonly("stiffness", &LatticeParams::stiffness)
        .def_readonly("spacing", &LatticeParams::spacing)
        .def_readonly("load_amplitude", &LatticeParams::load_amplitude)
        .def("omega0", &LatticeParams::omega0)
        .def("c_star", &LatticeParams::c_star)
        .def("c_short", &LatticeParams::c_short);

    py::class_<SpectralPoint>(m, "SpectralPoint")
        .def(py::init([](double p, double qx, double qy) {
                 return SpectralPoint{p, qx, qy};
             }),
             py::arg("p") = 0.0, py::arg("qx") = 0.0, py::arg("qy") = 0.0)
        .def_readwrite("p", &SpectralPoint::p)
        .def_readwrite("qx", &SpectralPoint::qx)
        .def_readwrite("qy", &SpectralPoint::qy);

    m.def("dispersion_omega", &dispersion_omega, py::arg("params"), py::arg("qx"),
          py::arg("qy"));
    m.def("symbol_B", &symbol_B, py::arg("params"), py::arg("point"));
    m.def("symbol_B2m1_longwave", &symbol_B2m1_longwave, py::arg("params"),
          py::arg("point"));

    m.def("bessel_j", py::overload_cast<int, double>(&bessel_j), py::arg("n"),
          py::arg("x"));
    py::class_<BesselRow>(m, "BesselRow")
        .def_readonly("x", &BesselRow::x)
        .def_readonly("values", &BesselRow::values);
    m.def("bessel_j_row", &bessel_j_row, py::arg("n_max"), py::arg("x"));
    m.def("airy_ai", &airy_ai, py::arg("x"));
    m.def("airy_ai_prime", &airy_ai_prime, py::arg("x"));

    m.def("displacement_log", &displacement_log, py::arg("params"), py::arg("m"),
          py::arg("t"));
    m.def("velocity_bessel", &velocity_bessel, py::arg("params"), py::arg("m"),
          py::arg("t"));
    m.def("acceleration_bessel", &acceleration_bessel, py::arg("params"), py::arg("m"),
          py::arg("t"));
    m.def("velocity_airy", &velocity_airy, py::arg("params"), py::arg("m"), py::arg("t"));
    m.def("acceleration_airy", &acceleration_airy, py::arg("params"), py::arg("m"),
          py::arg("t"));
    m.def("front_kappa", &front_kappa, py::arg("params"), py::arg("m"), py::arg("t"));

    py::class_<EnvelopePoint>(m, "EnvelopePoint")
        .def_readonly("value", &EnvelopePoint::value)
        .def_readonly("m", &EnvelopePoint::m);
    m.def("velocity_airy_envelope", &velocity_airy_envelope, py::arg("params"),
          py::arg("t"));
    m.def("acceleration_airy_envelope", &acceleration_airy_envelope, py::arg("params"),
          py::arg("t"));
    m.def("front_width_airy", &front_width_airy, py::arg("params"), py::arg("t"),
          py::arg("threshold_fraction") = 0.05);
    m.def("shortwave_arrival_prediction", &shortwave_arrival_prediction,
          py::arg("params"), py::arg("m"));

    py::enum_<Symmetry>(m, "Symmetry")
        .value("quarter", Symmetry::quarter)
        .value("full", Symmetry::full);
    py::enum_<SourceStart>(m, "SourceStart")
        .value("smooth", SourceStart::smooth)
        .value("literal", SourceStart::literal);

    py::class_<Probe>(m, "Probe")
        .def(py::init([](int pm, int pn) {
                 return Probe{pm, pn};
             }),
             py::arg("m"), py::arg("n"))
        .def_readwrite("m", &Probe::m)
        .def_readwrite("n", &Probe::n);

    py::class_<FdmConfig>(m, "FdmConfig")
        .def(py::init<>())
        .def_readwrite("params", &FdmConfig::params)
        .def_readwrite("tau", &FdmConfig::tau)
        .def_readwrite("t_end", &FdmConfig::t_end)
        .def_readwrite("probes", &FdmConfig::probes)
        .def_readwrite("snapshot_times", &FdmConfig::snapshot_times)
        .def_readwrite("halo_margin", &FdmConfig::halo_margin)
        .def_readwrite("symmetry", &FdmConfig::symmetry)
        .def_readwrite("source_start", &FdmConfig::source_start)
        .def_readwrite("record_energy", &FdmConfig::record_energy)
        .def_readwrite("energy_stride", &FdmConfig::energy_stride)
        .def_readwrite("enforce_cfl", &FdmConfig::enforce_cfl)
        .def("validate", &FdmConfig::validate)
        .def("domain_halfwidth", &FdmConfig::domain_halfwidth)
        .def("step_count", &FdmConfig::step_count);

    py::class_<ProbeSeries>(m, "ProbeSeries")
        .def_readonly("m", &ProbeSeries::m)
        .def_readonly("n", &ProbeSeries::n)
        .def_readonly("times", &ProbeSeries::times)
        .def_readonly("u", &ProbeSeries::u)
        .def_readonly("v", &ProbeSeries::v)
        .def_readonly("w", &ProbeSeries::w);

    py::class_<RowSnapshot>(m, "RowSnapshot")
        .def_readonly("t", &RowSnapshot::t)
        .def_readonly("u", &RowSnapshot::u)
        .def_readonly("v", &RowSnapshot::v)
        .def_readonly("w", &RowSnapshot::w);

    py::class_<EnergySample>(m, "EnergySample")
        .def_readonly("t", &EnergySample::t)
        .def_readonly("kinetic", &EnergySample::kinetic)
        .def_readonly("potential", &EnergySample::potential)
        .def_readonly("work", &EnergySample::work);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("probes", &RunResult::probes)
        .def_readonly("snapshots", &RunResult::snapshots)
        .def_readonly("energy", &RunResult::energy);

    m.def("run", &run, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<FitReport>(m, "FitReport")
        .def_readonly("exponent", &FitReport::exponent)
        .def_readonly("intercept", &FitReport::intercept)
        .def_readonly("r_squared", &FitReport::r_squared)
        .def_readonly("t_min", &FitReport::t_min)
        .def_readonly("t_max", &FitReport::t_max)
        .def_readonly("n_points", &FitReport::n_points);
    m.def(
        "peak_amplitude_decay",
        [](const std::vector<double>& t, const std::vector<double>& amplitude) {
            return peak_amplitude_decay(t, amplitude);
        },
        py::arg("t"), py::arg("amplitude"));

    py::class_<FrontWidth>(m, "FrontWidth")
        .def_readonly("t", &FrontWidth::t)
        .def_readonly("width", &FrontWidth::width)
        .def_readonly("threshold_fraction", &FrontWidth::threshold_fraction);
    m.def(
        "front_width",
        [](const std::vector<double>& m_axis, const std::vector<double>& v, double t,
           double omega0, double threshold_fraction) {
            return front_width(m_axis, v, t, omega0, threshold_fraction);
        },
        py::arg("m_axis"), py::arg("v"), py::arg("t"), py::arg("omega0"),
        py::arg("threshold_fraction") = 0.05);

    py::class_<Series>(m, "Series")
        .def(py::init([](std::vector<double> t, std::vector<double> y) {
                 return Series{std::move(t), std::move(y)};
             }),
             py::arg("t"), py::arg("y"))
        .def_readwrite("t", &Series::t)
        .def_readwrite("y", &Series::y);
    py::class_<SeriesDiff>(m, "SeriesDiff")
        .def_readonly("max_abs_diff", &SeriesDiff::max_abs_diff)
        .def_readonly("rel_peak_diff", &SeriesDiff::rel_peak_diff);
    m.def("compare_series", &compare_series, py::arg("a"), py::arg("b"), py::arg("t_lo"),
          py::arg("t_hi"));

    m.def(
        "shortwave_arrival",
        [](const std::vector<double>& times, const std::vector<double>& v, int probe_m,
           const LatticeParams& params) {
            return shortwave_arrival(times, v, probe_m, params);
        },
        py::arg("times"), py::arg("v"), py::arg("m"), py::arg("params"));
    m.def(
        "shortwave_arrival_probe",
        [](const ProbeSeries& series, const LatticeParams& params) {
            return shortwave_arrival(series, params);
        },
        py::arg("series"), py::arg("params"));

    py::enum_<ArtifactKind>(m, "ArtifactKind")
        .value("probe_csv", ArtifactKind::probe_csv)
        .value("snapshot_csv", ArtifactKind::snapshot_csv)
        .value("fit_json", ArtifactKind::fit_json)
        .value("figure_svg", ArtifactKind::figure_svg);
    py::class_<ExperimentSpec>(m, "ExperimentSpec")
        .def_readonly("name", &ExperimentSpec::name)
        .def_readonly("params", &ExperimentSpec::params)
        .def_readonly("tau", &ExperimentSpec::tau)
        .def_readonly("t_end", &ExperimentSpec::t_end)
        .def_readonly("probes", &ExperimentSpec::probes)
        .def_readonly("snapshot_times", &ExperimentSpec::snapshot_times)
        .def_readonly("outputs", &ExperimentSpec::outputs)
        .def_readonly("halo_margin", &ExperimentSpec::halo_margin)
        .def_readonly("symmetry", &ExperimentSpec::symmetry)
        .def("echo_lines", &ExperimentSpec::echo_lines);
    py::class_<ExperimentSummary>(m, "ExperimentSummary")
        .def_readonly("name", &ExperimentSummary::name)
        .def_readonly("files", &ExperimentSummary::files);
    m.def("load_config", &load_config, py::arg("path"));
    m.def(
        "run_experiment",
        [](const ExperimentSpec& spec, const std::string& out_dir) {
            return run_experiment(spec, resolve_out_dir(out_dir));
        },
        py::arg("spec"), py::arg("out_dir") = std::string(),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_experiment_file",
        [](const std::string& config_path, const std::string& out_dir) {
            return run_experiment(load_config(config_path), resolve_out_dir(out_dir));
        },
        py::arg("config_path"), py::arg("out_dir") = std::string(),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "reproduce",
        [](const std::string& study, const std::string& out_dir) {
            return reproduce(study, resolve_out_dir(out_dir));
        },
        py::arg("study"), py::arg("out_dir") = std::string(),
        py::call_guard<py::gil_scoped_release>());
}
