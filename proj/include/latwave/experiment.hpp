// Experiment orchestration: config parsing, the built-in studies, and
// persistence of probe/snapshot CSVs, fit JSON, and figure SVGs.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latwave/fdm.hpp"

namespace latwave {

enum class ArtifactKind {
    probe_csv,
    snapshot_csv,
    fit_json,
    figure_svg,
};

struct ExperimentSpec {
    std::string name;
    LatticeParams params;
    double tau = 0.07;
    double t_end = 0.0;
    std::vector<Probe> probes;
    std::vector<double> snapshot_times;
    std::vector<ArtifactKind> outputs = {ArtifactKind::probe_csv,
                                         ArtifactKind::snapshot_csv};
    int halo_margin = 8;
    Symmetry symmetry = Symmetry::quarter;

    FdmConfig to_fdm_config() const;

    /// Canonical key=value echo of this spec, embedded in every output file
    /// header; parsing it back reproduces the spec.
    std::vector<std::string> echo_lines() const;
};

/// Parses the flat key=value config format. Keys: name, mass, stiffness,
/// spacing, load, tau, t_end, halo, symmetry (quarter|full), repeated
/// probe=m,n, repeated snapshot=t, outputs (comma list of probe_csv,
/// snapshot_csv, fit_json, figure_svg). Unknown keys, malformed values,
/// and every constraint violation are collected and thrown together as a
/// validation_error.
ExperimentSpec parse_config(std::istream& in, const std::string& origin);

/// Reads and parses a config file; file-open failure is an io_error.
ExperimentSpec load_config(const std::string& path);

struct ExperimentSummary {
    std::string name;
    std::vector<std::string> files;  // paths written, in emission order
};

/// Runs the spec and writes its artifacts under out_dir/<name>/.
/// Rerunning an identical spec rewrites byte-identical files.
ExperimentSummary run_experiment(const ExperimentSpec& spec, const std::string& out_dir);

/// Built-in studies: "figures-1-2-3" (oscillogram overlays at m = 20),
/// "decay-scaling" (envelope decay exponents and front widths, fit JSON),
/// "shortwave-arrival" (detector vs prediction at m = 20 and 40).
/// Unknown names are a validation_error.
ExperimentSummary reproduce(const std::string& study, const std::string& out_dir);

/// Output directory resolution: explicit value if nonempty, else the
/// LATTICEWAVE_OUTDIR environment variable, else "out".
std::string resolve_out_dir(const std::string& explicit_dir);

}  // namespace latwave
