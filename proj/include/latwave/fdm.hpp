// Direct numerical solution of the lattice equations of motion by the
// explicit two-layer scheme, on a truncated domain sized so that boundary
// effects stay below roundoff for the requested duration.

#pragma once

#include <vector>

#include "latwave/errors.hpp"
#include "latwave/model.hpp"

namespace latwave {

struct Probe {
    int m = 0;
    int n = 0;
};

enum class Symmetry {
    quarter,  // store [0, N]^2, mirror across both axes (default)
    full,     // store [-N, N]^2
};

/// How the step load enters at the very first update. `smooth` gives the
/// turn-on half weight, the trapezoidal reading of the step that keeps
/// the scheme second-order in tau. `literal` applies full weight from the
/// first update onward, the verbatim reading of the difference scheme.
enum class SourceStart {
    smooth,
    literal,
};

struct FdmConfig {
    LatticeParams params;
    double tau = 0.07;
    double t_end = 0.0;
    std::vector<Probe> probes;
    std::vector<double> snapshot_times;   // row n = 0 captures, rounded to steps
    int halo_margin = 8;
    Symmetry symmetry = Symmetry::quarter;
    SourceStart source_start = SourceStart::smooth;
    bool record_energy = false;
    int energy_stride = 0;                // steps between samples; 0 = about one per 1/omega0
    bool enforce_cfl = true;              // stability tests of the unstable regime opt out

    /// Throws validation_error listing every violation: non-positive tau or
    /// t_end, tau*omega0 > 0.7 (unless enforce_cfl is off), probes outside
    /// the truncated domain, snapshot times past t_end.
    void validate() const;

    /// Truncation half-width N = ceil(t_end*omega0) + halo_margin; the wave
    /// content that could reach the boundary within t_end is below roundoff.
    int domain_halfwidth() const;

    /// Number of updates R = round(t_end / tau).
    int step_count() const;
};

/// Two time layers of the displacement field. In quarter mode only
/// m, n >= 0 is stored and lookups fold indices, using the symmetry
/// u_{m,n} = u_{|m|,|n|} of the point-loaded lattice.
struct WaveField {
    int N = 0;
    Symmetry symmetry = Symmetry::quarter;
    int r = 0;                   // step index of layer `curr`
    std::vector<double> prev;    // layer r - 1
    std::vector<double> curr;    // layer r

    WaveField() = default;
    WaveField(int halfwidth, Symmetry mode);

    int side() const { return symmetry == Symmetry::quarter ? N + 1 : 2 * N + 1; }
    std::size_t index(int m, int n) const;

    /// u_{m,n} of the current layer; indices are folded in quarter mode and
    /// nodes outside the truncated domain read as 0.
    double at(int m, int n) const;
    double at_prev(int m, int n) const;
};

/// Advances the field one layer in place (curr becomes prev). Throws
/// instability_error if max|u| exceeds 1e12 * |Q0|/k.
void step(WaveField& field, const FdmConfig& cfg);

/// Per-node history at one probe. v and w are centered first and second
/// differences of u, so they are two samples shorter; v[i] and w[i]
/// belong to times[i + 1].
struct ProbeSeries {
    int m = 0;
    int n = 0;
    std::vector<double> times;
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> w;
};

/// Row n = 0 at one instant: displacement plus centered-difference
/// velocity and acceleration for m = 0 .. N. The acceleration row rides
/// along because the decay study fits both envelope exponents from the
/// same captures.
struct RowSnapshot {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> w;
};

/// Staggered-time energy accounting: kinetic at the half step between the
/// two layers, potential averaged over them, work done by the load so far.
struct EnergySample {
    double t = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;
    double work = 0.0;
};

/// Energies of the stored pair of layers, with quarter-mode node and bond
/// multiplicities folded in. work = Q0 * u_{0,0} of the current layer.
EnergySample energy_balance(const WaveField& field, const FdmConfig& cfg);

struct RunResult {
    std::vector<ProbeSeries> probes;
    std::vector<RowSnapshot> snapshots;
    std::vector<EnergySample> energy;
    WaveField field;  // final state
};

/// Runs the scheme from a lattice at rest. Deterministic: identical
/// configs give bit-identical results.
RunResult run(const FdmConfig& cfg);

}  // namespace latwave
