#include "latwave/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace latwave {

namespace {

double instability_threshold(const LatticeParams& params) {
    const double q = std::abs(params.load_amplitude);
    return 1e12 * (q > 0.0 ? q : 1.0) / params.stiffness;
}

std::string format_issue(const char* fmt, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    return buf;
}

}  // namespace

void FdmConfig::validate() const {
    std::vector<std::string> issues;
    const double w0 = params.omega0();
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        issues.push_back("time step tau must be positive and finite");
    } else if (enforce_cfl && tau * w0 > 0.7 + 1e-12) {
        issues.push_back(format_issue(
            "tau*omega0 = %.6g exceeds the stability margin 0.7 (CFL bound 1/sqrt(2))",
            tau * w0));
    }
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        issues.push_back("t_end must be positive and finite");
    }
    if (halo_margin < 0) {
        issues.push_back("halo_margin must be nonnegative");
    }
    if (energy_stride < 0) {
        issues.push_back("energy_stride must be nonnegative");
    }
    if (t_end > 0.0 && std::isfinite(t_end) && halo_margin >= 0) {
        const int N = domain_halfwidth();
        for (const auto& probe : probes) {
            if (std::abs(probe.m) > N || std::abs(probe.n) > N) {
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "probe (%d, %d) lies outside the truncated domain (N = %d)",
                              probe.m, probe.n, N);
                issues.push_back(buf);
            }
        }
        for (const auto t : snapshot_times) {
            if (!(t >= 0.0) || t > t_end + 0.5 * tau) {
                issues.push_back(
                    format_issue("snapshot time %.6g outside [0, t_end = %.6g]", t, t_end));
            }
        }
    }
    if (!issues.empty()) {
        throw validation_error(std::move(issues));
    }
}

int FdmConfig::domain_halfwidth() const {
    return static_cast<int>(std::ceil(t_end * params.omega0())) + halo_margin;
}

int FdmConfig::step_count() const {
    return static_cast<int>(std::llround(t_end / tau));
}

WaveField::WaveField(int halfwidth, Symmetry mode) : N(halfwidth), symmetry(mode) {
    if (halfwidth < 0) {
        throw std::invalid_argument("field half-width must be nonnegative");
    }
    const std::size_t count = static_cast<std::size_t>(side()) * side();
    prev.assign(count, 0.0);
    curr.assign(count, 0.0);
}

std::size_t WaveField::index(int m, int n) const {
    if (symmetry == Symmetry::quarter) {
        return static_cast<std::size_t>(m) * (N + 1) + n;
    }
    return static_cast<std::size_t>(m + N) * (2 * N + 1) + (n + N);
}

double WaveField::at(int m, int n) const {
    const int am = symmetry == Symmetry::quarter ? std::abs(m) : m;
    const int an = symmetry == Symmetry::quarter ? std::abs(n) : n;
    if (std::abs(m) > N || std::abs(n) > N) return 0.0;
    return curr[index(am, an)];
}

double WaveField::at_prev(int m, int n) const {
    const int am = symmetry == Symmetry::quarter ? std::abs(m) : m;
    const int an = symmetry == Symmetry::quarter ? std::abs(n) : n;
    if (std::abs(m) > N || std::abs(n) > N) return 0.0;
    return prev[index(am, an)];
}

namespace {

// One stencil row update. The neighbour sum is grouped as
// (m-neighbours) + (n-neighbours); together with the commutativity of
// floating-point addition this keeps the update bit-exactly symmetric
// under m <-> -m, n <-> -n and m <-> n, so quarter-plane storage
// reproduces the full-plane run exactly.
inline double stencil(double um, double up, double un_lo, double un_hi, double uc,
                      double uprev, double c2) {
    const double lap = (um + up) + (un_lo + un_hi) - 4.0 * uc;
    return 2.0 * uc - uprev + c2 * lap;
}

double step_quarter(WaveField& f, double c2) {
    const int N = f.N;
    const int stride = N + 1;
    const double* u = f.curr.data();
    double* next = f.prev.data();
    double peak = 0.0;
    if (N == 0) {
        next[0] = stencil(0.0, 0.0, 0.0, 0.0, u[0], next[0], c2);
        return std::abs(next[0]);
    }
    for (int m = 0; m <= N; ++m) {
        const double* row = u + static_cast<std::size_t>(m) * stride;
        // mirrored across the axes: the m-1 neighbour of row 0 is row 1
        const double* row_lo = (m == 0) ? u + stride : row - stride;
        const double* row_hi = (m == N) ? nullptr : row + stride;
        double* out = next + static_cast<std::size_t>(m) * stride;

        const double hi0 = row_hi ? row_hi[0] : 0.0;
        out[0] = stencil(row_lo[0], hi0, row[1], row[1], row[0], out[0], c2);
        peak = std::max(peak, std::abs(out[0]));
        for (int n = 1; n < N; ++n) {
            const double hin = row_hi ? row_hi[n] : 0.0;
            out[n] = stencil(row_lo[n], hin, row[n - 1], row[n + 1], row[n], out[n], c2);
            peak = std::max(peak, std::abs(out[n]));
        }
        const double hiN = row_hi ? row_hi[N] : 0.0;
        out[N] = stencil(row_lo[N], hiN, row[N - 1], 0.0, row[N], out[N], c2);
        peak = std::max(peak, std::abs(out[N]));
    }
    return peak;
}

double step_full(WaveField& f, double c2) {
    const int N = f.N;
    const int stride = 2 * N + 1;
    const double* u = f.curr.data();
    double* next = f.prev.data();
    double peak = 0.0;
    for (int i = 0; i < stride; ++i) {
        const double* row = u + static_cast<std::size_t>(i) * stride;
        const double* row_lo = (i == 0) ? nullptr : row - stride;
        const double* row_hi = (i == stride - 1) ? nullptr : row + stride;
        double* out = next + static_cast<std::size_t>(i) * stride;
        for (int j = 0; j < stride; ++j) {
            const double lo = row_lo ? row_lo[j] : 0.0;
            const double hi = row_hi ? row_hi[j] : 0.0;
            const double left = (j == 0) ? 0.0 : row[j - 1];
            const double right = (j == stride - 1) ? 0.0 : row[j + 1];
            out[j] = stencil(lo, hi, left, right, row[j], out[j], c2);
            peak = std::max(peak, std::abs(out[j]));
        }
    }
    return peak;
}

}  // namespace

void step(WaveField& f, const FdmConfig& cfg) {
    const double w0 = cfg.params.omega0();
    const double c2 = (cfg.tau * w0) * (cfg.tau * w0);
    double peak = (f.symmetry == Symmetry::quarter) ? step_quarter(f, c2)
                                                    : step_full(f, c2);

    const double weight =
        (f.r == 0 && cfg.source_start == SourceStart::smooth) ? 0.5 : 1.0;
    double& origin = f.prev[f.index(0, 0)];
    origin += weight * cfg.tau * cfg.tau * cfg.params.load_amplitude / cfg.params.mass;
    peak = std::max(peak, std::abs(origin));

    std::swap(f.prev, f.curr);
    ++f.r;

    const double threshold = instability_threshold(cfg.params);
    if (!(peak <= threshold)) {
        throw instability_error(peak, threshold, f.r, f.r * cfg.tau);
    }
}

EnergySample energy_balance(const WaveField& f, const FdmConfig& cfg) {
    const double M = cfg.params.mass;
    const double k = cfg.params.stiffness;
    const bool quarter = f.symmetry == Symmetry::quarter;
    const int N = f.N;
    const int lo = quarter ? 0 : -N;

    // multiplicity of a stored node or bond under the fourfold mirror
    auto node_weight = [&](int m, int n) {
        if (!quarter) return 1.0;
        return (m == 0 ? 1.0 : 2.0) * (n == 0 ? 1.0 : 2.0);
    };

    double kinetic = 0.0;
    for (int m = lo; m <= N; ++m) {
        for (int n = lo; n <= N; ++n) {
            const double dv = (f.curr[f.index(m, n)] - f.prev[f.index(m, n)]) / cfg.tau;
            kinetic += node_weight(m, n) * dv * dv;
        }
    }
    kinetic *= 0.5 * M;

    auto potential_of = [&](const std::vector<double>& layer) {
        double sum = 0.0;
        for (int m = lo; m < N; ++m) {
            for (int n = lo; n <= N; ++n) {
                const double d = layer[f.index(m + 1, n)] - layer[f.index(m, n)];
                const double w = quarter ? (n == 0 ? 2.0 : 4.0) : 1.0;
                sum += w * d * d;
            }
        }
        for (int m = lo; m <= N; ++m) {
            for (int n = lo; n < N; ++n) {
                const double d = layer[f.index(m, n + 1)] - layer[f.index(m, n)];
                const double w = quarter ? (m == 0 ? 2.0 : 4.0) : 1.0;
                sum += w * d * d;
            }
        }
        return 0.5 * k * sum;
    };

    EnergySample sample;
    sample.t = f.r * cfg.tau;
    sample.kinetic = kinetic;
    sample.potential = 0.5 * (potential_of(f.curr) + potential_of(f.prev));
    sample.work = cfg.params.load_amplitude * f.curr[f.index(0, 0)];
    return sample;
}

RunResult run(const FdmConfig& cfg) {
    cfg.validate();
    const int N = cfg.domain_halfwidth();
    const int R = cfg.step_count();

    RunResult result;
    result.field = WaveField(N, cfg.symmetry);
    WaveField& f = result.field;

    struct ProbeSlot {
        std::size_t idx;
        ProbeSeries series;
    };
    std::vector<ProbeSlot> slots;
    slots.reserve(cfg.probes.size());
    for (const auto& probe : cfg.probes) {
        ProbeSlot slot;
        const int am = cfg.symmetry == Symmetry::quarter ? std::abs(probe.m) : probe.m;
        const int an = cfg.symmetry == Symmetry::quarter ? std::abs(probe.n) : probe.n;
        slot.idx = f.index(am, an);
        slot.series.m = probe.m;
        slot.series.n = probe.n;
        slot.series.times.reserve(R + 1);
        slot.series.u.reserve(R + 1);
        slots.push_back(std::move(slot));
    }

    // snapshots need the layer after their own to form the centered
    // velocity and acceleration rows
    struct SnapshotSlot {
        int r_target;
        double t_actual;
        std::vector<double> u_row;     // layer r_target
        std::vector<double> prev_row;  // layer r_target - 1
        bool captured = false;
        bool finalized = false;
    };
    std::vector<SnapshotSlot> snaps;
    snaps.reserve(cfg.snapshot_times.size());
    for (const auto t : cfg.snapshot_times) {
        SnapshotSlot s;
        s.r_target = static_cast<int>(std::llround(t / cfg.tau));
        s.t_actual = s.r_target * cfg.tau;
        snaps.push_back(std::move(s));
    }

    const int row_count = N + 1;  // emitted row covers m = 0..N at n = 0
    auto copy_row = [&](const std::vector<double>& layer, std::vector<double>& dst) {
        dst.resize(row_count);
        for (int m = 0; m <= N; ++m) {
            dst[static_cast<std::size_t>(m)] = layer[f.index(m, 0)];
        }
    };

    auto handle_snapshots = [&]() {
        for (auto& s : snaps) {
            if (!s.captured && f.r == s.r_target) {
                copy_row(f.curr, s.u_row);
                copy_row(f.prev, s.prev_row);
                s.captured = true;
            } else if (s.captured && !s.finalized && f.r == s.r_target + 1) {
                RowSnapshot snap;
                snap.t = s.t_actual;
                snap.u = s.u_row;
                snap.v.resize(row_count);
                snap.w.resize(row_count);
                std::vector<double> next_row;
                copy_row(f.curr, next_row);
                for (int m = 0; m <= N; ++m) {
                    const auto i = static_cast<std::size_t>(m);
                    snap.v[i] = (next_row[i] - s.prev_row[i]) / (2.0 * cfg.tau);
                    snap.w[i] = (next_row[i] - 2.0 * s.u_row[i] + s.prev_row[i]) /
                                (cfg.tau * cfg.tau);
                }
                result.snapshots.push_back(std::move(snap));
                s.finalized = true;
            }
        }
    };

    const int stride = cfg.energy_stride > 0
                           ? cfg.energy_stride
                           : std::max(1, static_cast<int>(std::llround(
                                             1.0 / (cfg.tau * cfg.params.omega0()))));

    auto record = [&]() {
        for (auto& slot : slots) {
            slot.series.times.push_back(f.r * cfg.tau);
            slot.series.u.push_back(f.curr[slot.idx]);
        }
        handle_snapshots();
        if (cfg.record_energy && f.r > 0 && (f.r % stride == 0 || f.r == R)) {
            result.energy.push_back(energy_balance(f, cfg));
        }
    };

    record();  // initial rest state, r = 0
    for (int s = 0; s < R; ++s) {
        step(f, cfg);
        record();
    }
    // a snapshot on the final layer still needs one successor layer
    for (const auto& s : snaps) {
        if (s.captured && !s.finalized) {
            step(f, cfg);
            handle_snapshots();
            break;
        }
    }
    // keep the requested order regardless of capture order
    std::stable_sort(result.snapshots.begin(), result.snapshots.end(),
                     [&](const RowSnapshot& a, const RowSnapshot& b) {
                         auto pos = [&](double t) {
                             for (std::size_t i = 0; i < snaps.size(); ++i) {
                                 if (snaps[i].t_actual == t) return i;
                             }
                             return snaps.size();
                         };
                         return pos(a.t) < pos(b.t);
                     });

    for (auto& slot : slots) {
        auto& s = slot.series;
        const std::size_t count = s.u.size();
        if (count >= 3) {
            s.v.resize(count - 2);
            s.w.resize(count - 2);
            for (std::size_t i = 0; i + 2 < count; ++i) {
                s.v[i] = (s.u[i + 2] - s.u[i]) / (2.0 * cfg.tau);
                s.w[i] = (s.u[i + 2] - 2.0 * s.u[i + 1] + s.u[i]) / (cfg.tau * cfg.tau);
            }
        }
        result.probes.push_back(std::move(s));
    }
    return result;
}

}  // namespace latwave
