// Post-processing that turns raw series into the quantities the study
// reports: decay exponents, quasi-front widths, short-wave arrival times,
// and numeric-vs-analytic agreement measures.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "latwave/fdm.hpp"
#include "latwave/model.hpp"

namespace latwave {

/// Log-log least-squares fit of amplitude against time.
struct FitReport {
    double exponent = 0.0;
    double intercept = 0.0;   // of log(amplitude) vs log(t)
    double r_squared = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    int n_points = 0;
};

/// Fits log(amplitude) = exponent * log(t) + intercept.
/// pre: at least 4 samples, t spanning a factor of 8 or more, all
/// amplitudes strictly positive; throws validation_error otherwise.
FitReport peak_amplitude_decay(std::span<const double> t,
                               std::span<const double> amplitude);

struct FrontWidth {
    double t = 0.0;
    double width = 0.0;               // node-index units
    double threshold_fraction = 0.0;  // records the definition in use
};

/// Width of the quasi-front in a velocity profile over m at fixed t:
/// distance from the global max of |v| to the first point ahead of it
/// (larger m) where |v| drops below threshold_fraction of the max, located
/// by linear interpolation. The profile must cover
/// [omega0*t - 10*(omega0*t)^{1/3}, omega0*t + 6*(omega0*t)^{1/3}];
/// narrower or all-zero profiles are rejected.
FrontWidth front_width(std::span<const double> m, std::span<const double> v,
                       double t, double omega0, double threshold_fraction = 0.05);

/// A sampled time series for comparisons.
struct Series {
    std::vector<double> t;
    std::vector<double> y;
};

struct SeriesDiff {
    double max_abs_diff = 0.0;
    double rel_peak_diff = 0.0;  // |peak_a - peak_b| / max(peak_a, peak_b)
};

/// Compares two series over [t_lo, t_hi] after linear resampling onto the
/// union of their sample points, so the result is symmetric in a and b.
/// Throws validation_error when the overlap is empty.
SeriesDiff compare_series(const Series& a, const Series& b, double t_lo, double t_hi);

/// Arrival time of short-wave oscillations in a velocity record at node
/// (m, 0): the tail after the quasi-front peak is detrended by a centered
/// moving average of span 10/omega0, and the first run of 8 consecutive
/// zero-crossing gaps whose implied period matches the band-edge period
/// 2*pi/(2*sqrt(2)*omega0) within 20% marks the arrival. Returns nullopt
/// when no such lock occurs, which is the expected outcome for the
/// long-wave closed forms.
std::optional<double> shortwave_arrival(std::span<const double> times,
                                        std::span<const double> v, int m,
                                        const LatticeParams& params);

/// Convenience overload reading the velocity series of an FDM probe.
std::optional<double> shortwave_arrival(const ProbeSeries& probe,
                                        const LatticeParams& params);

}  // namespace latwave
