#include "latwave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace latwave {

namespace {

std::string format(const char* fmt, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    return buf;
}

double interpolate(const std::vector<double>& t, const std::vector<double>& y,
                   double at) {
    const auto it = std::upper_bound(t.begin(), t.end(), at);
    if (it == t.begin()) return y.front();
    if (it == t.end()) return y.back();
    const std::size_t j = static_cast<std::size_t>(it - t.begin());
    const double f = (at - t[j - 1]) / (t[j] - t[j - 1]);
    return y[j - 1] + f * (y[j] - y[j - 1]);
}

void require_increasing(const std::vector<double>& t, const char* label) {
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) {
            throw validation_error(std::string(label) +
                                   " series times must be strictly increasing");
        }
    }
}

}  // namespace

FitReport peak_amplitude_decay(std::span<const double> t,
                               std::span<const double> amplitude) {
    std::vector<std::string> issues;
    if (t.size() != amplitude.size()) {
        issues.push_back("time and amplitude series differ in length");
    }
    if (t.size() < 4) {
        issues.push_back("a decay fit needs at least 4 samples");
    }
    if (issues.empty()) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!(t[i] > 0.0)) {
                issues.push_back(format("sample time %.6g is not positive", t[i]));
                break;
            }
            if (!(amplitude[i] > 0.0)) {
                issues.push_back(
                    format("amplitude %.6g at t = %.6g is not positive", amplitude[i], t[i]));
                break;
            }
        }
        const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
        if (issues.empty() && *hi / *lo < 8.0 * (1.0 - 1e-9)) {
            issues.push_back(
                format("sample times span a factor %.3g; at least 8 is required", *hi / *lo));
        }
    }
    if (!issues.empty()) throw validation_error(std::move(issues));

    const std::size_t n = t.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::log(t[i]);
        ys[i] = std::log(amplitude[i]);
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    FitReport report;
    report.exponent = sxy / sxx;
    report.intercept = my - report.exponent * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (report.intercept + report.exponent * xs[i]);
        ss_res += r * r;
    }
    report.r_squared = (syy > 0.0) ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    report.t_min = *std::min_element(t.begin(), t.end());
    report.t_max = *std::max_element(t.begin(), t.end());
    report.n_points = static_cast<int>(n);
    return report;
}

FrontWidth front_width(std::span<const double> m, std::span<const double> v,
                       double t, double omega0, double threshold_fraction) {
    if (m.size() != v.size() || m.size() < 8) {
        throw validation_error("front width needs matching m and v arrays of at least 8 samples");
    }
    if (!(t > 0.0) || !(omega0 > 0.0)) {
        throw validation_error("front width requires t > 0 and omega0 > 0");
    }
    if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0)) {
        throw validation_error("front width threshold fraction must lie in (0, 1)");
    }
    const double wt = omega0 * t;
    const double scale = std::cbrt(wt);
    const double need_lo = std::max(0.0, wt - 10.0 * scale);
    const double need_hi = wt + 6.0 * scale;
    if (m.front() > need_lo || m.back() < need_hi) {
        throw validation_error(
            format("profile covers [%.4g, %.4g] of m but the front region needs",
                   m.front(), m.back()) +
            format(" [%.4g, %.4g]", need_lo, need_hi));
    }

    std::size_t peak = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[peak])) peak = i;
    }
    const double vmax = std::abs(v[peak]);
    if (vmax == 0.0) {
        throw validation_error("front width undefined for an all-zero profile");
    }
    const double target = threshold_fraction * vmax;
    for (std::size_t j = peak + 1; j < v.size(); ++j) {
        const double a = std::abs(v[j - 1]);
        const double b = std::abs(v[j]);
        if (b < target) {
            const double m_cross = m[j - 1] + (a - target) / (a - b) * (m[j] - m[j - 1]);
            return {t, m_cross - m[peak], threshold_fraction};
        }
    }
    throw validation_error("profile never falls below the threshold ahead of the front");
}

SeriesDiff compare_series(const Series& a, const Series& b, double t_lo, double t_hi) {
    if (a.t.size() != a.y.size() || b.t.size() != b.y.size() || a.t.size() < 2 ||
        b.t.size() < 2) {
        throw validation_error("series need matching t/y arrays with at least 2 samples");
    }
    require_increasing(a.t, "first");
    require_increasing(b.t, "second");
    if (!(t_lo < t_hi)) {
        throw validation_error("comparison window must satisfy t_lo < t_hi");
    }
    const double lo = std::max({t_lo, a.t.front(), b.t.front()});
    const double hi = std::min({t_hi, a.t.back(), b.t.back()});
    if (!(lo <= hi)) {
        throw validation_error("comparison window does not overlap both series");
    }

    // union of sample points keeps the measure symmetric in a and b
    std::vector<double> grid;
    grid.reserve(a.t.size() + b.t.size() + 2);
    grid.push_back(lo);
    for (const auto x : a.t) {
        if (x >= lo && x <= hi) grid.push_back(x);
    }
    for (const auto x : b.t) {
        if (x >= lo && x <= hi) grid.push_back(x);
    }
    grid.push_back(hi);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    SeriesDiff diff;
    double peak_a = 0.0, peak_b = 0.0;
    for (const auto x : grid) {
        const double ya = interpolate(a.t, a.y, x);
        const double yb = interpolate(b.t, b.y, x);
        diff.max_abs_diff = std::max(diff.max_abs_diff, std::abs(ya - yb));
        peak_a = std::max(peak_a, std::abs(ya));
        peak_b = std::max(peak_b, std::abs(yb));
    }
    const double larger = std::max(peak_a, peak_b);
    diff.rel_peak_diff = (larger > 0.0) ? std::abs(peak_a - peak_b) / larger : 0.0;
    return diff;
}

std::optional<double> shortwave_arrival(std::span<const double> times,
                                        std::span<const double> v, int m,
                                        const LatticeParams& params) {
    const double w0 = params.omega0();
    if (times.size() != v.size() || times.size() < 32) {
        throw validation_error("arrival detection needs matching series of at least 32 samples");
    }
    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) {
        throw validation_error("arrival detection needs increasing, uniform sample times");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (std::abs(times[i] - times[i - 1] - dt) > 1e-9 * dt * i) {
            throw validation_error("arrival detection needs a uniform time grid");
        }
    }
    const double predicted =
        std::abs(m) * std::numbers::sqrt2 * std::numbers::pi / (2.0 * w0);
    if (times.back() < predicted + 12.0 / w0) {
        throw validation_error(
            format("series ends at t = %.6g but must extend past the predicted arrival "
                   "%.6g plus settling margin",
                   times.back(), predicted));
    }

    const std::size_t n = v.size();
    const auto h = static_cast<std::size_t>(std::llround(5.0 / (w0 * dt)));
    if (2 * h + 4 > n) {
        throw validation_error("series too short for the detrending window");
    }

    // detrend by a centered moving average spanning 10/omega0
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
    auto detrended = [&](std::size_t i) {
        const double mean = (prefix[i + h + 1] - prefix[i - h]) / (2.0 * h + 1.0);
        return v[i] - mean;
    };

    std::size_t peak = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(v[i]) > std::abs(v[peak])) peak = i;
    }

    // zero crossings of the detrended tail after the quasi-front peak
    std::vector<double> crossings;
    const std::size_t first = std::max(peak, h);
    const std::size_t last = n - 2 - h;
    for (std::size_t i = first; i <= last; ++i) {
        const double d0 = detrended(i);
        const double d1 = detrended(i + 1);
        if (d0 != 0.0 && (d0 < 0.0) != (d1 < 0.0)) {
            crossings.push_back(times[i] + dt * d0 / (d0 - d1));
        }
    }

    // a run of half-period gaps consistent with the band-edge mode marks
    // the arrival of the slowest short waves
    const double period_target = std::numbers::pi / (std::numbers::sqrt2 * w0);
    constexpr std::size_t run = 8;
    if (crossings.size() < run + 1) return std::nullopt;
    for (std::size_t i = 0; i + run < crossings.size(); ++i) {
        const double mean_gap = (crossings[i + run] - crossings[i]) / run;
        const double period = 2.0 * mean_gap;
        if (std::abs(period - period_target) <= 0.2 * period_target) {
            return crossings[i];
        }
    }
    return std::nullopt;
}

std::optional<double> shortwave_arrival(const ProbeSeries& probe,
                                        const LatticeParams& params) {
    if (probe.n != 0) {
        throw validation_error("arrival detection expects a probe on the loaded row n = 0");
    }
    if (probe.v.size() + 2 != probe.times.size()) {
        throw validation_error("probe velocity series is inconsistent with its time grid");
    }
    const std::span<const double> t(probe.times.data() + 1, probe.v.size());
    return shortwave_arrival(t, probe.v, probe.m, params);
}

}  // namespace latwave
