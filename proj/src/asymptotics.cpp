#include "latwave/asymptotics.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "latwave/specfun.hpp"

namespace latwave {

namespace {

void require_positive_t(double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("quasi-front forms require t > 0");
    }
}

void require_nonnegative_t(double t) {
    if (!(t >= 0.0)) {
        throw std::domain_error("time must be nonnegative");
    }
}

constexpr double cbrt2 = 1.25992104989487316477;  // 2^{1/3}

// Golden-section maximiser for the smooth unimodal Airy profiles.
template <typename F>
double golden_max(F f, double lo, double hi) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-13) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        }
    }
    return 0.5 * (a + b);
}

// Argument where Ai peaks: between its first zero and 0 the function is
// a single hump.
double airy_peak_argument() {
    static const double y = golden_max([](double v) { return airy_ai(v); }, -2.4, 0.0);
    return y;
}

// Argument maximising Ai * Ai'; the global maximum of the product's
// magnitude sits on the hump between the first zero of Ai and the peak of
// Ai, where both factors are positive.
double airy_product_peak_argument() {
    static const double y = golden_max(
        [](double v) { return airy_ai(v) * airy_ai_prime(v); }, -2.4, -1.0);
    return y;
}

}  // namespace

double front_kappa(const LatticeParams& params, double m, double t) {
    require_positive_t(t);
    const double wt = params.omega0() * t;
    return (m - wt) / std::cbrt(wt);
}

double displacement_log(const LatticeParams& params, int m, double t) {
    require_nonnegative_t(t);
    const double pref =
        params.load_amplitude / (2.0 * params.stiffness * std::numbers::pi);
    if (m == 0) {
        if (!(t > 0.0)) {
            // the large-time logarithm diverges toward t = 0; outside the
            // formula's domain rather than a representable value
            throw std::domain_error("source-node displacement form requires t > 0");
        }
        return pref * (std::log(4.0 * std::sqrt(2.0) * params.omega0() * t) + euler_gamma);
    }
    const double z = params.omega0() * t / std::abs(static_cast<double>(m));
    if (z <= 1.0) return 0.0;  // ahead of the long-wave front
    return pref * std::log(z + std::sqrt(z * z - 1.0));
}

double velocity_bessel(const LatticeParams& params, int m, double t) {
    require_nonnegative_t(t);
    const double pref =
        params.load_amplitude / (2.0 * std::sqrt(params.stiffness * params.mass));
    const double j = bessel_j(std::abs(m), params.omega0() * t);
    return pref * j * j;
}

double acceleration_bessel(const LatticeParams& params, int m, double t) {
    require_nonnegative_t(t);
    const int a = std::abs(m);
    const double x = params.omega0() * t;
    const auto row = bessel_j_row(a + 1, x);
    const double jm = row.values[static_cast<std::size_t>(a)];
    const double jp = row.values[static_cast<std::size_t>(a) + 1];
    // J_{m-1}; at the source node this is J_{-1} = -J_1
    const double jl = (a == 0) ? -row.values[1] : row.values[static_cast<std::size_t>(a) - 1];
    return params.load_amplitude / (2.0 * params.mass) * jm * (jl - jp);
}

double velocity_airy(const LatticeParams& params, int m, double t) {
    require_positive_t(t);
    const double wt = params.omega0() * t;
    // node formulas are even in m; the front sits at |m| = omega0*t
    const double ai = airy_ai(cbrt2 * front_kappa(params, std::abs(m), t));
    const double shape = ai / std::cbrt(wt);
    return params.load_amplitude /
           (cbrt2 * std::sqrt(params.stiffness * params.mass)) * shape * shape;
}

double acceleration_airy(const LatticeParams& params, int m, double t) {
    require_positive_t(t);
    const double y = cbrt2 * front_kappa(params, std::abs(m), t);
    return -2.0 * params.load_amplitude * airy_ai(y) * airy_ai_prime(y) /
           (t * std::sqrt(params.stiffness * params.mass));
}

std::vector<AsymptoticEval> snapshot(const LatticeParams& params, Formula formula,
                                     int m_first, int m_last, double t) {
    if (m_first > m_last) {
        throw std::invalid_argument("snapshot range must satisfy m_first <= m_last");
    }
    std::vector<AsymptoticEval> out;
    out.reserve(static_cast<std::size_t>(m_last - m_first) + 1);
    for (int m = m_first; m <= m_last; ++m) {
        double value = 0.0;
        switch (formula) {
            case Formula::displacement_log: value = displacement_log(params, m, t); break;
            case Formula::velocity_bessel: value = velocity_bessel(params, m, t); break;
            case Formula::acceleration_bessel: value = acceleration_bessel(params, m, t); break;
            case Formula::velocity_airy: value = velocity_airy(params, m, t); break;
            case Formula::acceleration_airy: value = acceleration_airy(params, m, t); break;
        }
        out.push_back({m, t, formula, value});
    }
    return out;
}

EnvelopePoint velocity_airy_envelope(const LatticeParams& params, double t) {
    require_positive_t(t);
    const double wt = params.omega0() * t;
    const double y = airy_peak_argument();
    const double ai = airy_ai(y);
    const double shape = ai / std::cbrt(wt);
    EnvelopePoint peak;
    peak.value = std::abs(params.load_amplitude) /
                 (cbrt2 * std::sqrt(params.stiffness * params.mass)) * shape * shape;
    peak.m = wt + (y / cbrt2) * std::cbrt(wt);
    return peak;
}

EnvelopePoint acceleration_airy_envelope(const LatticeParams& params, double t) {
    require_positive_t(t);
    const double y = airy_product_peak_argument();
    EnvelopePoint peak;
    peak.value = 2.0 * std::abs(params.load_amplitude) * airy_ai(y) *
                 airy_ai_prime(y) / (t * std::sqrt(params.stiffness * params.mass));
    peak.m = params.omega0() * t + (y / cbrt2) * std::cbrt(params.omega0() * t);
    return peak;
}

double front_width_airy(const LatticeParams& params, double t,
                        double threshold_fraction) {
    require_positive_t(t);
    if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0)) {
        throw std::invalid_argument("threshold fraction must lie in (0, 1)");
    }
    const double y_peak = airy_peak_argument();
    const double target = std::sqrt(threshold_fraction) * airy_ai(y_peak);
    // Ai decreases monotonically ahead of its peak; bisect the crossing
    double lo = y_peak, hi = y_peak + 10.0;
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (airy_ai(mid) > target ? lo : hi) = mid;
    }
    const double y_cross = 0.5 * (lo + hi);
    return (y_cross - y_peak) / cbrt2 * std::cbrt(params.omega0() * t);
}

double shortwave_arrival_prediction(const LatticeParams& params, int m) {
    return std::abs(m) * std::numbers::sqrt2 * std::numbers::pi /
           (2.0 * params.omega0());
}

}  // namespace latwave
