// Closed-form large-time solutions along the loaded row n = 0: the
// logarithmic displacement behind the quasi-front, Bessel-form velocity
// and acceleration, and the Airy-form quasi-front zoom.

#pragma once

#include <vector>

#include "latwave/model.hpp"

namespace latwave {

enum class Formula {
    displacement_log,     // H-gated logarithm of z = omega0*t/|m|
    velocity_bessel,      // J_m(omega0*t)^2 form
    acceleration_bessel,  // J_m * (J_{m-1} - J_{m+1}) form
    velocity_airy,        // Airy-squared quasi-front form
    acceleration_airy,    // Airy * Airy' quasi-front form
};

/// One evaluation of a closed-form solution at node (m, 0) and time t.
struct AsymptoticEval {
    int m = 0;
    double t = 0.0;
    Formula formula = Formula::displacement_log;
    double value = 0.0;
};

/// Similarity variable of the quasi-front, (m - omega0*t) / (omega0*t)^{1/3}.
/// Accepts non-integer m so envelopes can be maximised continuously.
double front_kappa(const LatticeParams& params, double m, double t);

/// Displacement of node (m, 0):
///   (Q0 / 2 k pi) * H(z - 1) * ln(z + sqrt(z^2 - 1)),  z = omega0*t/|m|,
/// zero ahead of the front. At the source m = 0 the formula degenerates to
///   (Q0 / 2 k pi) * (ln(4 sqrt(2) omega0 t) + euler_gamma),
/// which requires t > 0 (the logarithm is a large-time form; its t -> 0
/// divergence is a domain edge, so m = 0 with t = 0 throws).
double displacement_log(const LatticeParams& params, int m, double t);

/// Velocity of node (m, 0): (Q0 / 2 sqrt(kM)) * J_m(omega0*t)^2.
/// Even in m through J_{-m}^2 = J_m^2.
double velocity_bessel(const LatticeParams& params, int m, double t);

/// Acceleration of node (m, 0):
///   (Q0 / 2M) * J_m(omega0*t) * [J_{m-1}(omega0*t) - J_{m+1}(omega0*t)],
/// the exact time derivative of the Bessel-form velocity.
double acceleration_bessel(const LatticeParams& params, int m, double t);

/// Quasi-front velocity, transitional Airy form:
///   (Q0 / (2^{1/3} sqrt(kM))) * [Ai(2^{1/3} kappa) / (omega0*t)^{1/3}]^2.
/// pre: t > 0 (kappa is undefined at t = 0).
double velocity_airy(const LatticeParams& params, int m, double t);

/// Quasi-front acceleration:
///   -(2 Q0 / (t sqrt(kM))) * Ai(2^{1/3} kappa) * Ai'(2^{1/3} kappa).
/// pre: t > 0.
double acceleration_airy(const LatticeParams& params, int m, double t);

/// Evaluates one formula over an inclusive integer range of m at fixed t.
std::vector<AsymptoticEval> snapshot(const LatticeParams& params, Formula formula,
                                     int m_first, int m_last, double t);

/// Envelope of a quasi-front form: the maximum of |value| over continuous m
/// at fixed t, and the m where it is attained.
struct EnvelopePoint {
    double value = 0.0;  // peak of |form|
    double m = 0.0;      // continuous node coordinate of the peak
};

/// max over m of the Airy-form velocity. Scales exactly as t^{-2/3} since
/// the Airy peak height is a fixed constant.
EnvelopePoint velocity_airy_envelope(const LatticeParams& params, double t);

/// max over m of |Airy-form acceleration|; scales exactly as t^{-1}.
EnvelopePoint acceleration_airy_envelope(const LatticeParams& params, double t);

/// Width of the quasi-front predicted by the Airy velocity form: m-distance
/// from the envelope peak to where the profile ahead of it first falls
/// below threshold_fraction of the peak. Grows exactly as t^{1/3}.
double front_width_airy(const LatticeParams& params, double t,
                        double threshold_fraction = 0.05);

/// Arrival time of the slowest short-wave mode at node (m, 0):
/// m*L*sqrt(2) / c_short = m*sqrt(2)*pi / (2*omega0).
double shortwave_arrival_prediction(const LatticeParams& params, int m);

/// Euler's constant, stored to 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

}  // namespace latwave
