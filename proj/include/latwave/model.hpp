// Physical parameters and transform-domain symbols of the square
// mass-spring lattice (anti-plane displacements, nearest-neighbour springs).

#pragma once

#include <stdexcept>

namespace latwave {

/// Masses M on a square grid with spacing L, joined by springs of
/// stiffness k in both directions; a step point load of amplitude Q0
/// acts at the origin node.
struct LatticeParams {
    double mass = 1.0;            // M  > 0
    double stiffness = 1.0;       // k  > 0
    double spacing = 1.0;         // L  > 0
    double load_amplitude = 1.0;  // Q0, any sign

    LatticeParams() = default;
    LatticeParams(double M, double k, double L, double Q0);

    /// Characteristic frequency sqrt(k/M).
    double omega0() const;

    /// Speed of infinitely long waves, L * omega0. Sets the quasi-front
    /// position m = c_star * t / L on the lattice axis.
    double c_star() const;

    /// Phase speed of the shortest lattice mode qx = qy = pi/L, which has
    /// frequency 2*sqrt(2)*omega0 and |q| = pi*sqrt(2)/L. Equals
    /// (2/pi) * omega0 * L; at unit parameters this is the familiar 2/pi.
    double c_short() const;
};

/// A point in the Laplace-Fourier domain: Laplace parameter p (treated as
/// real) and wavenumbers restricted to the first Brillouin zone
/// |q * L| <= pi, boundary inclusive.
struct SpectralPoint {
    double p = 0.0;
    double qx = 0.0;
    double qy = 0.0;
};

/// Throws std::domain_error unless (qx, qy) lies in the Brillouin zone of
/// the given lattice.
void require_in_zone(const LatticeParams& params, double qx, double qy);

/// Lattice dispersion relation
///   omega(q) = 2 * omega0 * sqrt(sin^2(qx L / 2) + sin^2(qy L / 2)).
/// Wavenumbers outside the zone are rejected.
double dispersion_omega(const LatticeParams& params, double qx, double qy);

/// Symbol B = M p^2 / (2k) + 2 - cos(qx L) appearing after the transform
/// over the second lattice index is inverted; qy is unused by construction.
double symbol_B(const LatticeParams& params, const SpectralPoint& pt);

/// Long-wave approximation of B^2 - 1,
///   4 * (p^2/(4 omega0^2) + sin^2(qx L/2)) * (1 + sin^2(qx L/2)),
/// valid for small p and qx. Exposed for consistency checks against the
/// exact B^2 - 1.
double symbol_B2m1_longwave(const LatticeParams& params, const SpectralPoint& pt);

}  // namespace latwave
