#include "latwave/model.hpp"

#include <cmath>
#include <numbers>

namespace latwave {

LatticeParams::LatticeParams(double M, double k, double L, double Q0)
    : mass(M), stiffness(k), spacing(L), load_amplitude(Q0) {
    if (!(M > 0.0) || !(k > 0.0) || !(L > 0.0)) {
        throw std::invalid_argument("lattice parameters require M > 0, k > 0, L > 0");
    }
    if (!std::isfinite(M) || !std::isfinite(k) || !std::isfinite(L) || !std::isfinite(Q0)) {
        throw std::invalid_argument("lattice parameters must be finite");
    }
}

double LatticeParams::omega0() const {
    return std::sqrt(stiffness / mass);
}

double LatticeParams::c_star() const {
    return spacing * omega0();
}

double LatticeParams::c_short() const {
    return (2.0 / std::numbers::pi) * omega0() * spacing;
}

void require_in_zone(const LatticeParams& params, double qx, double qy) {
    const double bound = std::numbers::pi / params.spacing;
    // allow the zone boundary itself plus a roundoff sliver
    const double slack = bound * 1e-12;
    if (std::abs(qx) > bound + slack || std::abs(qy) > bound + slack) {
        throw std::domain_error("wavenumber outside the first Brillouin zone");
    }
}

double dispersion_omega(const LatticeParams& params, double qx, double qy) {
    require_in_zone(params, qx, qy);
    const double sx = std::sin(0.5 * qx * params.spacing);
    const double sy = std::sin(0.5 * qy * params.spacing);
    return 2.0 * params.omega0() * std::sqrt(sx * sx + sy * sy);
}

double symbol_B(const LatticeParams& params, const SpectralPoint& pt) {
    require_in_zone(params, pt.qx, pt.qy);
    return params.mass * pt.p * pt.p / (2.0 * params.stiffness) + 2.0 -
           std::cos(pt.qx * params.spacing);
}

double symbol_B2m1_longwave(const LatticeParams& params, const SpectralPoint& pt) {
    require_in_zone(params, pt.qx, pt.qy);
    const double w0 = params.omega0();
    const double s = std::sin(0.5 * pt.qx * params.spacing);
    const double s2 = s * s;
    const double p_term = pt.p * pt.p / (4.0 * w0 * w0);
    return 4.0 * (p_term + s2) * (1.0 + s2);
}

}  // namespace latwave
