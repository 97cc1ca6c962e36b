// Independent reference implementations used only by the tests. They share
// no code with the library: Bessel values come from the plain power series,
// Airy values from a Taylor march of the defining equation seeded by
// gamma-function constants, and the gamma function from a shifted Stirling
// series.

#pragma once

namespace oracles {

/// J_n(x) by direct power-series summation in long double. Reliable for
/// x <= 25 and n <= 120 or so; the magnitude of the largest term limits it
/// beyond that.
long double bessel_j(int n, long double x);

/// Gamma(x) for x > 0 via upward shift and the Stirling series.
long double gamma(long double x);

struct AiryValues {
    long double ai;
    long double aip;
};

/// Ai and Ai' by marching y'' = x y from the origin in short Taylor steps.
/// Both directions are stable enough on [-20, 8]; above that the growing
/// companion solution dominates the roundoff.
AiryValues airy(long double x);

}  // namespace oracles
