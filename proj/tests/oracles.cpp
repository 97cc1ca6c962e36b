#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracles {

long double bessel_j(int n, long double x) {
    if (n < 0) {
        const long double sign = (n % 2 != 0) ? -1.0L : 1.0L;
        return sign * bessel_j(-n, x);
    }
    const long double half = x / 2.0L;
    long double term = 1.0L;
    for (int j = 1; j <= n; ++j) term *= half / j;
    long double sum = term;
    for (int j = 1; j < 500; ++j) {
        term *= -(half * half) / (static_cast<long double>(j) * (n + j));
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-25L + 1e-320L) break;
    }
    return sum;
}

long double gamma(long double x) {
    if (!(x > 0.0L)) {
        throw std::invalid_argument("gamma oracle defined for x > 0 only");
    }
    // shift the argument up where the Stirling series converges fast
    long double shift = 1.0L;
    while (x < 30.0L) {
        shift *= x;
        x += 1.0L;
    }
    // B_{2n} / (2n (2n-1)) for the asymptotic tail
    const long double coeff[] = {
        1.0L / 12.0L,      -1.0L / 360.0L,     1.0L / 1260.0L,  -1.0L / 1680.0L,
        1.0L / 1188.0L,    -691.0L / 360360.0L, 1.0L / 156.0L,
    };
    long double tail = 0.0L;
    long double zp = x;  // z^{2n-1}
    for (const long double c : coeff) {
        tail += c / zp;
        zp *= x * x;
    }
    const long double half_log_2pi = 0.91893853320467274178L;
    const long double log_gamma = (x - 0.5L) * std::log(x) - x + half_log_2pi + tail;
    return std::exp(log_gamma) / shift;
}

AiryValues airy(long double x) {
    // Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
    static const long double ai0 =
        std::pow(3.0L, -2.0L / 3.0L) / gamma(2.0L / 3.0L);
    static const long double aip0 =
        -std::pow(3.0L, -1.0L / 3.0L) / gamma(1.0L / 3.0L);

    long double pos = 0.0L, f = ai0, fp = aip0;
    const long double stride = 0.25L;
    while (std::abs(x - pos) > 1e-30L) {
        long double h = x - pos;
        if (h > stride) h = stride;
        if (h < -stride) h = -stride;

        // Taylor coefficients of the solution about pos:
        // (j+2)(j+1) c_{j+2} = pos * c_j + c_{j-1}
        constexpr int order = 40;
        long double c[order];
        c[0] = f;
        c[1] = fp;
        for (int j = 0; j + 2 < order; ++j) {
            const long double lower = (j == 0) ? 0.0L : c[j - 1];
            c[j + 2] = (pos * c[j] + lower) /
                       ((static_cast<long double>(j) + 1.0L) * (j + 2.0L));
        }
        long double nf = 0.0L, nfp = 0.0L;
        for (int j = order - 1; j >= 0; --j) nf = nf * h + c[j];
        for (int j = order - 1; j >= 1; --j) nfp = nfp * h + j * c[j];

        f = nf;
        fp = nfp;
        pos += h;
    }
    return {f, fp};
}

}  // namespace oracles
