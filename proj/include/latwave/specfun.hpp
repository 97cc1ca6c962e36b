// Self-contained Bessel J_n and Airy Ai, Ai' evaluation. Everything the
// wave forms need is computed here; no special-function library is linked.

#pragma once

#include <vector>

namespace latwave {

/// Bessel function of the first kind, integer order. Negative order uses
/// J_{-n} = (-1)^n J_n. Computed by the backward (Miller) recurrence
/// normalised with J_0 + 2 sum J_{2j} = 1; accumulation in long double.
/// pre: x >= 0 (throws std::domain_error otherwise).
double bessel_j(int n, double x);

/// As above, and sets underflow=true when |J_n(x)| falls below the
/// smallest normal double so that the returned exact 0 can be told apart
/// from a genuine zero of the function.
double bessel_j(int n, double x, bool& underflow);

/// J_0(x) .. J_{n_max}(x) sharing one backward pass and normalisation.
struct BesselRow {
    double x = 0.0;
    std::vector<double> values;
};

/// Batch evaluation for profiles over m. Orders deep in the evanescent
/// tail come out as exact 0.
BesselRow bessel_j_row(int n_max, double x);

/// Airy function Ai(x). Maclaurin series on the middle range, switching
/// to the compensated asymptotic expansions for x > 4.5 and x < -7.5
/// where the series would lose digits to cancellation.
double airy_ai(double x);

/// Derivative Ai'(x), same evaluation strategy and switch points.
double airy_ai_prime(double x);

}  // namespace latwave
