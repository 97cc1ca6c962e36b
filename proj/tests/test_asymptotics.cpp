#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latwave/asymptotics.hpp"
#include "latwave/specfun.hpp"

using namespace latwave;

namespace {

constexpr double kJ20at20 = 0.16474777377532664;
constexpr double kAi0 = 0.35502805388781723926;
constexpr double kAip0 = -0.25881940379280679840;
// argmax of Ai and the value there, frozen from a high-resolution scan
constexpr double kAiPeakArg = -1.018792971647471;
constexpr double kAiPeakValue = 0.535656656015700;

const LatticeParams unit_params;

}  // namespace

TEST_CASE("displacement form: Heaviside front, branch point, reference value") {
    CHECK(displacement_log(unit_params, 20, 10.0) == 0.0);
    CHECK(displacement_log(unit_params, 20, 20.0) == 0.0);

    const double reference =
        std::log(2.0 + std::sqrt(3.0)) / (2.0 * std::numbers::pi);
    CHECK(reference == doctest::Approx(0.209600359139491).epsilon(1e-13));
    CHECK(displacement_log(unit_params, 20, 40.0) ==
          doctest::Approx(reference).epsilon(1e-14));
}

TEST_CASE("displacement form scales through omega0 and the load") {
    // omega0 = 1/2: the same z is reached at twice the time
    const LatticeParams slow(4.0, 1.0, 1.0, 1.0);
    CHECK(displacement_log(slow, 20, 80.0) ==
          doctest::Approx(displacement_log(unit_params, 20, 40.0)).epsilon(1e-14));

    // prefactor Q0 / (2 k pi), linear in the load
    const LatticeParams loaded(1.0, 1.0, 1.0, 6.0);
    CHECK(displacement_log(loaded, 20, 40.0) ==
          doctest::Approx(6.0 * displacement_log(unit_params, 20, 40.0))
              .epsilon(1e-14));
}

TEST_CASE("source-node branch carries the log growth law") {
    const double pref = 1.0 / (2.0 * std::numbers::pi);
    const double t = 50.0;
    CHECK(displacement_log(unit_params, 0, t) ==
          doctest::Approx(pref * (std::log(4.0 * std::numbers::sqrt2 * t) +
                                  euler_gamma))
              .epsilon(1e-14));
    // differences cancel the additive constant
    CHECK(displacement_log(unit_params, 0, 4.0 * t) -
              displacement_log(unit_params, 0, t) ==
          doctest::Approx(pref * std::log(4.0)).epsilon(1e-13));
}

TEST_CASE("asymptotic forms reject out-of-domain times") {
    CHECK_THROWS_AS(displacement_log(unit_params, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(displacement_log(unit_params, 3, -1.0), std::domain_error);
    CHECK_THROWS_AS(velocity_bessel(unit_params, 3, -1.0), std::domain_error);
    CHECK_THROWS_AS(velocity_airy(unit_params, 3, 0.0), std::domain_error);
    CHECK_THROWS_AS(acceleration_airy(unit_params, 3, 0.0), std::domain_error);
    CHECK_THROWS_AS(velocity_airy_envelope(unit_params, 0.0), std::domain_error);
    CHECK_THROWS_AS(front_width_airy(unit_params, -2.0), std::domain_error);
    CHECK_THROWS_AS(front_kappa(unit_params, 5.0, 0.0), std::domain_error);
}

TEST_CASE("all forms depend on |m| only") {
    const double t = 31.0;
    for (const int m : {1, 7, 20}) {
        CHECK(displacement_log(unit_params, -m, t) ==
              displacement_log(unit_params, m, t));
        CHECK(velocity_bessel(unit_params, -m, t) ==
              velocity_bessel(unit_params, m, t));
        CHECK(acceleration_bessel(unit_params, -m, t) ==
              acceleration_bessel(unit_params, m, t));
        CHECK(velocity_airy(unit_params, -m, t) == velocity_airy(unit_params, m, t));
        CHECK(acceleration_airy(unit_params, -m, t) ==
              acceleration_airy(unit_params, m, t));
    }
}

TEST_CASE("bessel velocity form at reference points") {
    CHECK(velocity_bessel(unit_params, 0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(velocity_bessel(unit_params, 20, 0.0) == 0.0);
    CHECK(velocity_bessel(unit_params, 20, 20.0) ==
          doctest::Approx(0.5 * kJ20at20 * kJ20at20).epsilon(1e-10));
    CHECK(velocity_bessel(unit_params, 13, 27.0) >= 0.0);
}

TEST_CASE("bessel acceleration form vanishes where it must") {
    CHECK(acceleration_bessel(unit_params, 0, 0.0) == doctest::Approx(0.0));
    CHECK(acceleration_bessel(unit_params, 1, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("bessel acceleration is the time derivative of the velocity form") {
    const double h = 1e-4;
    const struct {
        int m;
        double t;
    } points[] = {{0, 5.0}, {3, 7.3}, {20, 25.0}};
    for (const auto& pt : points) {
        const double numeric = (velocity_bessel(unit_params, pt.m, pt.t + h) -
                                velocity_bessel(unit_params, pt.m, pt.t - h)) /
                               (2.0 * h);
        CHECK(std::abs(numeric - acceleration_bessel(unit_params, pt.m, pt.t)) <=
              1e-6);
    }
}

TEST_CASE("airy velocity form at the front-centred point") {
    // kappa = 0 at m = omega0 t
    CHECK(front_kappa(unit_params, 100.0, 100.0) == doctest::Approx(0.0));
    const double expected =
        std::pow(2.0, -1.0 / 3.0) * kAi0 * kAi0 / std::pow(100.0, 2.0 / 3.0);
    CHECK(velocity_airy(unit_params, 100, 100.0) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(4.643e-3).epsilon(1e-3));
}

TEST_CASE("airy forms are evanescent far ahead of the front") {
    CHECK(std::abs(velocity_airy(unit_params, 200, 100.0)) < 1e-60);
    CHECK(std::abs(acceleration_airy(unit_params, 200, 100.0)) < 1e-30);
}

TEST_CASE("airy acceleration at the front-centred point") {
    const double expected = -2.0 / 100.0 * kAi0 * kAip0;
    CHECK(expected > 0.0);
    CHECK(acceleration_airy(unit_params, 100, 100.0) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(1.838e-3).epsilon(1e-3));
}

TEST_CASE("airy acceleration tracks the derivative of the airy velocity") {
    const double h = 1e-3;
    const double numeric = (velocity_airy(unit_params, 100, 100.0 + h) -
                            velocity_airy(unit_params, 100, 100.0 - h)) /
                           (2.0 * h);
    const double closed = acceleration_airy(unit_params, 100, 100.0);
    // the closed form keeps only the leading front term
    CHECK(std::abs(numeric - closed) <= 0.10 * std::abs(closed));
}

TEST_CASE("airy and bessel velocity forms agree in the transitional regime") {
    CHECK(velocity_airy(unit_params, 100, 100.0) ==
          doctest::Approx(velocity_bessel(unit_params, 100, 100.0)).epsilon(0.03));

    const int m = 50;
    const double scale_v = velocity_airy_envelope(unit_params, 50.0).value;
    const double scale_w = acceleration_airy_envelope(unit_params, 50.0).value;
    for (const double kappa : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const double t = m - kappa * std::cbrt(static_cast<double>(m));
        CHECK(std::abs(velocity_airy(unit_params, m, t) -
                       velocity_bessel(unit_params, m, t)) <= 0.05 * scale_v);
        CHECK(std::abs(acceleration_airy(unit_params, m, t) -
                       acceleration_bessel(unit_params, m, t)) <= 0.05 * scale_w);
    }
}

TEST_CASE("velocity form sums to the load impulse rate across the row") {
    const double t = 30.0;
    const int N = 90;
    double sum = velocity_bessel(unit_params, 0, t);
    for (int m = 1; m <= N; ++m) sum += 2.0 * velocity_bessel(unit_params, m, t);
    CHECK(std::abs(sum - 0.5) <= 1e-8);
}

TEST_CASE("snapshot evaluates the chosen form across a node range") {
    const auto rest = snapshot(unit_params, Formula::velocity_bessel, 0, 3, 0.0);
    REQUIRE(rest.size() == 4);
    CHECK(rest[0].value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rest[1].value == 0.0);
    CHECK(rest[2].value == 0.0);
    CHECK(rest[3].value == 0.0);
    CHECK(rest[2].m == 2);
    CHECK(rest[2].formula == Formula::velocity_bessel);

    const auto dark = snapshot(unit_params, Formula::displacement_log, 30, 40, 20.0);
    for (const auto& eval : dark) CHECK(eval.value == 0.0);

    const auto front = snapshot(unit_params, Formula::velocity_airy, 80, 120, 100.0);
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < front.size(); ++i) {
        if (front[i].value > front[argmax].value) argmax = i;
    }
    const int m_peak = front[argmax].m;
    CHECK(m_peak >= 90);
    CHECK(m_peak <= 99);

    CHECK_THROWS_AS(snapshot(unit_params, Formula::velocity_bessel, 5, 3, 1.0),
                    std::invalid_argument);
}

TEST_CASE("airy envelope encodes the peak of Ai") {
    CHECK(airy_ai(kAiPeakArg) == doctest::Approx(kAiPeakValue).epsilon(1e-12));

    const double t = 200.0;
    const auto peak = velocity_airy_envelope(unit_params, t);
    const double expected = std::pow(2.0, -1.0 / 3.0) * kAiPeakValue * kAiPeakValue /
                            std::pow(t, 2.0 / 3.0);
    CHECK(peak.value == doctest::Approx(expected).epsilon(1e-9));
    // the peak sits behind the front by a fixed multiple of t^{1/3}
    CHECK(std::pow(2.0, 1.0 / 3.0) * front_kappa(unit_params, peak.m, t) ==
          doctest::Approx(kAiPeakArg).epsilon(1e-6));
    // nearby integer nodes cannot exceed the envelope
    for (int m = 180; m <= 205; ++m) {
        CHECK(velocity_airy(unit_params, m, t) <= peak.value * (1.0 + 1e-12));
    }
}

TEST_CASE("envelopes decay with the advertised self-similar exponents") {
    const double v1 = velocity_airy_envelope(unit_params, 50.0).value;
    const double v2 = velocity_airy_envelope(unit_params, 400.0).value;
    CHECK(v2 / v1 == doctest::Approx(std::pow(8.0, -2.0 / 3.0)).epsilon(1e-9));

    const double w1 = acceleration_airy_envelope(unit_params, 50.0).value;
    const double w2 = acceleration_airy_envelope(unit_params, 400.0).value;
    CHECK(w2 / w1 == doctest::Approx(1.0 / 8.0).epsilon(1e-9));
    CHECK(w1 > 0.0);
}

TEST_CASE("airy front width grows as the cube root of time") {
    const double ratio =
        front_width_airy(unit_params, 800.0) / front_width_airy(unit_params, 100.0);
    CHECK(ratio == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(front_width_airy(unit_params, 100.0) > 0.0);

    // width measured in node index units scales with omega0 t
    const LatticeParams slow(4.0, 1.0, 1.0, 1.0);
    CHECK(front_width_airy(slow, 200.0) ==
          doctest::Approx(front_width_airy(unit_params, 100.0)).epsilon(1e-9));

    CHECK_THROWS_AS(front_width_airy(unit_params, 100.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(front_width_airy(unit_params, 100.0, 0.0), std::invalid_argument);
}

TEST_CASE("short-wave arrival prediction is linear in the node index") {
    const double expected = 20.0 * std::numbers::sqrt2 * std::numbers::pi / 2.0;
    CHECK(shortwave_arrival_prediction(unit_params, 20) ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(44.43).epsilon(1e-3));
    CHECK(shortwave_arrival_prediction(unit_params, 40) ==
          doctest::Approx(2.0 * expected).epsilon(1e-14));
    CHECK(shortwave_arrival_prediction(unit_params, -20) ==
          doctest::Approx(expected).epsilon(1e-14));

    // equivalently m sqrt(2) L / c_short
    CHECK(shortwave_arrival_prediction(unit_params, 20) ==
          doctest::Approx(20.0 * std::numbers::sqrt2 * unit_params.spacing /
                          unit_params.c_short())
              .epsilon(1e-13));
}
