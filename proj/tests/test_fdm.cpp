#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "latwave/errors.hpp"
#include "latwave/fdm.hpp"

using namespace latwave;

namespace {

FdmConfig base_config(double t_end) {
    FdmConfig cfg;
    cfg.t_end = t_end;
    return cfg;
}

bool mentions(const validation_error& e, const std::string& needle) {
    for (const auto& issue : e.issues()) {
        if (issue.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("validate rejects an unstable time step with the bound in the message") {
    auto cfg = base_config(10.0);
    cfg.tau = 0.8;
    try {
        cfg.validate();
        FAIL("expected a validation error");
    } catch (const validation_error& e) {
        CHECK(mentions(e, "stability"));
        CHECK(mentions(e, "0.7"));
    }
}

TEST_CASE("validate reports every violation at once") {
    auto cfg = base_config(-2.0);
    cfg.tau = -1.0;
    cfg.halo_margin = -3;
    try {
        cfg.validate();
        FAIL("expected a validation error");
    } catch (const validation_error& e) {
        CHECK(e.issues().size() >= 3);
    }
}

TEST_CASE("validate checks probes against the truncated domain") {
    auto cfg = base_config(10.0);
    cfg.probes.push_back({25, 0});  // N = 10 + 8 = 18
    CHECK_THROWS_AS(cfg.validate(), validation_error);
    cfg.probes.back() = {18, -18};
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("validate checks snapshot times against the duration") {
    auto cfg = base_config(10.0);
    cfg.snapshot_times = {5.0, 12.0};
    CHECK_THROWS_AS(cfg.validate(), validation_error);
    cfg.snapshot_times = {5.0, 10.0};
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("the marginal time step is accepted") {
    auto cfg = base_config(10.0);
    cfg.tau = 0.7;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("derived sizes") {
    auto cfg = base_config(80.0);
    CHECK(cfg.domain_halfwidth() == 88);
    CHECK(cfg.step_count() == 1143);  // round(80 / 0.07)
}

TEST_CASE("first updates match the scheme applied by hand") {
    // verbatim source: full weight from the first update
    auto cfg = base_config(0.2);
    cfg.tau = 0.1;
    cfg.halo_margin = 4;
    cfg.source_start = SourceStart::literal;
    cfg.probes.push_back({0, 0});

    WaveField f(cfg.domain_halfwidth(), cfg.symmetry);
    const double tau2 = cfg.tau * cfg.tau;

    step(f, cfg);
    CHECK(f.at(0, 0) == doctest::Approx(tau2).epsilon(1e-15));
    CHECK(f.at(1, 0) == 0.0);

    step(f, cfg);
    // 2 u - u_prev + (tau w0)^2 * (-4 u) + tau^2, all neighbours still zero
    CHECK(f.at(0, 0) == doctest::Approx(0.0296).epsilon(1e-14));
    CHECK(f.at(1, 0) == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(f.at(0, 1) == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(f.at(1, 1) == 0.0);
}

TEST_CASE("smooth source halves the first kick only") {
    auto cfg = base_config(0.2);
    cfg.tau = 0.1;
    cfg.halo_margin = 4;
    cfg.probes.push_back({0, 0});

    WaveField f(cfg.domain_halfwidth(), cfg.symmetry);
    step(f, cfg);
    CHECK(f.at(0, 0) == doctest::Approx(0.5 * cfg.tau * cfg.tau).epsilon(1e-15));
}

TEST_CASE("full-plane storage keeps the mirror images equal") {
    auto cfg = base_config(0.3);
    cfg.tau = 0.1;
    cfg.halo_margin = 4;
    cfg.symmetry = Symmetry::full;
    cfg.source_start = SourceStart::literal;

    WaveField f(cfg.domain_halfwidth(), cfg.symmetry);
    step(f, cfg);
    step(f, cfg);
    step(f, cfg);
    CHECK(f.at(1, 0) == f.at(-1, 0));
    CHECK(f.at(0, 1) == f.at(0, -1));
    CHECK(f.at(1, 1) == f.at(-1, -1));
    CHECK(f.at(1, 0) == f.at(0, 1));
    CHECK(f.at(1, 0) != 0.0);
    CHECK(f.at(1, 1) != 0.0);
}

TEST_CASE("disturbance stays inside the step-count light cone") {
    auto cfg = base_config(1.0);
    cfg.tau = 0.07;
    WaveField f(10, Symmetry::quarter);
    for (int s = 0; s < 6; ++s) step(f, cfg);
    CHECK(f.at(0, 0) != 0.0);
    CHECK(f.at(7, 0) == 0.0);
    CHECK(f.at(4, 3) == 0.0);
    CHECK(f.at(0, 9) == 0.0);
}

TEST_CASE("quarter-plane run reproduces the full-plane run") {
    auto make = [](Symmetry mode) {
        auto cfg = base_config(20.0);
        cfg.symmetry = mode;
        cfg.probes.push_back({7, 3});
        return run(cfg).probes[0];
    };
    const auto q = make(Symmetry::quarter);
    const auto full = make(Symmetry::full);
    REQUIRE(q.u.size() == full.u.size());
    for (std::size_t i = 0; i < q.u.size(); ++i) {
        CHECK(std::abs(q.u[i] - full.u[i]) <= 1e-12);
    }
}

TEST_CASE("final field carries the lattice symmetries") {
    auto cfg = base_config(12.0);
    cfg.symmetry = Symmetry::full;
    const auto result = run(cfg);
    const auto& f = result.field;
    const struct {
        int m, n;
    } pts[] = {{3, 1}, {5, 2}, {7, 0}, {2, 2}};
    for (const auto& p : pts) {
        CHECK(std::abs(f.at(p.m, p.n) - f.at(p.n, p.m)) <= 1e-13);
        CHECK(std::abs(f.at(p.m, p.n) - f.at(-p.m, p.n)) <= 1e-13);
        CHECK(std::abs(f.at(p.m, p.n) - f.at(p.m, -p.n)) <= 1e-13);
    }
}

TEST_CASE("probe series carries aligned centered differences") {
    auto cfg = base_config(5.0);
    cfg.probes.push_back({1, 0});
    const auto result = run(cfg);
    const auto& s = result.probes[0];
    const std::size_t R = static_cast<std::size_t>(cfg.step_count());
    REQUIRE(s.times.size() == R + 1);
    REQUIRE(s.u.size() == R + 1);
    REQUIRE(s.v.size() == R - 1);
    REQUIRE(s.w.size() == R - 1);
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        CHECK(s.times[i] == doctest::Approx(i * cfg.tau).epsilon(1e-14));
    }
    for (std::size_t i = 0; i + 2 < s.u.size(); ++i) {
        CHECK(s.v[i] == (s.u[i + 2] - s.u[i]) / (2.0 * cfg.tau));
        CHECK(s.w[i] == (s.u[i + 2] - 2.0 * s.u[i + 1] + s.u[i]) /
                            (cfg.tau * cfg.tau));
    }
}

TEST_CASE("snapshots come back in the requested order and match probes") {
    auto cfg = base_config(12.0);
    cfg.probes.push_back({2, 0});
    cfg.snapshot_times = {10.0, 5.0};
    const auto result = run(cfg);
    REQUIRE(result.snapshots.size() == 2);
    const auto& first = result.snapshots[0];
    const auto& second = result.snapshots[1];
    CHECK(first.t > second.t);  // requested order preserved
    CHECK(first.t == doctest::Approx(10.0).epsilon(0.01));
    CHECK(second.t == doctest::Approx(5.0).epsilon(0.01));

    const int N = cfg.domain_halfwidth();
    REQUIRE(first.u.size() == static_cast<std::size_t>(N) + 1);
    REQUIRE(first.v.size() == first.u.size());
    REQUIRE(first.w.size() == first.u.size());

    // the snapshot row and the probe history sample the same layer
    const auto r_target =
        static_cast<std::size_t>(std::llround(first.t / cfg.tau));
    CHECK(first.u[2] == result.probes[0].u[r_target]);
}

TEST_CASE("a snapshot on the final layer is still completed") {
    auto cfg = base_config(7.0);
    cfg.snapshot_times = {7.0};
    const auto result = run(cfg);
    REQUIRE(result.snapshots.size() == 1);
    CHECK(result.snapshots[0].v.size() == result.snapshots[0].u.size());
}

TEST_CASE("zero load leaves the lattice at rest") {
    auto cfg = base_config(5.0);
    cfg.params = LatticeParams(1.0, 1.0, 1.0, 0.0);
    cfg.probes.push_back({0, 0});
    cfg.record_energy = true;
    const auto result = run(cfg);
    for (const double u : result.probes[0].u) CHECK(u == 0.0);
    for (const auto& e : result.energy) {
        CHECK(e.kinetic == 0.0);
        CHECK(e.potential == 0.0);
        CHECK(e.work == 0.0);
    }
}

TEST_CASE("energy accounting of the first verbatim step") {
    auto cfg = base_config(0.2);
    cfg.tau = 0.1;
    cfg.halo_margin = 4;
    cfg.source_start = SourceStart::literal;

    WaveField f(cfg.domain_halfwidth(), cfg.symmetry);
    const auto rest = energy_balance(f, cfg);
    CHECK(rest.kinetic == 0.0);
    CHECK(rest.potential == 0.0);
    CHECK(rest.work == 0.0);

    step(f, cfg);
    const auto sample = energy_balance(f, cfg);
    const double tau2 = cfg.tau * cfg.tau;
    CHECK(sample.work == doctest::Approx(tau2).epsilon(1e-15));
    CHECK(sample.kinetic == doctest::Approx(0.5 * tau2).epsilon(1e-15));
    CHECK(sample.potential >= 0.0);
    CHECK(sample.potential <= sample.kinetic);
}

TEST_CASE("work, kinetic and potential energy balance over a long run") {
    auto cfg = base_config(40.0);
    cfg.record_energy = true;
    const auto result = run(cfg);
    REQUIRE(!result.energy.empty());
    std::size_t checked = 0;
    for (const auto& e : result.energy) {
        if (e.t < 2.0) continue;  // the turn-on transient dominates earlier
        CHECK(std::abs(e.kinetic + e.potential - e.work) <= 0.02 * e.work);
        ++checked;
    }
    CHECK(checked >= 30);
    CHECK(result.energy.back().t == doctest::Approx(40.0).epsilon(0.01));
}

TEST_CASE("displacement converges at second order in the time step") {
    auto probe_value = [](double tau) {
        FdmConfig cfg;
        cfg.tau = tau;
        cfg.t_end = 40.0;
        cfg.probes.push_back({20, 0});
        const auto result = run(cfg);
        return result.probes[0].u.back();
    };
    const double coarse = probe_value(0.08);
    const double mid = probe_value(0.04);
    const double fine = probe_value(0.02);
    const double ratio = (coarse - mid) / (mid - fine);
    CHECK(ratio >= 3.2);
    CHECK(ratio <= 4.8);
}

TEST_CASE("the unstable regime is caught, the stable margin is not") {
    auto cfg = base_config(40.0);
    cfg.tau = 0.9;
    cfg.enforce_cfl = false;
    CHECK_THROWS_AS(run(cfg), instability_error);

    cfg.tau = 0.7;
    cfg.enforce_cfl = true;
    CHECK_NOTHROW(run(cfg));
}

TEST_CASE("identical configs give bit-identical runs") {
    auto make = [] {
        auto cfg = base_config(15.0);
        cfg.probes.push_back({4, 2});
        return run(cfg);
    };
    const auto a = make();
    const auto b = make();
    REQUIRE(a.probes[0].u.size() == b.probes[0].u.size());
    for (std::size_t i = 0; i < a.probes[0].u.size(); ++i) {
        CHECK(a.probes[0].u[i] == b.probes[0].u[i]);
    }
}
