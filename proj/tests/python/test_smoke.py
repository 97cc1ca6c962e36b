"""End-to-end checks of the python bindings against scipy and the CSV layout."""

import math
import os

import pytest
import scipy.special as sp

import latticewave as lw

UNIT = lw.LatticeParams(mass=1.0, stiffness=1.0, spacing=1.0, load_amplitude=1.0)


def test_bessel_matches_scipy():
    xs = [0.1 * i for i in range(1, 301)]
    for n in (0, 1, 5, 12):
        worst = max(abs(lw.bessel_j(n, x) - sp.jv(n, x)) for x in xs)
        assert worst < 1e-12


def test_airy_matches_scipy():
    xs = [-10.0 + 0.25 * i for i in range(61)]
    for x in xs:
        ai, aip, _, _ = sp.airy(x)
        assert lw.airy_ai(x) == pytest.approx(ai, abs=1e-10)
        assert lw.airy_ai_prime(x) == pytest.approx(aip, abs=1e-10)


def test_characteristic_speeds():
    p = lw.LatticeParams(mass=4.0, stiffness=1.0, spacing=2.0, load_amplitude=1.0)
    assert p.omega0() == pytest.approx(0.5)
    assert p.c_star() == pytest.approx(1.0)
    assert p.c_short() == pytest.approx(2.0 / math.pi)
    # band-edge mode of the dispersion relation
    edge = lw.dispersion_omega(p, math.pi / 2.0, math.pi / 2.0)
    assert edge == pytest.approx(2.0 * math.sqrt(2.0) * 0.5)


def test_closed_forms_reference_values():
    assert lw.displacement_log(UNIT, 20, 40.0) == pytest.approx(
        math.log(2.0 + math.sqrt(3.0)) / (2.0 * math.pi), abs=1e-14
    )
    assert lw.velocity_bessel(UNIT, 0, 0.0) == pytest.approx(0.5)
    assert lw.shortwave_arrival_prediction(UNIT, 20) == pytest.approx(
        20.0 * math.sqrt(2.0) * math.pi / 2.0
    )
    ratio = lw.front_width_airy(UNIT, 800.0) / lw.front_width_airy(UNIT, 100.0)
    assert ratio == pytest.approx(2.0, abs=1e-6)


def test_validation_maps_to_value_error():
    assert issubclass(lw.ValidationError, ValueError)
    cfg = lw.FdmConfig()
    cfg.t_end = 10.0
    cfg.tau = 0.8
    with pytest.raises(ValueError):
        cfg.validate()


def test_missing_config_maps_to_os_error():
    with pytest.raises(OSError):
        lw.load_config("/nonexistent/latwave.cfg")


def test_small_run_shapes():
    cfg = lw.FdmConfig()
    cfg.t_end = 5.0
    cfg.probes = [lw.Probe(2, 0)]
    cfg.snapshot_times = [4.0]
    result = lw.run(cfg)
    steps = cfg.step_count()
    probe = result.probes[0]
    assert len(probe.times) == steps + 1
    assert len(probe.u) == steps + 1
    assert len(probe.v) == steps - 1
    assert len(probe.w) == steps - 1
    assert probe.u[0] == 0.0
    assert max(abs(u) for u in probe.u) > 0.0
    assert result.snapshots[0].t == pytest.approx(4.0, abs=0.05)
    assert len(result.snapshots[0].u) == cfg.domain_halfwidth() + 1


def test_decay_fit_recovers_power_law():
    t = [50.0, 100.0, 200.0, 400.0]
    amp = [x ** (-2.0 / 3.0) for x in t]
    fit = lw.peak_amplitude_decay(t, amp)
    assert fit.exponent == pytest.approx(-2.0 / 3.0, abs=1e-12)
    assert fit.r_squared == pytest.approx(1.0)


def test_series_comparison_is_symmetric():
    a = lw.Series([0.0, 1.0, 2.0], [0.0, 1.0, 0.0])
    b = lw.Series([0.0, 1.0, 2.0], [0.0, 1.2, 0.0])
    ab = lw.compare_series(a, b, 0.0, 2.0)
    ba = lw.compare_series(b, a, 0.0, 2.0)
    assert ab.max_abs_diff == ba.max_abs_diff
    assert ab.rel_peak_diff == pytest.approx(0.2 / 1.2)


def test_run_experiment_writes_artifacts(tmp_path):
    cfg_path = tmp_path / "pysmoke.cfg"
    cfg_path.write_text("name=pysmoke\nt_end=5\nprobe=1,0\noutputs=probe_csv\n")
    spec = lw.load_config(str(cfg_path))
    summary = lw.run_experiment(spec, str(tmp_path / "out"))
    assert summary.name == "pysmoke"
    assert len(summary.files) == 1
    assert os.path.exists(summary.files[0])
    first = open(summary.files[0], "rb").read()
    assert first.startswith(b"#")
    lw.run_experiment(spec, str(tmp_path / "out"))
    assert open(summary.files[0], "rb").read() == first
