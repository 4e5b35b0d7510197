"""Smoke tests for the python bindings (run with the build dir on PYTHONPATH)."""

import math
import sys

sys.path.insert(0, "python")  # allow running from the source tree too

import _tbench as tb


def test_version():
    assert tb.__version__


def test_budget_identities():
    assert tb.terabit_budget(1.0, 100e9, 60.0)[3] == 6e12
    assert tb.terabit_budget(1.0, 100e9, None, 1e12)[2] == 10.0
    assert tb.terabit_budget(None, 1e9, 10.0, 1e12)[0] == 100.0


def test_papr_closed_form():
    for m in (16, 64):
        g = 1
        while g <= m:
            c = tb.pqam(m, g)
            assert math.isclose(tb.papr(c), tb.pqam_papr_closed_form(g), rel_tol=1e-12)
            g *= 2


def test_rayleigh_distance_inverse_pair():
    assert math.isclose(tb.rayleigh_distance_m(4, 5e-3, 5e-3, 3e-4), 1.0 / 3.0,
                        rel_tol=1e-12)
    delta = tb.optimal_separation_m(1.0, 256, 3e-4)
    assert math.isclose(tb.rayleigh_distance_m(256, delta, delta, 3e-4), 1.0,
                        rel_tol=1e-12)


def test_irs_optimal_gain():
    gain = tb.irs_optimal_gain(1e-10, 400, 1e-15)
    expect = (1e-5 + 400 * 10 ** -7.5) ** 2
    assert math.isclose(gain, expect, rel_tol=1e-12)


def test_noise_and_pathloss():
    assert math.isclose(tb.noise_power_dbm(20e6, 9.0), -91.9897, abs_tol=1e-3)
    assert math.isclose(tb.closein_pathloss_db(1.0, 2.0, 1.0), 32.4, abs_tol=1e-9)


def test_geometry():
    region = tb.Region(1000.0, True)
    assert math.isclose(tb.wrap_distance((0, 0), (999, 0), region), 1.0)
    pts = tb.sample_fhppp(60.0, region, seed=1)
    assert pts == tb.sample_fhppp(60.0, region, seed=1)  # deterministic
    assert all(0 <= x < 1000 and 0 <= y < 1000 for x, y in pts)


def test_coded_caching():
    assert tb.cc_gain(6, 1.0, 3) == 2.0
    assert tb.cc_subpacketization(6, 1.0, 3) == 15


def test_condition_number_tuning():
    lam = 3e8 / 1e12
    delta = tb.optimal_separation_m(1.0, 2, lam)
    assert tb.los_channel_condition_number(2, 2, delta, 1e12, 1.0) < 1.1
    assert tb.los_channel_condition_number(2, 2, delta / 10, 1e12, 1.0) > 100


def test_percentiles():
    p = tb.percentiles([float(i) for i in range(1, 101)], [50.0])
    assert math.isclose(p[50.0], 50.5)


def test_cellfree_small_run():
    out = tb.cellfree_table_run(seed=1, n_drops=3)
    dl = out["dl_percentiles_bps"]
    assert dl[1.0] <= dl[50.0] <= dl[90.0]
    assert dl[50.0] > 0


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except AssertionError as exc:
                print(f"FAIL {name}: {exc}")
                failures += 1
    sys.exit(1 if failures else 0)
