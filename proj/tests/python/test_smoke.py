"""Smoke tests for the python bindings against the CMake-built module."""

import math
import os
import sys

import pytest

_module_dir = os.environ.get("SPECMARKET_PYMODULE_DIR")
if _module_dir:
    sys.path.insert(0, _module_dir)

core = pytest.importorskip("_core") if _module_dir else pytest.importorskip("specmarket")


def preset(name="exp-light"):
    return core.Scenario.preset(name)


def test_moments_and_delay():
    x = core.DistSpec.exponential(1.0)
    y = core.DistSpec.exponential(1.5)
    z = core.DistSpec.exponential(0.5)
    assert core.effective_first_moment(x, y, z) == pytest.approx(4.0 / 3.0)
    m = core.effective_moments(x, y, z)
    assert m.m2 == pytest.approx(4.0)
    s = preset()
    assert s.delay.mean_delay(0.2) == pytest.approx(62.0 / 33.0)
    assert math.isinf(s.delay.mean_delay(0.9))


def test_equilibrium_and_pricing():
    s = preset()
    eq = core.equilibrium_shared(s, 0.58)
    assert eq.p_star == pytest.approx(0.216337788863, abs=1e-9)
    r = core.revenue_optimal_shared(s)
    assert abs(r.optimal_price - 0.58) <= 0.01
    assert abs(r.optimal_value - 0.13) <= 0.01
    soc = core.social_optimal_shared(s)
    assert abs(soc.argmax_aux - 0.30) <= 0.01
    assert core.equilibrium_exclusive(s, 0.5).p_star == pytest.approx(0.5)


def test_iteration_dynamics():
    s = preset()
    t = core.iterate_shared(s, 0.58, 0.0)
    assert t.converged
    assert t.iterates[-1] == pytest.approx(0.216337788863, abs=1e-6)
    div = core.iterate_shared(s, 0.58, 0.8)
    assert not div.converged


def test_duopoly():
    s = preset()
    out = core.stage1_equilibrium(s)
    assert out.c2_star == pytest.approx(2 * out.c1_star)
    assert out.c1_star == pytest.approx(0.125722784933, abs=1e-8)
    eq = core.stage2_equilibrium(s, out.c1_star, out.c2_star)
    assert eq.region == core.MarketRegion.coexistence
    assert eq.p1 == pytest.approx(out.p1_circ, abs=1e-8)
    assert core.classify_market(s, 0.6, 0.5) == core.MarketRegion.exclusive_monopoly


def test_simulation():
    s = preset()
    cfg = core.SimConfig(0.2, core.DistSpec.exponential(1.0),
                         core.DistSpec.exponential(1.5), core.DistSpec.exponential(0.5),
                         n_jobs=120000, seed=4)
    est = core.simulate_shared_queue(cfg)
    assert not est.saturated
    assert abs(est.mean_delay - 62.0 / 33.0) <= max(3 * est.ci_halfwidth, 0.06)
    again = core.simulate_shared_queue(cfg)
    assert again.mean_delay == est.mean_delay


def test_scenario_json_roundtrip():
    s = preset()
    text = s.to_json()
    s2 = core.Scenario.from_json(text)
    assert s2.moments.m2 == s.moments.m2
    with pytest.raises(ValueError):
        core.Scenario.from_json("{}")
