import math
import random

import pytest

from excentric import core, mechanisms
from excentric.core import FIRST, SECOND, EvalError, ExCenter

PI = math.pi


def classical_stroke(theta, R, e):
    return e * math.cos(theta) + math.sqrt(R * R - (e * math.sin(theta)) ** 2)


@pytest.mark.parametrize(
    "theta, expected",
    [(0.0, 1.5), (PI, 0.5), (PI / 2, math.sqrt(0.75))],
)
def test_stroke_examples(theta, expected):
    assert mechanisms.stroke(theta, 1.0, 0.5) == pytest.approx(expected, abs=1e-15)


def test_stroke_matches_classical():
    rng = random.Random(2)
    for _ in range(2000):
        R = rng.uniform(0.1, 5)
        e = rng.uniform(0, 0.999) * R
        t = rng.uniform(0, 2 * PI)
        assert abs(mechanisms.stroke(t, R, e) - classical_stroke(t, R, e)) < 1e-10


def test_stroke_domain():
    with pytest.raises(EvalError):
        mechanisms.stroke(PI / 2, 1.0, 2.0)
    assert mechanisms.stroke(0.0, 1.0, 2.0) == pytest.approx(3.0)
    with pytest.raises(ValueError):
        mechanisms.stroke(0.0, 0.0, 0.5)


def test_position_transfer_is_rex():
    half = ExCenter(0.5, 0.0)
    assert mechanisms.position_transfer(0.0, half) == pytest.approx(0.5)
    assert mechanisms.position_transfer(0.0, half, SECOND) == pytest.approx(-1.5)
    assert mechanisms.position_transfer(PI / 2, half) == pytest.approx(math.sqrt(0.75))
    assert mechanisms.velocity_transfer(0.0, half) == pytest.approx(0.5)


def test_oscillator_linear_case():
    samples = mechanisms.simulate_oscillator(core.CENTRIC, Omega=2.0, R=3.0, dt=0.01, theta0=0.3)
    for smp in samples:
        assert smp.omega == 2.0
        assert smp.x == pytest.approx(3.0 * math.cos(2.0 * smp.t + 0.3), abs=1e-12)
        assert abs(core.angle_diff(smp.alpha_rk4, smp.alpha)) < 1e-12


def test_oscillator_unit_s_dwell_and_double_speed():
    dt = 1e-3
    samples = mechanisms.simulate_oscillator(ExCenter(1.0, 0.0), Omega=1.0, R=1.0, dt=dt)
    omegas = [smp.omega for smp in samples]
    assert max(omegas) == pytest.approx(2.0, abs=1e-9)
    assert min(omegas) == 0.0
    dwell = [smp for smp in samples if smp.omega < 1e-9]
    assert len(dwell) / len(samples) == pytest.approx(0.5, abs=2 * dt / (2 * PI))
    # the dwell happens at A(R, 0)
    for smp in dwell:
        assert smp.x == pytest.approx(1.0, abs=1e-12)


def test_oscillator_mirrored_dwell_point():
    samples = mechanisms.simulate_oscillator(ExCenter(1.0, PI), dt=1e-2)
    dwell = [smp for smp in samples if smp.omega < 1e-9]
    assert dwell and all(smp.x == pytest.approx(-1.0, abs=1e-12) for smp in dwell)


@pytest.mark.parametrize("s", [0.0, 0.5, 1.0, -0.7])
def test_oscillator_winding(s):
    samples = mechanisms.simulate_oscillator(ExCenter(s, 0.4), Omega=1.0)
    assert mechanisms.winding([smp.alpha for smp in samples]) == pytest.approx(2 * PI, abs=1e-12)
    assert mechanisms.winding([smp.alpha_rk4 for smp in samples]) == pytest.approx(2 * PI, abs=1e-6)


def test_oscillator_rk4_handles_jumps_off_grid():
    # dt does not divide pi, so jumps fall inside steps
    samples = mechanisms.simulate_oscillator(ExCenter(1.0, 0.1), Omega=1.3, dt=0.0123)
    for smp in samples:
        assert abs(core.angle_diff(smp.alpha_rk4, smp.alpha)) < 1e-9


def test_oscillator_preconditions():
    with pytest.raises(ValueError):
        mechanisms.simulate_oscillator(ExCenter(1.5, 0.0))
    with pytest.raises(ValueError):
        mechanisms.simulate_oscillator(core.CENTRIC, Omega=0.0)
    with pytest.raises(ValueError):
        mechanisms.simulate_oscillator(core.CENTRIC, t_end=1.0, dt=2.0)


def test_sec_examples():
    assert mechanisms.sec_force(0.0, ExCenter(0.7, 0.0)) == 0.0
    assert mechanisms.sec_force(0.5, core.CENTRIC) == pytest.approx(0.27315124492189524, abs=1e-15)
    # 0.5 * tan(0.5 - asin(0.5 sin 0.5))
    assert mechanisms.sec_force(0.5, ExCenter(0.5, 0.0)) == pytest.approx(0.1319031437261549, abs=1e-15)


def test_sec_slope_matches_fd():
    ex = ExCenter(0.5, 0.0)
    x = 0.5
    h = 1e-6
    fd = (mechanisms.sec_force(x + h, ex) - mechanisms.sec_force(x - h, ex)) / (2 * h)
    # d/dx [x tan(aex x)] = tan(aex x) + x sec^2(aex x) dex(x)
    a = core.aex(x, ex)
    assert fd == pytest.approx(math.tan(a) + x * core.dex(x, ex) / math.cos(a) ** 2, abs=1e-8)


def test_sec_hard_soft_relative_to_linear_reference():
    xs = [PI / 4 * k / 200 for k in range(1, 200)]
    for s in (0.1, 0.5, 0.9):
        pos = [mechanisms.sec_force(x, ExCenter(s, 0.0)) - mechanisms.sec_force(x, core.CENTRIC) for x in xs]
        neg = [mechanisms.sec_force(x, ExCenter(-s, 0.0)) - mechanisms.sec_force(x, core.CENTRIC) for x in xs]
        d2p = [a - 2 * b + c for a, b, c in zip(pos, pos[1:], pos[2:])]
        d2n = [a - 2 * b + c for a, b, c in zip(neg, neg[1:], neg[2:])]
        assert all(v < 0 for v in d2p)
        assert all(v > 0 for v in d2n)
        # eps = pi mirrors the sign of s
        assert mechanisms.sec_force(0.3, ExCenter(s, PI)) == pytest.approx(
            mechanisms.sec_force(0.3, ExCenter(-s, 0.0)), abs=1e-14
        )


def test_sec_curve():
    pts = mechanisms.sec_curve([0.0, 0.1], ExCenter(0.2, 0.0))
    assert pts[0].force == 0.0 and pts[1].x == 0.1
