"""Mechanism applications: slider-crank stroke, transfer functions, the
ex-centric oscillator and static elastic characteristics (SEC)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import core
from .core import TWO_PI, Determination, ExCenter


@dataclass(frozen=True)
class OscillatorSample:
    t: float
    theta: float
    alpha: float
    x: float
    omega: float
    alpha_rk4: float


@dataclass(frozen=True)
class SecPoint:
    x: float
    force: float


def stroke(theta: float, R: float, e: float) -> float:
    """Slider displacement of a push-pull (slider-crank) mechanism, R * rex1(theta).

    The ex-center sits at eps = pi so the result reads
    e*cos(theta) + sqrt(R^2 - e^2 sin^2 theta).
    """
    if not R > 0.0:
        raise ValueError(f"R must be positive, got {R!r}")
    if e < 0.0:
        raise ValueError(f"e must be non-negative, got {e!r}")
    return R * core.rex(theta, ExCenter(e / R, math.pi), Determination.FIRST)


def position_transfer(theta: float, ex: ExCenter, det=Determination.FIRST) -> float:
    """Zero-order (position) transfer function; this is rex itself."""
    return core.rex(theta, ex, det)


def velocity_transfer(theta: float, ex: ExCenter, det=Determination.FIRST) -> float:
    """First-order (angular velocity) transfer function; this is dex."""
    return core.dex(theta, ex, det)


def period(Omega: float) -> float:
    return TWO_PI / Omega


def _split_points(ex: ExCenter, Omega: float, theta0: float, t0: float, t1: float) -> list[float]:
    """Times in (t0, t1) where dex jumps, so RK4 never straddles one."""
    cuts = []
    per = TWO_PI / Omega
    phase = theta0 + Omega * t0
    for j in core.dex_jumps(ex):
        tc = t0 + core.normalize_angle(j - phase) / Omega
        if tc <= t0:
            tc += per
        while tc < t1:
            cuts.append(tc)
            tc += per
    return sorted(cuts)


def _rk4_alpha(alpha: float, t0: float, t1: float, rate) -> float:
    # the right-hand side does not depend on alpha; the interval is smooth
    # because callers split it at the jumps
    h = t1 - t0
    k1 = rate(t0, +1)
    k2 = k3 = rate(t0 + 0.5 * h, +1)
    k4 = rate(t1, -1)
    return alpha + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def simulate_oscillator(
    ex: ExCenter,
    Omega: float = 1.0,
    R: float = 1.0,
    t_end: float | None = None,
    dt: float | None = None,
    theta0: float = 0.0,
) -> list[OscillatorSample]:
    """Mass point driven around a circle of radius R at omega = Omega * dex1(Omega t + theta0).

    ``alpha`` is the closed form aex1 and ``alpha_rk4`` comes from integrating
    d(alpha)/dt with fixed-step RK4; both are normalised to [0, 2*pi).  Steps
    are split at the dex jumps of |s| == 1.  Defaults: one period
    T = 2*pi/Omega, dt = T/1e4.
    """
    if abs(ex.s) > 1.0:
        raise ValueError(f"oscillator needs |s| <= 1, got s={ex.s!r}")
    if not Omega > 0.0:
        raise ValueError(f"Omega must be positive, got {Omega!r}")
    T = period(Omega)
    t_end = T if t_end is None else t_end
    dt = T / 1e4 if dt is None else dt
    if not 0.0 < dt <= t_end:
        raise ValueError(f"need 0 < dt <= t_end, got dt={dt!r}, t_end={t_end!r}")

    def rate(t, side):
        return Omega * core.dex_sided(Omega * t + theta0, ex, Determination.FIRST, side)

    nsteps = math.ceil(t_end / dt - 1e-9)
    out = []
    alpha_int = core.aex_unwrapped(theta0, ex)
    t_prev = 0.0
    for k in range(nsteps + 1):
        t = min(k * dt, t_end)
        if k > 0:
            knots = [t_prev, *_split_points(ex, Omega, theta0, t_prev, t), t]
            for a, b in zip(knots, knots[1:]):
                alpha_int = _rk4_alpha(alpha_int, a, b, rate)
        theta = Omega * t + theta0
        alpha = core.aex(theta, ex)
        out.append(
            OscillatorSample(
                t=t,
                theta=core.normalize_angle(theta),
                alpha=alpha,
                x=R * math.cos(alpha),
                omega=rate(t, +1),
                alpha_rk4=core.normalize_angle(alpha_int),
            )
        )
        t_prev = t
    return out


def winding(angles) -> float:
    """Total signed angle swept by a sequence of angles sampled finely enough."""
    total = 0.0
    for a, b in zip(angles, angles[1:]):
        total += math.remainder(b - a, TWO_PI)
    return total


def sec_force(x: float, ex: ExCenter, det=Determination.FIRST) -> float:
    """Static elastic characteristic y = m*x with slope m = tex(x).

    The displacement is fed to tex as an angle in radians.  s = 0 gives
    y = x*tan(x); s and -s (equivalently eps = 0 vs eps = pi) bend the curve
    to opposite sides of that reference.
    """
    return x * core.tex(x, ex, det)


def sec_curve(xs, ex: ExCenter, det=Determination.FIRST) -> list[SecPoint]:
    return [SecPoint(x, sec_force(x, ex, det)) for x in xs]
