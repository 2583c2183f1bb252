"""Curve samplers: Booth lemniscates, ex-centric circles, quadrilobes,
elevated and exotic curves.

Samplers use a uniform grid of ``n`` angles over [0, 2*pi), endpoint
excluded.  Where an evaluation raises :class:`EvalError` the curve is cut,
and the edge of each surviving run is refined by bisection so runs end on
the domain boundary rather than on the last grid node.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import core
from .core import TWO_PI, Determination, EvalError, ExCenter, PlanePoint
from .oracle import line_circle_intersections

GAP_TOL = 1e-10


@dataclass
class Run:
    samples: list[tuple[float, PlanePoint]] = field(default_factory=list)
    closed: bool = False

    @property
    def thetas(self) -> list[float]:
        return [t for t, _ in self.samples]

    @property
    def points(self) -> list[PlanePoint]:
        return [p for _, p in self.samples]

    def __len__(self):
        return len(self.samples)


@dataclass
class Polyline:
    runs: list[Run] = field(default_factory=list)

    def points(self) -> Iterable[PlanePoint]:
        for run in self.runs:
            yield from run.points

    def samples(self) -> Iterable[tuple[float, PlanePoint]]:
        for run in self.runs:
            yield from run.samples

    def __len__(self):
        return sum(len(r) for r in self.runs)


@dataclass(frozen=True)
class ExoticConfig:
    """Pole S and the centre C of a unit circle, both anywhere in the plane."""

    pole: PlanePoint
    circle_center: PlanePoint

    @classmethod
    def from_polar(cls, s: float, eps: float, c: float, gamma: float) -> "ExoticConfig":
        return cls(
            PlanePoint(s * math.cos(eps), s * math.sin(eps)),
            PlanePoint(c * math.cos(gamma), c * math.sin(gamma)),
        )


def grid(n: int) -> list[float]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [TWO_PI * k / n for k in range(n)]


def _try(f, theta):
    try:
        return f(theta)
    except EvalError:
        return None


def _boundary(f, good: float, bad: float) -> tuple[float, PlanePoint]:
    """Bisect between an evaluable ``good`` and failing ``bad`` angle."""
    p = f(good)
    while abs(bad - good) > GAP_TOL:
        mid = 0.5 * (good + bad)
        q = _try(f, mid)
        if q is None:
            bad = mid
        else:
            good, p = mid, q
    return good, p


def _close_run(f, run: Run, bad: float) -> None:
    bt, bp = _boundary(f, run.samples[-1][0], bad)
    if bt > run.samples[-1][0]:
        run.samples.append((bt, bp))


def sample_function(f: Callable[[float], PlanePoint], n: int) -> Polyline:
    """Sample ``f`` on the uniform grid, splitting into runs at domain gaps."""
    thetas = grid(n)
    values = [_try(f, t) for t in thetas]
    if all(v is not None for v in values):
        return Polyline([Run(list(zip(thetas, values)), closed=True)])

    runs: list[Run] = []
    current: Run | None = None
    step = TWO_PI / n
    for i, (t, v) in enumerate(zip(thetas, values)):
        prev_ok = values[i - 1] is not None  # i == 0 looks at the last node
        if v is None:
            if current is not None:
                _close_run(f, current, t)
                runs.append(current)
                current = None
            continue
        if current is None:
            current = Run()
            if prev_ok and i == 0:
                pass  # run continues across 2*pi; joined below
            else:
                bt, bp = _boundary(f, t, t - step)
                if bt < t:
                    current.samples.append((bt, bp))
        current.samples.append((t, v))
    if current is not None:
        # last node valid: refine towards 2*pi unless the first run picks it up
        if values[0] is None:
            _close_run(f, current, TWO_PI)
        runs.append(current)

    if len(runs) > 1 and values[0] is not None and values[-1] is not None:
        # join the run ending at 2*pi with the one starting at 0
        tail = runs.pop()
        head = runs[0]
        head.samples = [(t - TWO_PI, p) for t, p in tail.samples] + head.samples
    return Polyline(runs)


def _booth_rho(theta: float, ex: ExCenter, R: float) -> float:
    return -2.0 * ex.s * R * math.cos(theta - ex.eps)


def sample_booth(ex: ExCenter, R: float = 1.0, n: int = 720) -> Polyline:
    """Booth lemniscate rho = R*(rex1 + rex2) = -2 s R cos(theta - eps).

    The cosine form is total, so s > 1 needs no gap handling.
    """
    _check(R, n)
    run = Run(closed=True)
    for t in grid(n):
        rho = _booth_rho(t, ex, R)
        run.samples.append((t, PlanePoint(rho * math.cos(t), rho * math.sin(t))))
    return Polyline([run])


def excircle_point(theta: float, ex: ExCenter, R: float = 1.0) -> PlanePoint:
    """E + R*rex1(theta)*rad(theta) with E = R*S."""
    w = core.w_point(theta, ex, Determination.FIRST)
    return PlanePoint(R * w.x, R * w.y)


def sample_excircle(ex: ExCenter, R: float = 1.0, n: int = 720) -> Polyline:
    """Circle of radius R described by distances measured from the ex-center."""
    _check(R, n)
    if abs(ex.s) > 1.0:
        raise EvalError("domain", f"excircle needs |s| <= 1, got s={ex.s!r}")
    return sample_function(lambda t: excircle_point(t, ex, R), n)


def quadrilobe_point(theta: float, s: float) -> PlanePoint:
    """Point of the quadrilobe between the unit circle (s=0) and its circumscribed square (|s|=1).

        x = cos t / sqrt(1 - s^2 sin^2 t),   y = sin t / sqrt(1 - s^2 cos^2 t)
    """
    if abs(s) > 1.0:
        raise EvalError("domain", f"quadrilobe needs |s| <= 1, got s={s!r}")
    c, sn = math.cos(theta), math.sin(theta)
    k = 1.0 - s * s
    # 1 - s^2 sin^2 = cos^2 + (1 - s^2) sin^2, exact at |s| = 1
    x = c / math.sqrt(c * c + k * sn * sn) if c != 0.0 else 0.0
    y = sn / math.sqrt(sn * sn + k * c * c) if sn != 0.0 else 0.0
    return PlanePoint(x, y)


def sample_quadrilobe(s: float, R: float = 1.0, n: int = 720) -> Polyline:
    _check(R, n)
    run = Run(closed=True)
    for t in grid(n):
        p = quadrilobe_point(t, s)
        run.samples.append((t, PlanePoint(R * p.x, R * p.y)))
    return Polyline([run])


def elevated_point(theta: float, ex: ExCenter, det=Determination.FIRST, R: float = 1.0) -> PlanePoint:
    c, s = core.cel_sel(theta, ex, det)
    return PlanePoint(R * c, R * s)


def sample_elevated(ex: ExCenter, det=Determination.FIRST, n: int = 720, R: float = 1.0) -> Polyline:
    """Curve (cel theta, sel theta); cut wherever delta < 0."""
    _check(R, n)
    return sample_function(lambda t: elevated_point(t, ex, det, R), n)


def exotic_w_points(theta: float, cfg: ExoticConfig) -> list[PlanePoint]:
    """Intersections of the line through S at ``theta`` with the unit circle centred at C."""
    res = line_circle_intersections(cfg.pole, theta, cfg.circle_center, 1.0)
    return list(res.points)


def _exotic_pick(theta: float, cfg: ExoticConfig, det) -> tuple[PlanePoint, float]:
    res = line_circle_intersections(cfg.pole, theta, cfg.circle_center, 1.0)
    if res.count == 0:
        raise EvalError("domain", f"line at theta={theta!r} misses the exotic circle")
    i = 0 if Determination.coerce(det) is Determination.FIRST else res.count - 1
    return res.points[i], res.signed_distances[i]


def exotic_rex(theta: float, cfg: ExoticConfig, det=Determination.FIRST) -> float:
    return _exotic_pick(theta, cfg, det)[1]


def exotic_cex_sex(theta: float, cfg: ExoticConfig, det=Determination.FIRST) -> tuple[float, float]:
    p = _exotic_pick(theta, cfg, det)[0]
    return p.x, p.y


def sample_exotic(cfg: ExoticConfig, det=Determination.FIRST, n: int = 720) -> Polyline:
    return sample_function(lambda t: PlanePoint(*exotic_cex_sex(t, cfg, det)), n)


CURVE_KINDS = ("booth", "excircle", "elevated")


def variable_excenter_curve(
    s_of_theta: Callable[[float], float],
    eps_of_theta: Callable[[float], float],
    kind: str,
    n: int = 720,
    R: float = 1.0,
    det=Determination.FIRST,
) -> Polyline:
    """Sample a curve family with the ex-center moving along with ``theta``.

    ``eps_of_theta = lambda t: k * t`` gives the multiple-arc (k*theta)
    variants.  Every kind goes through gap segmentation, so an ex-center
    that leaves the circle just cuts the curve.
    """
    _check(R, n)

    def ex_at(t):
        return ExCenter(s_of_theta(t), eps_of_theta(t))

    if kind == "booth":
        def f(t):
            rho = _booth_rho(t, ex_at(t), R)
            return PlanePoint(rho * math.cos(t), rho * math.sin(t))
    elif kind == "excircle":
        def f(t):
            return excircle_point(t, ex_at(t), R)
    elif kind == "elevated":
        def f(t):
            return elevated_point(t, ex_at(t), det, R)
    else:
        raise ValueError(f"unknown curve kind {kind!r}; expected one of {CURVE_KINDS}")
    return sample_function(f, n)


def _check(R: float, n: int) -> None:
    if not R > 0.0:
        raise ValueError(f"R must be positive, got {R!r}")
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
