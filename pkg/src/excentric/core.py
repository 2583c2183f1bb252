"""Ex-centric circular functions of a single fixed ex-center.

A straight line rotates about the pole S = s*(cos eps, sin eps) with
direction angle ``theta`` and cuts the unit circle in W1 (positive ray) and
W2 (negative ray).  Every function here is a closed-form expression of that
construction; ``s = 0`` collapses each one onto its centric counterpart.

Functions of ``theta`` (angle at S) are lower case, functions of ``alpha``
(angle at O) are capitalised, following the usual notation.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

TWO_PI = 2.0 * math.pi

# |cos(theta - eps)| below this counts as sitting on a dex jump when |s| == 1
_JUMP_TOL = 1e-12


class EvalError(ValueError):
    """Raised when a function is evaluated outside its domain.

    ``kind`` is ``"domain"`` for a negative radicand (the line misses the
    circle) and ``"undefined"`` for a vanishing denominator.
    """

    def __init__(self, kind: str, message: str):
        if kind not in ("domain", "undefined"):
            raise ValueError(f"unknown EvalError kind {kind!r}")
        super().__init__(message)
        self.kind = kind


class Determination(enum.IntEnum):
    FIRST = 1
    SECOND = 2

    @property
    def sign(self) -> float:
        return 1.0 if self is Determination.FIRST else -1.0

    @classmethod
    def coerce(cls, value) -> "Determination":
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            key = value.strip().lower()
            if key in ("1", "first", "+"):
                return cls.FIRST
            if key in ("2", "second", "-"):
                return cls.SECOND
            raise ValueError(f"unknown determination {value!r}")
        return cls(int(value))


FIRST = Determination.FIRST
SECOND = Determination.SECOND


class PlanePoint(NamedTuple):
    x: float
    y: float


class Phasor(NamedTuple):
    x: float
    y: float


def normalize_angle(a: float) -> float:
    """Map ``a`` onto [0, 2*pi)."""
    r = math.fmod(a, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    # fmod of a tiny negative value can round up to exactly 2*pi
    if r >= TWO_PI:
        r = 0.0
    return r


def angle_diff(a: float, b: float) -> float:
    """Wrap-aware difference ``a - b`` in [-pi, pi)."""
    return math.remainder(a - b, TWO_PI)


@dataclass(frozen=True)
class ExCenter:
    """The pole S in polar form: numerical ex-centricity ``s`` = e/R and angle ``eps``."""

    s: float = 0.0
    eps: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.s) and math.isfinite(self.eps)):
            raise ValueError(f"ex-center must be finite, got s={self.s}, eps={self.eps}")
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "eps", normalize_angle(float(self.eps)))

    @property
    def point(self) -> PlanePoint:
        return PlanePoint(self.s * math.cos(self.eps), self.s * math.sin(self.eps))


CENTRIC = ExCenter(0.0, 0.0)


def _det(det) -> Determination:
    return Determination.coerce(det)


def delta(theta: float, ex: ExCenter) -> float:
    """Radicand 1 - s^2 sin^2(theta - eps); negative where the line misses the circle."""
    u = ex.s * math.sin(theta - ex.eps)
    # factored form keeps the sign exact close to tangency
    return (1.0 - u) * (1.0 + u)


def _sqrt_delta(theta: float, ex: ExCenter) -> float:
    d = delta(theta, ex)
    if d < 0.0:
        raise EvalError(
            "domain",
            f"delta < 0 at theta={theta!r} (s={ex.s!r}, eps={ex.eps!r}): "
            "the line through the ex-center misses the unit circle",
        )
    return math.sqrt(d)


def rex(theta: float, ex: ExCenter, det=FIRST) -> float:
    """Ex-centric radial function: signed distance S -> W along the line."""
    root = _sqrt_delta(theta, ex)
    return -ex.s * math.cos(theta - ex.eps) + _det(det).sign * root


def Rex(alpha: float, ex: ExCenter, det=FIRST) -> float:
    """Radial function of the centric variable: +/- |S W| for W at angle ``alpha``.

    The radicand is written as a sum of squares, so it is never negative.
    """
    dx = math.cos(alpha) - ex.s * math.cos(ex.eps)
    dy = math.sin(alpha) - ex.s * math.sin(ex.eps)
    return _det(det).sign * math.hypot(dx, dy)


def _beta(theta: float, ex: ExCenter) -> float:
    u = ex.s * math.sin(theta - ex.eps)
    if abs(u) > 1.0:
        raise EvalError(
            "domain",
            f"|s*sin(theta - eps)| > 1 at theta={theta!r} (s={ex.s!r}): delta < 0",
        )
    return math.asin(u)


def aex_unwrapped(theta: float, ex: ExCenter, det=FIRST) -> float:
    """Amplitude without normalisation; continuous in ``theta`` on each branch."""
    b = _beta(theta, ex)
    if _det(det) is FIRST:
        return theta - b
    return theta + math.pi + b


def aex(theta: float, ex: ExCenter, det=FIRST) -> float:
    """Ex-centric amplitude theta -> alpha, in [0, 2*pi)."""
    return normalize_angle(aex_unwrapped(theta, ex, det))


def Aex(alpha: float, ex: ExCenter, det=FIRST) -> float:
    """Inverse amplitude alpha -> theta, in [0, 2*pi).

    theta - alpha is the angle at W between OW and SW, whose sine is
    s*sin(alpha - eps)/Rex and cosine (1 - s*cos(alpha - eps))/Rex.  The
    atan2 form of that pair drops Rex and keeps the correct quadrant for
    any s.  The second determination sees the same W from the opposite ray.
    """
    a = alpha - ex.eps
    num = ex.s * math.sin(a)
    den = 1.0 - ex.s * math.cos(a)
    if num == 0.0 and den == 0.0:
        raise EvalError("undefined", f"W coincides with S at alpha={alpha!r} (s={ex.s!r})")
    theta = alpha + math.atan2(num, den)
    if _det(det) is SECOND:
        theta += math.pi
    return normalize_angle(theta)


def cex_sex(theta: float, ex: ExCenter, det=FIRST) -> tuple[float, float]:
    a = aex_unwrapped(theta, ex, det)
    return math.cos(a), math.sin(a)


def cex(theta: float, ex: ExCenter, det=FIRST) -> float:
    return cex_sex(theta, ex, det)[0]


def sex(theta: float, ex: ExCenter, det=FIRST) -> float:
    return cex_sex(theta, ex, det)[1]


def Cex_Sex(alpha: float, ex: ExCenter, det=FIRST) -> tuple[float, float]:
    t = Aex(alpha, ex, det)
    return math.cos(t), math.sin(t)


def Cex(alpha: float, ex: ExCenter, det=FIRST) -> float:
    return Cex_Sex(alpha, ex, det)[0]


def Sex(alpha: float, ex: ExCenter, det=FIRST) -> float:
    return Cex_Sex(alpha, ex, det)[1]


def _unit_jump_dex(c: float, theta: float, ex: ExCenter, det: Determination, side: int) -> float:
    # |s| == 1: sqrt(delta) == |cos(theta - eps)| so dex is piecewise 0 / 2
    if abs(c) <= _JUMP_TOL:
        # sign of cos just to the requested side of the jump
        sgn_c = -math.copysign(1.0, math.sin(theta - ex.eps)) * side
    else:
        sgn_c = math.copysign(1.0, c)
    return 1.0 - ex.s * sgn_c * det.sign


def dex(theta: float, ex: ExCenter, det=FIRST) -> float:
    """Ex-centric derivative d(aex)/d(theta) = 1 - s*cos(theta - eps)/(+/-sqrt(delta)).

    For |s| == 1 the function jumps between 0 and 2; exactly at a jump the
    right-sided limit is returned.
    """
    return dex_sided(theta, ex, det, side=+1)


def dex_sided(theta: float, ex: ExCenter, det=FIRST, side: int = +1) -> float:
    """``dex`` with the one-sided limit taken from ``side`` (+1 right, -1 left) at |s| == 1 jumps."""
    d = _det(det)
    c = math.cos(theta - ex.eps)
    if abs(ex.s) == 1.0:
        return _unit_jump_dex(c, theta, ex, d, side)
    dl = delta(theta, ex)
    if dl <= 0.0:
        raise EvalError(
            "domain",
            f"delta <= 0 at theta={theta!r} (s={ex.s!r}, eps={ex.eps!r}): dex needs delta > 0",
        )
    return 1.0 - ex.s * c / (d.sign * math.sqrt(dl))


def dex_jumps(ex: ExCenter) -> list[float]:
    """Angles in [0, 2*pi) where dex is discontinuous (non-empty only for |s| == 1)."""
    if abs(ex.s) != 1.0:
        return []
    return sorted(normalize_angle(ex.eps + k * math.pi / 2.0) for k in (1, 3))


def Dex(alpha: float, ex: ExCenter, det=FIRST) -> float:
    """d(Aex)/d(alpha) = (1 - s*cos(alpha - eps)) / Rex(alpha)^2; same for both determinations."""
    c = math.cos(alpha - ex.eps)
    rex2 = Rex(alpha, ex) ** 2
    if rex2 == 0.0:
        raise EvalError("undefined", f"Rex = 0 at alpha={alpha!r} (s={ex.s!r}): W coincides with S")
    return (1.0 - ex.s * c) / rex2


def tex(theta: float, ex: ExCenter, det=FIRST) -> float:
    """Ex-centric tangent sex/cex."""
    c, s = cex_sex(theta, ex, det)
    if c == 0.0:
        raise EvalError("undefined", f"cex = 0 at theta={theta!r}: tex is infinite")
    return s / c


def cel_sel(theta: float, ex: ExCenter, det=FIRST) -> tuple[float, float]:
    """Elevated cosine and sine, rex*cos(theta) and rex*sin(theta)."""
    r = rex(theta, ex, det)
    return r * math.cos(theta), r * math.sin(theta)


def Cel_Sel(alpha: float, ex: ExCenter, det=FIRST) -> tuple[float, float]:
    """Centric-variable elevated pair Rex*cos(alpha), Rex*sin(alpha)."""
    r = Rex(alpha, ex, det)
    return r * math.cos(alpha), r * math.sin(alpha)


def rad_der(angle: float) -> tuple[Phasor, Phasor]:
    """Unit direction phasor and its derivative (rotated by +pi/2)."""
    c, s = math.cos(angle), math.sin(angle)
    return Phasor(c, s), Phasor(-s, c)


def w_point(theta: float, ex: ExCenter, det=FIRST) -> PlanePoint:
    """W = S + rex(theta) * rad(theta)."""
    r = rex(theta, ex, det)
    sx, sy = ex.point
    return PlanePoint(sx + r * math.cos(theta), sy + r * math.sin(theta))


def w_velocity(theta: float, ex: ExCenter, det=FIRST) -> PlanePoint:
    """dW/dtheta = dex(theta) * der(aex(theta)), for unit generator speed."""
    k = dex(theta, ex, det)
    _, der = rad_der(aex_unwrapped(theta, ex, det))
    return PlanePoint(k * der.x, k * der.y)
