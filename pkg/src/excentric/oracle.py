"""Brute-force geometry used to check the closed forms.

Nothing in here calls into :mod:`excentric.core` formulas; W1 and W2 are
found by solving the line/circle quadratic directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .core import Determination, EvalError, ExCenter, PlanePoint, normalize_angle


@dataclass(frozen=True)
class IntersectionResult:
    count: int
    points: tuple[PlanePoint, ...] = field(default_factory=tuple)
    signed_distances: tuple[float, ...] = field(default_factory=tuple)


def line_circle_intersections(
    pole: PlanePoint,
    theta: float,
    center: PlanePoint = PlanePoint(0.0, 0.0),
    radius: float = 1.0,
    tangent_tol: float = 0.0,
) -> IntersectionResult:
    """Intersect the line ``pole + t*(cos theta, sin theta)`` with a circle.

    Points come back ordered by decreasing ``t``.  A discriminant within
    ``tangent_tol`` of zero is reported as a single tangency point.
    """
    if not radius > 0.0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    ux, uy = math.cos(theta), math.sin(theta)
    dx, dy = pole[0] - center[0], pole[1] - center[1]
    # t^2 + 2 b t + c = 0
    b = dx * ux + dy * uy
    c = (math.hypot(dx, dy) - radius) * (math.hypot(dx, dy) + radius)
    disc = b * b - c
    if disc < -tangent_tol:
        return IntersectionResult(0)
    if disc <= tangent_tol:
        ts = (-b,)
    else:
        # larger-magnitude root first, the other one from the product c
        q = -b - math.copysign(math.sqrt(disc), b)
        t1 = q
        t2 = c / q if q != 0.0 else -q
        ts = tuple(sorted((t1, t2), reverse=True))
    pts = tuple(PlanePoint(pole[0] + t * ux, pole[1] + t * uy) for t in ts)
    return IntersectionResult(len(ts), pts, ts)


def _select(theta: float, ex: ExCenter, det) -> tuple[PlanePoint, float]:
    pole = PlanePoint(ex.s * math.cos(ex.eps), ex.s * math.sin(ex.eps))
    res = line_circle_intersections(pole, theta)
    if res.count == 0:
        raise EvalError("domain", f"line at theta={theta!r} misses the unit circle (s={ex.s!r})")
    i = 0 if Determination.coerce(det) is Determination.FIRST else res.count - 1
    return res.points[i], res.signed_distances[i]


def oracle_rex(theta: float, ex: ExCenter, det=Determination.FIRST) -> float:
    return _select(theta, ex, det)[1]


def oracle_point(theta: float, ex: ExCenter, det=Determination.FIRST) -> PlanePoint:
    return _select(theta, ex, det)[0]


def oracle_alpha(theta: float, ex: ExCenter, det=Determination.FIRST) -> float:
    p = oracle_point(theta, ex, det)
    return normalize_angle(math.atan2(p.y, p.x))


def fd_derivative(f: Callable[[float], float], x: float, h: float = 1e-6) -> float:
    """Central difference (f(x+h) - f(x-h)) / 2h."""
    if not h > 0.0:
        raise ValueError("h must be positive")
    return (f(x + h) - f(x - h)) / (2.0 * h)


def fd_angle_derivative(f: Callable[[float], float], x: float, h: float = 1e-6) -> float:
    """Central difference of an angle-valued function, ignoring 2*pi wraps."""
    if not h > 0.0:
        raise ValueError("h must be positive")
    return math.remainder(f(x + h) - f(x - h), 2.0 * math.pi) / (2.0 * h)


def fd_vector_derivative(f: Callable[[float], tuple], x: float, h: float = 1e-6) -> tuple[float, ...]:
    a, b = f(x + h), f(x - h)
    return tuple((p - q) / (2.0 * h) for p, q in zip(a, b))
