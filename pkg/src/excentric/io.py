"""CSV and SVG serialisation of curves and oscillator series.

CSV numbers use 17 significant digits so every double survives a round
trip; SVG coordinates use 6 decimals.  Output is a pure function of the
input, so repeated runs give identical bytes.
"""
from __future__ import annotations

import os
import tempfile
from typing import Iterable, Sequence

from .core import PlanePoint
from .curves import Polyline, Run

CURVE_HEADER = ("theta", "x", "y")
OSC_HEADER = ("t", "theta", "alpha", "x", "omega")


def fmt17(v: float) -> str:
    return format(v, ".17g")


def _fmt6(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def polyline_csv(poly: Polyline) -> str:
    lines = [",".join(CURVE_HEADER)]
    for i, run in enumerate(poly.runs):
        if i > 0:
            lines.append("")
        for t, p in run.samples:
            lines.append(f"{fmt17(t)},{fmt17(p.x)},{fmt17(p.y)}")
    return "\n".join(lines) + "\n"


def series_csv(samples: Iterable, header: Sequence[str] = OSC_HEADER) -> str:
    """Rows of named attributes (or mapping keys) under ``header``."""
    lines = [",".join(header)]
    for row in samples:
        if isinstance(row, dict):
            vals = [row[k] for k in header]
        else:
            vals = [getattr(row, k) for k in header]
        lines.append(",".join(fmt17(float(v)) for v in vals))
    return "\n".join(lines) + "\n"


def parse_polyline_csv(text: str) -> Polyline:
    """Inverse of :func:`polyline_csv`.  Run closure is not stored, so runs come back open."""
    lines = text.split("\n")
    if not lines or lines[0] != ",".join(CURVE_HEADER):
        raise ValueError("missing theta,x,y header")
    runs: list[Run] = []
    current: Run | None = None
    for line in lines[1:]:
        if not line:
            if current is not None:
                runs.append(current)
                current = None
            continue
        t, x, y = (float(v) for v in line.split(","))
        if current is None:
            current = Run()
        current.samples.append((t, PlanePoint(x, y)))
    if current is not None:
        runs.append(current)
    return Polyline(runs)


def parse_series_csv(text: str) -> list[dict[str, float]]:
    lines = [ln for ln in text.split("\n") if ln]
    header = lines[0].split(",")
    return [dict(zip(header, map(float, ln.split(",")))) for ln in lines[1:]]


def polyline_svg(poly: Polyline, stroke_width: float = 1.0, pad: float = 0.05) -> str:
    """One <path> per run; the viewBox is the data bounding box grown by ``pad`` about its centre.

    y is negated so the picture keeps the mathematical orientation.
    """
    pts = list(poly.points())
    if pts:
        xmin = min(p.x for p in pts)
        xmax = max(p.x for p in pts)
        ymin = min(-p.y for p in pts)
        ymax = max(-p.y for p in pts)
    else:
        xmin = xmax = ymin = ymax = 0.0
    cx, cy = 0.5 * (xmin + xmax), 0.5 * (ymin + ymax)
    hw, hh = 0.5 * (xmax - xmin), 0.5 * (ymax - ymin)
    # a degenerate box (e.g. everything at the origin) still needs an extent
    if hw <= 0.0 and hh <= 0.0:
        hw = hh = 1.0
    hw = hw if hw > 0.0 else hh
    hh = hh if hh > 0.0 else hw
    hw *= 1.0 + pad
    hh *= 1.0 + pad
    vb = " ".join(_fmt6(v) for v in (cx - hw, cy - hh, 2 * hw, 2 * hh))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}" '
        f'width="{_fmt6(2 * hw * 100)}" height="{_fmt6(2 * hh * 100)}">',
    ]
    for run in poly.runs:
        if not run.samples:
            continue
        cmds = []
        for i, p in enumerate(run.points):
            cmds.append(f"{'M' if i == 0 else 'L'}{_fmt6(p.x)} {_fmt6(-p.y)}")
        if run.closed:
            cmds.append("Z")
        out.append(
            f'<path d="{" ".join(cmds)}" fill="none" stroke="black" '
            f'stroke-width="{_fmt6(stroke_width)}" vector-effect="non-scaling-stroke"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_viewbox(svg: str) -> tuple[float, float, float, float]:
    start = svg.index('viewBox="') + len('viewBox="')
    vals = svg[start:svg.index('"', start)].split()
    return tuple(float(v) for v in vals)


def write_atomic(path: str | os.PathLike, data: str) -> None:
    """Write via a temp file in the target directory and rename, so errors leave nothing behind."""
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
