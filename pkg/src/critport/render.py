"""Static SVG chord diagrams of a portrait and its web rays.

Coordinates are printed with a fixed number of decimals so that the same
input always gives the same bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import escape

from .angles import Angle
from .portrait import AddressSystem, Kind, MarkedPartition


@dataclass(frozen=True)
class RenderSpec:
    size: int = 480
    labels: bool = True
    colors: dict = field(
        default_factory=lambda: {
            "fatou": "#2b6cb0",
            "julia": "#c05621",
            "ray": "#4a5568",
            "special": "#2f855a",
            "hub": "#1a202c",
        }
    )

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError("size must be positive")

    @property
    def radius(self) -> float:
        return self.size * 0.38

    @property
    def center(self) -> float:
        return self.size / 2


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _point(spec: RenderSpec, theta: Fraction, scale: float = 1.0) -> tuple[float, float]:
    t = 2 * math.pi * float(theta)
    r = spec.radius * scale
    return spec.center + r * math.cos(t), spec.center - r * math.sin(t)


def _xy(p) -> str:
    return f"{_fmt(p[0])},{_fmt(p[1])}"


def render_svg(
    sys: AddressSystem,
    jstar: MarkedPartition,
    gamma: frozenset[Angle] = frozenset(),
    spec: RenderSpec | None = None,
) -> str:
    """Circle, one chord polygon per critical set, a radial mark per web ray,
    and a hub joining the landing points of each multi-angle ~_l class."""
    spec = spec or RenderSpec()
    c = spec.colors
    size = spec.size
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'  <rect width="{size}" height="{size}" fill="#ffffff"/>',
        f'  <circle class="unit-circle" cx="{_fmt(spec.center)}" cy="{_fmt(spec.center)}" '
        f'r="{_fmt(spec.radius)}" fill="none" stroke="#000000" stroke-width="1.5"/>',
    ]

    out.append('  <g id="critical-sets">')
    for s in sys.portrait.sets:
        kind = "fatou" if s.kind is Kind.FATOU else "julia"
        pts = " ".join(_xy(_point(spec, a)) for a in s)
        fill = c[kind] if kind == "fatou" else "none"
        out.append(
            f'    <polygon class="critical-set {kind}" points="{pts}" fill="{fill}" '
            f'fill-opacity="0.25" stroke="{c[kind]}" stroke-width="2"/>'
        )
    out.append("  </g>")

    out.append('  <g id="web-rays">')
    for a in sorted(jstar.ground):
        special = a in gamma
        x1, y1 = _point(spec, a)
        x2, y2 = _point(spec, a, 1.12)
        color = c["special"] if special else c["ray"]
        cls = "ray special" if special else "ray"
        out.append(
            f'    <line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" stroke="{color}" stroke-width="2"/>'
        )
    out.append("  </g>")

    out.append('  <g id="landing-hubs">')
    for part in jstar.parts:
        if len(part) < 2:
            continue
        pts = [_point(spec, a) for a in sorted(part)]
        hub = (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))
        for p in pts:
            out.append(
                f'    <line class="hub-link" x1="{_fmt(p[0])}" y1="{_fmt(p[1])}" '
                f'x2="{_fmt(hub[0])}" y2="{_fmt(hub[1])}" stroke="{c["hub"]}" '
                f'stroke-dasharray="4 3"/>'
            )
        out.append(
            f'    <circle class="hub" cx="{_fmt(hub[0])}" cy="{_fmt(hub[1])}" r="4" '
            f'fill="{c["hub"]}"/>'
        )
    out.append("  </g>")

    if spec.labels:
        out.append('  <g id="labels" font-family="sans-serif" font-size="12">')
        for a in sorted(jstar.ground):
            x, y = _point(spec, a, 1.22)
            out.append(
                f'    <text x="{_fmt(x)}" y="{_fmt(y)}" text-anchor="middle" '
                f'dominant-baseline="middle">{escape(str(a))}</text>'
            )
        out.append("  </g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"
