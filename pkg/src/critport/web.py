"""The abstract web of a portrait, its self-map, lifting, and the Levy diagnostic."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Union

from .angles import Angle, ArcSet, InvalidInput, md, orbit
from .portrait import (
    AddressSystem,
    MarkedPartition,
    PartKind,
    l_classes,
    marked_set,
    pullback_arcs,
    verify_partitions,
)


class ObstructionError(InvalidInput):
    """The partitions cannot be realized as a web with the required circular order."""


class WebMapError(RuntimeError):
    """A web map invariant failed; indicates inconsistent partitions."""


@dataclass(frozen=True, order=True)
class Vertex:
    kind: str  # "inf", "julia" or "fatou"
    index: int = 0

    @property
    def id(self) -> str:
        return {"inf": "inf", "julia": f"J{self.index}", "fatou": f"F{self.index}"}[self.kind]

    def __str__(self):
        return self.id


INFINITY = Vertex("inf")


@dataclass(frozen=True)
class WebRay:
    angle: Angle
    target: Vertex
    preferred: bool = False

    @property
    def key(self):
        return ("ray", self.angle)


@dataclass(frozen=True)
class InternalEdge:
    angle: Angle
    julia: Vertex
    fatou: Vertex
    preferred: bool = False

    @property
    def key(self):
        return ("internal", self.angle)


Edge = Union[WebRay, InternalEdge]


@dataclass(frozen=True)
class Web:
    fstar: MarkedPartition
    jstar: MarkedPartition
    vertices: tuple[Vertex, ...]
    rays: tuple[WebRay, ...]  # counterclockwise order at infinity
    internal: tuple[InternalEdge, ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.rays + self.internal

    def ray(self, theta: Fraction) -> WebRay:
        return self._rays[Angle(theta)]

    def internal_edge(self, gamma: Fraction) -> InternalEdge:
        return self._internal[Angle(gamma)]

    def landing(self, theta: Fraction) -> Vertex:
        return self.ray(theta).target

    @cached_property
    def _rays(self):
        return {r.angle: r for r in self.rays}

    @cached_property
    def _internal(self):
        return {e.angle: e for e in self.internal}


def build_web(fstar: MarkedPartition, jstar: MarkedPartition) -> Web:
    check = verify_partitions(jstar, fstar)
    if not check:
        j, f = check.witness
        raise ObstructionError(f"{check.reason}: {sorted(map(str, j))} vs {sorted(map(str, f))}")
    jground = jstar.ground
    if Angle(0) not in jground:
        raise ObstructionError("J* must contain the angle 0")
    missing = fstar.ground - jground
    if missing:
        raise ObstructionError(f"F* angles without a web ray: {sorted(map(str, missing))}")

    julia = [Vertex("julia", i) for i in range(len(jstar))]
    fatou = [Vertex("fatou", k) for k in range(len(fstar))]
    rays = tuple(
        WebRay(a, julia[jstar.part_index(a)], preferred=(a == 0)) for a in sorted(jground)
    )
    internal = tuple(
        InternalEdge(g, julia[jstar.part_index(g)], fatou[k], preferred=(g == fstar.preferred[k]))
        for k in range(len(fstar))
        for g in fstar.ordered_part(k)
    )
    return Web(fstar, jstar, (INFINITY, *julia, *fatou), rays, internal)


@dataclass(frozen=True)
class WebMap:
    web: Web
    vertex_map: dict[Vertex, Vertex]
    edge_map: dict[tuple, tuple]  # keyed by Edge.key

    def __call__(self, item):
        if isinstance(item, Vertex):
            return self.vertex_map[item]
        return self._edge(self.edge_map[item.key])

    def _edge(self, key):
        kind, angle = key
        return self.web.ray(angle) if kind == "ray" else self.web.internal_edge(angle)


def _part_image(partition: MarkedPartition, i: int, d: int) -> int:
    images = {partition.part_index(md(a, d)) for a in partition.parts[i]}
    if len(images) != 1:
        raise WebMapError(f"{partition.kind.value} part {i} does not map into a single part")
    return images.pop()


def build_web_map(w: Web, sys: AddressSystem) -> WebMap:
    d = sys.degree
    vmap = {INFINITY: INFINITY}
    for i in range(len(w.jstar)):
        vmap[Vertex("julia", i)] = Vertex("julia", _part_image(w.jstar, i, d))
    for k in range(len(w.fstar)):
        vmap[Vertex("fatou", k)] = Vertex("fatou", _part_image(w.fstar, k, d))

    rays, internal = w._rays, w._internal
    emap = {}
    for r in w.rays:
        image = rays.get(md(r.angle, d))
        if image is None or vmap[r.target] != image.target:
            raise WebMapError(f"web ray {r.angle} has no consistent image")
        emap[r.key] = image.key
    for e in w.internal:
        image = internal.get(md(e.angle, d))
        if image is None or (vmap[e.julia], vmap[e.fatou]) != (image.julia, image.fatou):
            raise WebMapError(f"internal edge {e.angle} has no consistent image")
        if e.preferred and not image.preferred:
            raise WebMapError(f"preferred internal edge {e.angle} maps to a non-preferred one")
        emap[e.key] = image.key
    return WebMap(w, vmap, emap)


class EdgeType(enum.Enum):
    PERIODIC = "periodic"
    PREPERIODIC = "preperiodic"


def classify_edges(w: Web, m: WebMap) -> dict[tuple, EdgeType]:
    """Periodic iff some iterate of the edge map returns the edge to itself."""
    out = {}
    n = len(m.edge_map)
    for e in w.edges:
        key = m.edge_map[e.key]
        for _ in range(n):
            if key == e.key:
                break
            key = m.edge_map[key]
        out[e.key] = EdgeType.PERIODIC if key == e.key else EdgeType.PREPERIODIC
    return out


def lift_classes(sys: AddressSystem, parts: MarkedPartition | Iterable) -> MarkedPartition:
    """~_l classes of all m_d-preimages of the ground set of ``parts``."""
    ground = parts.ground if isinstance(parts, MarkedPartition) else frozenset().union(*parts)
    d = sys.degree
    pre = {Angle(x + j, d) for x in ground for j in range(d)}
    return MarkedPartition(PartKind.JULIA_STAR, tuple(l_classes(sys, pre)))


@dataclass(frozen=True)
class PullbackReport:
    theta: Angle
    n: int
    arcs: ArcSet

    @property
    def length(self) -> Fraction:
        return self.arcs.length

    @property
    def largest_arc(self) -> Fraction:
        if self.arcs == ArcSet.full():
            return Fraction(1)
        return max(a.length for a in self.arcs.arcs())


def pullback_report(sys: AddressSystem, theta: Fraction, n: int) -> PullbackReport:
    return PullbackReport(Angle(theta), n, pullback_arcs(sys, theta, n))


@dataclass(frozen=True)
class LevyWitness:
    pair: tuple[Angle, Angle]
    cycle: tuple[tuple[Angle, Angle], ...]  # images of the pair until it repeats

    def __str__(self):
        return f"({self.pair[0]}, {self.pair[1]})"


@dataclass(frozen=True)
class LevyReport:
    witnesses: tuple[LevyWitness, ...]

    @property
    def empty(self) -> bool:
        return not self.witnesses

    @property
    def pairs(self) -> list[tuple[Angle, Angle]]:
        return [w.pair for w in self.witnesses]

    def __len__(self):
        return len(self.witnesses)

    def __iter__(self):
        return iter(self.witnesses)


def check_levy(
    sys: AddressSystem, candidate: MarkedPartition | Iterable, gamma: Iterable[Fraction] = ()
) -> LevyReport:
    """Look for Levy-cycle witnesses in a candidate identification of marked angles.

    Any periodic marked angles with equal left itineraries must share a part;
    each pair that does not is a witness.  The curves around such a pair and
    around its images form the cycle, recorded as the pair's orbit.
    """
    if not isinstance(candidate, MarkedPartition):
        candidate = MarkedPartition(PartKind.JULIA_STAR, tuple(candidate))
    marked = marked_set(sys, gamma)
    if candidate.ground != marked:
        raise InvalidInput("candidate does not partition the marked set")
    d = sys.degree
    periodic = sorted(a for a in marked if orbit(a, d).is_periodic)
    witnesses = []
    for i, a in enumerate(periodic):
        for b in periodic[i + 1 :]:
            if candidate.part_index(a) == candidate.part_index(b):
                continue
            if sys.itinerary_left(a) != sys.itinerary_left(b):
                continue
            cycle, pair = [], (a, b)
            while pair not in cycle:
                cycle.append(pair)
                pair = (md(pair[0], d), md(pair[1], d))
            witnesses.append(LevyWitness((a, b), tuple(cycle)))
    return LevyReport(tuple(witnesses))


def serialize_web(w: Web) -> str:
    """Deterministic text form: vertices, rays in circular order, internal edges."""
    lines = ["vertices:"]
    lines.append("  inf")
    for i, part in enumerate(w.jstar.parts):
        lines.append(f"  J{i} julia {{{','.join(map(str, sorted(part)))}}}")
    for k in range(len(w.fstar)):
        lines.append(
            f"  F{k} fatou {{{','.join(map(str, w.fstar.ordered_part(k)))}}}"
            f" preferred={w.fstar.preferred[k]}"
        )
    lines.append("rays:")
    for r in w.rays:
        lines.append(f"  R {r.angle} inf->{r.target}" + (" preferred" if r.preferred else ""))
    lines.append("internal:")
    for e in w.internal:
        lines.append(f"  E {e.angle} {e.julia}->{e.fatou}" + (" preferred" if e.preferred else ""))
    lines.append("order: " + " ".join(str(r.angle) for r in w.rays))
    return "\n".join(lines) + "\n"
