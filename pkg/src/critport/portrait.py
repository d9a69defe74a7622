"""Critical portraits and their symbolic dynamics.

A portrait is a list of Fatou-type and Julia-type angle sets, each collapsed
to a point by m_d.  Cutting the disk along the convex hulls of all the sets
leaves ``d`` regions ("pieces"); the left/right address of an angle is the
piece it touches from the left/right, and the left/right itinerary is the
sequence of addresses along its forward orbit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from networkx.utils import UnionFind

from .angles import (
    Angle,
    Arc,
    ArcSet,
    InvalidInput,
    ccw_distance,
    gap_index,
    linked_pair,
    md,
    orbit,
    orbit_set,
    parse_angle,
    unlinked,
    weakly_unlinked_right,
)


def format_set(angles: Iterable[Fraction]) -> str:
    return "{" + ",".join(str(a) for a in sorted(angles)) + "}"


class PortraitError(InvalidInput):
    """Base class for portrait validation failures.

    ``sets`` holds the offending angle sets, ``condition`` a short tag naming
    the violated condition.
    """

    condition = "portrait"

    def __init__(self, message: str, sets: Sequence[frozenset] = ()):
        super().__init__(message)
        self.sets = tuple(sets)


class DegreeError(PortraitError):
    condition = "degree"


class DuplicateAngleError(PortraitError):
    condition = "duplicate"


class MapToPointError(PortraitError):
    condition = "map-to-point"


class LinkedSetsError(PortraitError):
    condition = "unlinked"


class RightUnlinkedError(PortraitError):
    condition = "right-unlinked"


class Kind(enum.Enum):
    FATOU = "fatou"
    JULIA = "julia"


@dataclass(frozen=True)
class CriticalSet:
    kind: Kind
    angles: tuple[Angle, ...]

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(sorted(Angle(a) for a in self.angles)))

    def __iter__(self):
        return iter(self.angles)

    def __len__(self):
        return len(self.angles)

    def __contains__(self, a):
        return a in self.angles

    def __str__(self):
        return format_set(self.angles)


@dataclass(frozen=True)
class CriticalPortrait:
    fatou_sets: tuple[CriticalSet, ...]
    julia_sets: tuple[CriticalSet, ...]
    degree: int

    @property
    def sets(self) -> tuple[CriticalSet, ...]:
        return self.fatou_sets + self.julia_sets

    @property
    def fatou_angles(self) -> frozenset[Angle]:
        return frozenset(a for s in self.fatou_sets for a in s)

    @property
    def julia_angles(self) -> frozenset[Angle]:
        return frozenset(a for s in self.julia_sets for a in s)

    def fatou_set_of(self, a: Fraction) -> CriticalSet | None:
        for s in self.fatou_sets:
            if a in s:
                return s
        return None


def portrait_new(
    fatou: Iterable[Iterable[Fraction]], julia: Iterable[Iterable[Fraction]] = ()
) -> CriticalPortrait:
    """Validate and build a portrait; raises a :class:`PortraitError` subclass."""
    raw = [(Kind.FATOU, list(s)) for s in fatou] + [(Kind.JULIA, list(s)) for s in julia]
    seen: dict[Angle, frozenset] = {}
    sets: list[CriticalSet] = []
    for kind, angles in raw:
        normalized = [Angle(a) for a in angles]
        fs = frozenset(normalized)
        if len(fs) != len(normalized):
            raise DuplicateAngleError(f"repeated angle inside {format_set(fs)}", [fs])
        if len(fs) < 2:
            raise DegreeError(f"critical set {format_set(fs)} has fewer than 2 angles", [fs])
        for a in fs:
            if a in seen:
                raise DuplicateAngleError(
                    f"angle {a} shared by {format_set(seen[a])} and {format_set(fs)}",
                    [seen[a], fs],
                )
            seen[a] = fs
        sets.append(CriticalSet(kind, tuple(fs)))

    degree = 1 + sum(len(s) - 1 for s in sets)
    if degree < 2:
        raise DegreeError("degree < 2")

    for i, s in enumerate(sets):
        for t in sets[i + 1 :]:
            if not unlinked(s, t):
                raise LinkedSetsError(
                    f"linked sets: {format_set(s)} vs {format_set(t)}",
                    [frozenset(s), frozenset(t)],
                )
    for s in sets:
        if len({md(a, degree) for a in s}) != 1:
            raise MapToPointError(
                f"{format_set(s)} does not map to a single point under m_{degree}",
                [frozenset(s)],
            )
    for j in (s for s in sets if s.kind is Kind.JULIA):
        for f in (s for s in sets if s.kind is Kind.FATOU):
            if not weakly_unlinked_right(f, j):
                raise RightUnlinkedError(
                    f"{format_set(j)} not weakly unlinked in the right to {format_set(f)}",
                    [frozenset(j), frozenset(f)],
                )

    return CriticalPortrait(
        tuple(s for s in sets if s.kind is Kind.FATOU),
        tuple(s for s in sets if s.kind is Kind.JULIA),
        degree,
    )


# --------------------------------------------------------------------------
# itineraries


@dataclass(frozen=True)
class Itinerary:
    """An eventually periodic sequence of piece ids.

    Always canonical: the cycle is primitive and the preperiod as short as
    possible, so equal sequences have equal representations.
    """

    preperiod: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        pre, cyc = tuple(self.preperiod), tuple(self.cycle)
        if not cyc:
            raise InvalidInput("itinerary cycle must be nonempty")
        n = len(cyc)
        for p in range(1, n + 1):
            if n % p == 0 and cyc == cyc[:p] * (n // p):
                cyc = cyc[:p]
                break
        while pre and pre[-1] == cyc[-1]:
            pre = pre[:-1]
            cyc = cyc[-1:] + cyc[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "cycle", cyc)

    def __getitem__(self, k: int) -> int:
        m = len(self.preperiod)
        if k < m:
            return self.preperiod[k]
        return self.cycle[(k - m) % len(self.cycle)]

    def prefix(self, n: int) -> tuple[int, ...]:
        return tuple(self[k] for k in range(n))

    def shift(self) -> Itinerary:
        if self.preperiod:
            return Itinerary(self.preperiod[1:], self.cycle)
        return Itinerary((), self.cycle[1:] + self.cycle[:1])

    def __str__(self):
        pre = "".join(f"P{i} " for i in self.preperiod)
        return pre + "(" + " ".join(f"P{i}" for i in self.cycle) + ")^inf"


@dataclass(frozen=True)
class Piece:
    id: int
    arcs: ArcSet

    @property
    def length(self) -> Fraction:
        return self.arcs.length

    def __contains__(self, x):
        return x in self.arcs

    def __str__(self):
        return f"P{self.id}: {self.arcs}"


class AddressSystem:
    """The ``d`` pieces cut out by a portrait, with address queries.

    Pieces are numbered by their lowest point going counterclockwise from 0,
    so the piece containing ``(0, eps)`` is ``P0``.
    """

    def __init__(self, portrait: CriticalPortrait):
        self.portrait = portrait
        self.degree = d = portrait.degree
        bounds = sorted({a for s in portrait.sets for a in s})
        sorted_sets = [sorted(s) for s in portrait.sets]

        # Two gaps between consecutive portrait angles lie in the same region
        # iff no set separates them.
        signatures = []
        for i, lo in enumerate(bounds):
            hi = bounds[(i + 1) % len(bounds)]
            mid = Angle(lo + ccw_distance(lo, hi) / 2)
            signatures.append(tuple(gap_index(s, mid) for s in sorted_sets))
        groups: dict[tuple, list[int]] = {}
        for i, sig in enumerate(signatures):
            groups.setdefault(sig, []).append(i)

        pieces = []
        for members in groups.values():
            arcs = ArcSet.from_arcs(
                Arc(bounds[i], bounds[(i + 1) % len(bounds)]) for i in members
            )
            pieces.append((arcs, members))
        pieces.sort(key=lambda p: p[0].intervals[0][0])

        self.pieces: tuple[Piece, ...] = tuple(Piece(k, arcs) for k, (arcs, _) in enumerate(pieces))
        self._bounds = bounds
        self._gap_piece = [0] * len(bounds)
        for k, (_, members) in enumerate(pieces):
            for i in members:
                self._gap_piece[i] = k
        self._left_cache: dict[Angle, Itinerary] = {}
        self._right_cache: dict[Angle, Itinerary] = {}

        if len(self.pieces) != d or any(p.length != Fraction(1, d) for p in self.pieces):
            raise PortraitError(
                f"portrait does not cut the circle into {d} pieces of length 1/{d}"
            )

    def __repr__(self):
        return f"AddressSystem(degree={self.degree}, pieces={[str(p) for p in self.pieces]})"

    def piece(self, piece_id: int) -> Piece:
        return self.pieces[piece_id]

    def address_left(self, theta: Fraction) -> int:
        """Piece whose ``(a, b]`` arcs contain ``theta`` (approached from the left)."""
        return self._gap_piece[gap_index(self._bounds, Angle(theta))]

    def address_right(self, theta: Fraction) -> int:
        """Piece containing ``(theta, theta + eps)``."""
        return self._gap_piece[gap_index(self._bounds, Angle(theta), right=True)]

    def itinerary_left(self, theta: Fraction) -> Itinerary:
        theta = Angle(theta)
        it = self._left_cache.get(theta)
        if it is None:
            it = self._itinerary(theta, self.address_left)
            self._left_cache[theta] = it
        return it

    def itinerary_right(self, theta: Fraction) -> Itinerary:
        theta = Angle(theta)
        it = self._right_cache.get(theta)
        if it is None:
            it = self._itinerary(theta, self.address_right)
            self._right_cache[theta] = it
        return it

    def _itinerary(self, theta, address):
        orb = orbit(theta, self.degree)
        return Itinerary(
            tuple(address(a) for a in orb.preperiod), tuple(address(a) for a in orb.cycle)
        )

    def inverse_branch(self, piece_id: int, x: Fraction) -> Angle:
        """The unique m_d-preimage of ``x`` lying in the given piece."""
        d = self.degree
        hits = [Angle(x + j, d) for j in range(d)]
        hits = [y for y in hits if y in self.pieces[piece_id]]
        if len(hits) != 1:
            raise PortraitError(f"piece P{piece_id} holds {len(hits)} preimages of {x}")
        return hits[0]

    def cylinder(self, addresses: Sequence[int]) -> ArcSet:
        """Angles whose first ``len(addresses)`` left addresses are ``addresses``."""
        out = ArcSet.full()
        for k in reversed(addresses):
            out = out.pullback(self.degree, self.pieces[k].arcs)
        return out


def build_address_system(p: CriticalPortrait) -> AddressSystem:
    return AddressSystem(p)


def address_left(sys: AddressSystem, theta: Fraction) -> int:
    return sys.address_left(theta)


def address_right(sys: AddressSystem, theta: Fraction) -> int:
    return sys.address_right(theta)


def itinerary_left(sys: AddressSystem, theta: Fraction) -> Itinerary:
    return sys.itinerary_left(theta)


def itinerary_right(sys: AddressSystem, theta: Fraction) -> Itinerary:
    return sys.itinerary_right(theta)


def inverse_branch(sys: AddressSystem, piece_id: int, x: Fraction) -> Angle:
    return sys.inverse_branch(piece_id, x)


def pullback_arcs(sys: AddressSystem, theta: Fraction, n: int) -> ArcSet:
    """Angles sharing the first ``n`` left addresses of ``theta``; measure ``d**-n``."""
    if n < 0:
        raise InvalidInput("n must be >= 0")
    return sys.cylinder(sys.itinerary_left(theta).prefix(n))


def decode_itinerary(
    sys: AddressSystem, it: Itinerary, max_multiple: int | None = None
) -> frozenset[Angle]:
    """All angles whose left itinerary is ``it``.

    A realizing angle has preperiod ``m = len(it.preperiod)`` and period a
    multiple ``k*p`` of the itinerary period; several angles sharing one
    itinerary is exactly what makes the period grow.  Multiples
    ``k <= max_multiple`` (default ``max(8, 2*d)``) are searched.  For each
    ``k`` the candidates, angles with denominator dividing
    ``d**m * (d**(k*p) - 1)``, are read off the cylinder of the first
    ``m + k*p`` addresses, which has measure ``d**-(m+k*p)``, and checked
    exactly.
    """
    d = sys.degree
    m, p = len(it.preperiod), len(it.cycle)
    if max_multiple is None:
        max_multiple = max(8, 2 * d)
    found: set[Angle] = set()
    for k in range(1, max_multiple + 1):
        n = m + k * p
        denom = d**m * (d ** (k * p) - 1)
        for lo, hi in sys.cylinder(it.prefix(n)).intervals:
            first = math.floor(lo * denom) + 1
            last = math.floor(hi * denom)
            for num in range(first, last + 1):
                theta = Angle(num, denom)
                if sys.itinerary_left(theta) == it:
                    found.add(theta)
    return frozenset(found)


# --------------------------------------------------------------------------
# equivalences


def l_classes(sys: AddressSystem, universe: Iterable[Fraction]) -> list[frozenset[Angle]]:
    """Partition ``universe`` into ~_l classes.

    Two angles are one-step related when their left itineraries agree, or
    when both itineraries are realized by members of one Julia set.  Those
    Julia members act as bridges whether or not they are in ``universe``.
    """
    uf = UnionFind()
    for jset in sys.portrait.julia_sets:
        its = [sys.itinerary_left(a) for a in jset]
        uf.union(*its)
    members: dict[Itinerary, list[Angle]] = {}
    for a in {Angle(x) for x in universe}:
        members.setdefault(sys.itinerary_left(a), []).append(a)
    grouped: dict[Itinerary, set[Angle]] = {}
    for it, angles in members.items():
        grouped.setdefault(uf[it], set()).update(angles)
    return sorted((frozenset(g) for g in grouped.values()), key=min)


def equiv_l(
    sys: AddressSystem, theta: Fraction, theta2: Fraction, universe: Iterable[Fraction]
) -> bool:
    universe = {Angle(x) for x in universe}
    theta, theta2 = Angle(theta), Angle(theta2)
    if theta not in universe or theta2 not in universe:
        raise InvalidInput("equiv_l arguments must belong to the universe")
    for cls in l_classes(sys, universe):
        if theta in cls:
            return theta2 in cls
    raise AssertionError("unreachable")


def sim_gamma(sys: AddressSystem, lam: Fraction, gamma: Fraction) -> bool:
    """Whether ``lam ~_gamma gamma`` for a periodic ``gamma`` in the Fatou orbit.

    Steps the two orbits together until they meet.  While ``m^j(gamma)`` is a
    critical Fatou angle, ``m^j(lam)`` may sit in any piece adjacent on the
    right to that Fatou set; otherwise the right addresses must agree.
    """
    d = sys.degree
    portrait = sys.portrait
    lam, gamma = Angle(lam), Angle(gamma)
    orb = orbit(gamma, d)
    if orb.preperiod:
        raise InvalidInput(f"{gamma} is not periodic")
    if gamma not in orbit_set(portrait.fatou_angles, d):
        raise InvalidInput(f"{gamma} is not in the orbit of the Fatou angles")
    lam_orb = orbit(lam, d)
    x, g = lam, gamma
    for _ in range(len(lam_orb.preperiod) + len(lam_orb.cycle) + len(orb.cycle)):
        if x == g:
            return True
        fset = portrait.fatou_set_of(g)
        allowed = {sys.address_right(a) for a in fset} if fset else {sys.address_right(g)}
        if sys.address_right(x) not in allowed:
            return False
        x, g = md(x, d), md(g, d)
    return x == g


# --------------------------------------------------------------------------
# special arguments and the marked partitions


def fatou_orbit(sys: AddressSystem) -> frozenset[Angle]:
    return orbit_set(sys.portrait.fatou_angles, sys.degree)


def marked_set(sys: AddressSystem, gamma: Iterable[Fraction] = ()) -> frozenset[Angle]:
    """``O(F) u O(J) u Gamma u {0}``."""
    p = sys.portrait
    return (
        orbit_set(p.fatou_angles, sys.degree)
        | orbit_set(p.julia_angles, sys.degree)
        | {Angle(g) for g in gamma}
        | {Angle(0)}
    )


def gen_special_arguments(sys: AddressSystem) -> frozenset[Angle]:
    """One special argument per periodic Fatou angle, plus what keeps the set invariant.

    For a periodic critical Fatou angle ``g`` of period ``p``, ``g`` is pulled
    back one full period along the right addresses of its own orbit.  The
    intermediate pullbacks that fall outside the Fatou orbit are kept too,
    so that ``m_d(Gamma)`` stays inside ``Gamma`` and the Fatou orbit.
    """
    d = sys.degree
    forb = fatou_orbit(sys)
    out: set[Angle] = set()
    for g in sorted(sys.portrait.fatou_angles):
        cyc = orbit(g, d)
        if cyc.preperiod:
            continue
        y = g
        for j in reversed(range(cyc.period)):
            y = sys.inverse_branch(sys.address_right(cyc.cycle[j]), y)
            if j == 0 or y not in forb:
                out.add(y)
    return frozenset(out)


def check_gamma(sys: AddressSystem, gamma: Iterable[Fraction]) -> frozenset[Angle]:
    """Return ``gamma`` as angles; raise unless ``m_d(Gamma) c Gamma u O(F)``."""
    gamma = frozenset(Angle(g) for g in gamma)
    allowed = gamma | fatou_orbit(sys)
    bad = sorted(g for g in gamma if md(g, sys.degree) not in allowed)
    if bad:
        raise InvalidInput(
            f"special arguments not invariant: image of {bad[0]} is "
            f"{md(bad[0], sys.degree)}, outside Gamma and the Fatou orbit"
        )
    return gamma


class PartKind(enum.Enum):
    FATOU_STAR = "F*"
    JULIA_STAR = "J*"


@dataclass(frozen=True)
class MarkedPartition:
    """A partition of a marked angle set into tagged parts.

    For ``F*`` every part carries a preferred angle; for ``J*`` the
    ``preferred`` entries are ``None``.
    """

    kind: PartKind
    parts: tuple[frozenset[Angle], ...]
    preferred: tuple[Angle | None, ...] = field(default=())

    def __post_init__(self):
        parts = tuple(frozenset(Angle(a) for a in p) for p in self.parts)
        preferred = tuple(self.preferred) or (None,) * len(parts)
        if len(preferred) != len(parts):
            raise InvalidInput("one preferred entry per part")
        if any(not p for p in parts):
            raise InvalidInput("parts must be nonempty")
        if sum(len(p) for p in parts) != len(frozenset().union(*parts)):
            raise InvalidInput("parts must be pairwise disjoint")
        for p, pref in zip(parts, preferred):
            if self.kind is PartKind.FATOU_STAR and (pref is None or pref not in p):
                raise InvalidInput(f"F* part {format_set(p)} lacks its preferred angle")
        order = sorted(
            range(len(parts)),
            key=lambda i: preferred[i] if preferred[i] is not None else min(parts[i]),
        )
        object.__setattr__(self, "parts", tuple(parts[i] for i in order))
        object.__setattr__(self, "preferred", tuple(preferred[i] for i in order))

    @property
    def ground(self) -> frozenset[Angle]:
        return frozenset().union(*self.parts)

    def part_index(self, a: Fraction) -> int:
        for i, p in enumerate(self.parts):
            if a in p:
                return i
        raise KeyError(a)

    def ordered_part(self, i: int) -> list[Angle]:
        """Part ``i`` in counterclockwise order, starting at its preferred angle if any."""
        start = self.preferred[i]
        part = sorted(self.parts[i])
        if start is None:
            return part
        return sorted(part, key=lambda a: ccw_distance(start, a))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "{" + ",".join(
            "{" + ",".join(str(a) for a in self.ordered_part(i)) + "}"
            for i in range(len(self.parts))
        ) + "}"


def parse_family(text: str) -> list[frozenset[Angle]]:
    """Inverse of ``str(MarkedPartition)``: ``"{{1/4,3/4},{0}}"`` to a list of sets."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise InvalidInput(f"not a family: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return []
    out = []
    for chunk in inner.split("}"):
        chunk = chunk.strip().lstrip(",").strip()
        if not chunk:
            continue
        if not chunk.startswith("{"):
            raise InvalidInput(f"not a family: {text!r}")
        body = chunk[1:].strip()
        out.append(frozenset(parse_angle(x) for x in body.split(",")) if body else frozenset())
    return out


def build_jstar(sys: AddressSystem, gamma: Iterable[Fraction] = ()) -> MarkedPartition:
    """~_l classes of ``O(F) u O(J) u Gamma u {0}``."""
    gamma = check_gamma(sys, gamma)
    return MarkedPartition(PartKind.JULIA_STAR, tuple(l_classes(sys, marked_set(sys, gamma))))


def build_fstar(sys: AddressSystem, gamma: Iterable[Fraction] = ()) -> MarkedPartition:
    """Partition of ``O(F) u Gamma``: the Fatou sets, singletons for the rest of
    the Fatou orbit, and each special argument joined to the periodic angle it
    is ~_gamma-related to."""
    gamma = check_gamma(sys, gamma)
    d = sys.degree
    forb = fatou_orbit(sys)
    parts: list[set[Angle]] = [set(s) for s in sys.portrait.fatou_sets]
    covered = frozenset().union(*parts) if parts else frozenset()
    parts += [{a} for a in sorted(forb - covered)]

    periodic = [a for a in sorted(forb) if orbit(a, d).is_periodic]
    for lam in sorted(gamma - forb):
        home = next((g for g in periodic if sim_gamma(sys, lam, g)), None)
        if home is None:
            parts.append({lam})
        else:
            next(p for p in parts if home in p).add(lam)

    frozen = [frozenset(p) for p in parts]
    return MarkedPartition(PartKind.FATOU_STAR, tuple(frozen), _preferred(frozen, d))


def _preferred(parts: list[frozenset[Angle]], d: int) -> tuple[Angle, ...]:
    """Choose one member per part so that preferred angles map to preferred angles.

    Parts containing a periodic angle prefer their smallest periodic member.
    Elsewhere a member is feasible when every part mapping into this one has
    a feasible member landing on it; the smallest feasible member hitting the
    image part's choice wins, falling back to the smallest member.
    """
    where = {a: i for i, p in enumerate(parts) for a in p}
    image: dict[int, int | None] = {}
    for i, part in enumerate(parts):
        targets = {where.get(md(a, d)) for a in part}
        image[i] = targets.pop() if len(targets) == 1 else None
    children: dict[int, list[int]] = {i: [] for i in range(len(parts))}
    for i, j in image.items():
        if j is not None and j != i:
            children[j].append(i)
    periodic: dict[int, Angle] = {}
    for i, part in enumerate(parts):
        cyc = [a for a in part if orbit(a, d).is_periodic]
        if cyc and i not in periodic:
            # walk the cycle so periodic choices map onto each other
            a = min(cyc)
            while where.get(a) is not None and where[a] not in periodic:
                periodic[where[a]] = a
                a = md(a, d)

    feasible: dict[int, set[Angle]] = {}

    def feas(i: int) -> set[Angle]:
        # iterative post-order over the tree of non-periodic preimage parts
        stack = [(i, False)]
        while stack:
            k, done = stack.pop()
            if k in feasible:
                continue
            kids = [c for c in children[k] if c not in periodic]
            if not done:
                stack.append((k, True))
                stack.extend((c, False) for c in kids if c not in feasible)
                continue
            ok = set(parts[k]) if k not in periodic else {periodic[k]}
            for c in kids:
                ok &= {md(b, d) for b in feasible[c]}
            feasible[k] = ok
        return feasible[i]

    chosen: dict[int, Angle] = dict(periodic)
    order = list(periodic)
    while order:
        j = order.pop()
        for c in children[j]:
            if c in chosen:
                continue
            hits = [a for a in feas(c) if md(a, d) == chosen[j]]
            if not hits:
                hits = [a for a in parts[c] if md(a, d) == chosen[j]]
            chosen[c] = min(hits) if hits else min(parts[c])
            order.append(c)
    for i, part in enumerate(parts):
        chosen.setdefault(i, min(part))
    return tuple(chosen[i] for i in range(len(parts)))


def preferred_consistent(fstar: MarkedPartition, d: int) -> bool:
    """Whether every preferred angle maps onto the preferred angle of its image part.

    Some portraits admit no such choice at all, for instance when a Fatou
    set's orbit lands on a non-periodic member of a periodic part.
    """
    ground = fstar.ground
    for pref in fstar.preferred:
        image = md(pref, d)
        if image in ground and fstar.preferred[fstar.part_index(image)] != image:
            return False
    return True


class PartitionCheck(NamedTuple):
    ok: bool
    witness: tuple[frozenset[Angle], frozenset[Angle]] | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_partitions(jstar: MarkedPartition, fstar: MarkedPartition) -> PartitionCheck:
    """Check that J* is weakly unlinked to F* in the right and both families are unlinked."""
    for fam in (jstar, fstar):
        hit = linked_pair(fam.parts)
        if hit is not None:
            s, t = fam.parts[hit[0]], fam.parts[hit[1]]
            return PartitionCheck(False, (s, t), f"linked {fam.kind.value} parts")
    for f in fstar.parts:
        if len(f) < 2:
            continue
        for j in jstar.parts:
            if not weakly_unlinked_right(f, j):
                return PartitionCheck(False, (j, f), "J* part not weakly unlinked in the right")
    return PartitionCheck(True)
