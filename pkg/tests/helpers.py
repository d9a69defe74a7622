"""Shared fixtures: worked portraits, a random portrait generator and brute-force oracles."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction as Fr

from critport.angles import Angle, orbit, unlinked
from critport.portrait import AddressSystem, PortraitError, portrait_new

TWO_CYCLE_F = [[Fr(1, 4), Fr(7, 12)], [Fr(3, 4), Fr(1, 12)]]
TRIANGLE_F = [[Fr(0), Fr(1, 3), Fr(2, 3)]]


def two_cycle_system() -> AddressSystem:
    """Cubic portrait with two Fatou sets exchanged by m_3."""
    return AddressSystem(portrait_new(TWO_CYCLE_F))


def triangle_system() -> AddressSystem:
    """Cubic portrait with one fixed Fatou triangle."""
    return AddressSystem(portrait_new(TRIANGLE_F))


def random_portrait(rng: random.Random, d: int, maxden: int = 120):
    """Random valid portrait of degree ``d`` with denominators <= ``maxden``, or None.

    Each set is a random subset of the ``d`` preimages of one angle, so it maps
    to a point.  Julia sets are kept strictly preperiodic.
    """
    sets, kinds = [], []
    budget = d - 1
    for _ in range(500):
        if budget == 0:
            break
        size = rng.randint(2, budget + 1)
        q = rng.randint(1, maxden // d)
        y = Fr(rng.randrange(q), q)
        cand = rng.sample([Angle(y + j, d) for j in range(d)], size)
        used = {a for t in sets for a in t}
        if used & set(cand) or not all(unlinked(cand, t) for t in sets):
            continue
        fatou = rng.random() < 0.6
        if not fatou and any(orbit(a, d).is_periodic for a in cand):
            continue
        sets.append(cand)
        kinds.append(fatou)
        budget -= size - 1
    if budget:
        return None
    F = [s for s, k in zip(sets, kinds) if k]
    J = [s for s, k in zip(sets, kinds) if not k]
    try:
        return AddressSystem(portrait_new(F, J))
    except PortraitError:
        return None


def random_systems(seed: int, count: int, max_degree: int = 6, maxden: int = 120):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        sys_ = random_portrait(rng, rng.randint(2, max_degree), maxden)
        if sys_ is not None:
            out.append(sys_)
    return out


def interleave(a, b, c, e) -> bool:
    """Whether chords ab and ce cross, by counting how many of c, e lie strictly
    on the counterclockwise arc from a to b."""
    lo, hi = sorted((Fr(a), Fr(b)))
    inside = [lo < x < hi for x in (c, e)]
    return len({a, b, c, e}) == 4 and inside[0] != inside[1]


def brute_unlinked(S, T) -> bool:
    return not any(
        interleave(s1, s2, t1, t2)
        for s1, s2 in itertools.combinations(S, 2)
        for t1, t2 in itertools.combinations(T, 2)
    )


def brute_regions(portrait):
    """Pieces by plane geometry: gaps between consecutive portrait angles lie in
    one region iff the chord joining their midpoints crosses no hull edge."""
    bounds = sorted({a for s in portrait.sets for a in s})
    n = len(bounds)
    gaps = [(bounds[i], bounds[(i + 1) % n]) for i in range(n)]
    mids = [(lo + ((hi - lo) % 1) / 2) % 1 for lo, hi in gaps]
    edges = []
    for s in portrait.sets:
        pts = sorted(s)
        edges += [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(n), 2):
        if not any(interleave(mids[i], mids[j], a, b) for a, b in edges):
            parent[find(i)] = find(j)
    regions = {}
    for i in range(n):
        regions.setdefault(find(i), []).append(gaps[i])
    return list(regions.values())

