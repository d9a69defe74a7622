from fractions import Fraction as Fr

import pytest

from critport.angles import ArcSet, InvalidInput, linked_pair, md, orbit
from critport.portrait import (
    AddressSystem,
    MarkedPartition,
    PartKind,
    build_fstar,
    build_jstar,
    gen_special_arguments,
    marked_set,
    portrait_new,
    preferred_consistent,
)
from critport.web import (
    INFINITY,
    EdgeType,
    ObstructionError,
    Vertex,
    WebMapError,
    build_web,
    build_web_map,
    check_levy,
    classify_edges,
    lift_classes,
    pullback_report,
    serialize_web,
)
from helpers import random_systems, triangle_system, two_cycle_system


def families(sys_, gamma=None):
    if gamma is None:
        gamma = gen_special_arguments(sys_)
    return build_fstar(sys_, gamma), build_jstar(sys_, gamma)


@pytest.fixture(scope="module")
def sys37():
    return two_cycle_system()


@pytest.fixture(scope="module")
def web37(sys37):
    fstar, jstar = families(sys37)
    w = build_web(fstar, jstar)
    return w, build_web_map(w, sys37)


@pytest.fixture(scope="module")
def generated():
    return random_systems(seed=23, count=60)


class TestBuildWeb:
    def test_two_cycle_counts(self, web37):
        w, _ = web37
        assert len(w.vertices) == 9
        assert [r.angle for r in w.rays] == sorted(
            Fr(x) for x in ("0", "1/12", "1/4", "3/4", "13/36", "7/12", "31/36")
        )
        assert len(w.internal) == 6
        assert w.ray(0).preferred
        assert [e.angle for e in w.internal if e.preferred] == [Fr(1, 4), Fr(3, 4)]
        assert w.landing(Fr(1, 4)) == w.landing(Fr(3, 4))

    def test_triangle_counts(self):
        tri = triangle_system()
        w = build_web(*families(tri, frozenset()))
        assert (len(w.vertices), len(w.rays), len(w.internal)) == (5, 3, 3)

    def test_internal_edges_join_landing_points(self, web37):
        w, _ = web37
        for e in w.internal:
            assert e.julia == w.landing(e.angle)

    def test_obstruction(self):
        jstar = MarkedPartition(PartKind.JULIA_STAR, ({0, Fr(1, 2)}, {Fr(1, 4), Fr(3, 4)}))
        fstar = MarkedPartition(PartKind.FATOU_STAR, ({Fr(1, 4), Fr(3, 4)},), (Fr(1, 4),))
        with pytest.raises(ObstructionError):
            build_web(fstar, jstar)

    def test_needs_zero(self):
        jstar = MarkedPartition(PartKind.JULIA_STAR, ({Fr(1, 4)}, {Fr(3, 4)}))
        fstar = MarkedPartition(PartKind.FATOU_STAR, ({Fr(1, 4), Fr(3, 4)},), (Fr(1, 4),))
        with pytest.raises(ObstructionError):
            build_web(fstar, jstar)

    def test_serialization_is_stable(self, sys37, web37):
        w, _ = web37
        again = build_web(*families(sys37))
        assert serialize_web(w) == serialize_web(again)
        text = serialize_web(w)
        assert "order: 0 1/12 1/4 13/36 7/12 3/4 31/36" in text
        assert "  F0 fatou {1/4,13/36,7/12} preferred=1/4" in text


class TestWebMap:
    def test_two_cycle_images(self, web37):
        w, m = web37
        assert m(w.ray(Fr(13, 36))) == w.ray(Fr(1, 12))
        assert m(w.landing(Fr(13, 36))) == w.landing(Fr(1, 12))
        assert m(Vertex("fatou", 0)) == Vertex("fatou", 1)
        assert m(Vertex("fatou", 1)) == Vertex("fatou", 0)
        assert m(INFINITY) == INFINITY

    def test_edge_invariants(self, web37):
        w, m = web37
        for e in w.internal:
            image = m(e)
            assert image.angle == md(e.angle, 3)
            assert (m(e.julia), m(e.fatou)) == (image.julia, image.fatou)
            if e.preferred:
                assert image.preferred

    def test_classification(self, web37):
        w, m = web37
        kinds = classify_edges(w, m)
        assert kinds[w.ray(Fr(1, 4)).key] is EdgeType.PERIODIC
        assert kinds[w.ray(Fr(3, 4)).key] is EdgeType.PERIODIC
        assert kinds[w.ray(Fr(13, 36)).key] is EdgeType.PREPERIODIC
        assert kinds[w.ray(0).key] is EdgeType.PERIODIC

    def test_generated_portraits(self, generated):
        checked = 0
        for sys_ in generated:
            fstar, jstar = families(sys_)
            w = build_web(fstar, jstar)
            assert len(w.vertices) == 1 + len(jstar) + len(fstar)
            assert len(w.rays) == len(jstar.ground)
            if not preferred_consistent(fstar, sys_.degree):
                with pytest.raises(WebMapError):
                    build_web_map(w, sys_)
                continue
            m = build_web_map(w, sys_)
            for e in w.edges:
                assert m(e).angle == md(e.angle, sys_.degree)
            checked += 1
        assert checked >= 50

    def test_inconsistent_preferred_raises(self):
        sys_ = AddressSystem(
            portrait_new([[Fr(1, 5), 0, Fr(2, 5)], [Fr(17, 25), Fr(22, 25)]], [[Fr(19, 20), Fr(11, 20)]])
        )
        w = build_web(*families(sys_))
        with pytest.raises(WebMapError, match="preferred"):
            build_web_map(w, sys_)


class TestLifting:
    def test_two_cycle_lift(self, sys37):
        lifted = lift_classes(sys37, [{Fr(1, 4), Fr(3, 4)}])
        assert lifted.ground == {Fr(x) for x in ("1/12", "5/12", "3/4", "1/4", "7/12", "11/12")}
        assert frozenset({Fr(1, 4), Fr(3, 4)}) in lifted.parts

    def test_triangle_lift(self):
        lifted = lift_classes(triangle_system(), [{0}])
        assert set(lifted.parts) == {frozenset({0}), frozenset({Fr(1, 3)}), frozenset({Fr(2, 3)})}

    def test_empty(self, sys37):
        assert len(lift_classes(sys37, [])) == 0

    def test_generated(self, generated):
        for sys_ in generated:
            d = sys_.degree
            _, jstar = families(sys_)
            lifted = lift_classes(sys_, jstar)
            for part in lifted.parts:
                assert len({jstar.part_index(md(a, d)) for a in part}) == 1
            restricted = {p & jstar.ground for p in lifted.parts} - {frozenset()}
            assert restricted == set(jstar.parts)
            twice = lift_classes(sys_, lifted)
            assert len(twice.ground) == d * len(lifted.ground)
            assert linked_pair(twice.parts) is None


class TestPullback:
    @pytest.mark.parametrize("make,theta", [(two_cycle_system, Fr(1, 4)), (triangle_system, Fr(0))])
    def test_exact_measure(self, make, theta):
        sys_ = make()
        for n in range(13):
            rep = pullback_report(sys_, theta, n)
            assert rep.length == Fr(1, sys_.degree**n)
            assert theta in rep.arcs

    def test_largest_arc(self, sys37):
        rep = pullback_report(sys37, Fr(1, 4), 4)
        assert rep.length == Fr(1, 81) and rep.largest_arc == Fr(1, 162)
        assert pullback_report(sys37, Fr(1, 4), 0).arcs == ArcSet.full()

    def test_generated_measure(self, generated):
        for sys_ in generated[:20]:
            for theta in sorted(marked_set(sys_))[:3]:
                for n in (1, 3, 6):
                    assert pullback_report(sys_, theta, n).length == Fr(1, sys_.degree**n)


class TestLevy:
    def test_canonical_is_clean(self, sys37):
        gamma = gen_special_arguments(sys37)
        assert check_levy(sys37, build_jstar(sys37, gamma), gamma).empty

    def test_split_pair(self, sys37):
        gamma = gen_special_arguments(sys37)
        split = [p for p in build_jstar(sys37, gamma).parts if len(p) == 1]
        split += [{Fr(1, 4)}, {Fr(3, 4)}]
        report = check_levy(sys37, split, gamma)
        assert report.pairs == [(Fr(1, 4), Fr(3, 4))]
        (w,) = report
        assert w.cycle == ((Fr(1, 4), Fr(3, 4)), (Fr(3, 4), Fr(1, 4)))
        assert str(w) == "(1/4, 3/4)"

    def test_only_preperiodic_marks(self):
        # marks 1/4, 3/4 -> 1/2 -> 0: only 0 is periodic, so no pair can witness
        sys_ = AddressSystem(portrait_new([], [[Fr(1, 4), Fr(3, 4)]]))
        assert marked_set(sys_) == {0, Fr(1, 4), Fr(1, 2), Fr(3, 4)}
        assert check_levy(sys_, [{a} for a in marked_set(sys_)]).empty

    def test_not_a_partition(self, sys37):
        with pytest.raises(InvalidInput):
            check_levy(sys37, [{0}], gen_special_arguments(sys37))

    def test_generated(self, generated):
        for sys_ in generated:
            d = sys_.degree
            gamma = gen_special_arguments(sys_)
            jstar = build_jstar(sys_, gamma)
            assert check_levy(sys_, jstar, gamma).empty
            for part in jstar.parts:
                periodic = sorted(a for a in part if orbit(a, d).is_periodic)
                if len(periodic) < 2:
                    continue
                a = periodic[0]
                cand = [q for q in jstar.parts if q is not part] + [{a}, part - {a}]
                pairs = check_levy(sys_, cand, gamma).pairs
                assert pairs and all(a in p for p in pairs)


def test_vertex_ids():
    assert [v.id for v in (INFINITY, Vertex("julia", 2), Vertex("fatou", 0))] == ["inf", "J2", "F0"]
