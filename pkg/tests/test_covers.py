import oracles
import pytest
from hypothesis import given

from clutterlab import (
    blocker,
    cover_partition,
    covering_number,
    has_konig,
    has_packing_property,
    is_2_partitionable,
    is_ideal,
    is_unmixed,
    is_vertex_critical,
    exact_hit_cover,
    make_clutter,
    matching_number,
    minimal_vertex_covers,
    uniformity,
)
from clutterlab.covers import validate_partition
from clutterlab.errors import BoundExceeded, EmptyMinor, HypothesisFailed
from clutterlab.fixtures import EX_4_5_COVERS, FIXTURES
from conftest import clutters

TRI = FIXTURES["triangle"].subject
C4 = FIXTURES["4cycle"].subject
Q6 = FIXTURES["ex-4.5"].subject
EX23 = FIXTURES["ex-2.3"].subject
EDGE12 = make_clutter(2, [[1, 2]])
K4 = make_clutter(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])


def test_cover_examples():
    assert list(minimal_vertex_covers(Q6)) == sorted(EX_4_5_COVERS)
    assert list(minimal_vertex_covers(EDGE12)) == [(1,), (2,)]
    assert list(minimal_vertex_covers(TRI)) == [(1, 2), (1, 3), (2, 3)]
    assert minimal_vertex_covers(Q6).to_json() == [list(t) for t in sorted(EX_4_5_COVERS)]


@given(clutters(max_n=7))
def test_covers_vs_brute_force(c):
    covers = list(minimal_vertex_covers(c))
    assert covers == oracles.covers(c.n, c.edges)
    for t in covers:
        assert all(set(t) & set(e) for e in c.edges)
        for v in t:
            assert any(not (set(t) - {v}) & set(e) for e in c.edges)


def test_numbers():
    assert covering_number(EX23) == 4
    assert covering_number(Q6) == 2
    assert covering_number(TRI) == 2
    assert [matching_number(x) for x in (TRI, Q6, C4)] == [1, 1, 2]
    assert not has_konig(Q6) and has_konig(C4) and has_konig(EDGE12)


@given(clutters(max_n=7))
def test_beta1_at_most_alpha0(c):
    assert matching_number(c) <= covering_number(c)
    assert covering_number(c) == oracles.alpha0(c.n, c.edges)


def test_packing_examples():
    v = has_packing_property(TRI)
    assert not v and v.witness == {"zeros": [], "ones": []}
    assert has_packing_property(C4)
    assert not has_packing_property(Q6)
    with pytest.raises(BoundExceeded):
        has_packing_property(C4, bound=3)


@given(clutters(max_n=5))
def test_packing_vs_brute_force(c):
    v = has_packing_property(c)
    assert v.holds == oracles.packing(c.n, c.edges)
    if not v.holds:
        m = oracles.minor_edges(c.edges, v.witness["zeros"], v.witness["ones"])
        assert m is not None and not oracles.konig(m)


def test_vertex_critical():
    assert not is_vertex_critical(EX23)
    assert is_vertex_critical(TRI)
    with pytest.raises(EmptyMinor):
        is_vertex_critical(EDGE12)
    assert is_vertex_critical(EDGE12, allow_empty=True)


def test_blocker_examples():
    assert blocker(EDGE12).edges == ((1,), (2,))
    assert set(blocker(TRI).edges) == {(1, 2), (1, 3), (2, 3)}


def test_blocker_involution_fixtures(fixture_clutter):
    assert set(blocker(blocker(fixture_clutter)).edges) == set(fixture_clutter.edges)


@given(clutters(max_n=8, max_edges=10))
def test_blocker_involution(c):
    assert set(blocker(blocker(c)).edges) == set(c.edges)


def test_cover_partition_examples():
    assert cover_partition(Q6).to_json() == [[1, 2], [3, 4], [5, 6]]
    assert cover_partition(C4).to_json() == [[1, 3], [2, 4]]
    with pytest.raises(HypothesisFailed):
        cover_partition(TRI)
    with pytest.raises(HypothesisFailed):
        cover_partition(EX23)


@given(clutters(max_n=6, d=3, min_n=3))
def test_cover_partition_on_uniform_ideal(c):
    if uniformity(c) is None or not is_ideal(c):
        return
    part = cover_partition(c)
    assert len(part) == uniformity(c)
    assert validate_partition(c, list(part)) is None
    assert exact_hit_cover(c) is not None


def test_two_partitionable():
    assert is_2_partitionable(Q6).to_json() == [[1, 2], [3, 4], [5, 6]]
    assert is_2_partitionable(C4) is not None
    assert is_2_partitionable(K4) is None


def test_two_partition_cover_sizes():
    for fx in FIXTURES.values():
        c = fx.subject
        if fx.kind != "clutter" or uniformity(c) is None or is_2_partitionable(c) is None:
            continue
        d = uniformity(c)
        assert all(2 <= len(t) <= d for t in minimal_vertex_covers(c))


def test_unmixed():
    assert is_unmixed(C4) and not is_unmixed(Q6) and is_unmixed(EDGE12)


def test_ex_2_3_has_no_exact_hit_cover():
    assert exact_hit_cover(EX23) is None
