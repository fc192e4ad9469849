import json
import random

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from clutterlab import (
    canonical_form,
    incidence_matrix,
    is_bipartite,
    make_clutter,
    maximum_matching,
    minor,
    parse_clutter,
    perfect_matching,
    uniformity,
)
from clutterlab.errors import (
    BoundExceeded,
    EmptyEdge,
    EmptyMinor,
    IsolatedVertex,
    NotAGraph,
    OutOfRange,
    ParseError,
    SpernerViolation,
)
from clutterlab.fixtures import FIXTURES
from clutterlab.matrix import IntMatrix, parse_matrix
from conftest import clutters

TRI = FIXTURES["triangle"].subject
C4 = FIXTURES["4cycle"].subject
Q6 = FIXTURES["ex-4.5"].subject
EX23 = FIXTURES["ex-2.3"].subject
EX37 = FIXTURES["ex-3.7"].subject


def test_parse_q6():
    c = parse_clutter('{"n": 6, "edges": [[1,4,5],[1,3,6],[2,4,6],[2,3,5]]}')
    assert c.n == 6 and c.q == 4
    assert c == Q6


@pytest.mark.parametrize(
    "doc, exc",
    [
        ({"n": 2, "edges": [[1, 2], [1]]}, SpernerViolation),
        ({"n": 3, "edges": [[1, 2]]}, IsolatedVertex),
        ({"n": 2, "edges": [[1, 3]]}, OutOfRange),
        ({"n": 2, "edges": [[1, 2], []]}, EmptyEdge),
        ({"n": 2}, ParseError),
        ({"n": "2", "edges": [[1, 2]]}, ParseError),
    ],
)
def test_parse_errors(doc, exc):
    with pytest.raises(exc):
        parse_clutter(json.dumps(doc))


def test_isolated_vertex_reports_index():
    with pytest.raises(IsolatedVertex) as info:
        parse_clutter({"n": 3, "edges": [[1, 2]]})
    assert info.value.vertex == 3


def test_parse_dedupes_and_sorts():
    c = parse_clutter({"n": 3, "edges": [[2, 1], [1, 2], [3, 2]]})
    assert c.edges == ((1, 2), (2, 3))


def test_json_round_trip(fixture_clutter):
    assert parse_clutter(fixture_clutter.to_json()) == fixture_clutter


def test_incidence_matrix_examples():
    assert incidence_matrix(TRI).columns() == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    A = incidence_matrix(EX37)
    assert A.as_rows() == [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1, 0], [1, 0, 1, 0]]
    assert incidence_matrix(make_clutter(2, [[1, 2]])).columns() == [(1, 1)]


def test_matrix_text_round_trip():
    M = IntMatrix.from_rows([[1, -2, 30], [0, 4, 5]])
    assert parse_matrix(M.to_text()) == M
    with pytest.raises(ParseError):
        parse_matrix("2 2\n1 2\n3")


@given(clutters())
def test_incidence_sums(c):
    A = incidence_matrix(c)
    assert [sum(col) for col in A.columns()] == [len(e) for e in c.edges]
    for v in range(1, c.n + 1):
        assert sum(A.row(v - 1)) == sum(v in e for e in c.edges) > 0


def test_minor_examples():
    m, idx = minor(EX23, zeros=[9])
    assert m.n == 8 and m.q == 6
    assert minor(TRI)[0] == TRI
    m, idx = minor(TRI, ones=[1])
    assert sorted(m.edges) == [(1,), (2,)]
    assert idx == (2, 3)
    with pytest.raises(EmptyMinor):
        minor(TRI, zeros=[1, 2])
    with pytest.raises(EmptyMinor):
        minor(make_clutter(2, [[1, 2]]), ones=[1, 2])


@given(clutters(max_n=6), st.randoms(use_true_random=False))
def test_minor_composition(c, rnd):
    """Two successive minors equal one combined minor."""
    verts = list(range(1, c.n + 1))
    rnd.shuffle(verts)
    k = rnd.randint(0, c.n)
    first, second = verts[:k], verts[k:]
    z1 = [v for v in first if rnd.random() < 0.5]
    o1 = [v for v in first if v not in z1]
    z2 = [v for v in second if rnd.random() < 0.3]
    o2 = [v for v in second if v not in z2 and rnd.random() < 0.3]
    try:
        m1, map1 = minor(c, z1, o1)
    except EmptyMinor:
        return
    back = {old: new + 1 for new, old in enumerate(map1)}
    z2m = [back[v] for v in z2 if v in back]
    o2m = [back[v] for v in o2 if v in back]
    try:
        m2, map2 = minor(m1, z2m, o2m)
    except EmptyMinor:
        with pytest.raises(EmptyMinor):
            minor(c, z1 + z2, o1 + o2)
        return
    full, fmap = minor(c, z1 + z2, o1 + o2)
    assert tuple(map1[i - 1] for i in map2) == tuple(fmap)
    assert set(full.edges) == set(m2.edges)


def test_uniformity_examples():
    assert uniformity(Q6) == 3
    assert uniformity(EX23) is None
    assert uniformity(make_clutter(2, [[1, 2]])) == 2


def test_matching_examples():
    assert len(maximum_matching(Q6)) == 1
    assert len(maximum_matching(C4)) == 2 and maximum_matching(C4).perfect
    # the maximum matching of ex-2.3 has four edges; {f1,f2,f3} is the perfect one
    assert maximum_matching(EX23).edges == (3, 4, 5, 6)
    assert perfect_matching(EX23).edges == (0, 1, 2)
    assert perfect_matching(Q6) is None


@given(clutters(max_n=7))
def test_matching_vs_brute_force(c):
    m = maximum_matching(c)
    chosen = [c.masks[i] for i in m.edges]
    assert all(a & b == 0 for i, a in enumerate(chosen) for b in chosen[i + 1:])
    assert len(m) == oracles.beta1(c.edges)
    assert (perfect_matching(c) is not None) == oracles.has_perfect_matching(c.n, c.edges)


def test_bipartite():
    assert is_bipartite(C4)
    assert not is_bipartite(TRI)
    assert is_bipartite(make_clutter(3, [[1, 2], [2, 3]]))
    with pytest.raises(NotAGraph):
        is_bipartite(Q6)


def test_canonical_form_examples():
    path = make_clutter(3, [[1, 2], [2, 3]])
    assert canonical_form(TRI) == canonical_form(make_clutter(3, [[2, 3], [1, 2], [1, 3]]))
    assert canonical_form(TRI) != canonical_form(path)
    # (1 2)(3 4)(5 6) moves the edge set; (1 2)(3 4) fixes it
    swapped = _permuted(Q6, [2, 1, 4, 3, 6, 5])
    assert set(swapped.edges) != set(Q6.edges)
    assert canonical_form(swapped) == canonical_form(Q6)
    assert set(_permuted(Q6, [2, 1, 4, 3, 5, 6]).edges) == set(Q6.edges)
    with pytest.raises(BoundExceeded):
        canonical_form(make_clutter(10, [list(range(1, 11))]))


def _permuted(c, perm):
    return make_clutter(c.n, [[perm[v - 1] for v in e] for e in c.edges])


def test_canonical_form_permutation_invariant(fixture_clutter):
    rng = random.Random(11)
    key = canonical_form(fixture_clutter)
    for _ in range(100):
        perm = list(range(1, fixture_clutter.n + 1))
        rng.shuffle(perm)
        assert canonical_form(_permuted(fixture_clutter, perm)) == key


@given(clutters(max_n=5), clutters(max_n=5))
def test_canonical_form_vs_brute_force(a, b):
    same = a.n == b.n and oracles.canonical(a.n, a.edges) == oracles.canonical(b.n, b.edges)
    assert (canonical_form(a) == canonical_form(b)) == same
