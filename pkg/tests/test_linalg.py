import math
import random
from fractions import Fraction
from itertools import combinations

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from clutterlab import (
    IntMatrix,
    Lattice,
    delta_r,
    hnf,
    incidence_matrix,
    invariant_factors,
    is_t_unimodular,
    lattice_contains,
    lattice_equal,
    lattice_index,
    rank,
    smith_normal_form,
    torsion_trivial,
)
from clutterlab.errors import BoundExceeded, DimensionMismatch, RankMismatch, ZeroMatrix
from clutterlab.fixtures import EX_5_7_BAD_CELL, FIXTURES
from clutterlab.linalg import determinant
from conftest import matrices

TRI = FIXTURES["triangle"].subject
C4 = FIXTURES["4cycle"].subject
Q6 = FIXTURES["ex-4.5"].subject
EX37 = FIXTURES["ex-3.7"].subject
EX57 = FIXTURES["ex-5.7"].subject
I3 = IntMatrix.identity(3)


def _random_matrix(rng):
    r, c = rng.randint(1, 5), rng.randint(1, 5)
    return [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]


def test_rank_examples():
    assert rank(incidence_matrix(Q6)) == 4
    assert rank(I3) == 3
    assert rank(incidence_matrix(TRI)) == 3
    assert rank([[0, 0], [0, 0]]) == 0


def test_snf_examples():
    s = smith_normal_form(I3)
    assert s.D == I3 and s.U == I3 and s.V == I3
    assert smith_normal_form(incidence_matrix(TRI)).factors == (1, 1, 2)
    assert not smith_normal_form(incidence_matrix(EX37)).is_identity_block()
    assert invariant_factors(incidence_matrix(EX37)) == tuple(
        oracles.invariant_factors(incidence_matrix(EX37).as_rows())
    )


def _check_snf(rows):
    M = IntMatrix.from_rows(rows)
    s = smith_normal_form(M)
    assert s.U @ M @ s.V == s.D
    assert abs(determinant(s.U.as_rows())) == 1
    assert abs(determinant(s.V.as_rows())) == 1
    d = s.factors
    assert all(x >= 1 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    assert s.rank == oracles.rank(rows)
    for i in range(s.D.rows):
        for j in range(s.D.cols):
            assert s.D[i, j] == (d[i] if i == j and i < len(d) else 0)
    assert list(d) == oracles.invariant_factors(rows)
    if any(any(r) for r in rows):
        assert delta_r(M) == oracles.minors_gcd(rows, s.rank)


def test_snf_vs_minors_500():
    rng = random.Random(2024)
    for _ in range(500):
        _check_snf(_random_matrix(rng))


@given(matrices())
def test_snf_property(rows):
    _check_snf(rows)


def test_delta_r_examples():
    A = incidence_matrix(TRI)
    assert delta_r(A) == 2
    assert delta_r(A.append_row([1, 1, 1])) == 1
    assert delta_r(I3) == 1
    with pytest.raises(ZeroMatrix):
        delta_r([[0, 0]])


@given(matrices(), st.randoms(use_true_random=False))
def test_delta_r_unimodular_invariance(rows, rnd):
    if not any(any(r) for r in rows):
        return
    base = delta_r(rows)
    a = [list(r) for r in rows]
    for _ in range(6):
        op = rnd.randrange(4)
        if op == 0 and len(a) > 1:
            i, j = rnd.sample(range(len(a)), 2)
            a[i], a[j] = a[j], a[i]
        elif op == 1 and len(a[0]) > 1:
            i, j = rnd.sample(range(len(a[0])), 2)
            for r in a:
                r[i], r[j] = r[j], r[i]
        elif op == 2:
            i = rnd.randrange(len(a))
            a[i] = [-x for x in a[i]]
        elif len(a) > 1:
            i, j = rnd.sample(range(len(a)), 2)
            a[i] = [x + y for x, y in zip(a[i], a[j])]
    assert delta_r(a) == base


def test_lattice_examples():
    assert lattice_equal([(1, 0), (1, 1)], [(1, 0), (0, 1)])
    assert lattice_index([(1, 0), (1, 1)], [(1, 0), (0, 1)]) == 1
    assert not lattice_equal([(1, 0), (1, 2)], [(1, 0), (0, 1)])
    assert lattice_index([(1, 0), (1, 2)], [(1, 0), (0, 1)]) == 2
    cols = EX57.columns()
    sub = [cols[i - 1] for i in EX_5_7_BAD_CELL]
    assert not lattice_equal(sub, cols)
    assert lattice_index(sub, cols) == 2
    assert lattice_contains([(2, 0), (0, 3)], (4, -3))
    assert not lattice_contains([(2, 0), (0, 3)], (1, 0))


def test_lattice_index_edge_cases():
    assert lattice_index([(1, 0)], [(1, 0), (0, 1)]) == math.inf
    assert lattice_index([(1, 0), (0, 1)], [(2, 0), (0, 1)]) == Fraction(1, 2)
    with pytest.raises(RankMismatch):
        lattice_index([(0, 1)], [(1, 0)])
    with pytest.raises(DimensionMismatch):
        lattice_equal([(1, 0)], [(1, 0, 0)])
    with pytest.raises(DimensionMismatch):
        Lattice.of([])


@given(matrices(max_rows=4, max_cols=3, lo=-4, hi=4))
def test_lattice_index_self(rows):
    if not any(any(r) for r in rows):
        return
    assert lattice_index(rows, rows) == 1
    assert lattice_equal(rows, hnf(rows).as_rows())


@given(
    st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
)
def test_lattice_index_multiplicative(T1, T2):
    """L1 = T2 T1 Z^3 inside L2 = T1 Z^3 inside L3 = Z^3."""
    if oracles.det(T1) == 0 or oracles.det(T2) == 0:
        return
    L3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    L2 = [tuple(T1[i][j] for i in range(3)) for j in range(3)]
    P = (IntMatrix.from_rows(T1) @ IntMatrix.from_rows(T2)).as_rows()
    L1 = [tuple(P[i][j] for i in range(3)) for j in range(3)]
    assert lattice_index(L1, L3) == lattice_index(L1, L2) * lattice_index(L2, L3)
    assert lattice_index(L2, L3) == abs(oracles.det(T1))


def test_t_unimodular_examples():
    assert is_t_unimodular(I3) == 1
    assert is_t_unimodular(incidence_matrix(C4)) == 1
    assert is_t_unimodular(incidence_matrix(TRI)) == 2
    assert is_t_unimodular([[1, 0, 1], [0, 1, 2]]) is None
    with pytest.raises(BoundExceeded):
        is_t_unimodular(incidence_matrix(Q6), bound=3)


@given(matrices(max_rows=4, max_cols=4, lo=-2, hi=2))
def test_t_unimodular_vs_minors(rows):
    t = is_t_unimodular(rows)
    r = oracles.rank(rows)
    if r == 0:
        assert t is None
        return
    m, n = len(rows), len(rows[0])
    vals = {
        abs(oracles.det([[rows[i][j] for j in cs] for i in rs]))
        for rs in combinations(range(m), r)
        for cs in combinations(range(n), r)
    } - {0}
    assert t == (vals.pop() if len(vals) == 1 else None)


def test_torsion_examples():
    assert torsion_trivial([(1, 0), (0, 1)])
    assert not torsion_trivial([(2, 0), (0, 1)])
    assert not torsion_trivial(incidence_matrix(EX37).columns())
    assert torsion_trivial([(0, 0)])


def test_hnf_canonical():
    a = hnf([[2, 4], [1, 3]]).as_rows()
    b = hnf([[1, 3], [1, 1]]).as_rows()
    assert a == b == [[1, 1], [0, 2]]
