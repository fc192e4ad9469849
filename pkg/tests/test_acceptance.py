"""Acceptance criteria 1-9.

Each test prints one ``PASS``/``FAIL`` line and registers it for the terminal
summary.  Run directly with ``python tests/test_acceptance.py`` to get the nine
lines without pytest.
"""
import os
import random
import sys
import time
from contextlib import contextmanager
from itertools import combinations

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
import pytest  # noqa: E402

from clutterlab import (  # noqa: E402
    IntMatrix,
    build_report,
    canonical_form,
    check_triangulation,
    covering_number,
    covering_polyhedron,
    dd_convert,
    delta_r,
    has_konig,
    has_mfmc,
    incidence_matrix,
    is_balanced,
    is_hilbert_basis,
    is_ideal,
    is_unimodular_triangulation,
    is_vertex_critical,
    lattice_equal,
    exact_hit_cover,
    matching_number,
    minimal_vertex_covers,
    minor,
    perfect_matching,
    rank,
    regular_triangulation,
    semigroup_member,
    smith_normal_form,
    theorem_suite,
    uniformity,
)
from clutterlab.clutter import from_masks  # noqa: E402
from clutterlab.errors import EmptyPolyhedron  # noqa: E402
from clutterlab.fixtures import EX_4_5_COVERS, EX_5_7_BAD_CELL, FIXTURES  # noqa: E402
from clutterlab.semigroup import cone_member  # noqa: E402

RESULTS = {}


@contextmanager
def criterion(num, title, limit):
    t0 = time.perf_counter()
    ok = False
    note = ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        ok = elapsed < limit
        note = f"{elapsed:.2f}s (limit {limit:g}s)"
        assert ok, f"criterion {num} took {elapsed:.1f}s, limit {limit}s"
    except AssertionError as exc:
        note = note or f"assertion failed: {exc}"
        raise
    finally:
        line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {title} [{note}]"
        RESULTS[num] = line
        print(line)


def test_criterion_1_ex_4_5():
    with criterion(1, "ex-4.5 covers, rank, integrality, Konig, alpha0, beta1", 1):
        c = FIXTURES["ex-4.5"].subject
        covers = list(minimal_vertex_covers(c))
        assert len(covers) == 7 and covers == sorted(EX_4_5_COVERS)
        assert rank(incidence_matrix(c)) == 4
        assert is_ideal(c)
        assert not has_konig(c)
        assert covering_number(c) == 2 and matching_number(c) == 1


def test_criterion_2_ex_2_3():
    with criterion(2, "ex-2.3 balanced, integral, alpha0, perfect matching, no exact-hit cover", 1):
        c = FIXTURES["ex-2.3"].subject
        assert is_balanced(incidence_matrix(c))
        assert is_ideal(c)
        assert covering_number(c) == 4
        assert covering_number(minor(c, zeros=[9])[0]) == 4
        assert not is_vertex_critical(c)
        assert perfect_matching(c).edges == (0, 1, 2)
        assert exact_hit_cover(c) is None


def test_criterion_3_ex_3_7():
    with criterion(3, "ex-3.7 MFMC, SNF not identity, columns not a Hilbert basis", 10):
        c = FIXTURES["ex-3.7"].subject
        assert has_mfmc(c)
        assert not smith_normal_form(incidence_matrix(c)).is_identity_block()
        cols = incidence_matrix(c).columns()
        v = is_hilbert_basis(cols)
        assert not v
        assert semigroup_member(v.witness, cols) is None
        assert cone_member(v.witness, cols)
        assert oracles.in_rational_span(cols, v.witness)


def test_criterion_4_ex_5_7():
    with criterion(4, "ex-5.7 balanced, bad cell lattice differs", 5):
        M = FIXTURES["ex-5.7"].subject
        assert is_balanced(M)
        cols = M.columns()
        assert not lattice_equal([cols[i - 1] for i in EX_5_7_BAD_CELL], cols)


def test_criterion_5_triangle_deltas():
    with criterion(5, "triangle Delta_3 values 2 and 1", 1):
        A = incidence_matrix(FIXTURES["triangle"].subject)
        assert delta_r(A) == 2
        assert delta_r(A.append_row([1, 1, 1])) == 1


@pytest.mark.slow
def test_criterion_6_theorem_suite():
    with criterion(6, "theorem suite, d in {2,3}, n <= 7, zero violations", 30 * 60):
        s = theorem_suite(n_max=7, ds=(2, 3))
        assert s.violations == [], s.violations[:5]
        assert s.counts["n=7,d=2"]["classes"] == 888
        assert s.counts["n=7,d=3"]["classes"] == 7011184


def _balanced_uniform_configs(k, seed=55):
    """Fixtures plus random uniform clutters with verified balanced incidence matrices."""
    configs, seen = [], set()
    for name in ("4cycle", "single-edge", "ex-4.5", "ex-2.3", "triangle"):
        c = FIXTURES[name].subject
        if uniformity(c) is not None and is_balanced(incidence_matrix(c)):
            configs.append((name, c))
            seen.add(canonical_form(c))
    rng = random.Random(seed)
    while len(configs) < k:
        n, d = rng.randint(4, 8), rng.choice([2, 3])
        cands = [sum(1 << (v - 1) for v in s) for s in combinations(range(1, n + 1), d)]
        masks = [m for m in cands if rng.random() < rng.choice([0.2, 0.35, 0.5])]
        union = 0
        for m in masks:
            union |= m
        if not masks or union != (1 << n) - 1:
            continue
        c = from_masks(n, masks)
        key = canonical_form(c)
        if key in seen or not is_balanced(incidence_matrix(c)):
            continue
        seen.add(key)
        configs.append((f"random-{len(configs)}", c))
    return configs


def test_criterion_7_balanced_triangulations():
    with criterion(7, "20 balanced uniform configs x 50 weights, all unimodular", 10 * 60):
        rng = random.Random(7)
        configs = _balanced_uniform_configs(20)
        assert len(configs) == 20
        good = 0
        for _, c in configs:
            pts = incidence_matrix(c).columns()
            for _ in range(50):
                w = [rng.randint(0, 20) for _ in pts]
                t = regular_triangulation(pts, w)
                assert check_triangulation(t, samples=20, rng=random.Random(0)) is None
                good += bool(is_unimodular_triangulation(t))
        assert good == 1000, f"{good}/1000 unimodular"


def _random_h(rng, dim):
    rows = [[int(i == j) for j in range(dim)] + [0] for i in range(dim)]
    for _ in range(rng.randint(1, 4)):
        rows.append([rng.randint(-1, 3) for _ in range(dim)] + [rng.randint(-2, 3)])
    return rows


def test_criterion_8_oracle_equivalences():
    with criterion(8, "SNF x500, balanced up to 7x7, DD round trip x200", 30 * 60):
        rng = random.Random(8)
        for _ in range(500):
            r, c = rng.randint(1, 5), rng.randint(1, 5)
            rows = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
            s = smith_normal_form(rows)
            M = IntMatrix.from_rows(rows)
            assert s.U @ M @ s.V == s.D
            assert list(s.factors) == oracles.invariant_factors(rows)
        for _ in range(500):
            m, n = rng.randint(1, 7), rng.randint(1, 7)
            p = rng.choice([0.3, 0.5, 0.7])
            rows = [[int(rng.random() < p) for _ in range(n)] for _ in range(m)]
            assert is_balanced(rows).holds == oracles.balanced(rows)
        done = 0
        while done < 200:
            H = _random_h(rng, rng.randint(2, 4))
            try:
                P = dd_convert({"ineqs": H})
            except EmptyPolyhedron:
                continue
            rep = P.to_dict()
            Q = dd_convert({"vertices": rep["vertices"], "rays": rep["rays"]})
            assert (Q.vertices, Q.rays, set(Q.ineqs)) == (P.vertices, P.rays, set(P.ineqs))
            done += 1
        for name in ("triangle", "4cycle", "ex-4.5"):
            c = FIXTURES[name].subject
            assert sorted(covering_polyhedron(c).vertices) == oracles.covering_vertices(c.n, c.edges)


def test_criterion_9_determinism():
    with criterion(9, "byte-identical reports across runs and worker counts", 30 * 60):
        for name, fx in FIXTURES.items():
            a = build_report(fx.subject, name=name).to_json()
            b = build_report(fx.subject, name=name).to_json()
            c = build_report(fx.subject, name=name, workers=2).to_json()
            assert a == b == c, name


if __name__ == "__main__":
    failed = 0
    for key, fn in sorted(globals().items()):
        if key.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
