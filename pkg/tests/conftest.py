import os
import sys
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from clutterlab import make_clutter  # noqa: E402
from clutterlab.fixtures import FIXTURES  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def _relabel(edges):
    """Sperner-reduce, drop isolated vertices and renumber 1..n."""
    sets = {frozenset(e) for e in edges if e}
    sets = [s for s in sets if not any(t < s for t in sets)]
    verts = sorted(set().union(*sets)) if sets else []
    idx = {v: i + 1 for i, v in enumerate(verts)}
    return len(verts), sorted(sorted(idx[v] for v in s) for s in sets)


@st.composite
def clutters(draw, max_n=6, min_n=1, d=None, max_edges=8):
    n = draw(st.integers(min_n, max_n))
    if d is None:
        edge = st.sets(st.integers(1, n), min_size=1, max_size=n)
    else:
        pool = list(combinations(range(1, n + 1), d)) if d <= n else [tuple(range(1, n + 1))]
        edge = st.sampled_from(pool).map(set)
    edges = draw(st.lists(edge, min_size=1, max_size=max_edges))
    m, rel = _relabel(edges)
    return make_clutter(m, rel)


@st.composite
def matrices(draw, max_rows=5, max_cols=5, lo=-5, hi=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return draw(st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r))


CLUTTER_FIXTURES = [name for name, fx in FIXTURES.items() if fx.kind == "clutter"]


@pytest.fixture(params=CLUTTER_FIXTURES)
def fixture_clutter(request):
    return FIXTURES[request.param].subject


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
