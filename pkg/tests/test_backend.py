import os
import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clutterlab import BACKEND
from clutterlab._backend import compiled_kernels, python_kernels
from conftest import clutters

needs_compiled = pytest.mark.skipif(compiled_kernels is None, reason="compiled extension not built")


def test_backend_name():
    assert BACKEND in ("cython", "python")
    assert python_kernels.BACKEND == "python"


def test_pure_python_env_switch():
    env = dict(os.environ, CLUTTERLAB_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import clutterlab; print(clutterlab.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def _same(name, *args):
    a = getattr(python_kernels, name)(*args)
    b = getattr(compiled_kernels, name)(*args)
    assert _norm(a) == _norm(b), (name, args)


def _norm(x):
    if isinstance(x, (list, tuple)):
        return [_norm(v) for v in x]
    if hasattr(x, "tolist"):
        return x.tolist()
    return x


@needs_compiled
@given(clutters(max_n=7, max_edges=10))
def test_clutter_kernels_agree(c):
    masks = list(c.masks)
    _same("minimal_transversals", masks)
    _same("max_matching", masks)
    _same("canonical_edges", c.n, masks)
    for k in range(c.n + 1):
        _same("has_transversal_of_size", masks, k)


@needs_compiled
@given(clutters(max_n=5, max_edges=7))
def test_packing_kernel_agrees(c):
    _same("packing_witness", c.n, list(c.masks))


@needs_compiled
@given(st.integers(3, 7), st.integers(2, 3), st.data())
def test_uniform_kernels_agree(n, d, data):
    if d > n:
        return
    cands = [sum(1 << (v - 1) for v in s) for s in combinations(range(1, n + 1), d)]
    picked = data.draw(st.lists(st.sampled_from(cands), min_size=1, max_size=8, unique=True))
    _same("cover_weight_certificate", n, picked, d)


@needs_compiled
@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3), (6, 2)])
def test_enumeration_and_screen_agree(n, d):
    cands = [sum(1 << (v - 1) for v in s) for s in combinations(range(1, n + 1), d)]
    a = python_kernels.enumerate_classes(n, cands)
    b = compiled_kernels.enumerate_classes(n, cands)
    assert _norm(a) == _norm(b)
    _same("screen_uniform", list(a), cands, n, d)
