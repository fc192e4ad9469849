import json
from itertools import combinations

import oracles
import pytest

from clutterlab import SearchTask, canonical_form, run_search, theorem_suite
from clutterlab.clutter import from_masks
from clutterlab.errors import BoundExceeded
from clutterlab.fixtures import FIXTURES
from clutterlab.search import TARGETS, enumerate_clutters, resolve_target


def test_resolve_target_aliases():
    assert resolve_target("packing ⇒ mfmc").name == "packing=>mfmc"
    assert resolve_target("mfmc ⇒ Δ_r(A)=1").name == "mfmc=>delta_r"
    assert resolve_target("packing ⇒ Δ_r(B)=1").name == "packing=>delta_r_ones"
    with pytest.raises(KeyError):
        resolve_target("nothing=>else")


def test_task_validation():
    with pytest.raises(ValueError):
        SearchTask(2, 4, 2, "packing=>mfmc", mode="random").validate()
    with pytest.raises(BoundExceeded):
        SearchTask(2, 9, 2, "packing=>mfmc").validate()
    with pytest.raises(BoundExceeded):
        SearchTask(2, 7, None, "packing=>mfmc").validate()
    with pytest.raises(ValueError):
        SearchTask(3, 2, 2, "packing=>mfmc").validate()


def test_exhaustive_max_n_env(monkeypatch):
    monkeypatch.setenv("CLUTTERLAB_MAX_N", "5")
    with pytest.raises(BoundExceeded):
        SearchTask(2, 6, 2, "packing=>mfmc").validate()


def test_packing_mfmc_d2_n6():
    r = run_search(SearchTask(2, 6, 2, "packing ⇒ mfmc"))
    assert r.found == 0 and r.kind == "conjecture"
    assert r.tested == sum(1 for n in range(2, 7) for _ in enumerate_clutters(n, 2))


def test_mfmc_delta_r_d2_n5():
    r = run_search(SearchTask(2, 5, 2, "mfmc ⇒ Δ_r(A)=1"))
    assert r.found == 0 and r.kind == "theorem" and r.tested > r.filtered


def test_mixed_mfmc_hilbert_finds_ex_3_7():
    r = run_search(SearchTask(1, 5, None, "mfmc=>hilbert"))
    assert r.kind == "theorem-out-of-scope"
    assert r.found == 1
    ex37 = canonical_form(FIXTURES["ex-3.7"].subject).decode()
    assert r.candidates[0]["canonical"] == ex37


def test_search_deterministic_and_workers():
    a = run_search(SearchTask(3, 5, 3, "packing=>ehrhart")).to_json()
    b = run_search(SearchTask(3, 5, 3, "packing=>ehrhart"), workers=2).to_json()
    assert a == b
    doc = json.loads(a)
    assert set(doc["summary"]) == {"tested", "filtered", "skipped", "found"}


def test_random_mode_reproducible():
    t = SearchTask(4, 6, 2, "packing=>mfmc", mode="random", seed=3, samples=30)
    a, b = run_search(t).to_json(), run_search(t).to_json()
    assert a == b
    assert json.loads(a)["task"]["seed"] == 3


@pytest.mark.parametrize("name", sorted(n for n, t in TARGETS.items() if t.kind == "theorem"))
def test_theorem_targets_clean_small(name):
    r = run_search(SearchTask(2, 5, 2, name))
    assert r.found == 0


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3), (5, 3)])
def test_class_counts_vs_brute_force(n, d):
    """Classes without isolated vertices = classes on n minus classes on n - 1."""
    ours = sum(1 for _ in enumerate_clutters(n, d))
    expected = oracles.class_count(n, d) - oracles.class_count(n - 1, d)
    assert ours == expected


def test_enumerated_classes_distinct():
    reps = [from_masks(5, m) for m in enumerate_clutters(5, 2)]
    assert len({oracles.canonical(c.n, c.edges) for c in reps}) == len(reps)
    cands = list(combinations(range(1, 6), 2))
    assert all(all(e in cands for e in c.edges) for c in reps)


def test_theorem_suite_small():
    s = theorem_suite(6)
    assert s.violations == []
    assert s.counts["n=6,d=2"]["classes"] == 122
    assert s.counts["n=6,d=3"]["classes"] == 2102
