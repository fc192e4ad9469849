"""Enumeration harness: implication targets over small clutters."""
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import config
from ._backend import kernels
from .clutter import canonical_form, from_masks, incidence_matrix, perfect_matching, reduce_masks, uniformity
from .covers import (
    cover_partition,
    covering_number,
    has_packing_property,
    is_vertex_critical,
    exact_hit_cover,
    validate_partition,
)
from .errors import BoundExceeded, ClutterLabError
from .linalg import delta_r, invariant_factors
from .polyhedra import is_ideal, is_unimodular_triangulation, regular_triangulation
from .properties import has_mfmc, jsonable
from .semigroup import ehrhart_equality, is_hilbert_basis, rees_is_normal

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Target:
    name: str
    kind: str  # "theorem" or "conjecture"
    hypothesis: object
    conclusion: object
    uniform_only: bool
    statement: str


def _v(verdict):
    return verdict.holds, verdict.witness


def _mfmc(c):
    return _v(has_mfmc(c))


def _packing(c):
    return _v(has_packing_property(c))


def _ideal(c):
    v = is_ideal(c)
    return v.holds, jsonable(v.witness)


def _ideal_pm(c):
    ok, w = _ideal(c)
    return (ok and perfect_matching(c) is not None), w


def _delta_r(c):
    dr = delta_r(incidence_matrix(c))
    return dr == 1, dr


def _delta_r_ones(c):
    dr = delta_r(incidence_matrix(c).append_row([1] * c.q))
    return dr == 1, dr


def _snf_identity(c):
    f = invariant_factors(incidence_matrix(c))
    return all(x == 1 for x in f), list(f)


def _hilbert(c):
    return _v(is_hilbert_basis(incidence_matrix(c).columns()))


def _cover_partition(c):
    try:
        part = cover_partition(c, assume_ideal=True)
    except ClutterLabError as exc:
        return False, str(exc)
    return True, part.to_json()


def _exact_hit(c):
    t = exact_hit_cover(c)
    return t is not None, t


def _vertex_critical(c):
    return is_vertex_critical(c, allow_empty=True), None


def _n_eq_d_alpha0(c):
    a0 = covering_number(c)
    return c.n == uniformity(c) * a0, a0


def _pm_iff(c):
    a0 = covering_number(c)
    pm = perfect_matching(c) is not None
    return pm == (c.n == uniformity(c) * a0), {"perfect_matching": pm, "alpha0": a0}


def _ehrhart(c):
    return _v(ehrhart_equality(c))


def _unimodular_triangulation(c, samples=8, seed=0):
    """Look for a unimodular regular triangulation among seeded random weights."""
    points = incidence_matrix(c).columns()
    rng = random.Random(seed)
    tried = []
    for k in range(samples + 1):
        w = [0] * c.q if k == 0 else [rng.randint(0, 20) for _ in range(c.q)]
        if is_unimodular_triangulation(regular_triangulation(points, w)):
            return True, w
        tried.append(w)
    return False, {"weights_tried": len(tried)}


_T = "theorem"
_C = "conjecture"

TARGETS = {
    t.name: t
    for t in (
        Target("mfmc=>delta_r", _T, _mfmc, _delta_r, True, "uniform MFMC implies Delta_r(A) = 1"),
        Target("mfmc=>snf_identity", _T, _mfmc, _snf_identity, True, "uniform MFMC implies SNF(A) = [I 0]"),
        Target("mfmc=>hilbert", _T, _mfmc, _hilbert, True, "uniform MFMC implies the columns are a Hilbert basis"),
        Target("mfmc=>packing", _T, _mfmc, _packing, False, "MFMC implies the packing property"),
        Target("mfmc=>pm_iff_n_eq_d_alpha0", _T, _mfmc, _pm_iff, True, "uniform MFMC: perfect matching iff n = d alpha0"),
        Target("packing=>ideal", _T, _packing, _ideal, False, "packing implies ideal"),
        Target("ideal=>cover_partition", _T, _ideal, _cover_partition, True, "uniform ideal implies a partition into covers"),
        Target("ideal=>exact_hit_cover", _T, _ideal, _exact_hit, True, "uniform ideal implies a cover meeting each edge once"),
        Target("ideal+pm=>vertex_critical", _T, _ideal_pm, _vertex_critical, True, "uniform ideal with perfect matching is vertex critical"),
        Target("ideal+pm=>n_eq_d_alpha0", _T, _ideal_pm, _n_eq_d_alpha0, True, "uniform ideal with perfect matching has n = d alpha0"),
        Target("packing=>mfmc", _C, _packing, _mfmc, False, "packing implies MFMC"),
        Target("packing=>ehrhart", _C, _packing, _ehrhart, True, "uniform packing implies K[Ft] = A(P)"),
        Target("packing=>delta_r_ones", _C, _packing, _delta_r_ones, True, "uniform packing implies Delta_r([A; 1]) = 1"),
        Target("mfmc=>unimodular_triangulation", _C, _mfmc, _unimodular_triangulation, True,
               "uniform MFMC implies a unimodular regular triangulation"),
    )
}

_ALIASES = {
    "mfmc=>Δ_r(A)=1": "mfmc=>delta_r",
    "packing=>Δ_r(B)=1": "packing=>delta_r_ones",
    "packing=>K[Ft]=A(P)": "packing=>ehrhart",
}


def resolve_target(name):
    key = "".join(name.split()).replace("⇒", "=>")
    key = _ALIASES.get(key, key)
    if key not in TARGETS:
        raise KeyError(f"unknown target {name!r}; known: {', '.join(sorted(TARGETS))}")
    return TARGETS[key]


@dataclass(frozen=True)
class SearchTask:
    """What to enumerate and which implication to test.

    ``d = None`` allows clutters of mixed edge sizes.
    """

    n_min: int
    n_max: int
    d: object
    target: str
    mode: str = "exhaustive"
    seed: object = None
    samples: int = 200
    p: float = 0.3

    def validate(self):
        resolve_target(self.target)
        if self.mode not in ("exhaustive", "random"):
            raise ValueError("mode must be 'exhaustive' or 'random'")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.mode == "exhaustive" and self.n_max > config.exhaustive_max_n():
            raise BoundExceeded("exhaustive search vertices", self.n_max, config.exhaustive_max_n())
        if self.mode == "random" and self.seed is None:
            raise ValueError("random mode needs an explicit seed")
        if self.d is None and self.mode == "exhaustive" and self.n_max > 6:
            raise BoundExceeded("mixed-size exhaustive vertices", self.n_max, 6)

    def to_dict(self):
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "d": self.d,
            "target": resolve_target(self.target).name,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples if self.mode == "random" else None,
            "p": self.p if self.mode == "random" else None,
        }


@dataclass
class SearchResult:
    task: SearchTask
    kind: str
    tested: int = 0
    filtered: int = 0
    skipped: list = field(default_factory=list)
    candidates: list = field(default_factory=list)

    @property
    def found(self):
        return len(self.candidates)

    def to_dict(self):
        return {
            "task": self.task.to_dict(),
            "kind": self.kind,
            "summary": {
                "tested": self.tested,
                "filtered": self.filtered,
                "skipped": len(self.skipped),
                "found": self.found,
            },
            "skipped": self.skipped,
            "candidates": self.candidates,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _candidates_for(n, d):
    if d is None:
        return [m for m in range(1, 1 << n)]
    return [sum(1 << (v - 1) for v in s) for s in combinations(range(1, n + 1), d)]


def _decode(n, cands, m):
    return [cands[i] for i in range(len(cands)) if m >> i & 1]


def enumerate_clutters(n, d=None):
    """One representative per isomorphism class, with no isolated vertex, as mask lists."""
    cands = _candidates_for(n, d)
    full = (1 << n) - 1
    for m in kernels.enumerate_classes(n, cands):
        masks = _decode(n, cands, m)
        union = 0
        for e in masks:
            union |= e
        if masks and union == full:
            yield masks


def random_clutters(n, d, p, samples, rng):
    """Include each admissible edge with probability ``p``, then Sperner-reduce."""
    cands = _candidates_for(n, d)
    full = (1 << n) - 1
    for _ in range(samples):
        masks = reduce_masks([c for c in cands if rng.random() < p])
        union = 0
        for e in masks:
            union |= e
        if masks and union == full:
            yield masks


def _evaluate(args):
    name, n, masks = args
    target = TARGETS[name]
    c = from_masks(n, masks)
    key = canonical_form(c, bound=max(config.CANONICAL_MAX_N, n)).decode()
    try:
        ok, hw = target.hypothesis(c)
        if not ok:
            return key, "filtered", None
        good, cw = target.conclusion(c)
    except BoundExceeded as exc:
        return key, "skipped", str(exc)
    if good:
        return key, "holds", None
    return key, "candidate", {"hypothesis": jsonable(hw), "conclusion": jsonable(cw)}


def run_search(task, workers=1):
    """Run ``task``; candidates are re-verified in-process and emitted in canonical order."""
    task.validate()
    target = resolve_target(task.target)
    result = SearchResult(task, target.kind)
    if target.uniform_only and task.d is None:
        result.kind = f"{target.kind}-out-of-scope"
    seen = {}
    rng = random.Random(task.seed)
    for n in range(task.n_min, task.n_max + 1):
        if task.d is not None and task.d > n:
            continue
        if task.mode == "exhaustive":
            source = enumerate_clutters(n, task.d)
        else:
            source = random_clutters(n, task.d, task.p, task.samples, rng)
        for masks in source:
            c = from_masks(n, masks)
            key = canonical_form(c, bound=max(config.CANONICAL_MAX_N, n))
            seen.setdefault(key, (n, tuple(masks)))
    jobs = [(target.name, n, list(masks)) for _, (n, masks) in sorted(seen.items())]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        outcomes = [_evaluate(j) for j in jobs]
    for (name, n, masks), (key, status, info) in zip(jobs, outcomes):
        result.tested += 1
        if status == "filtered":
            result.filtered += 1
        elif status == "skipped":
            log.warning("bound exceeded on %s: %s", key, info)
            result.skipped.append({"canonical": key, "reason": info})
        elif status == "candidate":
            again = _evaluate((name, n, masks))
            if again[1] != "candidate":
                log.error("candidate %s did not re-verify", key)
                continue
            c = from_masks(n, masks)
            result.candidates.append({"canonical": key, "clutter": c.to_dict(), "witness": again[2]})
            if target.kind == "theorem" and task.d is not None:
                log.error("THEOREM TARGET VIOLATED (implementation bug): %s on %s", target.name, key)
    return result


# ---------------------------------------------------------------- theorem suite


@dataclass
class SuiteResult:
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def to_dict(self):
        return {"counts": self.counts, "violations": self.violations}


def _full_check(n, d, masks, packing):
    """All implications of the uniform theorem suite on one clutter."""
    c = from_masks(n, masks)
    bad = []
    ideal = is_ideal(c).holds
    if packing and not ideal:
        bad.append("packing=>ideal")
    stats = {"ideal": ideal, "mfmc": False, "packing": bool(packing)}
    if ideal:
        part = cover_partition(c, assume_ideal=True)
        if validate_partition(c, list(part)) is not None:
            bad.append("ideal=>cover_partition")
        if exact_hit_cover(c) is None:
            bad.append("ideal=>exact_hit_cover")
        if perfect_matching(c) is not None:
            if not is_vertex_critical(c, allow_empty=True):
                bad.append("ideal+pm=>vertex_critical")
            if c.n != d * covering_number(c):
                bad.append("ideal+pm=>n_eq_d_alpha0")
        if rees_is_normal(c).holds:
            stats["mfmc"] = True
            A = incidence_matrix(c)
            if delta_r(A) != 1:
                bad.append("mfmc=>delta_r")
            if any(x != 1 for x in invariant_factors(A)):
                bad.append("mfmc=>snf_identity")
            if not is_hilbert_basis(A.columns()).holds:
                bad.append("mfmc=>hilbert")
            if not packing:
                bad.append("mfmc=>packing")
    return bad, stats


def _full_check_job(args):
    return _full_check(*args)


def theorem_suite(n_max=7, ds=(2, 3), workers=1, progress=None):
    """Exhaustive check of the proven uniform implications for every class with ``n <= n_max``.

    Classes carrying a cover-weight certificate of non-idealness only need
    ``not packing``; every other class gets the full exact checks.
    """
    out = SuiteResult()
    for d in ds:
        for n in range(d, n_max + 1):
            cands = _candidates_for(n, d)
            classes = kernels.enumerate_classes(n, cands)
            covers_all, cert, packing = kernels.screen_uniform(classes, cands, n, d)
            row = {"classes": 0, "certified_non_ideal": 0, "full_checks": 0, "ideal": 0, "mfmc": 0, "packing": 0}
            jobs = []
            for m, cov, fc, pk in zip(classes, covers_all, cert, packing):
                if not cov:
                    continue
                row["classes"] += 1
                masks = _decode(n, cands, int(m))
                if fc:
                    row["certified_non_ideal"] += 1
                    if pk:
                        out.violations.append({"n": n, "d": d, "edges": masks, "rule": "packing=>ideal"})
                    continue
                jobs.append((n, d, masks, pk))
            del classes, covers_all, cert, packing
            if workers > 1 and len(jobs) > 1:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(_full_check_job, jobs, chunksize=8))
            else:
                results = [_full_check_job(j) for j in jobs]
            for (n_, d_, masks, _), (bad, stats) in zip(jobs, results):
                row["full_checks"] += 1
                row["ideal"] += stats["ideal"]
                row["mfmc"] += stats["mfmc"]
                row["packing"] += stats["packing"]
                for rule in bad:
                    out.violations.append({"n": n_, "d": d_, "edges": masks, "rule": rule})
            out.counts[f"n={n},d={d}"] = row
            if progress:
                progress(n, d, row)
    return out
