"""Composite predicates and theorem verification reports."""
import json
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import config
from .clutter import Clutter, incidence_matrix, is_bipartite, maximum_matching, perfect_matching, uniformity
from .covers import (
    blocker,
    cover_partition,
    covering_number,
    has_konig,
    has_packing_property,
    is_2_partitionable,
    is_unmixed,
    is_vertex_critical,
    exact_hit_cover,
    minimal_vertex_covers,
)
from .errors import BoundExceeded, NonBinaryEntry, NotAGraph
from .linalg import delta_r, invariant_factors, rank
from .matrix import IntMatrix
from .polyhedra import covering_polyhedron, is_ideal, is_unimodular_triangulation, regular_triangulation
from .semigroup import is_hilbert_basis, is_minimally_non_normal, lifted_columns, rees_is_normal
from .verdict import Verdict

log = logging.getLogger(__name__)

THEOREM_IDS = (
    "lem-2.2",
    "prop-2.5",
    "prop-2.7",
    "prop-2.9",
    "thm-3.6",
    "cor-3.8",
    "cor-3.9",
    "cor-3.10",
    "thm-3.14",
    "prop-3.15",
    "thm-4.1",
    "cor-4.2",
    "cor-4.3",
    "thm-4.6",
    "cor-4.7",
    "thm-5.5",
)


def jsonable(x):
    """Convert library values (Fractions, tuples, verdicts, inf) into JSON data."""
    if isinstance(x, Verdict):
        return {"holds": x.holds, "witness": jsonable(x.witness)}
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return "inf" if math.isinf(x) else x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    raise TypeError(f"cannot serialize {type(x).__name__}")


@dataclass
class PropertyReport:
    """Named results with witnesses and the operation chain that produced each."""

    subject: str
    properties: dict = field(default_factory=dict)
    status: str = ""

    def add(self, name, value, method, witness=None):
        self.properties[name] = {"value": value, "witness": witness, "method": method}

    def value(self, name):
        return self.properties[name]["value"]

    def to_dict(self):
        doc = {"subject": self.subject}
        if self.status:
            doc["status"] = self.status
        doc["properties"] = {
            name: {
                "value": jsonable(p["value"]),
                "witness": jsonable(p["witness"]),
                "method": p["method"],
            }
            for name, p in self.properties.items()
        }
        return doc

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------- balancedness


def _binary_rows(M):
    rows = M.as_rows() if isinstance(M, IntMatrix) else [list(r) for r in M]
    for r in rows:
        for x in r:
            if x not in (0, 1):
                raise NonBinaryEntry(f"entry {x} is not 0/1")
    return rows


def is_balanced(M, bound=None):
    """No odd-order square submatrix with exactly two ones per row and column.

    Searches the bipartite row/column graph for a chordless cycle of length
    ``2k`` with ``k`` odd; the witness lists the 0-based rows and columns.
    """
    rows = _binary_rows(M)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    bound = config.BALANCED_MAX_LINES if bound is None else bound
    if m + n > bound:
        raise BoundExceeded("balancedness lines", m + n, bound)
    # vertices 0..m-1 are rows, m..m+n-1 are columns
    adj = [set() for _ in range(m + n)]
    for i in range(m):
        for j in range(n):
            if rows[i][j]:
                adj[i].add(m + j)
                adj[m + j].add(i)

    def extend(path, inside):
        last = path[-1]
        s = path[0]
        for w in sorted(adj[last]):
            if w <= s or w in inside:
                continue
            touches = [u for u in path[:-1] if w in adj[u]]
            if touches == [s]:
                length = len(path) + 1
                if length >= 6 and length % 4 == 2:
                    return path + [w]
                continue
            if touches:
                continue
            inside.add(w)
            found = extend(path + [w], inside)
            inside.discard(w)
            if found:
                return found
        return None

    for s in range(m + n):
        cycle = extend([s], {s})
        if cycle:
            r = sorted(v for v in cycle if v < m)
            c = sorted(v - m for v in cycle if v >= m)
            return Verdict(False, {"rows": r, "cols": c})
    return Verdict(True)


# ---------------------------------------------------------------- MFMC and TDI


def has_mfmc(c):
    """Max-flow min-cut, decided as idealness plus normality of the Rees algebra."""
    ideal = is_ideal(c)
    if not ideal:
        return Verdict(False, {"fractional_vertex": jsonable(ideal.witness)})
    normal = rees_is_normal(c)
    if not normal:
        return Verdict(False, {"rees_non_member": normal.witness})
    return Verdict(True)


def _max_integral_packing(columns, alpha, node_bound):
    """Largest ``sum y`` over integral ``y >= 0`` with ``A y <= alpha``."""
    q = len(columns)
    best = [0]
    nodes = [0]
    sizes = [sum(col) for col in columns]

    def rec(k, cap, total):
        nodes[0] += 1
        if nodes[0] > node_bound:
            raise BoundExceeded("integral packing search nodes", nodes[0], node_bound)
        if total > best[0]:
            best[0] = total
        if k == q:
            return
        smallest = min(sizes[k:])
        if total + sum(cap) // max(smallest, 1) <= best[0]:
            return
        col = columns[k]
        most = min((cap[i] // col[i] for i in range(len(col)) if col[i]), default=0)
        for y in range(most, -1, -1):
            rec(k + 1, [a - y * b for a, b in zip(cap, col)], total + y)

    rec(0, list(alpha), 0)
    return best[0]


def tdi_spot_check(c, alpha, bound=None):
    """Both sides of the covering LP duality at one objective ``alpha``.

    The LP optimum is the minimum of ``alpha`` over the vertices of ``Q(A)``;
    ``min_integral`` asks for an integral optimal cover and ``max_integral`` for
    an integral packing ``y`` with ``A y <= alpha`` reaching the optimum.
    """
    alpha = [int(a) for a in alpha]
    if len(alpha) != c.n or any(a < 0 for a in alpha):
        raise ValueError("alpha must be a nonnegative vector of length n")
    bound = config.TDI_MAX_BOX if bound is None else bound
    Q = covering_polyhedron(c)
    lp_opt = min(sum(a * x for a, x in zip(alpha, v)) for v in Q.vertices)
    best_cover = min(sum(alpha[i - 1] for i in cover) for cover in minimal_vertex_covers(c))
    columns = incidence_matrix(c).columns()
    best_pack = _max_integral_packing(columns, alpha, bound)
    return {
        "lp_opt": lp_opt,
        "min_integral": best_cover == lp_opt,
        "max_integral": best_pack == lp_opt,
        "integral_min": best_cover,
        "integral_max": best_pack,
    }


# ---------------------------------------------------------------- theorem checks


def _col_rank(c):
    return rank(incidence_matrix(c))


def _has_pm(c):
    return perfect_matching(c) is not None


def _snf_identity(M):
    return all(f == 1 for f in invariant_factors(M))


class _Check:
    def __init__(self, c, theorem):
        self.c = c
        self.report = PropertyReport(f"{c.name or 'clutter'}:{theorem}")
        self.ok = True

    def hyp(self, name, value, method, witness=None):
        self.report.add(f"hypothesis:{name}", value, method, witness)
        return bool(value)

    def concl(self, name, value, method, witness=None):
        self.report.add(f"conclusion:{name}", value, method, witness)
        self.ok = self.ok and bool(value)

    def unmet(self):
        self.report.status = "hypotheses-not-met"
        return self.report


def _uniform_ideal(ch):
    d = uniformity(ch.c)
    if not ch.hyp("uniform", d is not None, "clutter.uniformity", d):
        return None
    ideal = is_ideal(ch.c)
    if not ch.hyp("ideal", ideal.holds, "polyhedra.is_ideal", jsonable(ideal.witness)):
        return None
    return d


def _uniform_mfmc(ch):
    d = uniformity(ch.c)
    if not ch.hyp("uniform", d is not None, "clutter.uniformity", d):
        return None
    mf = has_mfmc(ch.c)
    if not ch.hyp("mfmc", mf.holds, "properties.has_mfmc", mf.witness):
        return None
    return d


def _packing_family(ch):
    """Hypotheses shared by the alpha_0 = 2 packing results."""
    c = ch.c
    d = uniformity(c)
    if not ch.hyp("uniform", d is not None, "clutter.uniformity", d):
        return False
    if not ch.hyp("perfect_matching", _has_pm(c), "clutter.perfect_matching"):
        return False
    a0 = covering_number(c)
    if not ch.hyp("alpha0_is_2", a0 == 2, "covers.covering_number", a0):
        return False
    pk = has_packing_property(c)
    return ch.hyp("packing", pk.holds, "covers.has_packing_property", pk.witness)


def _verify(ch, theorem, assume_cohen_macaulay=False, weights=None, samples=10, seed=0):
    c = ch.c
    if theorem == "lem-2.2":
        if _uniform_ideal(ch) is None:
            return False
        cover = exact_hit_cover(c)
        ch.concl("exact_hit_cover", cover is not None, "covers.exact_hit_cover", cover)
    elif theorem == "prop-2.5":
        if _uniform_ideal(ch) is None:
            return False
        part = cover_partition(c, assume_ideal=True)
        ch.concl("cover_partition", True, "covers.cover_partition", part.to_json())
    elif theorem in ("prop-2.7", "prop-2.9"):
        d = _uniform_ideal(ch)
        if d is None:
            return False
        pm = maximum_matching(c)
        if not ch.hyp("perfect_matching", pm.perfect, "clutter.maximum_matching", list(pm.edges)):
            return False
        a0 = covering_number(c)
        if theorem == "prop-2.7":
            ch.concl("vertex_critical", is_vertex_critical(c, allow_empty=True), "covers.is_vertex_critical")
        else:
            ch.concl("matching_size_is_alpha0", len(pm) == a0, "clutter.maximum_matching", [len(pm), a0])
            part = cover_partition(c, assume_ideal=True)
            sizes = [len(p) for p in part]
            ch.concl("parts_of_size_alpha0", all(s == a0 for s in sizes), "covers.cover_partition", part.to_json())
    elif theorem in ("thm-3.6", "cor-3.8", "cor-3.10"):
        d = _uniform_mfmc(ch)
        if d is None:
            return False
        A = incidence_matrix(c)
        if theorem == "thm-3.6":
            dr = delta_r(A)
            ch.concl("delta_r_is_1", dr == 1, "linalg.delta_r", dr)
            hb = is_hilbert_basis(A.columns())
            ch.concl("hilbert_basis", hb.holds, "semigroup.is_hilbert_basis", hb.witness)
        elif theorem == "cor-3.8":
            f = invariant_factors(A)
            ch.concl("snf_identity", all(x == 1 for x in f), "linalg.smith_normal_form", list(f))
        else:
            pm = _has_pm(c)
            a0 = covering_number(c)
            ch.concl("pm_iff_n_eq_d_alpha0", pm == (c.n == d * a0), "clutter.perfect_matching+covers.covering_number",
                     {"perfect_matching": pm, "n": c.n, "d": d, "alpha0": a0})
    elif theorem == "cor-3.9":
        d = uniformity(c)
        if not ch.hyp("uniform", d is not None, "clutter.uniformity", d):
            return False
        mf = has_mfmc(c)
        ideal = is_ideal(c)
        hb = is_hilbert_basis(incidence_matrix(c).columns()) if ideal else Verdict(False)
        ch.concl("mfmc_iff_ideal_and_hilbert", mf.holds == (ideal.holds and hb.holds),
                 "properties.has_mfmc+polyhedra.is_ideal+semigroup.is_hilbert_basis",
                 {"mfmc": mf.holds, "ideal": ideal.holds, "hilbert": hb.holds})
    elif theorem == "thm-3.14":
        pk = has_packing_property(c)
        if not ch.hyp("packing", pk.holds, "covers.has_packing_property", pk.witness):
            return False
        ideal = is_ideal(c)
        ch.concl("ideal", ideal.holds, "polyhedra.is_ideal", jsonable(ideal.witness))
    elif theorem == "prop-3.15":
        mf = has_mfmc(c)
        if not ch.hyp("mfmc", mf.holds, "properties.has_mfmc", mf.witness):
            return False
        pk = has_packing_property(c)
        ch.concl("packing", pk.holds, "covers.has_packing_property", pk.witness)
    elif theorem in ("thm-4.1", "cor-4.2", "cor-4.3"):
        if not _packing_family(ch):
            return False
        A = incidence_matrix(c)
        if theorem == "thm-4.1":
            dr = delta_r(A.append_row([1] * c.q))
            ch.concl("delta_r_with_ones_row_is_1", dr == 1, "linalg.delta_r", dr)
        else:
            if theorem == "cor-4.2":
                normal = is_hilbert_basis(lifted_columns(c), lattice="generated")
                if not ch.hyp("kft_normal", normal.holds, "semigroup.is_hilbert_basis[generated]", normal.witness):
                    return False
            else:
                r = rank(A)
                if not ch.hyp("columns_independent", r == c.q, "linalg.rank", r):
                    return False
            mf = has_mfmc(c)
            ch.concl("mfmc", mf.holds, "properties.has_mfmc", mf.witness)
    elif theorem == "thm-4.6":
        d = uniformity(c)
        if not ch.hyp("uniform", d is not None, "clutter.uniformity", d):
            return False
        part = is_2_partitionable(c)
        if not ch.hyp("2_partitionable", part is not None, "covers.is_2_partitionable",
                      part.to_json() if part else None):
            return False
        r = _col_rank(c)
        ch.concl("a_rank_at_most_d_plus_1", r <= d + 1, "linalg.rank", {"rank": r, "d": d})
        sizes = sorted({len(t) for t in minimal_vertex_covers(c)})
        ch.concl("b_cover_sizes_in_2_to_d", all(2 <= s <= d for s in sizes), "covers.minimal_vertex_covers", sizes)
        big = d >= 3 and d in sizes
        if has_konig(c) and big:
            ch.concl("c_rank_is_d_plus_1", r == d + 1, "covers.has_konig+linalg.rank", r)
        else:
            ch.report.add("conclusion:c_rank_is_d_plus_1", None, "covers.has_konig", "premise not met")
        pk = has_packing_property(c)
        if pk.holds and is_minimally_non_normal(c):
            ch.concl("d_rank_is_d_plus_1", r == d + 1, "semigroup.is_minimally_non_normal+linalg.rank", r)
        else:
            ch.report.add("conclusion:d_rank_is_d_plus_1", None, "covers.has_packing_property", "premise not met")
    elif theorem == "cor-4.7":
        try:
            bip = is_bipartite(c)
        except NotAGraph:
            bip = False
        if not ch.hyp("bipartite_graph", bip, "clutter.is_bipartite"):
            return False
        if not ch.hyp("unmixed", is_unmixed(c), "covers.is_unmixed"):
            return False
        b = blocker(c)
        a0 = covering_number(c)
        part = is_2_partitionable(b)
        ch.concl("i_blocker_2_partitionable", part is not None, "covers.blocker+covers.is_2_partitionable",
                 part.to_json() if part else None)
        r = _col_rank(b)
        ch.concl("ii_rank_at_most_alpha0_plus_1", r <= a0 + 1, "linalg.rank", {"rank": r, "alpha0": a0})
        if assume_cohen_macaulay:
            ch.concl("iii_rank_is_alpha0_plus_1", r == a0 + 1, "linalg.rank[assumed Cohen-Macaulay]", r)
        else:
            ch.report.add("conclusion:iii_rank_is_alpha0_plus_1", None, "not evaluated", "needs assume_cohen_macaulay")
    elif theorem == "thm-5.5":
        d = uniformity(c)
        if not ch.hyp("uniform", d is not None, "clutter.uniformity", d):
            return False
        bal = is_balanced(incidence_matrix(c))
        if not ch.hyp("balanced", bal.holds, "properties.is_balanced", bal.witness):
            return False
        points = incidence_matrix(c).columns()
        rng = random.Random(seed)
        trials = [list(weights)] if weights is not None else [[0] * c.q] + [
            [rng.randint(0, 10) for _ in range(c.q)] for _ in range(samples)
        ]
        bad = None
        for w in trials:
            t = regular_triangulation(points, w)
            u = is_unimodular_triangulation(t)
            if not u:
                bad = {"weights": w, "cell": [i + 1 for i in u.witness["cell"]], "index": u.witness["index"]}
                break
        ch.concl("unimodular_triangulations", bad is None, "polyhedra.regular_triangulation", bad or len(trials))
    else:
        raise ValueError(f"unknown theorem id {theorem!r}; known: {', '.join(THEOREM_IDS)}")
    return True


def verify_theorem(c, theorem, assume_cohen_macaulay=False, weights=None, samples=10, seed=0):
    """Evaluate the hypotheses and conclusions of a proven statement on ``c``.

    ``status`` is ``pass``, ``fail`` or ``hypotheses-not-met``.  A failure means a
    proven statement was contradicted, i.e. a bug, and is logged as an error.
    """
    if not isinstance(c, Clutter):
        raise TypeError("verify_theorem expects a Clutter")
    ch = _Check(c, theorem)
    met = _verify(ch, theorem, assume_cohen_macaulay, weights, samples, seed)
    if not met:
        return ch.unmet()
    ch.report.status = "pass" if ch.ok else "fail"
    if not ch.ok:
        log.error("THEOREM VIOLATED (implementation bug): %s on %r", theorem, c)
    return ch.report
