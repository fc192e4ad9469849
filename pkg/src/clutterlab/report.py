"""Full property reports for clutters and matrices."""
from concurrent.futures import ProcessPoolExecutor

from .clutter import Clutter, incidence_matrix, maximum_matching, perfect_matching, uniformity
from .covers import (
    cover_partition,
    covering_number,
    has_packing_property,
    is_2_partitionable,
    is_unmixed,
    is_vertex_critical,
    exact_hit_cover,
    matching_number,
    minimal_vertex_covers,
)
from .errors import NonBinaryEntry
from .linalg import delta_r, invariant_factors, rank, torsion_trivial
from .matrix import IntMatrix
from .polyhedra import is_ideal
from .properties import PropertyReport, is_balanced, jsonable
from .semigroup import ehrhart_equality, is_hilbert_basis, rees_is_normal, symbolic_power_equals_ordinary


def _basic(c):
    d = uniformity(c)
    covers = minimal_vertex_covers(c)
    pm = maximum_matching(c)
    perfect = perfect_matching(c)
    a0 = covering_number(c)
    b1 = matching_number(c)
    part = is_2_partitionable(c) if d is not None else None
    return [
        ("n", c.n, "clutter", None),
        ("q", c.q, "clutter", None),
        ("uniformity", d, "clutter.uniformity", None),
        ("rank", rank(incidence_matrix(c)), "clutter.incidence_matrix+linalg.rank", None),
        ("alpha0", a0, "covers.covering_number", None),
        ("beta1", b1, "clutter.maximum_matching", [i + 1 for i in pm.edges]),
        ("konig", a0 == b1, "covers.has_konig", None),
        ("perfect_matching", perfect is not None, "clutter.perfect_matching", [i + 1 for i in perfect.edges] if perfect else None),
        ("cover_count", len(covers), "covers.minimal_vertex_covers", [list(t) for t in covers]),
        ("unmixed", is_unmixed(c), "covers.is_unmixed", None),
        ("vertex_critical", is_vertex_critical(c, allow_empty=True), "covers.is_vertex_critical", None),
        ("exact_hit_cover", exact_hit_cover(c) is not None, "covers.exact_hit_cover", exact_hit_cover(c)),
        ("two_partitionable", part is not None, "covers.is_2_partitionable", part.to_json() if part else None),
    ]


def _packing(c):
    pk = has_packing_property(c)
    return [("packing", pk.holds, "covers.has_packing_property", pk.witness)]


def _polyhedral(c):
    ideal = is_ideal(c)
    out = [("ideal", ideal.holds, "polyhedra.covering_polyhedron+polyhedra.is_ideal", jsonable(ideal.witness))]
    if uniformity(c) is not None and ideal.holds:
        part = cover_partition(c, assume_ideal=True)
        out.append(("cover_partition", True, "covers.cover_partition", part.to_json()))
    else:
        out.append(("cover_partition", None, "covers.cover_partition", "needs uniform and ideal"))
    return out


def _algebraic(c):
    A = incidence_matrix(c)
    f = invariant_factors(A)
    hb = is_hilbert_basis(A.columns())
    rn = rees_is_normal(c)
    eh = ehrhart_equality(c)
    return [
        ("snf_factors", list(f), "linalg.smith_normal_form", None),
        ("snf_identity", all(x == 1 for x in f), "linalg.smith_normal_form", None),
        ("delta_r", delta_r(A), "linalg.delta_r", None),
        ("delta_r_ones_row", delta_r(A.append_row([1] * c.q)), "linalg.delta_r", None),
        ("hilbert_basis_columns", hb.holds, "semigroup.is_hilbert_basis", hb.witness),
        ("rees_normal", rn.holds, "polyhedra.rees_generators+semigroup.is_hilbert_basis", rn.witness),
        ("ehrhart_equality", eh.holds, "semigroup.ehrhart_equality", eh.witness),
    ]


def _balanced(c):
    b = is_balanced(incidence_matrix(c))
    return [("balanced", b.holds, "properties.is_balanced", b.witness)]


def _symbolic(c):
    s = symbolic_power_equals_ordinary(c, 2)
    return [("symbolic_square_equals_ordinary", s.holds, "semigroup.symbolic_power_equals_ordinary", s.witness)]


_CLUTTER_SECTIONS = (_basic, _packing, _polyhedral, _algebraic, _balanced, _symbolic)


def _matrix_basic(M):
    f = invariant_factors(M)
    return [
        ("rows", M.rows, "matrix", None),
        ("cols", M.cols, "matrix", None),
        ("rank", rank(M), "linalg.rank", None),
        ("snf_factors", list(f), "linalg.smith_normal_form", None),
        ("snf_identity", all(x == 1 for x in f), "linalg.smith_normal_form", None),
        ("delta_r", delta_r(M) if not M.is_zero() else None, "linalg.delta_r", None),
        ("torsion_free_quotient", torsion_trivial(M.columns(), M.rows), "linalg.torsion_trivial", None),
    ]


def _matrix_balanced(M):
    try:
        b = is_balanced(M)
    except NonBinaryEntry:
        return [("balanced", None, "properties.is_balanced", "not a 0/1 matrix")]
    return [("balanced", b.holds, "properties.is_balanced", b.witness)]


def _matrix_hilbert(M):
    cols = M.columns()
    if any(x < 0 for col in cols for x in col) or any(not any(col) for col in cols):
        return [("hilbert_basis_columns", None, "semigroup.is_hilbert_basis", "needs nonzero nonnegative columns")]
    hb = is_hilbert_basis(cols)
    return [("hilbert_basis_columns", hb.holds, "semigroup.is_hilbert_basis", hb.witness)]


_MATRIX_SECTIONS = (_matrix_basic, _matrix_balanced, _matrix_hilbert)


def _run_section(args):
    fn, subject = args
    return fn(subject)


def build_report(subject, name=None, workers=1):
    """Compute every property of a :class:`Clutter` or :class:`IntMatrix`.

    Sections may run in worker processes; they are merged in a fixed order so
    the output does not depend on ``workers``.
    """
    if isinstance(subject, Clutter):
        sections = _CLUTTER_SECTIONS
        label = name or subject.name or "clutter"
    elif isinstance(subject, IntMatrix):
        sections = _MATRIX_SECTIONS
        label = name or "matrix"
    else:
        raise TypeError("build_report expects a Clutter or IntMatrix")
    jobs = [(fn, subject) for fn in sections]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_section, jobs))
    else:
        results = [_run_section(j) for j in jobs]
    report = PropertyReport(label)
    for rows in results:
        for prop, value, method, witness in rows:
            report.add(prop, value, method, witness)
    return report
