"""Embedded worked examples with golden property values.

Each expected value carries a citation: ``stated:<fixture>`` when the source
example states it, ``derived:<oracle>`` when it was frozen from an independent
brute-force recomputation (see tests/oracles.py).
"""
import json
from dataclasses import dataclass, field

from .clutter import Clutter, make_clutter
from .matrix import IntMatrix


@dataclass(frozen=True)
class Fixture:
    name: str
    subject: object
    expected: dict = field(default_factory=dict)

    @property
    def kind(self):
        return "clutter" if isinstance(self.subject, Clutter) else "matrix"

    def golden(self):
        return {k: v for k, (v, _) in self.expected.items()}

    def citations(self):
        return {k: c for k, (_, c) in self.expected.items()}

    def to_dict(self):
        data = self.subject.to_dict() if self.kind == "clutter" else {"matrix": self.subject.as_rows()}
        return {
            "name": self.name,
            "kind": self.kind,
            "data": data,
            "expected": {k: {"value": v, "citation": c} for k, (v, c) in self.expected.items()},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


COVERS = "derived:brute-force covers"
MATCH = "derived:brute-force matchings"
MINORS = "derived:gcd of minors"
LP = "derived:vertex enumeration"
SCAN = "derived:box scan"
BAL = "derived:odd submatrix scan"
SYM = "derived:symbolic power expansion"
MINOR_SCAN = "derived:minor-by-minor Konig"


def _s(name):
    return f"stated:{name}"


def _clutter_expected(name, values, stated=()):
    """Attach default oracle citations; keys in ``stated`` cite the example itself."""
    oracle = {
        "n": "input",
        "q": "input",
        "uniformity": "input",
        "rank": MINORS,
        "alpha0": COVERS,
        "beta1": MATCH,
        "konig": COVERS,
        "perfect_matching": MATCH,
        "cover_count": COVERS,
        "unmixed": COVERS,
        "vertex_critical": COVERS,
        "exact_hit_cover": COVERS,
        "two_partitionable": COVERS,
        "packing": MINOR_SCAN,
        "ideal": LP,
        "cover_partition": COVERS,
        "snf_factors": MINORS,
        "snf_identity": MINORS,
        "delta_r": MINORS,
        "delta_r_ones_row": MINORS,
        "hilbert_basis_columns": SCAN,
        "rees_normal": SCAN,
        "ehrhart_equality": SCAN,
        "balanced": BAL,
        "symbolic_square_equals_ordinary": SYM,
    }
    return {k: (v, _s(name) if k in stated else oracle[k]) for k, v in values.items()}


def _clutter_values(row):
    keys = (
        "n q uniformity rank alpha0 beta1 konig perfect_matching cover_count unmixed vertex_critical "
        "exact_hit_cover two_partitionable packing ideal cover_partition snf_factors snf_identity delta_r "
        "delta_r_ones_row hilbert_basis_columns rees_normal ehrhart_equality balanced "
        "symbolic_square_equals_ordinary"
    ).split()
    assert len(keys) == len(row)
    return dict(zip(keys, row))


EX_5_7_ROWS = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
)

# weight vector whose regular triangulation has the non-unimodular cell v1..v6, v10..v13
EX_5_7_WEIGHTS = (0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0)
EX_5_7_BAD_CELL = (1, 2, 3, 4, 5, 6, 10, 11, 12, 13)

EX_4_5_COVERS = ((1, 2), (3, 4), (5, 6), (1, 4, 5), (1, 3, 6), (2, 4, 6), (2, 3, 5))


def _build():
    T, F = True, False
    out = {}

    c = make_clutter(9, [[1, 2], [3, 4, 5, 6], [7, 8, 9], [1, 3], [2, 4], [5, 7], [6, 8]], "ex-2.3")
    vals = _clutter_values(
        [9, 7, None, 7, 4, 4, T, T, 11, F, F, F, F, T, T, None, [1] * 7, T, 1, 1, T, T, T, T, T]
    )
    exp = _clutter_expected("ex-2.3", vals, stated=("n", "q", "ideal", "balanced", "vertex_critical", "exact_hit_cover"))
    exp["perfect_matching_edges"] = ([1, 2, 3], _s("ex-2.3"))
    exp["alpha0_without_x9"] = (4, COVERS)
    out["ex-2.3"] = Fixture("ex-2.3", c, exp)

    c = make_clutter(5, [[1, 5], [2, 4], [3, 4, 5], [1, 2, 3]], "ex-3.7")
    vals = _clutter_values(
        [5, 4, None, 4, 2, 2, T, F, 4, F, F, T, F, T, T, None, [1, 1, 1, 2], F, 2, 2, F, T, F, F, T]
    )
    exp = _clutter_expected("ex-3.7", vals, stated=("uniformity", "snf_identity", "hilbert_basis_columns"))
    exp["mfmc"] = (True, _s("ex-3.7"))
    exp["hilbert_witness"] = ([1, 1, 1, 1, 1], SCAN)
    out["ex-3.7"] = Fixture("ex-3.7", c, exp)

    c = make_clutter(6, [[1, 4, 5], [1, 3, 6], [2, 4, 6], [2, 3, 5]], "ex-4.5")
    vals = _clutter_values(
        [6, 4, 3, 4, 2, 1, F, F, 7, F, T, T, T, F, T, T, [1, 1, 1, 2], F, 2, 2, F, F, F, F, F]
    )
    exp = _clutter_expected(
        "ex-4.5", vals, stated=("uniformity", "rank", "konig", "cover_count", "two_partitionable", "ideal")
    )
    exp["covers"] = ([list(t) for t in sorted(EX_4_5_COVERS)], _s("ex-4.5"))
    exp["mfmc"] = (False, LP + "+" + SCAN)
    out["ex-4.5"] = Fixture("ex-4.5", c, exp)

    M = IntMatrix.from_rows([list(r) for r in EX_5_7_ROWS])
    exp = {
        "rows": (10, "input"),
        "cols": (13, "input"),
        "rank": (10, MINORS),
        "snf_factors": ([1] * 10, MINORS),
        "snf_identity": (True, MINORS),
        "delta_r": (1, MINORS),
        "torsion_free_quotient": (True, MINORS),
        "balanced": (True, _s("ex-5.7")),
        "hilbert_basis_columns": (True, SCAN),
        "bad_cell_sublattice_equal": (False, _s("ex-5.7")),
        "bad_cell_index": (2, MINORS),
    }
    out["ex-5.7"] = Fixture("ex-5.7", M, exp)

    c = make_clutter(3, [[1, 2], [1, 3], [2, 3]], "triangle")
    vals = _clutter_values(
        [3, 3, 2, 3, 2, 1, F, F, 3, T, T, F, F, F, F, None, [1, 1, 2], F, 2, 1, F, T, T, F, F]
    )
    exp = _clutter_expected("triangle", vals, stated=("delta_r", "delta_r_ones_row"))
    exp["fractional_vertex"] = (["1/2", "1/2", "1/2"], LP)
    out["triangle"] = Fixture("triangle", c, exp)

    c = make_clutter(4, [[1, 2], [2, 3], [3, 4], [1, 4]], "4cycle")
    vals = _clutter_values(
        [4, 4, 2, 3, 2, 2, T, T, 2, T, T, T, T, T, T, T, [1, 1, 1], T, 1, 1, T, T, T, T, T]
    )
    out["4cycle"] = Fixture("4cycle", c, _clutter_expected("4cycle", vals))

    c = make_clutter(3, [[1, 2, 3]], "single-edge")
    vals = _clutter_values(
        [3, 1, 3, 1, 1, 1, T, T, 3, T, T, T, F, T, T, T, [1], T, 1, 1, T, T, T, T, T]
    )
    out["single-edge"] = Fixture("single-edge", c, _clutter_expected("single-edge", vals))
    return out


FIXTURES = _build()
FIXTURE_NAMES = tuple(FIXTURES)


def observed_values(fx, workers=1):
    """Recompute every golden key of ``fx`` from the library."""
    from .clutter import minor
    from .covers import covering_number
    from .linalg import lattice_equal, lattice_index
    from .report import build_report

    rep = build_report(fx.subject, name=fx.name, workers=workers)
    got = {k: v["value"] for k, v in rep.to_dict()["properties"].items()}
    wit = {k: v["witness"] for k, v in rep.to_dict()["properties"].items()}
    if fx.kind == "clutter":
        got["covers"] = wit["cover_count"]
        got["mfmc"] = got["ideal"] and got["rees_normal"]
        got["perfect_matching_edges"] = wit["perfect_matching"]
        got["hilbert_witness"] = wit["hilbert_basis_columns"]
        got["fractional_vertex"] = wit["ideal"]
        if fx.subject.n >= 9:
            got["alpha0_without_x9"] = covering_number(minor(fx.subject, zeros=[9])[0])
    else:
        cols = fx.subject.columns()
        sub = [cols[i - 1] for i in EX_5_7_BAD_CELL]
        got["bad_cell_sublattice_equal"] = lattice_equal(sub, cols)
        got["bad_cell_index"] = lattice_index(sub, cols)
    return {k: got.get(k) for k in fx.expected}


def get_fixture(name):
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
