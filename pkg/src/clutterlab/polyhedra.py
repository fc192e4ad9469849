"""Exact polyhedral geometry.

Double description for cones and polyhedra, the set covering polyhedron and
idealness, Rees cone facets, and regular triangulations of point
configurations obtained from lower facets of a lifted cone.
"""
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _lp
from ._backend import kernels
from .clutter import incidence_matrix, uniformity, vertices_of
from .covers import minimal_vertex_covers
from .errors import DegenerateLift, DimensionMismatch, EmptyPolyhedron, InternalContradiction
from .linalg import determinant, lattice_equal, lattice_index, nullspace, primitive, rank
from .verdict import Verdict


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _independent_rows(rows):
    """Indices of a greedy maximal independent subset, scanning in order."""
    chosen = []
    basis = []
    for i, row in enumerate(rows):
        if any(row) and rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
    return chosen


def _solve(square, rhs):
    """Solve ``square @ y = rhs`` exactly (square is invertible)."""
    k = len(square)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(square)]
    for c in range(k):
        p = next(i for i in range(c, k) if a[i][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(k):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][k] for i in range(k)]


def cone_rays(A, dim):
    """Extreme rays and a lineality basis of the cone ``{x : a.x >= 0 for a in A}``.

    Returns ``(rays, lines)`` as sorted lists of primitive integer tuples.  The
    cone is reduced modulo its lineality space and rows are inserted in index
    order; adjacency of rays is decided combinatorially on zero sets.
    """
    A = [tuple(int(x) for x in a) for a in A]
    if any(len(a) != dim for a in A):
        raise DimensionMismatch("inequality of the wrong length")
    A = [a for a in A if any(a)]
    lines = sorted(nullspace(A, dim)) if A else [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)
    ]
    if not A:
        return [], lines
    W = [A[i] for i in _independent_rows(A)]
    r = len(W)
    Ap = [tuple(_dot(a, w) for w in W) for a in A]
    start = _independent_rows(Ap)
    B = [Ap[i] for i in start]
    rays = []
    for j in range(r):
        y = _solve(B, [int(k == j) for k in range(r)])
        rays.append(primitive(y))
    zero = []
    for y in rays:
        z = 0
        for i in start:
            if _dot(Ap[i], y) == 0:
                z |= 1 << i
        zero.append(z)
    done = set(start)
    for i in range(len(Ap)):
        if i in done:
            continue
        row = Ap[i]
        vals = [_dot(row, y) for y in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays, new_zero = [], []
        for p in pos:
            for n_ in neg:
                common = zero[p] & zero[n_]
                if bin(common).count("1") < r - 2:
                    continue
                if any(
                    t != p and t != n_ and zero[t] & common == common for t in range(len(rays))
                ):
                    continue
                y = [vals[p] * a - vals[n_] * b for a, b in zip(rays[n_], rays[p])]
                new_rays.append(primitive(y))
                new_zero.append(common | (1 << i))
        keep = [k for k, v in enumerate(vals) if v >= 0]
        rays = [rays[k] for k in keep] + new_rays
        zero = [zero[k] | ((1 << i) if vals[k] == 0 else 0) for k in keep] + new_zero
        done.add(i)
    out = set()
    for y in rays:
        out.add(primitive([sum(y[k] * W[k][c] for k in range(r)) for c in range(dim)]))
    return sorted(out), lines


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _normalize_ineq(a, b):
    v = primitive(list(a) + [b])
    return tuple(v[:-1]), v[-1]


def _normalize_eq(a, b):
    v = list(primitive(list(a) + [b]))
    lead = next((x for x in v if x), 0)
    if lead < 0:
        v = [-x for x in v]
    return tuple(v[:-1]), v[-1]


@dataclass(frozen=True)
class RationalPolyhedron:
    """``{x : a.x >= b (ineqs), a.x == b (eqs)}`` together with its V-representation."""

    dim: int
    ineqs: tuple
    eqs: tuple
    vertices: tuple
    rays: tuple
    lines: tuple

    def contains(self, x):
        return all(_dot(a, x) >= b for a, b in self.ineqs) and all(
            _dot(a, x) == b for a, b in self.eqs
        )

    def to_dict(self):
        doc = {
            "ineqs": [list(a) + [b] for a, b in self.ineqs],
            "vertices": [[_frac_str(x) for x in v] for v in self.vertices],
            "rays": [list(r) for r in self.rays],
        }
        if self.eqs:
            doc["eqs"] = [list(a) + [b] for a, b in self.eqs]
        if self.lines:
            doc["lines"] = [list(r) for r in self.lines]
        return doc

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _h_to_v(dim, ineqs, eqs):
    rows = [tuple(a) + (-b,) for a, b in ineqs]
    for a, b in eqs:
        rows.append(tuple(a) + (-b,))
        rows.append(tuple(-x for x in a) + (b,))
    rows.append((0,) * dim + (1,))
    rays, lines = cone_rays(rows, dim + 1)
    vertices, out_rays = set(), set()
    for y in rays:
        if y[-1] > 0:
            vertices.add(tuple(Fraction(x, y[-1]) for x in y[:-1]))
        else:
            out_rays.add(tuple(y[:-1]))
    if not vertices:
        raise EmptyPolyhedron("no feasible point")
    return sorted(vertices), sorted(out_rays), sorted(tuple(l[:-1]) for l in lines)


def _v_to_h(dim, vertices, rays, lines):
    gens = []
    for v in vertices:
        den = 1
        for x in v:
            den = math.lcm(den, Fraction(x).denominator)
        gens.append(tuple(int(Fraction(x) * den) for x in v) + (den,))
    for r in rays:
        gens.append(tuple(r) + (0,))
    for l in lines:
        gens.append(tuple(l) + (0,))
        gens.append(tuple(-x for x in l) + (0,))
    normals, eqn = cone_rays(gens, dim + 1)
    ineqs = set()
    for y in normals:
        if any(y[:-1]):
            ineqs.add(_normalize_ineq(y[:-1], -y[-1]))
    eqs = {_normalize_eq(y[:-1], -y[-1]) for y in eqn if any(y[:-1])}
    return sorted(ineqs), sorted(eqs)


def _read_fraction(x):
    return Fraction(x) if not isinstance(x, float) else Fraction(x).limit_denominator()


def dd_convert(rep):
    """Complete an H- or V-description to a :class:`RationalPolyhedron`.

    ``rep`` is a dict holding either ``ineqs`` (rows ``[a..., b]`` for
    ``a.x >= b``) with optional ``eqs``, or ``vertices`` with optional ``rays`` and
    ``lines``.  Rationals may be given as ``"p/q"`` strings.
    """
    if "ineqs" in rep or "eqs" in rep:
        rows = [list(r) for r in rep.get("ineqs", [])]
        erows = [list(r) for r in rep.get("eqs", [])]
        lengths = {len(r) for r in rows + erows}
        if len(lengths) != 1:
            raise DimensionMismatch("inequalities of different lengths")
        dim = lengths.pop() - 1
        ineqs = [_normalize_ineq(_ints(r[:-1]), int(r[-1])) for r in rows]
        eqs = [_normalize_eq(_ints(r[:-1]), int(r[-1])) for r in erows]
        vertices, rays, lines = _h_to_v(dim, ineqs, eqs)
    else:
        vertices = [tuple(_read_fraction(x) for x in v) for v in rep.get("vertices", [])]
        if not vertices:
            raise EmptyPolyhedron("a V-description needs at least one vertex")
        dim = len(vertices[0])
        rays = [tuple(int(x) for x in r) for r in rep.get("rays", [])]
        lines = [tuple(int(x) for x in r) for r in rep.get("lines", [])]
        if any(len(v) != dim for v in vertices + rays + lines):
            raise DimensionMismatch("points of different lengths")
    ineqs, eqs = _v_to_h(dim, vertices, rays, lines)
    vertices, rays, lines = _h_to_v(dim, ineqs, eqs)
    return RationalPolyhedron(dim, tuple(ineqs), tuple(eqs), tuple(vertices), tuple(rays), tuple(lines))


def _ints(xs):
    return [int(x) for x in xs]


def parse_polyhedron(text):
    return dd_convert(json.loads(text))


def cone_facets(generators, dim=None):
    """Facet normals (primitive, inner) and implicit equations of the cone spanned by ``generators``."""
    generators = [tuple(int(x) for x in g) for g in generators]
    if dim is None:
        dim = len(generators[0])
    normals, eqs = cone_rays(generators, dim)
    return normals, [_normalize_eq(e, 0)[0] for e in eqs]


def covering_polyhedron(c):
    """``Q(A) = {x >= 0, xA >= 1}`` with its vertices; the rays are ``e_1..e_n``."""
    ineqs = [[int(i == j) for j in range(c.n)] + [0] for i in range(c.n)]
    for e in c.edges:
        ineqs.append([1 if v in e else 0 for v in range(1, c.n + 1)] + [1])
    return dd_convert({"ineqs": ineqs})


def is_ideal(c):
    """Integrality of ``Q(A)``; the witness is the lexicographically smallest fractional vertex.

    Also checks that the integral vertices are exactly the characteristic
    vectors of the minimal vertex covers.
    """
    Q = covering_polyhedron(c)
    integral = set()
    fractional = []
    for v in Q.vertices:
        if all(x.denominator == 1 for x in v):
            integral.add(tuple(int(x) for x in v))
        else:
            fractional.append(v)
    covers = {
        tuple(1 if i in cover else 0 for i in range(1, c.n + 1))
        for cover in minimal_vertex_covers(c)
    }
    if integral != covers:
        raise InternalContradiction(
            f"integral vertices of Q(A) differ from the minimal cover vectors for {c!r}"
        )
    if fractional:
        return Verdict(False, min(fractional))
    return Verdict(True)


def fractional_cover_certificate(c):
    """For a uniform clutter, a 0/1 weight ``w`` proving non-idealness, or ``None``.

    ``(1/d)1`` lies in ``Q(A)``; if ``|w|/d`` is below ``min <w, u>`` over all cover
    vectors ``u`` then ``Q(A)`` has a fractional vertex.
    """
    d = uniformity(c)
    if d is None:
        return None
    w = kernels.cover_weight_certificate(c.n, list(c.masks), d)
    return list(vertices_of(w)) if w else None


def rees_generators(c):
    """``e_1..e_n`` followed by ``(v_j, 1)`` for every edge."""
    gens = [tuple(int(i == j) for j in range(c.n + 1)) for i in range(c.n)]
    for col in incidence_matrix(c).columns():
        gens.append(tuple(col) + (1,))
    return gens


def rees_cone_facets(c):
    """Primitive inner facet normals of the Rees cone, sorted."""
    normals, eqs = cone_facets(rees_generators(c), c.n + 1)
    if eqs:
        raise InternalContradiction("the Rees cone is always full dimensional")
    return normals


def intiffint_check(c):
    """Consistency of idealness with the shape of the Rees cone facets.

    Holds when ``is_ideal`` agrees with "every facet normal is some ``e_i`` or some
    ``(u_k, -1)``".  Containment, not equality, is tested because some ``e_i``
    halfspaces can be redundant.
    """
    n = c.n
    allowed = {tuple(int(i == j) for j in range(n + 1)) for i in range(n + 1)}
    for cover in minimal_vertex_covers(c):
        allowed.add(tuple(1 if i in cover else 0 for i in range(1, n + 1)) + (-1,))
    normals = rees_cone_facets(c)
    offending = [list(a) for a in normals if a not in allowed]
    ideal = bool(is_ideal(c))
    shaped = not offending
    return Verdict(
        ideal == shaped,
        {"ideal": ideal, "allowed_shape": shaped, "offending": offending[:1]},
    )


# ---------------------------------------------------------------- triangulations


@dataclass(frozen=True)
class Triangulation:
    """Simplicial cells (0-based index tuples) of a fan covering the cone over ``points``."""

    points: tuple
    cells: tuple
    weights: tuple
    refined: bool

    def to_dict(self, one_based=True):
        shift = 1 if one_based else 0
        return {
            "points": [list(p) for p in self.points],
            "weights": list(self.weights),
            "cells": [[i + shift for i in cell] for cell in self.cells],
            "refined": self.refined,
        }


def _coordinate_basis(vectors):
    """Coordinates whose projection is injective on ``span(vectors)``."""
    if not vectors:
        return []
    dim = len(vectors[0])
    cols = [[v[j] for v in vectors] for j in range(dim)]
    return _independent_rows(cols)


def placing_triangulation(points, order=None, indices=None):
    """Placing triangulation of the cone over ``points[i]`` for ``i`` in ``indices``.

    Points are placed in ``order`` (default: index order).  A point that raises
    the dimension is joined to every simplex; otherwise it is joined to every
    boundary face it lies strictly beyond, and skipped if it lies in the cone
    already placed.
    """
    if indices is None:
        indices = range(len(points))
    order = sorted(indices) if order is None else list(order)
    for i in order:
        if not any(points[i]):
            raise DimensionMismatch("zero vector in a point configuration")
    simplices = []
    used = []
    for p in order:
        if not simplices:
            simplices = [(p,)]
            used = [p]
            continue
        k = len(simplices[0])
        if rank([points[i] for i in used] + [points[p]]) > k:
            simplices = [s + (p,) for s in simplices]
            used.append(p)
            continue
        coords = _coordinate_basis([points[i] for i in used])

        def det(ids):
            return determinant([[points[i][c] for c in coords] for i in ids])

        count = {}
        for s in simplices:
            for drop in range(k):
                face = s[:drop] + s[drop + 1:]
                if face in count:
                    count[face] = None
                else:
                    count[face] = s[drop]
        new = []
        for face, opposite in count.items():
            if opposite is None:
                continue
            a = det(face + (p,))
            b = det(face + (opposite,))
            if a * b < 0:
                new.append(tuple(sorted(face + (p,))))
        if new:
            simplices = [tuple(sorted(s)) for s in simplices] + new
            used.append(p)
    return sorted(tuple(sorted(s)) for s in simplices)


def regular_triangulation(points, weights):
    """Regular triangulation of the cone over ``points`` induced by ``weights``.

    Cells are the supports of the lower facets of the cone over the lifted
    points ``(p_i, w_i)`` (inner normal with positive last coordinate).  A flat
    lift gives one coarse cell.  Non-simplicial cells are refined by placing in
    index order, and ``refined`` records that this happened.
    """
    points = tuple(tuple(int(x) for x in p) for p in points)
    weights = tuple(int(w) for w in weights)
    if len(points) != len(weights):
        raise DimensionMismatch("one weight per point is required")
    if not points:
        raise DimensionMismatch("empty point configuration")
    coords = _coordinate_basis(list(points))
    r = len(coords)
    proj = [tuple(p[c] for c in coords) for p in points]
    lifted = [pp + (w,) for pp, w in zip(proj, weights)]
    if rank(lifted) == r:
        coarse = [tuple(range(len(points)))]
    else:
        normals, eqs = cone_facets(lifted, r + 1)
        if eqs:
            raise DegenerateLift("lifted cone is not full dimensional")
        coarse = []
        for y in normals:
            if y[-1] > 0:
                coarse.append(tuple(i for i, g in enumerate(lifted) if _dot(y, g) == 0))
    cells = set()
    refined = False
    for cell in coarse:
        if len(cell) == r and rank([proj[i] for i in cell]) == r:
            cells.add(tuple(sorted(cell)))
            continue
        refined = True
        for s in placing_triangulation(proj, indices=cell):
            if len(s) != r:
                raise DegenerateLift(f"placing produced a lower-dimensional cell {s}")
            cells.add(s)
    return Triangulation(points, tuple(sorted(cells)), weights, refined)


def cell_indices(t):
    """Index ``[Z A : Z A_i]`` of every cell lattice (``math.inf`` if rank deficient)."""
    full = [list(p) for p in t.points]
    return [lattice_index([t.points[i] for i in cell], full) for cell in t.cells]


def is_unimodular_triangulation(t):
    """Every cell generates the lattice of the whole configuration; witness = first bad cell."""
    full = [list(p) for p in t.points]
    for cell in t.cells:
        sub = [t.points[i] for i in cell]
        if not lattice_equal(sub, full):
            return Verdict(False, {"cell": list(cell), "index": lattice_index(sub, full)})
    return Verdict(True)


def check_triangulation(t, samples=1000, rng=None):
    """Validate the fan structure of ``t``; returns the first problem found or ``None``.

    Checks independence of every cell, covering of random points of the cone,
    and that any two cells meet in their common face (exact LP).
    """
    import random

    rng = rng or random.Random(0)
    r = rank([list(p) for p in t.points])
    for cell in t.cells:
        if len(cell) != r or rank([t.points[i] for i in cell]) != r:
            return f"cell {cell} is not a full-dimensional simplex"
    coords = _coordinate_basis(list(t.points))
    proj = [[p[c] for c in coords] for p in t.points]
    mats = [[[proj[i][k] for i in cell] for k in range(r)] for cell in t.cells]
    for _ in range(samples):
        lam = [Fraction(rng.randint(0, 6), rng.randint(1, 6)) for _ in t.points]
        x = [sum(l * p[k] for l, p in zip(lam, proj)) for k in range(r)]
        if not any(
            all(y >= 0 for y in _solve(m, x)) for m in mats
        ):
            return f"point {x} of the cone lies in no cell"
    for a, b in combinations(t.cells, 2):
        outside = [i for i in a if i not in b]
        gens = [proj[i] for i in a] + [[-x for x in proj[j]] for j in b]
        A = [[g[k] for g in gens] for k in range(r)]
        A.append([1 if (k < len(a) and a[k] in outside) else 0 for k in range(len(gens))])
        status, _, _ = _lp.linprog_max(A, [0] * r + [1], [0] * len(gens))
        if status == "optimal":
            return f"cells {a} and {b} overlap beyond their common face"
    return None
