"""Exact integer linear algebra: rank, Smith and Hermite normal forms, lattices."""
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import config
from .errors import BoundExceeded, DimensionMismatch, RankMismatch, ZeroMatrix
from .matrix import IntMatrix


def _rows(M):
    if isinstance(M, IntMatrix):
        return M.as_rows()
    return [list(r) for r in M]


def rank(M):
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = _rows(M)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == m:
            break
    return r


def determinant(M):
    """Determinant of a square integer matrix (Bareiss)."""
    a = _rows(M)
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with unimodular ``U``, ``V`` and invariant factors on the diagonal."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    factors: tuple

    @property
    def rank(self):
        return len(self.factors)

    def is_identity_block(self):
        return all(f == 1 for f in self.factors)

    def to_text(self):
        return "\n".join(
            f"{name}\n{mat.to_text()}" for name, mat in (("D", self.D), ("U", self.U), ("V", self.V))
        )


def _identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _snf(M):
    a = _rows(M)
    m = len(a)
    n = len(a[0]) if m else (M.cols if isinstance(M, IntMatrix) else 0)
    U, V, Vinv = _identity(m), _identity(n), _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vinv[src] = [x - q * y for x, y in zip(Vinv[src], Vinv[dst])]

    t = 0
    while t < min(m, n):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    factors = tuple(a[i][i] for i in range(t))
    return a, U, V, Vinv, factors, n


def smith_normal_form(M):
    """Smith normal form with transforms.

    The pivot is the entry of least absolute value in the remaining block (ties
    broken by row-major position); rows and columns are reduced by Euclidean
    steps until the pivot divides everything left.
    """
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    a, U, V, _, factors, n = _snf(M)
    return SnfResult(
        D=IntMatrix.from_rows(a, cols=n) if a else IntMatrix.zeros(0, n),
        U=IntMatrix.from_rows(U, cols=M.rows),
        V=IntMatrix.from_rows(V, cols=n),
        factors=factors,
    )


def invariant_factors(M):
    return _snf(M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M))[4]


def delta_r(M):
    """gcd of the nonzero ``r x r`` minors, ``r`` the rank: the product of invariant factors."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    if M.is_zero():
        raise ZeroMatrix("delta_r of a zero matrix")
    return math.prod(invariant_factors(M))


def hnf_rows(vectors, dim=None):
    """Row-style Hermite normal form basis of the lattice spanned by ``vectors``.

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``; two lattices are equal iff their bases coincide.
    """
    a = [list(v) for v in vectors if any(v)]
    if dim is None:
        dim = len(vectors[0]) if vectors else 0
    for v in a:
        if len(v) != dim:
            raise DimensionMismatch("vectors of different lengths")
    basis = []
    col = 0
    while a and col < dim:
        nz = [r for r in a if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in a if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            reduced = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col]:
                    reduced.append(r)
                elif any(r):
                    rest.append(r)
            nz = reduced
        p = nz[0]
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
        a = rest
        col += 1
    for i, p in enumerate(basis):
        c = next(k for k, x in enumerate(p) if x)
        for j in range(i):
            q = basis[j][c] // p[c]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], p)]
    return [tuple(r) for r in basis]


def hnf(M):
    """Row Hermite normal form of ``M`` (zero rows dropped) as an IntMatrix."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    rows = hnf_rows(M.as_rows(), M.cols)
    return IntMatrix.from_rows(rows, cols=M.cols) if rows else IntMatrix.zeros(0, M.cols)


@dataclass(frozen=True)
class Lattice:
    """Subgroup of ``Z^m`` spanned by ``generators`` (which may be dependent)."""

    generators: tuple
    dim: int

    @classmethod
    def of(cls, vectors, dim=None):
        vectors = tuple(tuple(int(x) for x in v) for v in vectors)
        if dim is None:
            if not vectors:
                raise DimensionMismatch("empty lattice needs an explicit dimension")
            dim = len(vectors[0])
        if any(len(v) != dim for v in vectors):
            raise DimensionMismatch("generators of different lengths")
        return cls(vectors, dim)

    def basis(self):
        return hnf_rows(list(self.generators), self.dim)

    @property
    def rank(self):
        return len(self.basis())


def _as_lattice(x):
    return x if isinstance(x, Lattice) else Lattice.of(x)


def _solve_echelon(basis, v):
    """Integer coefficients of ``v`` over an HNF basis, or None."""
    v = list(v)
    coeffs = []
    for p in basis:
        c = next(k for k, x in enumerate(p) if x)
        if v[c] % p[c]:
            return None
        q = v[c] // p[c]
        coeffs.append(q)
        v = [x - q * y for x, y in zip(v, p)]
    return coeffs if not any(v) else None


def lattice_contains(L, v):
    return _solve_echelon(_as_lattice(L).basis(), v) is not None


def lattice_equal(L1, L2):
    L1, L2 = _as_lattice(L1), _as_lattice(L2)
    if L1.dim != L2.dim:
        raise DimensionMismatch("lattices in different ambient dimensions")
    return L1.basis() == L2.basis()


def lattice_index(sub, sup):
    """Index ``[sup : sub]`` as ``Delta(sub) / Delta(sup)``.

    Returns an int when ``sub`` lies in ``sup`` with the same rank, a Fraction when
    the spans agree but ``sub`` is not contained in ``sup``, and ``math.inf`` when
    ``sub`` spans a proper subspace of ``span(sup)``.  Raises RankMismatch when
    ``sub`` is not inside ``span(sup)`` over the rationals.
    """
    sub, sup = _as_lattice(sub), _as_lattice(sup)
    if sub.dim != sup.dim:
        raise DimensionMismatch("lattices in different ambient dimensions")
    bs, bp = sub.basis(), sup.basis()
    if rank(bp + bs) != len(bp):
        raise RankMismatch("sublattice is not contained in the span of the superlattice")
    if len(bs) < len(bp):
        return math.inf
    if not bs:
        return 1
    ratio = Fraction(math.prod(invariant_factors(bs)), math.prod(invariant_factors(bp)))
    return ratio.numerator if ratio.denominator == 1 else ratio


def saturation_basis(vectors, dim=None):
    """Basis of ``span(vectors) ∩ Z^m``."""
    vectors = [list(v) for v in vectors]
    if dim is None:
        dim = len(vectors[0])
    if not any(any(v) for v in vectors):
        return []
    _, _, _, Vinv, factors, _ = _snf(IntMatrix.from_rows(vectors, cols=dim))
    return hnf_rows([tuple(Vinv[i]) for i in range(len(factors))], dim)


def is_t_unimodular(M, bound=None):
    """``t`` when every nonzero ``r x r`` minor has absolute value ``t``, else None."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    bound = config.T_UNIMODULAR_MAX_MINORS if bound is None else bound
    r = rank(M)
    if r == 0:
        return None
    count = math.comb(M.rows, r) * math.comb(M.cols, r)
    if count > bound:
        raise BoundExceeded("t-unimodularity minors", count, bound)
    rows = M.as_rows()
    t = None
    for rs in combinations(range(M.rows), r):
        for cs in combinations(range(M.cols), r):
            x = abs(determinant([[rows[i][j] for j in cs] for i in rs]))
            if x:
                if t is None:
                    t = x
                elif x != t:
                    return None
    return t


def torsion_trivial(vectors, dim=None):
    """True iff ``Z^m / Z{vectors}`` is torsion-free."""
    vectors = [list(v) for v in vectors]
    if dim is None:
        dim = len(vectors[0])
    if not any(any(v) for v in vectors):
        return True
    return all(f == 1 for f in invariant_factors(IntMatrix.from_rows(vectors, cols=dim)))


def nullspace(rows, dim):
    """Rational basis (as primitive integer vectors) of ``{x : row . x = 0 for all rows}``."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(dim):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][f]
        basis.append(primitive(v))
    return basis


def primitive(v):
    """Scale a rational vector to the primitive integer vector with the same direction."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)
