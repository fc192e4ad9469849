"""Exact two-phase simplex over the rationals (Bland's rule, dense tableau)."""
from fractions import Fraction


def _pivot(T, basis, r, c):
    piv = T[r][c]
    T[r] = [x / piv for x in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [x - f * y for x, y in zip(T[i], T[r])]
    basis[r] = c


def _run(T, basis, allowed):
    """Maximise the objective stored in the last row (as reduced costs)."""
    m = len(T) - 1
    while True:
        obj = T[-1]
        col = next((j for j in allowed if obj[j] < 0), None)
        if col is None:
            return "optimal"
        best = None
        for i in range(m):
            if T[i][col] > 0:
                ratio = T[i][-1] / T[i][col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], col)


def linprog_max(A, b, c):
    """Maximise ``c.x`` subject to ``A x = b``, ``x >= 0``.

    Returns ``(status, x, value)`` with status ``optimal``, ``infeasible`` or
    ``unbounded``; ``x`` and ``value`` are exact Fractions when optimal.
    """
    m = len(A)
    n = len(c)
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append((row, rhs))
    # phase 1 with artificials n..n+m-1
    T = []
    for i, (row, rhs) in enumerate(rows):
        T.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        obj = [o - t for o, t in zip(obj, T[i])]
    for k in range(m):
        obj[n + k] = Fraction(0)
    T.append(obj)
    basis = [n + i for i in range(m)]
    _run(T, basis, range(n + m))
    if T[-1][-1] != 0:
        return "infeasible", None, None
    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(basis):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1
    T = [row[:n] + [row[-1]] for row in T[:-1]]
    obj = [-Fraction(x) for x in c] + [Fraction(0)]
    for i, bv in enumerate(basis):
        if obj[bv]:
            f = obj[bv]
            obj = [o - f * t for o, t in zip(obj, T[i])]
    T.append(obj)
    status = _run(T, basis, range(n))
    if status == "unbounded":
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = T[i][-1]
    return "optimal", x, T[-1][-1]


def feasible_combination(gens, target):
    """Nonnegative rational ``lam`` with ``sum lam_i gens_i == target``, or None."""
    dim = len(target)
    if not gens:
        return [] if not any(target) else None
    A = [[g[k] for g in gens] for k in range(dim)]
    status, x, _ = linprog_max(A, list(target), [0] * len(gens))
    return x if status == "optimal" else None
