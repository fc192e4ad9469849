"""Pure-Python bitmask kernels.

Reference implementation of the hot combinatorial loops; ``_kernels.pyx`` mirrors
every function here with identical results.  Vertex sets are Python ints with bit
``i`` standing for vertex ``i + 1``.
"""
from itertools import product

BACKEND = "python"

_M64 = 0xFFFFFFFFFFFFFFFF


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


def minimal_transversals(edges):
    """All inclusion-minimal vertex sets meeting every edge, ascending as ints.

    Berge's incremental construction: extend the current transversals edge by
    edge and drop non-minimal sets after each step.
    """
    current = [0]
    for e in edges:
        grown = set()
        for t in current:
            if t & e:
                grown.add(t)
            else:
                for v in _bits(e):
                    grown.add(t | (1 << v))
        ordered = sorted(grown, key=lambda t: (_popcount(t), t))
        kept = []
        for t in ordered:
            if not any(s & t == s for s in kept):
                kept.append(t)
        current = kept
    return sorted(current)


def has_transversal_of_size(edges, k):
    """True iff some set of at most ``k`` vertices meets every edge."""

    def search(hit, budget):
        for e in edges:
            if not e & hit:
                break
        else:
            return True
        if budget == 0:
            return False
        for v in _bits(e):
            if search(hit | (1 << v), budget - 1):
                return True
        return False

    return search(0, k)


def max_matching(edges):
    """Indices of the lexicographically smallest maximum set of disjoint edges."""
    q = len(edges)
    best = []
    chosen = []

    def dfs(i, used):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i == q or len(chosen) + (q - i) <= len(best):
            return
        if not edges[i] & used:
            chosen.append(i)
            dfs(i + 1, used | edges[i])
            chosen.pop()
        dfs(i + 1, used)

    dfs(0, 0)
    return best


def _matching_size(edges):
    return len(max_matching(edges))


def _konig(edges):
    return has_transversal_of_size(edges, _matching_size(edges))


def packing_witness(n, edges):
    """First ``(zeros, ones)`` assignment whose minor fails König, or ``None``.

    Assignments run in lexicographic order of the digit vector over vertices
    ``1..n`` (vertex 1 most significant) with free < zero < one.  Assignments
    whose minor is empty or contains the empty edge are skipped.
    """
    for digits in product(range(3), repeat=n):
        zeros = ones = 0
        for v, digit in enumerate(digits):
            if digit == 1:
                zeros |= 1 << v
            elif digit == 2:
                ones |= 1 << v
        minor = []
        degenerate = False
        for e in edges:
            if e & zeros:
                continue
            f = e & ~ones
            if not f:
                degenerate = True
                break
            minor.append(f)
        if degenerate or not minor:
            continue
        if not _konig(minor):
            return zeros, ones
    return None


def cover_weight_certificate(n, edges, d):
    """A 0/1 weight proving a ``d``-uniform clutter is not ideal, or 0.

    ``(1/d, ..., 1/d)`` lies in the set covering polyhedron, so a weight ``w``
    with ``|w|/d`` below the weight of every cover forces a fractional vertex.
    """
    covers = minimal_transversals(edges)
    for w in range(1, 1 << n):
        best = min(_popcount(t & w) for t in covers)
        if _popcount(w) < d * best:
            return w
    return 0


def _mix(x):
    x &= _M64
    x ^= x >> 33
    x = (x * 0xFF51AFD7ED558CCD) & _M64
    x ^= x >> 33
    x = (x * 0xC4CEB9FE1A85EC53) & _M64
    x ^= x >> 33
    return x


def _cells(n, edges):
    """Vertices ordered by a refined isomorphism invariant, plus cell bounds."""
    s = [1] * n
    for _ in range(3):
        t = [(x * 0x9E3779B97F4A7C15) & _M64 for x in s]
        for e in edges:
            es = 0
            for v in _bits(e):
                es += _mix(s[v] + 12345)
            es = _mix(es)
            for v in _bits(e):
                t[v] = (t[v] + es) & _M64
        s = [_mix(x) for x in t]
    verts = sorted(range(n), key=lambda v: (s[v], v))
    groups = []
    start = 0
    for i in range(1, n + 1):
        if i == n or s[verts[i]] != s[verts[start]]:
            groups.append(verts[start:i])
            start = i
    return groups


def _orderings(groups):
    """All vertex -> position maps that keep every cell in its block."""
    from itertools import permutations

    blocks = [list(permutations(g)) for g in groups]
    for choice in product(*blocks):
        perm = {}
        pos = 0
        for block in choice:
            for v in block:
                perm[v] = pos
                pos += 1
        yield perm


def _relabel(mask, perm):
    out = 0
    for v in _bits(mask):
        out |= 1 << perm[v]
    return out


def canonical_edges(n, edges):
    """Canonical sorted tuple of relabelled edge masks (equal iff isomorphic)."""
    groups = _cells(n, edges)
    best = None
    for perm in _orderings(groups):
        image = tuple(sorted(_relabel(e, perm) for e in edges))
        if best is None or image < best:
            best = image
    return best


def _canonical_mask(n, cands, index, mask):
    edges = [cands[i] for i in _bits(mask)]
    groups = _cells(n, edges)
    best = None
    for perm in _orderings(groups):
        image = 0
        for e in edges:
            image |= 1 << index[_relabel(e, perm)]
        if best is None or image < best:
            best = image
    return best


def enumerate_classes(n, cands):
    """Canonical masks (over ``cands``) of every isomorphism class of antichains.

    ``cands`` lists the admissible edges as vertex masks; a class is grown edge by
    edge and deduplicated level by level.  Returns the masks in ascending order,
    the empty family included.
    """
    if len(cands) > 64:
        raise ValueError("at most 64 candidate edges")
    index = {c: i for i, c in enumerate(cands)}
    comparable = []
    for i, a in enumerate(cands):
        m = 0
        for j, b in enumerate(cands):
            if i != j and (a & b == a or a & b == b):
                m |= 1 << j
        comparable.append(m)
    level = [0]
    found = [0]
    while level:
        nxt = set()
        for m in level:
            for i in range(len(cands)):
                if (m >> i) & 1 or m & comparable[i]:
                    continue
                nxt.add(_canonical_mask(n, cands, index, m | (1 << i)))
        level = sorted(nxt)
        found.extend(level)
    return sorted(found)


def screen_uniform(masks, cands, n, d):
    """Per-class flags for ``d``-uniform families given as candidate masks.

    Returns three lists: covers_all (no isolated vertex), frac_cert (a cover
    weight certificate of non-idealness exists) and packing (1/0, or 2 when the
    class has isolated vertices and was skipped).
    """
    full = (1 << n) - 1
    covers_all, frac_cert, packing = [], [], []
    for m in masks:
        edges = [cands[i] for i in _bits(int(m))]
        union = 0
        for e in edges:
            union |= e
        if union != full:
            covers_all.append(0)
            frac_cert.append(0)
            packing.append(2)
            continue
        covers_all.append(1)
        frac_cert.append(1 if cover_weight_certificate(n, edges, d) else 0)
        packing.append(1 if packing_witness(n, edges) is None else 0)
    return covers_all, frac_cert, packing
