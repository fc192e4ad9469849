"""Clutters: validation, serialization, incidence matrices, minors and matchings.

Vertices are ``1..n`` in every public structure; internally edges are also kept as
bitmasks (bit ``i`` for vertex ``i + 1``) for the combinatorial kernels.
"""
import json
from dataclasses import dataclass, field
from functools import cached_property

from . import config
from ._backend import kernels
from .errors import (
    BoundExceeded,
    EmptyEdge,
    EmptyMinor,
    IsolatedVertex,
    NotAGraph,
    OutOfRange,
    ParseError,
    SpernerViolation,
)
from .matrix import IntMatrix


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask):
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Clutter:
    """A Sperner family of nonempty edges on vertices ``1..n`` covering every vertex.

    ``edges`` keeps parse order; each edge is a sorted tuple.  Construct through
    :func:`make_clutter` or :func:`parse_clutter` to get validation.
    """

    n: int
    edges: tuple
    name: str = field(default="", compare=False)

    @cached_property
    def masks(self):
        return tuple(mask_of(e) for e in self.edges)

    @property
    def q(self):
        return len(self.edges)

    def to_dict(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Clutter{label}(n={self.n}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges, given by their 0-based positions in the clutter."""

    edges: tuple
    perfect: bool

    def __len__(self):
        return len(self.edges)


def _check_int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def make_clutter(n, edges, name=""):
    """Validate and build a clutter; duplicate edges keep their first occurrence."""
    n = _check_int(n, "n")
    if n < 1:
        raise ParseError("n must be positive")
    seen = set()
    clean = []
    for e in edges:
        if not isinstance(e, (list, tuple)):
            raise ParseError(f"edge must be an array, got {e!r}")
        vs = tuple(sorted({_check_int(v, "vertex") for v in e}))
        if not vs:
            raise EmptyEdge("empty edge")
        for v in vs:
            if v < 1 or v > n:
                raise OutOfRange(v, n)
        if vs not in seen:
            seen.add(vs)
            clean.append(vs)
    masks = [mask_of(e) for e in clean]
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                raise SpernerViolation(clean[i], clean[j])
    union = 0
    for m in masks:
        union |= m
    for v in range(1, n + 1):
        if not union >> (v - 1) & 1:
            raise IsolatedVertex(v)
    return Clutter(n, tuple(clean), name)


def parse_clutter(text, name=""):
    """Parse the JSON document ``{"n": int, "edges": [[int, ...], ...]}``."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("clutter document needs fields 'n' and 'edges'")
    if not isinstance(doc["edges"], list):
        raise ParseError("'edges' must be an array")
    return make_clutter(doc["n"], doc["edges"], name=name or doc.get("name", ""))


def from_masks(n, masks, name=""):
    return make_clutter(n, [vertices_of(m) for m in masks], name=name)


def incidence_matrix(c):
    """The ``n x q`` 0/1 matrix whose column ``j`` is the characteristic vector of edge ``j``."""
    return IntMatrix.from_columns(
        [[1 if v in set(e) else 0 for v in range(1, c.n + 1)] for e in c.edges], rows=c.n
    )


def reduce_masks(masks):
    """Deduplicate (first occurrence wins) and keep only inclusion-minimal masks."""
    seen = []
    for m in masks:
        if m not in seen:
            seen.append(m)
    return [m for m in seen if not any(o != m and o & m == o for o in seen)]


def minor_masks(masks, zeros_mask, ones_mask):
    """Edge masks of a minor before re-indexing; raises EmptyMinor when improper."""
    out = []
    for e in masks:
        if e & zeros_mask:
            continue
        f = e & ~ones_mask
        if not f:
            raise EmptyMinor("an edge became empty: the minor ideal is the unit ideal")
        out.append(f)
    if not out:
        raise EmptyMinor("no edge survives: the minor ideal is zero")
    return reduce_masks(out)


def minor(c, zeros=(), ones=()):
    """Minor obtained by setting ``zeros`` to 0 and ``ones`` to 1.

    Returns ``(clutter, index_map)`` where ``index_map[i]`` is the original label
    of vertex ``i + 1`` of the minor.  The minor keeps exactly the vertices that
    still lie in an edge.
    """
    zeros, ones = set(zeros), set(ones)
    if zeros & ones:
        raise ValueError("zeros and ones must be disjoint")
    for v in zeros | ones:
        if v < 1 or v > c.n:
            raise OutOfRange(v, c.n)
    reduced = minor_masks(c.masks, mask_of(zeros), mask_of(ones))
    union = 0
    for m in reduced:
        union |= m
    index_map = vertices_of(union)
    relabel = {old: new for new, old in enumerate(index_map, start=1)}
    edges = [tuple(relabel[v] for v in vertices_of(m)) for m in reduced]
    return Clutter(len(index_map), tuple(edges)), index_map


def uniformity(c):
    """The common edge size ``d``, or ``None`` when edge sizes differ."""
    sizes = {len(e) for e in c.edges}
    return sizes.pop() if len(sizes) == 1 else None


def maximum_matching(c):
    """Maximum set of disjoint edges, lexicographically smallest by edge positions."""
    chosen = tuple(kernels.max_matching(list(c.masks)))
    covered = sum(len(c.edges[i]) for i in chosen)
    return Matching(chosen, covered == c.n)


def perfect_matching(c):
    """Disjoint edges whose union is every vertex, lexicographically smallest; or ``None``.

    For non-uniform clutters this can be smaller than a maximum matching.
    """
    full = (1 << c.n) - 1
    masks = c.masks

    def rec(covered, start, chosen):
        if covered == full:
            return chosen
        low = (~covered & full) & -(~covered & full)
        for i in range(start, len(masks)):
            m = masks[i]
            if m & low and not m & covered:
                found = rec(covered | m, 0, chosen + [i])
                if found is not None:
                    return found
        return None

    found = rec(0, 0, [])
    return None if found is None else Matching(tuple(sorted(found)), True)


def is_bipartite(c):
    """Proper 2-colourability of a 2-uniform clutter (a simple graph)."""
    if uniformity(c) != 2:
        raise NotAGraph("is_bipartite needs a 2-uniform clutter")
    adj = {v: [] for v in range(1, c.n + 1)}
    for a, b in c.edges:
        adj[a].append(b)
        adj[b].append(a)
    colour = {}
    for start in range(1, c.n + 1):
        if start in colour:
            continue
        colour[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def canonical_form(c, bound=None):
    """Byte string that is equal for two clutters iff they are isomorphic."""
    bound = config.CANONICAL_MAX_N if bound is None else bound
    if c.n > bound:
        raise BoundExceeded("canonical_form vertices", c.n, bound)
    masks = kernels.canonical_edges(c.n, list(c.masks))
    body = "|".join(",".join(str(v) for v in vertices_of(m)) for m in masks)
    return f"{c.n}:{body}".encode()
