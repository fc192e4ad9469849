"""Vertex covers, covering and matching numbers, packing and cover partitions."""
from dataclasses import dataclass

from . import config
from ._backend import kernels
from .clutter import make_clutter, mask_of, maximum_matching, minor_masks, uniformity, vertices_of
from .errors import BoundExceeded, EmptyMinor, HypothesisFailed, InternalContradiction
from .verdict import Verdict


@dataclass(frozen=True)
class CoverList:
    """All minimal vertex covers, each sorted, in lexicographic order."""

    covers: tuple
    source: str = ""

    def __len__(self):
        return len(self.covers)

    def __iter__(self):
        return iter(self.covers)

    def to_json(self):
        return [list(c) for c in self.covers]


@dataclass(frozen=True)
class CoverPartition:
    """Disjoint minimal covers ``X_1..X_d`` whose union is the vertex set."""

    parts: tuple

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def to_json(self):
        return [list(p) for p in self.parts]


def _cover_tuples(masks):
    return sorted(vertices_of(t) for t in kernels.minimal_transversals(list(masks)))


def minimal_vertex_covers(c):
    return CoverList(tuple(_cover_tuples(c.masks)), c.name)


def cover_number_of_masks(masks):
    """Smallest transversal size of an edge family given as masks (0 if empty)."""
    masks = list(masks)
    k = 0
    while not kernels.has_transversal_of_size(masks, k):
        k += 1
    return k


def covering_number(c):
    """alpha_0: the minimum size of a vertex cover."""
    return cover_number_of_masks(c.masks)


def matching_number(c):
    """beta_1: the maximum number of pairwise disjoint edges."""
    return len(maximum_matching(c))


def has_konig(c):
    return covering_number(c) == matching_number(c)


def has_packing_property(c, bound=None):
    """König for every proper minor; the witness is the first failing ``(zeros, ones)``.

    Assignments are scanned in lexicographic order of the digit vector over
    vertices ``1..n`` (free < zero < one), so the witness is deterministic.
    """
    bound = config.PACKING_MAX_N if bound is None else bound
    if c.n > bound:
        raise BoundExceeded("packing property vertices", c.n, bound)
    hit = kernels.packing_witness(c.n, list(c.masks))
    if hit is None:
        return Verdict(True)
    zeros, ones = hit
    return Verdict(False, {"zeros": list(vertices_of(zeros)), "ones": list(vertices_of(ones))})


def is_vertex_critical(c, allow_empty=False):
    """True iff deleting any single vertex lowers alpha_0.

    Deleting a vertex that lies in every edge leaves no edge at all; that raises
    :class:`EmptyMinor` unless ``allow_empty`` is set, in which case the deletion
    counts as having alpha_0 = 0.
    """
    alpha = covering_number(c)
    for v in range(1, c.n + 1):
        try:
            rest = minor_masks(c.masks, 1 << (v - 1), 0)
        except EmptyMinor:
            if not allow_empty:
                raise
            continue
        if cover_number_of_masks(rest) >= alpha:
            return False
    return True


def blocker(c):
    """The clutter of minimal vertex covers, on the same vertex set."""
    return make_clutter(c.n, _cover_tuples(c.masks), name=f"b({c.name})" if c.name else "")


def is_unmixed(c):
    return len({len(t) for t in _cover_tuples(c.masks)}) == 1


def _exact_hit_masks(masks):
    """Lexicographically smallest minimal cover meeting every edge exactly once, or None."""
    for t in _cover_tuples(masks):
        tm = mask_of(t)
        if all(bin(e & tm).count("1") == 1 for e in masks):
            return t
    return None


def exact_hit_cover(c):
    """A minimal cover meeting every edge in exactly one vertex, or ``None``."""
    return _exact_hit_masks(c.masks)


def validate_partition(c, parts):
    """Check the cover-partition invariants; returns the first violated one or None."""
    covered = set()
    cover_set = set(_cover_tuples(c.masks))
    for p in parts:
        if covered & set(p):
            return f"parts overlap at {sorted(covered & set(p))}"
        covered |= set(p)
        if tuple(p) not in cover_set:
            return f"{list(p)} is not a minimal vertex cover"
        pm = mask_of(p)
        for e, em in zip(c.edges, c.masks):
            if bin(em & pm).count("1") != 1:
                return f"edge {list(e)} meets {list(p)} in {bin(em & pm).count('1')} vertices"
    if covered != set(range(1, c.n + 1)):
        return "parts do not cover every vertex"
    return None


def cover_partition(c, assume_ideal=False):
    """Partition of the vertices of an ideal ``d``-uniform clutter into ``d`` minimal covers.

    Repeatedly takes the lexicographically smallest minimal cover meeting every
    edge once, contracts it and recurses on the ``(d-1)``-uniform minor.  The
    result is validated before it is returned.
    """
    d = uniformity(c)
    if d is None:
        raise HypothesisFailed("cover_partition needs a uniform clutter")
    if not assume_ideal:
        from .polyhedra import is_ideal

        if not is_ideal(c):
            raise HypothesisFailed("cover_partition needs an ideal clutter")
    masks = list(c.masks)
    parts = []
    for step in range(d):
        part = _exact_hit_masks(masks)
        if part is None:
            raise InternalContradiction(
                f"no minimal cover meets every edge once at depth {step} of {c!r}"
            )
        parts.append(part)
        if step < d - 1:
            masks = minor_masks(masks, 0, mask_of(part))
    problem = validate_partition(c, parts)
    if problem:
        raise InternalContradiction(f"cover partition of {c!r} invalid: {problem}")
    return CoverPartition(tuple(parts))


def is_2_partitionable(c):
    """A partition into ``d`` minimal covers of size 2 when one exists, else ``None``."""
    d = uniformity(c)
    if d is None or c.n != 2 * d:
        return None
    pairs = [t for t in _cover_tuples(c.masks) if len(t) == 2]
    chosen = []

    def search(free):
        if not free:
            return True
        v = min(free)
        for p in pairs:
            if p[0] == v and p[1] in free:
                chosen.append(p)
                if search(free - set(p)):
                    return True
                chosen.pop()
        return False

    if search(set(range(1, c.n + 1))):
        return CoverPartition(tuple(chosen))
    return None
