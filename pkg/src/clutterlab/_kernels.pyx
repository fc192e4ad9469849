# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled bitmask kernels.

Same API and results as ``_pykernels``; vertex sets are masks over at most 63
vertices (wider inputs are delegated to the Python implementation).
"""
from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set
from libcpp.algorithm cimport sort

from . import _pykernels as _py

BACKEND = "cython"

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

DEF MAXV = 63


cdef inline uint64_t mix(uint64_t x) nogil:
    x ^= x >> 33
    x *= 0xff51afd7ed558ccdULL
    x ^= x >> 33
    x *= 0xc4ceb9fe1a85ec53ULL
    x ^= x >> 33
    return x


cdef bint _fits(edges):
    for e in edges:
        if e < 0 or e >> MAXV:
            return False
    return True


cdef vector[uint64_t] _load(edges):
    cdef vector[uint64_t] out
    for e in edges:
        out.push_back(<uint64_t>e)
    return out


# ---------------------------------------------------------------- transversals

cdef vector[uint64_t] _minimal_transversals(vector[uint64_t]& edges):
    cdef vector[uint64_t] current, grown, kept
    cdef uint64_t t, e, b, s
    cdef size_t i, j, k
    cdef bint dominated
    current.push_back(0)
    for k in range(edges.size()):
        e = edges[k]
        grown.clear()
        for i in range(current.size()):
            t = current[i]
            if t & e:
                grown.push_back(t)
            else:
                b = e
                while b:
                    grown.push_back(t | (b & (~b + 1)))
                    b &= b - 1
        # sort by (popcount, value) and keep inclusion-minimal sets
        sort(grown.begin(), grown.end())
        kept.clear()
        for i in range(grown.size()):
            if i > 0 and grown[i] == grown[i - 1]:
                continue
            kept.push_back(grown[i])
        grown.swap(kept)
        kept.clear()
        for s in range(0, 65):
            for i in range(grown.size()):
                t = grown[i]
                if <uint64_t>__builtin_popcountll(t) != s:
                    continue
                dominated = False
                for j in range(kept.size()):
                    if kept[j] & t == kept[j]:
                        dominated = True
                        break
                if not dominated:
                    kept.push_back(t)
        current.swap(kept)
    sort(current.begin(), current.end())
    return current


def minimal_transversals(edges):
    """All inclusion-minimal vertex sets meeting every edge, ascending as ints."""
    if not _fits(edges):
        return _py.minimal_transversals(edges)
    cdef vector[uint64_t] ev = _load(edges)
    cdef vector[uint64_t] res = _minimal_transversals(ev)
    return [res[i] for i in range(res.size())]


cdef bint _has_transversal(uint64_t* edges, int q, uint64_t hit, int budget):
    cdef int i
    cdef uint64_t e, b
    for i in range(q):
        if not edges[i] & hit:
            break
    else:
        return True
    if budget == 0:
        return False
    e = edges[i]
    b = e
    while b:
        if _has_transversal(edges, q, hit | (b & (~b + 1)), budget - 1):
            return True
        b &= b - 1
    return False


def has_transversal_of_size(edges, int k):
    """True iff some set of at most ``k`` vertices meets every edge."""
    if not _fits(edges):
        return _py.has_transversal_of_size(edges, k)
    cdef vector[uint64_t] ev = _load(edges)
    if ev.size() == 0:
        return True
    return _has_transversal(ev.data(), <int>ev.size(), 0, k)


# ---------------------------------------------------------------- matchings

cdef struct MatchState:
    int q
    int depth
    int best_len
    uint64_t* edges
    int* chosen
    int* best


cdef void _match_dfs(MatchState* st, int i, uint64_t used):
    cdef int k
    if st.depth > st.best_len:
        st.best_len = st.depth
        for k in range(st.depth):
            st.best[k] = st.chosen[k]
    if i == st.q or st.depth + (st.q - i) <= st.best_len:
        return
    if not st.edges[i] & used:
        st.chosen[st.depth] = i
        st.depth += 1
        _match_dfs(st, i + 1, used | st.edges[i])
        st.depth -= 1
    _match_dfs(st, i + 1, used)


cdef int _matching(uint64_t* edges, int q, int* chosen, int* best):
    cdef MatchState st
    st.q = q
    st.depth = 0
    st.best_len = 0
    st.edges = edges
    st.chosen = chosen
    st.best = best
    _match_dfs(&st, 0, 0)
    return st.best_len


def max_matching(edges):
    """Indices of the lexicographically smallest maximum set of disjoint edges."""
    if not _fits(edges):
        return _py.max_matching(edges)
    cdef vector[uint64_t] ev = _load(edges)
    cdef int q = <int>ev.size()
    cdef vector[int] chosen, best
    chosen.resize(q + 1)
    best.resize(q + 1)
    cdef int size = _matching(ev.data(), q, chosen.data(), best.data())
    return [best[k] for k in range(size)]


cdef bint _konig(uint64_t* edges, int q, int* scratch_a, int* scratch_b):
    cdef int nu = _matching(edges, q, scratch_a, scratch_b)
    return _has_transversal(edges, q, 0, nu)


cdef int64_t _packing(int n, vector[uint64_t]& edges, uint64_t* zeros_out, uint64_t* ones_out):
    # returns 1 when a non-König minor was found, 0 otherwise
    cdef int q = <int>edges.size()
    cdef vector[int] digits
    cdef vector[uint64_t] minor
    cdef vector[int] sa, sb
    cdef int v, k
    cdef uint64_t zeros, ones, e, f
    cdef bint degenerate
    digits.resize(n)
    minor.resize(q + 1)
    sa.resize(q + 1)
    sb.resize(q + 1)
    while True:
        zeros = 0
        ones = 0
        for v in range(n):
            if digits[v] == 1:
                zeros |= (<uint64_t>1) << v
            elif digits[v] == 2:
                ones |= (<uint64_t>1) << v
        k = 0
        degenerate = False
        for v in range(q):
            e = edges[v]
            if e & zeros:
                continue
            f = e & ~ones
            if not f:
                degenerate = True
                break
            minor[k] = f
            k += 1
        if not degenerate and k > 0:
            if not _konig(minor.data(), k, sa.data(), sb.data()):
                zeros_out[0] = zeros
                ones_out[0] = ones
                return 1
        # advance the base-3 odometer, last vertex least significant
        v = n - 1
        while v >= 0:
            digits[v] += 1
            if digits[v] < 3:
                break
            digits[v] = 0
            v -= 1
        if v < 0:
            return 0


def packing_witness(int n, edges):
    """First ``(zeros, ones)`` assignment whose minor fails König, or ``None``."""
    if n > MAXV or not _fits(edges):
        return _py.packing_witness(n, edges)
    cdef vector[uint64_t] ev = _load(edges)
    cdef uint64_t zeros = 0, ones = 0
    if _packing(n, ev, &zeros, &ones):
        return zeros, ones
    return None


cdef uint64_t _cover_cert(int n, vector[uint64_t]& edges, int d):
    cdef vector[uint64_t] covers = _minimal_transversals(edges)
    cdef uint64_t w, full = ((<uint64_t>1) << n) - 1
    cdef int best, f
    cdef size_t i
    for w in range(1, full + 1):
        best = 1 << 30
        for i in range(covers.size()):
            f = __builtin_popcountll(covers[i] & w)
            if f < best:
                best = f
        if __builtin_popcountll(w) < d * best:
            return w
    return 0


def cover_weight_certificate(int n, edges, int d):
    """A 0/1 weight proving a ``d``-uniform clutter is not ideal, or 0."""
    if n > 40 or not _fits(edges):
        return _py.cover_weight_certificate(n, edges, d)
    cdef vector[uint64_t] ev = _load(edges)
    return _cover_cert(n, ev, d)


# ---------------------------------------------------------------- canonical forms

cdef struct Canon:
    int n
    int q
    uint64_t* edges
    int verts[64]
    int cellstart[64]
    int cellend[64]
    int pi[64]
    int used[64]


cdef void _refine(Canon* c):
    cdef uint64_t s[64]
    cdef uint64_t t[64]
    cdef uint64_t es, b
    cdef int v, i, r, j, tmp
    for v in range(c.n):
        s[v] = 1
    for r in range(3):
        for v in range(c.n):
            t[v] = s[v] * 0x9E3779B97F4A7C15ULL
        for i in range(c.q):
            es = 0
            b = c.edges[i]
            while b:
                v = __builtin_ctzll(b)
                b &= b - 1
                es += mix(s[v] + 12345)
            es = mix(es)
            b = c.edges[i]
            while b:
                v = __builtin_ctzll(b)
                b &= b - 1
                t[v] += es
        for v in range(c.n):
            s[v] = mix(t[v])
    for v in range(c.n):
        c.verts[v] = v
    for i in range(1, c.n):
        j = i
        while j > 0 and s[c.verts[j - 1]] > s[c.verts[j]]:
            tmp = c.verts[j]
            c.verts[j] = c.verts[j - 1]
            c.verts[j - 1] = tmp
            j -= 1
    i = 0
    while i < c.n:
        j = i
        while j < c.n and s[c.verts[j]] == s[c.verts[i]]:
            j += 1
        for r in range(i, j):
            c.cellstart[r] = i
            c.cellend[r] = j
        i = j
    for v in range(c.n):
        c.used[v] = 0


cdef inline uint64_t _relabel(Canon* c, uint64_t m):
    cdef uint64_t out = 0
    cdef int v
    while m:
        v = __builtin_ctzll(m)
        m &= m - 1
        out |= (<uint64_t>1) << c.pi[v]
    return out


cdef void _search_tuple(Canon* c, int pos, vector[uint64_t]& best, vector[uint64_t]& img, bint* have):
    cdef int k, v, i
    if pos == c.n:
        for i in range(c.q):
            img[i] = _relabel(c, c.edges[i])
        sort(img.begin(), img.end())
        if not have[0] or img < best:
            best = img
            have[0] = True
        return
    for k in range(c.cellstart[pos], c.cellend[pos]):
        v = c.verts[k]
        if c.used[v]:
            continue
        c.used[v] = 1
        c.pi[v] = pos
        _search_tuple(c, pos + 1, best, img, have)
        c.used[v] = 0


def canonical_edges(int n, edges):
    """Canonical sorted tuple of relabelled edge masks (equal iff isomorphic)."""
    if n > 64 or not _fits(edges):
        return _py.canonical_edges(n, edges)
    cdef vector[uint64_t] ev = _load(edges)
    cdef Canon c
    c.n = n
    c.q = <int>ev.size()
    c.edges = ev.data()
    _refine(&c)
    cdef vector[uint64_t] best, img
    img.resize(c.q)
    cdef bint have = False
    _search_tuple(&c, 0, best, img, &have)
    return tuple(best[i] for i in range(best.size()))


cdef struct Enum:
    int ncand
    uint64_t cand[64]
    int* candidx
    uint64_t best


cdef void _search_mask(Canon* c, Enum* en, int pos):
    cdef int k, v, i
    cdef uint64_t img
    if pos == c.n:
        img = 0
        for i in range(c.q):
            img |= (<uint64_t>1) << en.candidx[_relabel(c, c.edges[i])]
        if img < en.best:
            en.best = img
        return
    for k in range(c.cellstart[pos], c.cellend[pos]):
        v = c.verts[k]
        if c.used[v]:
            continue
        c.used[v] = 1
        c.pi[v] = pos
        _search_mask(c, en, pos + 1)
        c.used[v] = 0


cdef uint64_t _canon_mask(int n, Enum* en, uint64_t m):
    cdef uint64_t edges[64]
    cdef int q = 0, i
    while m:
        i = __builtin_ctzll(m)
        m &= m - 1
        edges[q] = en.cand[i]
        q += 1
    cdef Canon c
    c.n = n
    c.q = q
    c.edges = edges
    _refine(&c)
    en.best = 0xFFFFFFFFFFFFFFFFULL
    _search_mask(&c, en, 0)
    return en.best


def enumerate_classes(int n, cands):
    """Canonical masks (over ``cands``) of every isomorphism class of antichains."""
    if len(cands) > 64:
        raise ValueError("at most 64 candidate edges")
    if n > 20:
        return _py.enumerate_classes(n, cands)
    cdef Enum en
    cdef vector[int] idx
    cdef uint64_t comparable[64]
    cdef int i, j
    cdef uint64_t a, b
    idx.resize((<size_t>1) << n, -1)
    en.ncand = len(cands)
    for i in range(en.ncand):
        en.cand[i] = <uint64_t>cands[i]
        idx[en.cand[i]] = i
    en.candidx = idx.data()
    for i in range(en.ncand):
        comparable[i] = 0
        a = en.cand[i]
        for j in range(en.ncand):
            b = en.cand[j]
            if i != j and ((a & b) == a or (a & b) == b):
                comparable[i] |= (<uint64_t>1) << j
    cdef vector[uint64_t] level, found
    cdef unordered_set[uint64_t] nxt
    cdef uint64_t m
    cdef size_t k
    level.push_back(0)
    found.push_back(0)
    while level.size():
        nxt.clear()
        for k in range(level.size()):
            m = level[k]
            for i in range(en.ncand):
                if (m >> i) & 1 or m & comparable[i]:
                    continue
                nxt.insert(_canon_mask(n, &en, m | ((<uint64_t>1) << i)))
        level.clear()
        for m in nxt:
            level.push_back(m)
        sort(level.begin(), level.end())
        for k in range(level.size()):
            found.push_back(level[k])
    sort(found.begin(), found.end())
    return [found[k] for k in range(found.size())]


def screen_uniform(masks, cands, int n, int d):
    """Per-class flags (covers_all, frac_cert, packing) for candidate-mask families."""
    cdef uint64_t cand[64]
    cdef int i
    for i in range(len(cands)):
        cand[i] = <uint64_t>cands[i]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t m, union, zeros, ones
    cdef vector[uint64_t] ev
    covers_all, frac_cert, packing = [], [], []
    for pm in masks:
        m = <uint64_t>int(pm)
        ev.clear()
        union = 0
        while m:
            i = __builtin_ctzll(m)
            m &= m - 1
            ev.push_back(cand[i])
            union |= cand[i]
        if union != full:
            covers_all.append(0)
            frac_cert.append(0)
            packing.append(2)
            continue
        covers_all.append(1)
        frac_cert.append(1 if _cover_cert(n, ev, d) else 0)
        packing.append(0 if _packing(n, ev, &zeros, &ones) else 1)
    return covers_all, frac_cert, packing
