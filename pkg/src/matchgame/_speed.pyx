# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled search kernels for the three-vertex path pattern.

A line-for-line twin of ``_kernel_py``: same class names, same traversal
order, same state/hit counters.  Only the containers differ (C arrays and
C++ hash maps instead of tuples and dicts), so both backends must report
identical values and statistics on every input.
"""

from cython.operator cimport dereference as deref
from libcpp.unordered_map cimport unordered_map

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"


cdef inline u64 _lowbit(u64 m) nogil:
    return m & (0 - m)


cdef class P3Solver:
    """Game-value recursion for one graph, pattern variant, and role split.

    ``value(avail)`` is the number of moves under optimal play starting from
    the availability mask ``avail``.  Stateless between calls apart from the
    memo table, so principal-variation replay can probe arbitrary masks.
    """

    cdef u64 adj[64]
    cdef int n
    cdef int variant
    cdef bint max_initiates
    cdef unordered_map[u64, int] memo
    cdef public unsigned long long states
    cdef public unsigned long long hits

    def __init__(self, adj, variant, max_initiates):
        rows = tuple(adj)
        if len(rows) > 64:
            raise ValueError("compiled kernels support at most 64 vertices")
        self.n = len(rows)
        cdef int i
        for i in range(self.n):
            self.adj[i] = rows[i]
        self.variant = variant
        self.max_initiates = bool(max_initiates)
        self.states = 0
        self.hits = 0

    def value(self, avail):
        return self._value(<u64> avail)

    cdef int _value(self, u64 avail):
        cdef unordered_map[u64, int].iterator it = self.memo.find(avail)
        if it != self.memo.end():
            self.hits += 1
            return deref(it).second
        self.states += 1
        cdef int variant = self.variant
        cdef bint is_max = self.max_initiates
        cdef int best = -1
        cdef int inner, child, v, b
        cdef u64 m = avail
        cdef u64 vbit, xm, xbit, ym, ybit, bm, bbit, cm, cbit
        while m:
            vbit = _lowbit(m)
            m ^= vbit
            v = __builtin_ctzll(vbit)
            inner = -1
            if variant != 1:  # star images: v plus two available neighbors
                xm = self.adj[v] & avail
                while xm:
                    xbit = _lowbit(xm)
                    xm ^= xbit
                    ym = xm
                    while ym:
                        ybit = _lowbit(ym)
                        ym ^= ybit
                        child = 1 + self._value(avail & ~(vbit | xbit | ybit))
                        if inner < 0:
                            inner = child
                        elif is_max:
                            if child < inner:
                                inner = child
                        elif child > inner:
                            inner = child
            if variant != 0:  # stripe images: path v-b-c walked from the end v
                bm = self.adj[v] & avail
                while bm:
                    bbit = _lowbit(bm)
                    bm ^= bbit
                    b = __builtin_ctzll(bbit)
                    cm = self.adj[b] & avail & ~vbit
                    while cm:
                        cbit = _lowbit(cm)
                        cm ^= cbit
                        child = 1 + self._value(avail & ~(vbit | bbit | cbit))
                        if inner < 0:
                            inner = child
                        elif is_max:
                            if child < inner:
                                inner = child
                        elif child > inner:
                            inner = child
            if inner >= 0:
                if best < 0:
                    best = inner
                elif is_max:
                    if inner > best:
                        best = inner
                elif inner < best:
                    best = inner
        if best < 0:
            best = 0
        self.memo[avail] = best
        return best


cdef class P3Packing:
    """Packing numbers for the three-vertex path, one graph per instance.

    ``mu``: maximum number of disjoint copies.  ``min_maximal``: minimum size
    of a packing that cannot be extended.  ``has_k3_partition``: whether the
    mask splits into vertex-disjoint triangles.
    """

    cdef u64 adj[64]
    cdef int n
    cdef unordered_map[u64, int] memo_mu
    cdef unordered_map[u64, int] memo_mm
    cdef unordered_map[u64, int] memo_k3

    def __init__(self, adj):
        rows = tuple(adj)
        if len(rows) > 64:
            raise ValueError("compiled kernels support at most 64 vertices")
        self.n = len(rows)
        cdef int i
        for i in range(self.n):
            self.adj[i] = rows[i]

    def copies(self, avail):
        """All copy masks inside ``avail``, each listed once via its center."""
        cdef u64 am = <u64> avail
        cdef u64 bm = am, bbit, xm, xbit, ym, ybit
        cdef int b
        out = []
        while bm:
            bbit = _lowbit(bm)
            bm ^= bbit
            b = __builtin_ctzll(bbit)
            xm = self.adj[b] & am
            while xm:
                xbit = _lowbit(xm)
                xm ^= xbit
                ym = xm
                while ym:
                    ybit = _lowbit(ym)
                    ym ^= ybit
                    out.append(bbit | xbit | ybit)
        return out

    def mu(self, avail):
        return self._mu(<u64> avail)

    cdef int _mu(self, u64 avail):
        cdef unordered_map[u64, int].iterator it = self.memo_mu.find(avail)
        if it != self.memo_mu.end():
            return deref(it).second
        cdef int best, cand, v, b
        cdef u64 vbit, nb, xm, xbit, ym, ybit, bm, bbit, cm, cbit
        if avail == 0:
            best = 0
        else:
            vbit = _lowbit(avail)
            v = __builtin_ctzll(vbit)
            # The lowest vertex is either skipped or covered by some copy.
            best = self._mu(avail ^ vbit)
            nb = self.adj[v] & avail
            xm = nb  # v as the center
            while xm:
                xbit = _lowbit(xm)
                xm ^= xbit
                ym = xm
                while ym:
                    ybit = _lowbit(ym)
                    ym ^= ybit
                    cand = 1 + self._mu(avail & ~(vbit | xbit | ybit))
                    if cand > best:
                        best = cand
            bm = nb  # v as an end of the path v-b-c
            while bm:
                bbit = _lowbit(bm)
                bm ^= bbit
                b = __builtin_ctzll(bbit)
                cm = self.adj[b] & avail & ~vbit
                while cm:
                    cbit = _lowbit(cm)
                    cm ^= cbit
                    cand = 1 + self._mu(avail & ~(vbit | bbit | cbit))
                    if cand > best:
                        best = cand
        self.memo_mu[avail] = best
        return best

    def min_maximal(self, avail):
        return self._min_maximal(<u64> avail)

    cdef int _min_maximal(self, u64 avail):
        cdef unordered_map[u64, int].iterator it = self.memo_mm.find(avail)
        if it != self.memo_mm.end():
            return deref(it).second
        # Every maximal packing starts with one of the copies, so the
        # minimum ranges over all of them; terminal masks cost nothing.
        cdef int best = -1
        cdef int cand, b
        cdef u64 bm = avail, bbit, xm, xbit, ym, ybit, img
        while bm:
            bbit = _lowbit(bm)
            bm ^= bbit
            b = __builtin_ctzll(bbit)
            xm = self.adj[b] & avail
            while xm:
                xbit = _lowbit(xm)
                xm ^= xbit
                ym = xm
                while ym:
                    ybit = _lowbit(ym)
                    ym ^= ybit
                    img = bbit | xbit | ybit
                    cand = 1 + self._min_maximal(avail & ~img)
                    if best < 0 or cand < best:
                        best = cand
        if best < 0:
            best = 0
        self.memo_mm[avail] = best
        return best

    def has_k3_partition(self, avail):
        return bool(self._has_k3(<u64> avail))

    cdef int _has_k3(self, u64 avail):
        if avail == 0:
            return 1
        cdef unordered_map[u64, int].iterator it = self.memo_k3.find(avail)
        if it != self.memo_k3.end():
            return deref(it).second
        cdef u64 vbit = _lowbit(avail)
        cdef int v = __builtin_ctzll(vbit)
        cdef int ok = 0
        cdef int x
        cdef u64 nb = self.adj[v] & avail
        cdef u64 xm = nb, xbit, ym, ybit
        while xm and not ok:
            xbit = _lowbit(xm)
            xm ^= xbit
            x = __builtin_ctzll(xbit)
            ym = xm & self.adj[x]
            while ym and not ok:
                ybit = _lowbit(ym)
                ym ^= ybit
                ok = self._has_k3(avail & ~(vbit | xbit | ybit))
        self.memo_k3[avail] = ok
        return ok
