"""Pure-Python search kernels for the three-vertex path pattern.

These are the hot loops: exact game values and packing numbers computed by
memoized recursion over availability bitmasks.  A compiled twin with the same
class names lives in ``_speed.pyx``; ``kernels`` picks one at import time.
Both must walk states in the same order so values and counters coincide.

Variant codes: 0 = star (initiation at the center), 1 = stripe (initiation at
an end), 2 = unrooted (initiation anywhere on the path).
"""

from __future__ import annotations

BACKEND = "pure"


class P3Solver:
    """Game-value recursion for one graph, pattern variant, and role split.

    ``value(avail)`` is the number of moves under optimal play starting from
    the availability mask ``avail``.  Stateless between calls apart from the
    memo table, so principal-variation replay can probe arbitrary masks.
    """

    __slots__ = ("adj", "variant", "max_initiates", "memo", "states", "hits")

    def __init__(self, adj, variant: int, max_initiates: bool):
        self.adj = tuple(adj)
        self.variant = variant
        self.max_initiates = bool(max_initiates)
        self.memo: dict[int, int] = {}
        self.states = 0
        self.hits = 0

    def value(self, avail: int) -> int:
        got = self.memo.get(avail)
        if got is not None:
            self.hits += 1
            return got
        self.states += 1
        adj = self.adj
        variant = self.variant
        is_max = self.max_initiates
        best = -1
        m = avail
        while m:
            vbit = m & -m
            m ^= vbit
            v = vbit.bit_length() - 1
            inner = -1
            if variant != 1:  # star images: v plus two available neighbors
                xm = adj[v] & avail
                while xm:
                    xbit = xm & -xm
                    xm ^= xbit
                    ym = xm
                    while ym:
                        ybit = ym & -ym
                        ym ^= ybit
                        child = 1 + self.value(avail & ~(vbit | xbit | ybit))
                        if inner < 0:
                            inner = child
                        elif is_max:
                            if child < inner:
                                inner = child
                        elif child > inner:
                            inner = child
            if variant != 0:  # stripe images: path v-b-c walked from the end v
                bm = adj[v] & avail
                while bm:
                    bbit = bm & -bm
                    bm ^= bbit
                    b = bbit.bit_length() - 1
                    cm = adj[b] & avail & ~vbit
                    while cm:
                        cbit = cm & -cm
                        cm ^= cbit
                        child = 1 + self.value(avail & ~(vbit | bbit | cbit))
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


class P3Packing:
    """Packing numbers for the three-vertex path, one graph per instance.

    ``mu``: maximum number of disjoint copies.  ``min_maximal``: minimum size
    of a packing that cannot be extended.  ``has_k3_partition``: whether the
    mask splits into vertex-disjoint triangles.
    """

    __slots__ = ("adj", "memo_mu", "memo_mm", "memo_k3")

    def __init__(self, adj):
        self.adj = tuple(adj)
        self.memo_mu: dict[int, int] = {}
        self.memo_mm: dict[int, int] = {}
        self.memo_k3: dict[int, bool] = {}

    def copies(self, avail: int) -> list[int]:
        """All copy masks inside ``avail``, each listed once via its center."""
        adj = self.adj
        out = []
        bm = avail
        while bm:
            bbit = bm & -bm
            bm ^= bbit
            b = bbit.bit_length() - 1
            xm = adj[b] & avail
            while xm:
                xbit = xm & -xm
                xm ^= xbit
                ym = xm
                while ym:
                    ybit = ym & -ym
                    ym ^= ybit
                    out.append(bbit | xbit | ybit)
        return out

    def mu(self, avail: int) -> int:
        got = self.memo_mu.get(avail)
        if got is not None:
            return got
        adj = self.adj
        if avail == 0:
            best = 0
        else:
            vbit = avail & -avail
            v = vbit.bit_length() - 1
            # The lowest vertex is either skipped or covered by some copy.
            best = self.mu(avail ^ vbit)
            nb = adj[v] & avail
            xm = nb  # v as the center
            while xm:
                xbit = xm & -xm
                xm ^= xbit
                ym = xm
                while ym:
                    ybit = ym & -ym
                    ym ^= ybit
                    cand = 1 + self.mu(avail & ~(vbit | xbit | ybit))
                    if cand > best:
                        best = cand
            bm = nb  # v as an end of the path v-b-c
            while bm:
                bbit = bm & -bm
                bm ^= bbit
                b = bbit.bit_length() - 1
                cm = adj[b] & avail & ~vbit
                while cm:
                    cbit = cm & -cm
                    cm ^= cbit
                    cand = 1 + self.mu(avail & ~(vbit | bbit | cbit))
                    if cand > best:
                        best = cand
        self.memo_mu[avail] = best
        return best

    def min_maximal(self, avail: int) -> int:
        got = self.memo_mm.get(avail)
        if got is not None:
            return got
        # Every maximal packing starts with one of the copies, so the
        # minimum ranges over all of them; terminal masks cost nothing.
        best = -1
        for img in self.copies(avail):
            cand = 1 + self.min_maximal(avail & ~img)
            if best < 0 or cand < best:
                best = cand
        if best < 0:
            best = 0
        self.memo_mm[avail] = best
        return best

    def has_k3_partition(self, avail: int) -> bool:
        if avail == 0:
            return True
        got = self.memo_k3.get(avail)
        if got is not None:
            return got
        adj = self.adj
        vbit = avail & -avail
        v = vbit.bit_length() - 1
        ok = False
        nb = adj[v] & avail
        xm = nb
        while xm and not ok:
            xbit = xm & -xm
            xm ^= xbit
            x = xbit.bit_length() - 1
            ym = xm & adj[x]
            while ym and not ok:
                ybit = ym & -ym
                ym ^= ybit
                ok = self.has_k3_partition(avail & ~(vbit | xbit | ybit))
        self.memo_k3[avail] = ok
        return ok
