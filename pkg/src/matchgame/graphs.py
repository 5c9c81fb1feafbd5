"""Immutable small-graph core.

Graphs are capped at 64 vertices so any vertex subset fits in one machine
word: every neighborhood is a plain int bitmask and set algebra is word
arithmetic.  Everything downstream (move generation, packing and game-value
recursions) keys its memo tables on these masks.
"""

from __future__ import annotations

import heapq
import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of the vertices 0..n-1, stored as one word.

    ``bits`` never has a bit at position >= ``n``; operations between sets of
    different universes are rejected rather than silently coerced.
    """

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"universe size {self.n} out of range")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bits outside universe")

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside universe of size {n}")
            bits |= 1 << v
        return cls(bits, n)

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets live in different universes")

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def add(self, v: int) -> "VertexSet":
        return VertexSet.of(self.n, [v]) | self

    def remove(self, v: int) -> "VertexSet":
        return self - VertexSet.of(self.n, [v])

    def complement(self) -> "VertexSet":
        return VertexSet(~self.bits & ((1 << self.n) - 1), self.n)

    def to_list(self) -> list[int]:
        return list(self)


class Graph:
    """An immutable undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighborhood of v as a bitmask.  No self-loops, no
    multi-edges.
    """

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"graph order {n} out of range 0..{MAX_VERTICES}")
        adj = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) endpoint out of range")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.adj: tuple[int, ...] = tuple(adj)
        self._hash = hash((n, self.edges))

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v], self.n)

    def neighbors_in(self, v: int, available: VertexSet) -> VertexSet:
        """Neighbors of v restricted to ``available``.

        If v itself is outside ``available`` the answer is the empty set;
        callers probing removed vertices get nothing rather than stale data.
        """
        if v not in available:
            return VertexSet.empty(self.n)
        return VertexSet(self.adj[v] & available.bits, self.n)

    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- structure --------------------------------------------------------

    def components(self, within: int | None = None) -> list[int]:
        """Connected component masks, restricted to ``within`` if given."""
        todo = ((1 << self.n) - 1) if within is None else within
        out = []
        while todo:
            seed = todo & -todo
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in bits_of(frontier):
                    nxt |= self.adj[v] & todo
                frontier = nxt & ~comp
                comp |= frontier
            out.append(comp)
            todo &= ~comp
        return out

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components()) if self.n else True

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and len(self.components()) == 1


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the bijection v -> perm[v] to the vertex labels."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertices")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# -- serialization ---------------------------------------------------------


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges]})


def graph_from_json(text: str | dict) -> Graph:
    obj = json.loads(text) if isinstance(text, str) else text
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph json must carry 'n' and 'edges'")
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ValueError("malformed graph json")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"malformed edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return Graph(n, pairs)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    rows = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError("edge-list header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError("edge-list header must be 'n m'") from exc
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


# -- canonical tree codes ---------------------------------------------------


def _subtree_sizes(g: Graph, root: int) -> tuple[list[int], list[int]]:
    """Sizes of subtrees under a DFS from ``root``; also returns parents."""
    parent = [-1] * g.n
    order = [root]
    seen = 1 << root
    for v in order:
        for w in bits_of(g.adj[v] & ~seen):
            seen |= 1 << w
            parent[w] = v
            order.append(w)
    size = [1] * g.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    return size, parent


def _centroids(g: Graph) -> list[int]:
    size, parent = _subtree_sizes(g, 0)
    n = g.n
    out = []
    for v in range(n):
        heaviest = n - size[v]
        for w in bits_of(g.adj[v]):
            if parent[w] == v:
                heaviest = max(heaviest, size[w])
        if heaviest <= n // 2:
            out.append(v)
    return out


def _rooted_code(g: Graph, root: int) -> bytes:
    """Canonical parenthesis string of the tree rooted at ``root``."""

    def rec(v: int, parent: int) -> bytes:
        kids = sorted(rec(w, v) for w in bits_of(g.adj[v]) if w != parent)
        return b"(" + b"".join(kids) + b")"

    return rec(root, -1)


def tree_code(g: Graph) -> bytes:
    """Canonical code of a tree: equal codes iff isomorphic.

    The tree is rooted at its centroid; with two centroids the smaller of the
    two rooted codes is used.  Isomorphisms preserve centroids, so the choice
    is label-independent.
    """
    if not g.is_tree():
        raise ValueError("tree_code requires a tree")
    if g.n == 1:
        return b"()"
    cands = _centroids(g)
    # Re-root size computation per candidate is cheap at n <= 64.
    return min(_rooted_code(g, c) for c in cands)


def tree_from_prufer(seq: Sequence[int]) -> Graph:
    """Labeled tree on len(seq)+2 vertices decoded from its sequence."""
    n = len(seq) + 2
    if any(not 0 <= x < n for x in seq):
        raise ValueError("sequence entry out of range")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((v, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


MAX_ENUM_ORDER = 13


def enumerate_free_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on n vertices.

    Grown by leaf attachment: every tree on k vertices arises from a tree on
    k-1 vertices by hanging one new leaf, so attaching a leaf everywhere and
    deduplicating by canonical code covers each class exactly once.  Output
    is sorted by code, hence deterministic.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ENUM_ORDER}")
    level = {b"()": Graph(1, [])}
    for size in range(2, n + 1):
        nxt: dict[bytes, Graph] = {}
        for t in level.values():
            for v in range(t.n):
                g = Graph(size, list(t.edges) + [(v, size - 1)])
                code = tree_code(g)
                if code not in nxt:
                    nxt[code] = g
        level = nxt
    return [level[c] for c in sorted(level)]


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi draw: each of the n·(n-1)/2 edges kept with probability p.

    Takes the caller's generator so corpora are reproducible from one seed.
    """
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)
