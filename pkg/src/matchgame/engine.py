"""Game mechanics: patterns, role splits, states, and move generation.

A move has two halves.  The initiator nominates an available vertex; the
responder then removes the image of one pattern copy anchored at that vertex.
Variants fix where the nomination sits inside the copy: at the center of the
three-vertex path (star), at an end (stripe), anywhere on it (unrooted), or
at the designated root of an arbitrary small pattern graph (generic).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph, VertexSet, bits_of

MAXIMIZER = "max"
MINIMIZER = "min"

STAR = "star"
STRIPE = "stripe"
UNROOTED = "unrooted"
GENERIC = "generic"

_PATH3 = Graph(3, [(0, 1), (1, 2)])


@dataclass(frozen=True, slots=True)
class Pattern:
    """What the responder removes: a named three-vertex-path variant, or an
    arbitrary connected pattern graph of order 2..8 with an optional root."""

    kind: str
    F: Graph | None = None
    root: int | None = None

    def __post_init__(self) -> None:
        if self.kind in (STAR, STRIPE, UNROOTED):
            if self.F is not None or self.root is not None:
                raise ValueError(f"{self.kind} pattern carries no explicit graph")
            return
        if self.kind != GENERIC:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        F = self.F
        if F is None or not 2 <= F.n <= 8:
            raise ValueError("generic pattern graph must have 2..8 vertices")
        if len(F.components()) != 1:
            raise ValueError("generic pattern graph must be connected")
        if self.root is not None and not 0 <= self.root < F.n:
            raise ValueError("pattern root out of range")

    @classmethod
    def star(cls) -> "Pattern":
        return cls(STAR)

    @classmethod
    def stripe(cls) -> "Pattern":
        return cls(STRIPE)

    @classmethod
    def unrooted_p3(cls) -> "Pattern":
        return cls(UNROOTED)

    @classmethod
    def generic(cls, F: Graph, root: int | None = None) -> "Pattern":
        return cls(GENERIC, F, root)

    @property
    def order(self) -> int:
        return 3 if self.kind != GENERIC else self.F.n

    def to_dict(self) -> dict:
        if self.kind != GENERIC:
            return {"pattern": self.kind}
        return {
            "pattern": GENERIC,
            "F": {"n": self.F.n, "edges": [[u, v] for u, v in self.F.edges]},
            "root": self.root,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "Pattern":
        kind = obj.get("pattern")
        if kind in (STAR, STRIPE, UNROOTED):
            return cls(kind)
        if kind == GENERIC:
            from .graphs import graph_from_json

            return cls(GENERIC, graph_from_json(obj["F"]), obj.get("root"))
        raise ValueError(f"unknown pattern {kind!r}")


@dataclass(frozen=True, slots=True)
class GameSpec:
    """Pattern plus role split.  ``initiator`` is the player who nominates
    vertices on every move; the other player picks the copies."""

    pattern: Pattern
    initiator: str

    def __post_init__(self) -> None:
        if self.initiator not in (MAXIMIZER, MINIMIZER):
            raise ValueError(f"initiator must be 'max' or 'min', got {self.initiator!r}")

    @property
    def responder(self) -> str:
        return MINIMIZER if self.initiator == MAXIMIZER else MAXIMIZER

    def to_dict(self) -> dict:
        out = self.pattern.to_dict()
        out["initiator"] = self.initiator
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> "GameSpec":
        return cls(Pattern.from_dict(obj), obj.get("initiator", MAXIMIZER))


@dataclass(frozen=True, slots=True)
class Move:
    """One completed move: the nominated vertex and the removed image."""

    initiation: int
    image: VertexSet

    def vertices(self) -> tuple[int, ...]:
        return tuple(self.image)

    def to_dict(self) -> dict:
        return {"init": self.initiation, "image": list(self.image)}

    @classmethod
    def from_dict(cls, obj: dict, n: int) -> "Move":
        return cls(int(obj["init"]), VertexSet.of(n, obj["image"]))


@dataclass(frozen=True, slots=True)
class GameState:
    graph: Graph
    available: VertexSet
    history: tuple[Move, ...] = field(default_factory=tuple)

    @classmethod
    def initial(cls, g: Graph) -> "GameState":
        return cls(g, VertexSet.full(g.n))

    @property
    def moves_played(self) -> int:
        return len(self.history)


# -- image enumeration on raw masks -----------------------------------------
#
# These are the definitional move generators.  The kernels re-derive the same
# sets with tighter loops; tests hold the two routes together.


def star_images(g: Graph, avail: int, v: int) -> list[int]:
    if not (avail >> v) & 1:
        return []
    out = []
    vbit = 1 << v
    nb = g.adj[v] & avail
    for x in bits_of(nb):
        for y in bits_of(nb >> (x + 1) << (x + 1)):
            out.append(vbit | (1 << x) | (1 << y))
    return out


def stripe_images(g: Graph, avail: int, v: int) -> list[int]:
    if not (avail >> v) & 1:
        return []
    seen = set()
    vbit = 1 << v
    for b in bits_of(g.adj[v] & avail):
        for c in bits_of(g.adj[b] & avail & ~vbit):
            seen.add(vbit | (1 << b) | (1 << c))
    return sorted(seen)


def unrooted_images(g: Graph, avail: int, v: int) -> list[int]:
    return sorted(set(star_images(g, avail, v)) | set(stripe_images(g, avail, v)))


def embeddings(
    F: Graph, root: int | None, g: Graph, available: VertexSet, v: int
) -> list[VertexSet]:
    """Images of injective edge-preserving maps of F into the available part
    of g, anchored so that the root lands on v (or, unrooted, so that v lies
    somewhere in the image).  Deduplicated by image."""
    masks = _embedding_masks(F, root, g, available.bits, v)
    return [VertexSet(mk, g.n) for mk in masks]


def _embedding_masks(F: Graph, root: int | None, g: Graph, avail: int, v: int) -> list[int]:
    if not (avail >> v) & 1:
        return []
    anchors = [root] if root is not None else list(range(F.n))
    images: set[int] = set()
    for anchor in anchors:
        order = _bfs_order(F, anchor)
        assign = [-1] * F.n
        assign[anchor] = v
        _extend(F, g, avail, order, 1, assign, 1 << v, images)
    out = sorted(images)
    # sort by vertex tuple, not mask value, for a label-stable order
    out.sort(key=lambda mk: tuple(bits_of(mk)))
    return out


def _bfs_order(F: Graph, start: int) -> list[int]:
    order = [start]
    seen = 1 << start
    for u in order:
        for w in bits_of(F.adj[u] & ~seen):
            seen |= 1 << w
            order.append(w)
    return order


def _extend(
    F: Graph,
    g: Graph,
    avail: int,
    order: list[int],
    idx: int,
    assign: list[int],
    used: int,
    images: set[int],
) -> None:
    if idx == len(order):
        images.add(used)
        return
    u = order[idx]
    # candidate g-vertices must be available, unused, and adjacent to the
    # images of all already-assigned F-neighbors of u
    cand = avail & ~used
    for w in bits_of(F.adj[u]):
        if assign[w] >= 0:
            cand &= g.adj[assign[w]]
    for x in bits_of(cand):
        assign[u] = x
        _extend(F, g, avail, order, idx + 1, assign, used | (1 << x), images)
    assign[u] = -1


def image_masks(g: Graph, avail: int, pattern: Pattern, v: int) -> list[int]:
    """All legal response images for an initiation at v, sorted by vertex
    tuple and deduplicated."""
    if pattern.kind == STAR:
        out = star_images(g, avail, v)
    elif pattern.kind == STRIPE:
        out = stripe_images(g, avail, v)
    elif pattern.kind == UNROOTED:
        out = unrooted_images(g, avail, v)
    else:
        return _embedding_masks(pattern.F, pattern.root, g, avail, v)
    out = sorted(set(out), key=lambda mk: tuple(bits_of(mk)))
    return out


def initiation_mask(g: Graph, avail: int, pattern: Pattern) -> int:
    """Bitmask of vertices with at least one response image."""
    out = 0
    for v in bits_of(avail):
        if _has_image(g, avail, pattern, v):
            out |= 1 << v
    return out


def _has_image(g: Graph, avail: int, pattern: Pattern, v: int) -> bool:
    kind = pattern.kind
    vbit = 1 << v
    if kind == STAR:
        return (g.adj[v] & avail).bit_count() >= 2
    if kind == STRIPE:
        for b in bits_of(g.adj[v] & avail):
            if g.adj[b] & avail & ~vbit:
                return True
        return False
    if kind == UNROOTED:
        if (g.adj[v] & avail).bit_count() >= 2:
            return True
        for b in bits_of(g.adj[v] & avail):
            if g.adj[b] & avail & ~vbit:
                return True
        return False
    return bool(_embedding_masks(pattern.F, pattern.root, g, avail, v))


# -- public state-level API --------------------------------------------------


def legal_initiations(state: GameState, spec: GameSpec) -> VertexSet:
    mask = initiation_mask(state.graph, state.available.bits, spec.pattern)
    return VertexSet(mask, state.graph.n)


def responses(state: GameState, spec: GameSpec, v: int) -> list[Move]:
    if v not in legal_initiations(state, spec):
        raise ValueError(f"vertex {v} is not a legal initiation")
    masks = image_masks(state.graph, state.available.bits, spec.pattern, v)
    return [Move(v, VertexSet(mk, state.graph.n)) for mk in masks]


def apply_move(state: GameState, spec: GameSpec, move: Move) -> GameState:
    options = image_masks(state.graph, state.available.bits, spec.pattern, move.initiation)
    if move.image.bits not in options:
        raise ValueError(f"illegal move {move.to_dict()}")
    return GameState(
        state.graph,
        state.available - move.image,
        state.history + (move,),
    )


def is_terminal(state: GameState, spec: GameSpec) -> bool:
    return initiation_mask(state.graph, state.available.bits, spec.pattern) == 0


def p3_equivalent_generic(kind: str) -> Pattern:
    """The generic-pattern formulation of a named three-vertex variant."""
    if kind == STAR:
        return Pattern.generic(_PATH3, root=1)
    if kind == STRIPE:
        return Pattern.generic(_PATH3, root=0)
    if kind == UNROOTED:
        return Pattern.generic(_PATH3, root=None)
    raise ValueError(f"no generic equivalent for {kind!r}")
