"""Exact game values by memoized minimax over availability bitmasks.

The reference recursion is plain minimax: the initiator ranges over legal
nominations, the responder over images, each taken copy adds one move.  No
pruning; the memo table keyed on the availability mask alone is the only
speedup, which is sound because the mask determines the rest of the game.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import engine
from .engine import GameSpec, GameState, Move, Pattern
from .errors import CapExceeded
from .graphs import Graph, VertexSet, bits_of
from .kernels import (
    VARIANT_STAR,
    VARIANT_STRIPE,
    VARIANT_UNROOTED,
    P3Solver,
)

DEFAULT_CAP = 22

_VARIANT_CODES = {
    engine.STAR: VARIANT_STAR,
    engine.STRIPE: VARIANT_STRIPE,
    engine.UNROOTED: VARIANT_UNROOTED,
}


@dataclass(frozen=True, slots=True)
class SolveStats:
    states: int
    memo_hits: int
    seconds: float


@dataclass(frozen=True, slots=True)
class SolveResult:
    value: int
    vertices_taken: int
    perfect: bool
    pv: tuple[Move, ...]
    stats: SolveStats


class _GenericSolver:
    """Memoized recursion for generic patterns, driven by the engine's
    embedding enumerator.  Same shape as the specialized kernels."""

    __slots__ = ("g", "pattern", "max_initiates", "memo", "states", "hits")

    def __init__(self, g: Graph, pattern: Pattern, max_initiates: bool):
        self.g = g
        self.pattern = pattern
        self.max_initiates = max_initiates
        self.memo: dict[int, int] = {}
        self.states = 0
        self.hits = 0

    def value(self, avail: int) -> int:
        got = self.memo.get(avail)
        if got is not None:
            self.hits += 1
            return got
        self.states += 1
        is_max = self.max_initiates
        best = -1
        for v in bits_of(avail):
            images = engine.image_masks(self.g, avail, self.pattern, v)
            if not images:
                continue
            inner = -1
            for img in images:
                child = 1 + self.value(avail & ~img)
                if inner < 0:
                    inner = child
                elif is_max:
                    inner = min(inner, child)
                else:
                    inner = max(inner, child)
            if best < 0:
                best = inner
            elif is_max:
                best = max(best, inner)
            else:
                best = min(best, inner)
        if best < 0:
            best = 0
        self.memo[avail] = best
        return best


class Analyzer:
    """Reusable solve context for one (graph, spec) pair.

    Holds the memo across queries so that value_after, best-move selection,
    and principal-variation replay all hit the same table.
    """

    def __init__(self, g: Graph, spec: GameSpec, cap: int = DEFAULT_CAP):
        if g.n > cap:
            raise CapExceeded(f"graph order {g.n} exceeds exact cap {cap}")
        self.g = g
        self.spec = spec
        max_init = spec.initiator == engine.MAXIMIZER
        code = _VARIANT_CODES.get(spec.pattern.kind)
        if code is not None:
            self._kernel = P3Solver(g.adj, code, max_init)
        else:
            self._kernel = _GenericSolver(g, spec.pattern, max_init)

    def value(self, avail: int | VertexSet | None = None) -> int:
        if avail is None:
            avail = (1 << self.g.n) - 1
        elif isinstance(avail, VertexSet):
            avail = avail.bits
        return self._kernel.value(avail)

    def value_after(self, avail: int | VertexSet, image: int | VertexSet) -> int:
        if isinstance(avail, VertexSet):
            avail = avail.bits
        if isinstance(image, VertexSet):
            image = image.bits
        return 1 + self._kernel.value(avail & ~image)

    def initiation_values(self, avail: int) -> list[tuple[int, int]]:
        """(vertex, value if nominated) for each legal initiation, the value
        already reflecting the responder's best reply."""
        out = []
        responder_min = self.spec.initiator == engine.MAXIMIZER
        for v in bits_of(engine.initiation_mask(self.g, avail, self.spec.pattern)):
            vals = [
                self.value_after(avail, img)
                for img in engine.image_masks(self.g, avail, self.spec.pattern, v)
            ]
            out.append((v, min(vals) if responder_min else max(vals)))
        return out

    def best_initiation(self, avail: int) -> int | None:
        """Optimal nomination; ties broken toward the lowest vertex id."""
        options = self.initiation_values(avail)
        if not options:
            return None
        want_max = self.spec.initiator == engine.MAXIMIZER
        target = max(v for _, v in options) if want_max else min(v for _, v in options)
        for vertex, val in options:
            if val == target:
                return vertex
        raise AssertionError("unreachable")

    def best_response(self, avail: int, v: int) -> int:
        """Optimal image mask for the responder; ties broken toward the
        lexicographically smallest vertex tuple."""
        images = engine.image_masks(self.g, avail, self.spec.pattern, v)
        if not images:
            raise ValueError(f"vertex {v} is not a legal initiation")
        responder_min = self.spec.initiator == engine.MAXIMIZER
        best_img = None
        best_val = None
        for img in images:  # already tuple-sorted
            val = self.value_after(avail, img)
            if (
                best_val is None
                or (responder_min and val < best_val)
                or (not responder_min and val > best_val)
            ):
                best_val = val
                best_img = img
        return best_img

    def principal_variation(self, avail: int | None = None) -> tuple[Move, ...]:
        if avail is None:
            avail = (1 << self.g.n) - 1
        moves = []
        while True:
            v = self.best_initiation(avail)
            if v is None:
                break
            img = self.best_response(avail, v)
            moves.append(Move(v, VertexSet(img, self.g.n)))
            avail &= ~img
        return tuple(moves)

    @property
    def stats(self) -> tuple[int, int]:
        return self._kernel.states, self._kernel.hits


def _root_worker(args) -> tuple[int, int, int, int]:
    g_n, g_edges, spec_dict, avail, v = args
    g = Graph(g_n, g_edges)
    spec = GameSpec.from_dict(spec_dict)
    an = Analyzer(g, spec, cap=64)
    responder_min = spec.initiator == engine.MAXIMIZER
    vals = [
        an.value_after(avail, img)
        for img in engine.image_masks(g, avail, spec.pattern, v)
    ]
    val = min(vals) if responder_min else max(vals)
    states, hits = an.stats
    return v, val, states, hits


def _unmemoized_value(g: Graph, spec: GameSpec, avail: int) -> int:
    """Straight recursion with no table; cross-check path for small orders."""
    is_max = spec.initiator == engine.MAXIMIZER
    best = -1
    for v in bits_of(avail):
        images = engine.image_masks(g, avail, spec.pattern, v)
        if not images:
            continue
        vals = [1 + _unmemoized_value(g, spec, avail & ~img) for img in images]
        inner = min(vals) if is_max else max(vals)
        if best < 0:
            best = inner
        else:
            best = max(best, inner) if is_max else min(best, inner)
    return max(best, 0)


def solve(
    g: Graph,
    spec: GameSpec,
    cap: int = DEFAULT_CAP,
    use_memo: bool = True,
    jobs: int = 1,
    want_pv: bool = True,
) -> SolveResult:
    """Optimal-play move count, principal variation, and search counters.

    ``use_memo=False`` reruns the bare recursion (small graphs only, used to
    validate the table).  ``jobs>1`` splits the root nominations across
    processes; values are identical to the serial run by construction.
    """
    t0 = time.perf_counter()
    if g.n > cap:
        raise CapExceeded(f"graph order {g.n} exceeds exact cap {cap}")
    full = (1 << g.n) - 1
    if not use_memo:
        if g.n > 12:
            raise CapExceeded("unmemoized search is restricted to n <= 12")
        value = _unmemoized_value(g, spec, full)
        seconds = time.perf_counter() - t0
        taken = value * spec.pattern.order
        return SolveResult(value, taken, taken == g.n, (), SolveStats(0, 0, seconds))

    if jobs > 1:
        init_mask = engine.initiation_mask(g, full, spec.pattern)
        tasks = [
            (g.n, list(g.edges), spec.to_dict(), full, v) for v in bits_of(init_mask)
        ]
        states = hits = 0
        per_v: dict[int, int] = {}
        if tasks:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for v, val, st, ht in pool.map(_root_worker, tasks):
                    per_v[v] = val
                    states += st
                    hits += ht
        if per_v:
            want_max = spec.initiator == engine.MAXIMIZER
            value = max(per_v.values()) if want_max else min(per_v.values())
        else:
            value = 0
        an = Analyzer(g, spec, cap)
        pv = an.principal_variation() if want_pv else ()
        seconds = time.perf_counter() - t0
        taken = value * spec.pattern.order
        return SolveResult(value, taken, taken == g.n, tuple(pv), SolveStats(states, hits, seconds))

    an = Analyzer(g, spec, cap)
    value = an.value(full)
    pv = an.principal_variation(full) if want_pv else ()
    states, hits = an.stats
    seconds = time.perf_counter() - t0
    taken = value * spec.pattern.order
    return SolveResult(value, taken, taken == g.n, tuple(pv), SolveStats(states, hits, seconds))


def value_after(g: Graph, spec: GameSpec, state: GameState, move: Move, cap: int = DEFAULT_CAP) -> int:
    """Moves in the whole game from ``state`` if ``move`` is played now and
    both players are optimal afterwards."""
    options = engine.image_masks(g, state.available.bits, spec.pattern, move.initiation)
    if move.image.bits not in options:
        raise ValueError("move is not legal in this state")
    return Analyzer(g, spec, cap).value_after(state.available.bits, move.image.bits)


def is_perfect(g: Graph, spec: GameSpec, cap: int = DEFAULT_CAP) -> bool:
    """Whether optimal play sweeps the whole vertex set."""
    if g.n % spec.pattern.order != 0:
        return False
    return solve(g, spec, cap=cap, want_pv=False).value * spec.pattern.order == g.n
