"""Playable strategies and the harnesses that check their guarantees.

A strategy fills one seat (initiator or responder).  All strategies here are
deterministic and stateless: every decision is recomputed from the game
state, including its move history, so a position can be revisited freely
during exhaustive checking.

``run_match`` plays two strategies against each other; ``check_guarantee``
fixes one seat to a strategy and searches *all* moves for the other seat,
establishing a worst-case bound rather than a single playout.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import engine
from .engine import GameSpec, GameState, Move
from .errors import StrategyError
from .families import FamilyInstance
from .graphs import VertexSet, bits_of, mask_of
from .solver import Analyzer

# -- protocol ------------------------------------------------------------------


class Strategy:
    """One seat of the game.  Subclasses override the method(s) for the
    seat(s) they can play."""

    name = "strategy"

    def initiation(self, state: GameState, spec: GameSpec) -> int:
        raise StrategyError(f"{self.name} does not play the initiator seat")

    def response(self, state: GameState, spec: GameSpec, v: int) -> VertexSet:
        raise StrategyError(f"{self.name} does not play the responder seat")


class OptimalStrategy(Strategy):
    """Plays both seats perfectly via the exact solver."""

    name = "optimal"

    def __init__(self, analyzer: Analyzer):
        self.analyzer = analyzer

    def initiation(self, state: GameState, spec: GameSpec) -> int:
        v = self.analyzer.best_initiation(state.available.bits)
        if v is None:
            raise StrategyError("no legal initiation")
        return v

    def response(self, state: GameState, spec: GameSpec, v: int) -> VertexSet:
        mask = self.analyzer.best_response(state.available.bits, v)
        return VertexSet(mask, state.graph.n)


def _expect(inst: FamilyInstance, family: str) -> None:
    if inst.family != family:
        raise StrategyError(f"strategy needs a {family} instance, got {inst.family}")


def _first_legal(queue, state: GameState, spec: GameSpec) -> int:
    legal = engine.legal_initiations(state, spec)
    for v in queue:
        if v in legal:
            return v
    raise StrategyError("scripted initiation queue exhausted with the game live")


# -- path, end-anchored game, minimizing initiator -------------------------------


class PathStripeInitiator(Strategy):
    """Minimizing initiator on a path.

    Nominates 1, 5, 9, ... in turn; each such nomination is forced to take
    the block {4k+1, 4k+2, 4k+3} because the left neighbour's tail is
    already gone.  When no block start remains, only a 3-vertex tail can be
    live; nominating its far end finishes it.  Total moves:
    floor((n+1)/4), which is optimal.
    """

    name = "path-stripe-initiator"

    def __init__(self, inst: FamilyInstance):
        _expect(inst, "path")
        self.n = inst.graph.n

    def initiation(self, state: GameState, spec: GameSpec) -> int:
        avail = state.available
        queue = [v for v in range(1, self.n, 4) if v in avail]
        queue += [self.n - 1, self.n - 3]
        return _first_legal(queue, state, spec)


# -- two-row grids ----------------------------------------------------------------


class _GridStrategy(Strategy):
    def __init__(self, inst: FamilyInstance, rows: int):
        _expect(inst, "grid")
        if inst.params["rows"] != rows:
            raise StrategyError(f"strategy needs a {rows}-row grid")
        self.rows = rows
        self.cols: int = inst.params["cols"]

    def vid(self, r: int, c: int) -> int:
        return r * self.cols + c

    def col_of(self, v: int) -> int:
        return v % self.cols

    def row_of(self, v: int) -> int:
        return v // self.cols


class TwoRowStarInitiator(_GridStrategy):
    """Centre-anchored game on a 2xM grid, either player initiating.

    Nominates the top cell of every even column left to right; each
    nomination has exactly one legal image (the previous column is already
    gone), so the whole line is forced and lasts exactly ceil(M/2) moves.
    For odd M the last nomination moves to the bottom-right cell, whose two
    live neighbours again form the only image.
    """

    name = "two-row-star-initiator"

    def __init__(self, inst: FamilyInstance):
        super().__init__(inst, 2)
        m = self.cols
        queue = [self.vid(0, c) for c in range(0, m - 1, 2)]
        if m % 2 == 1:
            queue.append(self.vid(1, m - 1))
        self.queue = queue

    def initiation(self, state: GameState, spec: GameSpec) -> int:
        avail = state.available
        return _first_legal([v for v in self.queue if v in avail], state, spec)


class TwoRowStarResponder(_GridStrategy):
    """Centre-anchored game on a 2xM grid, responding to any initiator.

    Columns are paired (0,1), (2,3), ...; a nomination in a paired column
    is answered by taking that whole column plus the same-row cell of its
    partner, retiring the pair in one move.  For odd M the rightmost column
    floats: a nomination there takes the floating column plus one cell to
    its left, and the float slides two columns leftward.  Every pair and
    the float cost one move each, so at most ceil(M/2) moves happen.
    """

    name = "two-row-star-responder"

    def __init__(self, inst: FamilyInstance):
        super().__init__(inst, 2)

    def _floating(self, state: GameState) -> int | None:
        f = self.cols - 1 if self.cols % 2 == 1 else None
        for mv in state.history:
            if f is not None and self.col_of(mv.initiation) == f:
                f = f - 2 if f >= 2 else None
        return f

    def response(self, state: GameState, spec: GameSpec, v: int) -> VertexSet:
        r, c = self.row_of(v), self.col_of(v)
        f = self._floating(state)
        if c == f:
            # take the whole floating column plus one horizontal neighbour;
            # the left one keeps the sweep tidy, but it may already be gone
            # (a pair resolved before the float slid past it), in which case
            # the nomination is only legal because the right cell survives
            sides = [s for s in (c - 1, c + 1) if 0 <= s < self.cols]
            sides = [s for s in sides if self.vid(r, s) in state.available]
            if not sides:
                raise StrategyError("floating nomination with no side cell")
            cells = [v, self.vid(1 - r, c), self.vid(r, sides[0])]
        else:
            base = 0 if f is None or c < f else f + 1
            partner = c + 1 if (c - base) % 2 == 0 else c - 1
            cells = [v, self.vid(1 - r, c), self.vid(r, partner)]
        image = VertexSet(mask_of(cells), state.graph.n)
        if image.bits & ~state.available.bits:
            raise StrategyError("scripted response cells are not all available")
        return image


class TwoRowStripeResponder(_GridStrategy):
    """End-anchored game on a 2xM grid, responding for either player.

    Every 3-cell path in the grid covers two cells in one column-parity
    class and one in the other.  The maximizing responder always takes two
    cells of even columns, spending the larger parity class slowly enough
    to keep odd-column connectors alive for ceil(M/2) moves; the minimizing
    responder takes two cells of odd columns, exhausting the class of
    floor(M/2) connector columns at double speed.
    """

    def __init__(self, inst: FamilyInstance, role: str):
        super().__init__(inst, 2)
        if role not in (engine.MAXIMIZER, engine.MINIMIZER):
            raise StrategyError(f"unknown role {role!r}")
        self.favored = 0 if role == engine.MAXIMIZER else 1
        self.name = f"two-row-stripe-responder-{role}"

    def response(self, state: GameState, spec: GameSpec, v: int) -> VertexSet:
        options = engine.responses(state, spec, v)

        def key(mv: Move):
            cols = [self.col_of(w) for w in mv.image]
            hits = sum(1 for c in cols if c % 2 == self.favored)
            # a favoured column taken whole both disconnects the board and
            # spends the parity budget in one place; prefer that shape
            whole = any(
                c % 2 == self.favored and cols.count(c) == 2 for c in set(cols)
            )
            return (-min(hits, 2), not whole, tuple(mv.image))

        return min(options, key=key).image


# -- three-row grids ---------------------------------------------------------------


class ThreeRowStarInitiator(_GridStrategy):
    """Centre-anchored game on a 3xM grid, maximizing initiator.

    For even M: eat the bottom two rows column-pair by column-pair (each
    nomination forced to a single image), then the top-right corner, then
    the rest of the top row right to left — M forced moves that take every
    vertex.  For odd M: open in the middle of column 0; whichever of the
    three images the responder picks, the remainder is a forced even-width
    script (possibly mirrored top-to-bottom).
    """

    name = "three-row-star-initiator"

    def __init__(self, inst: FamilyInstance):
        super().__init__(inst, 3)

    def _even_queue(self, flip: bool, offset: int = 0) -> list[int]:
        m = self.cols
        top, bot = (2, 0) if flip else (0, 2)
        queue = [self.vid(bot, c) for c in range(offset, m - 1, 2)]
        queue.append(self.vid(top, m - 1))
        queue += [self.vid(top, c) for c in range(m - 3, offset - 1, -2)]
        return queue

    def _odd_queue(self, state: GameState) -> list[int]:
        m = self.cols
        opening = state.history[0].image.bits
        mid, top, bot = self.vid(1, 0), self.vid(0, 0), self.vid(2, 0)
        mid2 = self.vid(1, 1)
        if opening == mask_of([mid, top, bot]):
            # whole first column gone: play the even script on columns 1..M-1
            return self._even_queue(flip=False, offset=1)
        if opening == mask_of([mid, mid2, bot]):
            flip = False
        elif opening == mask_of([mid, mid2, top]):
            flip = True
        else:
            raise StrategyError("unexpected opening image")
        top_r, bot_r = (2, 0) if flip else (0, 2)
        queue = [self.vid(top_r, 1)]
        queue += [self.vid(top_r, c) for c in range(3, m - 1, 2)]
        queue += [self.vid(bot_r, c) for c in range(m - 1, 1, -2)]
        return queue

    def initiation(self, state: GameState, spec: GameSpec) -> int:
        m = self.cols
        if m % 2 == 0:
            queue = self._even_queue(flip=False)
        elif not state.history:
            return self.vid(1, 0)
        else:
            queue = self._odd_queue(state)
        avail = state.available
        return _first_legal([v for v in queue if v in avail], state, spec)


# -- rook pairs ---------------------------------------------------------------------


class _RooksStrategy(Strategy):
    def __init__(self, inst: FamilyInstance):
        _expect(inst, "rooks2")
        self.m: int = inst.params["m"]

    def partner(self, v: int) -> int:
        return v + self.m if v < self.m else v - self.m

    def row_mask(self, row: int, avail: int) -> int:
        lo = row * self.m
        return (((1 << self.m) - 1) << lo) & avail


class RooksStarInitiator(_RooksStrategy):
    """Centre-anchored game on paired rook cliques, maximizing initiator.

    Prefers the lowest available vertex whose cross partner is already gone
    and whose own clique still holds at least three vertices: nominating it
    wastes no cross edge and keeps images inside one clique.  When no such
    vertex can be nominated, falls back to the lowest legal nomination.
    """

    name = "rooks-star-initiator"

    def initiation(self, state: GameState, spec: GameSpec) -> int:
        avail = state.available.bits
        legal = engine.legal_initiations(state, spec)
        counts = [self.row_mask(r, avail).bit_count() for r in (0, 1)]
        nocross = [
            v for v in bits_of(avail) if not ((1 << self.partner(v)) & avail)
        ]

        def in_row(vs, row):
            return [v for v in vs if (0 if v < self.m else 1) == row]

        if counts[0] % 3 == 0 and counts[1] % 3 == 0:
            # balanced: nominate a partnerless vertex so the reply must stay
            # inside its row, keeping both rows multiples of three; prefer
            # the fuller row so the rows equalize toward a matched sub-board
            for row in sorted((0, 1), key=lambda r: (-counts[r], r)):
                for v in in_row(nocross, row):
                    if v in legal:
                        return v
            # fully matched sub-board: any nomination (lowest id)
            for v in legal:
                return v
            raise StrategyError("no legal initiation")
        # one row is 2 mod 3 (the other 1 mod 3): keep hammering the 2-row;
        # a partnerless vertex forces the reply to stay there, and when the
        # row is down to two vertices the reply is forced across, restoring
        # balance
        row2 = 0 if counts[0] % 3 == 2 else 1
        for v in in_row(nocross, row2):
            if v in legal:
                return v
        for v in bits_of(self.row_mask(row2, avail)):
            if v in legal:
                return v
        for v in legal:
            return v
        raise StrategyError("no legal initiation")


class RooksStripeResponder(_RooksStrategy):
    """End-anchored game on paired rook cliques, minimizing responder.

    If some reply ends the game immediately, plays the lexicographically
    first such reply.  Otherwise plays the reply that destroys the most
    cross edges and keeps the two cliques balanced, steering toward a dead
    residue of three vertices with no surviving cross edge.
    """

    name = "rooks-stripe-responder"

    def _pick(self, state: GameState, spec: GameSpec, v: int,
              cells: list[int]) -> VertexSet | None:
        if any((1 << c) & ~state.available.bits for c in cells):
            return None
        mask = mask_of(cells)
        for mv in engine.responses(state, spec, v):
            if mv.image.bits == mask:
                return mv.image
        return None

    def response(self, state: GameState, spec: GameSpec, v: int) -> VertexSet:
        avail = state.available.bits
        options = engine.responses(state, spec, v)
        # base case: if some reply kills every remaining nomination (the
        # (4,2) shape always allows this), end the game on the spot
        for mv in options:
            after = avail & ~mv.image.bits
            if not engine.initiation_mask(state.graph, after, spec.pattern):
                return mv.image

        row_v = 0 if v < self.m else 1
        mine = self.row_mask(row_v, avail)
        theirs = self.row_mask(1 - row_v, avail)
        crossed = [
            u for u in bits_of(mine)
            if u != v and (1 << self.partner(u)) & avail
        ]
        uncrossed_theirs = [
            u for u in bits_of(theirs)
            if not ((1 << self.partner(u)) & avail)
        ]
        plan: list[int] | None = None
        if mine.bit_count() == theirs.bit_count():
            # opening: spend a cross-edge, leaving rows m-1 and m-2
            w = next((u for u in bits_of(theirs) if u != self.partner(v)), None)
            if w is not None and (1 << self.partner(v)) & avail:
                plan = [v, self.partner(v), w]
        elif mine.bit_count() > theirs.bit_count():
            # nominated in the larger row: stay inside it and consume every
            # partnerless vertex it holds (there are at most two)
            uncrossed_mine = [
                u for u in bits_of(mine)
                if u != v and not ((1 << self.partner(u)) & avail)
            ]
            extra = (uncrossed_mine + crossed)[:2]
            if len(extra) == 2:
                plan = [v] + extra
        elif theirs.bit_count() - mine.bit_count() == 1:
            # smaller row, rows differ by one: two vertices here plus a
            # cross-edge, handing the larger row a second partnerless vertex
            if crossed:
                w = crossed[0]
                plan = [v, w, self.partner(w)]
        else:
            # smaller row, rows differ by two: cross immediately, then take
            # one of the larger row's two partnerless vertices
            if ((1 << self.partner(v)) & avail) and uncrossed_theirs:
                plan = [v, self.partner(v), uncrossed_theirs[0]]
        if plan is not None:
            image = self._pick(state, spec, v, plan)
            if image is not None:
                return image
        return options[0].image


# -- harnesses ------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class MatchRecord:
    moves: tuple[Move, ...]
    value: int
    taken: int
    final_available: VertexSet

    def to_dict(self) -> dict:
        return {
            "moves": [mv.to_dict() for mv in self.moves],
            "value": self.value,
            "taken": self.taken,
            "remaining": self.final_available.to_list(),
        }


def run_match(
    g,
    spec: GameSpec,
    initiator: Strategy,
    responder: Strategy,
    max_moves: int | None = None,
) -> MatchRecord:
    """Play one full game between two strategies and record it."""
    state = GameState.initial(g)
    limit = max_moves if max_moves is not None else g.n
    while not engine.is_terminal(state, spec):
        if len(state.history) >= limit:
            raise StrategyError(f"game exceeded {limit} moves")
        v = initiator.initiation(state, spec)
        image = responder.response(state, spec, v)
        state = engine.apply_move(state, spec, Move(v, image))
    taken = g.n - len(state.available)
    return MatchRecord(state.history, len(state.history), taken, state.available)


@dataclass(frozen=True, slots=True)
class GuaranteeReport:
    strategy: str
    seat: str
    direction: str
    bound: int
    worst_value: int
    holds: bool
    leaves: int

    def describe(self) -> str:
        sign = "<=" if self.direction == "at_most" else ">="
        status = "holds" if self.holds else "FAILS"
        return (
            f"{self.strategy} ({self.seat}) guarantees {sign} {self.bound}: "
            f"{status} (worst {self.worst_value} over {self.leaves} line(s))"
        )


def check_guarantee(
    g,
    spec: GameSpec,
    strategy: Strategy,
    seat: str,
    bound: int,
    direction: str,
) -> GuaranteeReport:
    """Exhaustively verify a one-sided bound on the game length.

    The strategy occupies ``seat`` ("initiator" or "responder") and its
    moves are fixed; every legal move of the other seat is searched.  With
    ``direction`` "at_most" the adversary maximizes the number of moves,
    with "at_least" it minimizes, so the returned worst value is a true
    guarantee, not a single playout.
    """
    if seat not in ("initiator", "responder"):
        raise ValueError(f"bad seat {seat!r}")
    if direction not in ("at_most", "at_least"):
        raise ValueError(f"bad direction {direction!r}")
    adversary_picks = max if direction == "at_most" else min
    leaves = 0

    def walk(state: GameState) -> int:
        nonlocal leaves
        if engine.is_terminal(state, spec):
            leaves += 1
            return len(state.history)
        if seat == "initiator":
            v = strategy.initiation(state, spec)
            branches = [
                walk(engine.apply_move(state, spec, mv))
                for mv in engine.responses(state, spec, v)
            ]
        else:
            branches = []
            for v in engine.legal_initiations(state, spec):
                image = strategy.response(state, spec, v)
                branches.append(
                    walk(engine.apply_move(state, spec, Move(v, image)))
                )
        return adversary_picks(branches)

    worst = walk(GameState.initial(g))
    holds = worst <= bound if direction == "at_most" else worst >= bound
    return GuaranteeReport(
        strategy.name, seat, direction, bound, worst, holds, leaves
    )
