"""Named graph families: generators, recognizers, and closed-form values.

Instances carry construction labels (coordinates, spines, block lists) so
strategies and the board UI can reason about structure without re-deriving
it.  ``closed_form`` answers only for (family, game) pairs with a settled
formula and returns None otherwise; it never extrapolates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from . import engine
from .engine import GameSpec
from .errors import InvalidInput
from .graphs import Graph, bits_of

# -- instances ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class FamilyInstance:
    family: str
    params: dict
    graph: Graph
    labels: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "graph": {"n": self.graph.n, "edges": [[u, v] for u, v in self.graph.edges]},
            "labels": self.labels,
        }


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidInput(msg)


# -- deterministic generators -------------------------------------------------


def gen_path(n: int) -> FamilyInstance:
    _require(1 <= n <= 64, "path order must be 1..64")
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    return FamilyInstance("path", {"n": n}, g)


def gen_cycle(n: int) -> FamilyInstance:
    _require(3 <= n <= 64, "cycle order must be 3..64")
    g = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    return FamilyInstance("cycle", {"n": n}, g)


def gen_complete_bipartite(r: int, s: int) -> FamilyInstance:
    _require(r >= 1 and s >= 1 and r + s <= 64, "bad bipartite sides")
    g = Graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])
    labels = {"side_a": list(range(r)), "side_b": list(range(r, r + s))}
    return FamilyInstance("complete_bipartite", {"r": r, "s": s}, g, labels)


def gen_comb(m: int) -> FamilyInstance:
    """m disjoint three-vertex paths, one end of each joined into a spine."""
    _require(1 <= m and 3 * m <= 64, "bad comb size")
    edges = []
    for i in range(m):
        s = 3 * i
        edges += [(s, s + 1), (s + 1, s + 2)]
        if i + 1 < m:
            edges.append((s, s + 3))
    labels = {
        "spine": [3 * i for i in range(m)],
        "mids": [3 * i + 1 for i in range(m)],
        "tips": [3 * i + 2 for i in range(m)],
    }
    return FamilyInstance("comb", {"m": m}, Graph(3 * m, edges), labels)


def gen_double_corona(m: int) -> FamilyInstance:
    """m centers forming a clique, each keeping two private leaves."""
    _require(1 <= m and 3 * m <= 64, "bad double corona size")
    edges = []
    centers = [3 * i for i in range(m)]
    for i in range(m):
        c = 3 * i
        edges += [(c, c + 1), (c, c + 2)]
    edges += [(centers[i], centers[j]) for i in range(m) for j in range(i + 1, m)]
    labels = {"centers": centers}
    return FamilyInstance("double_corona", {"m": m}, Graph(3 * m, edges), labels)


def gen_caterpillar(m: int) -> FamilyInstance:
    """m two-leaf stars with their centers joined into a path."""
    _require(1 <= m and 3 * m <= 64, "bad caterpillar size")
    edges = []
    centers = [3 * i for i in range(m)]
    for i in range(m):
        c = 3 * i
        edges += [(c, c + 1), (c, c + 2)]
        if i + 1 < m:
            edges.append((c, c + 3))
    labels = {"centers": centers}
    return FamilyInstance("caterpillar", {"m": m}, Graph(3 * m, edges), labels)


def gen_grid(rows: int, cols: int) -> FamilyInstance:
    _require(rows >= 1 and cols >= 1, "grid dims must be positive")
    _require(rows * cols <= 64, "grid too large")
    n = rows * cols

    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    labels = {
        "rows": rows,
        "cols": cols,
        "coord": [[v // cols, v % cols] for v in range(n)],
    }
    return FamilyInstance("grid", {"rows": rows, "cols": cols}, Graph(n, edges), labels)


def gen_rooks2(m: int) -> FamilyInstance:
    """Two cliques of size m joined by a perfect matching of cross-edges."""
    _require(1 <= m and 2 * m <= 64, "bad rooks size")
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            edges.append((i, j))
            edges.append((m + i, m + j))
    cross = [(i, m + i) for i in range(m)]
    edges += cross
    labels = {
        "m": m,
        "row_of": [0] * m + [1] * m,
        "col_of": list(range(m)) * 2,
        "cross": [[u, v] for u, v in cross],
    }
    return FamilyInstance("rooks2", {"m": m}, Graph(2 * m, edges), labels)


_MOP_NAMED = {
    # Distinguished by degree profile: fan has a degree-5 apex, the sun
    # alternates 4,2,4,2,4,2, the snake peaks at degree 4 without alternating.
    "fan6": (6, ((0, 2), (0, 3), (0, 4))),
    "snake6": (6, ((0, 2), (0, 3), (3, 5))),
    "sun6": (6, ((0, 2), (2, 4), (0, 4))),
    "k3": (3, ()),
}


def _chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


def gen_mop(name: str | None = None, n: int | None = None,
            chords: list[tuple[int, int]] | None = None) -> FamilyInstance:
    """Maximal outerplanar graph: an n-cycle plus a full set of noncrossing
    chords (a triangulation of the polygon)."""
    if name is not None:
        _require(name in _MOP_NAMED, f"unknown mop name {name!r}")
        n, chords = _MOP_NAMED[name]
        chords = list(chords)
    _require(n is not None and chords is not None, "mop needs a name or n+chords")
    _require(3 <= n <= 64, "mop order must be 3..64")
    norm = []
    for a, b in chords:
        _require(0 <= a < n and 0 <= b < n, "chord endpoint out of range")
        a, b = min(a, b), max(a, b)
        _require(b - a >= 2 and not (a == 0 and b == n - 1), f"({a},{b}) is not a chord")
        norm.append((a, b))
    _require(len(set(norm)) == len(norm), "duplicate chord")
    _require(len(norm) == n - 3, f"a maximal triangulation needs {n - 3} chords")
    for i in range(len(norm)):
        for j in range(i + 1, len(norm)):
            _require(not _chords_cross(norm[i], norm[j]),
                     f"chords {norm[i]} and {norm[j]} cross")
    cycle = [(i, (i + 1) % n) for i in range(n)]
    params: dict = {"name": name} if name else {"n": n, "chords": [list(c) for c in norm]}
    labels = {"outer_cycle": list(range(n)), "chords": [list(c) for c in sorted(norm)]}
    return FamilyInstance("mop", params, Graph(n, cycle + norm), labels)


def gen_claw_gadget() -> FamilyInstance:
    """Three disjoint 3-leaf stars plus an apex tied to one leaf of each."""
    edges = []
    centers = []
    attach = []
    for i in range(3):
        c = 4 * i
        centers.append(c)
        attach.append(c + 1)
        edges += [(c, c + 1), (c, c + 2), (c, c + 3)]
    apex = 12
    edges += [(apex, a) for a in attach]
    labels = {"apex": apex, "claw_centers": centers, "attach_leaves": attach}
    return FamilyInstance("claw_gadget", {}, Graph(13, edges), labels)


# -- randomized perfect-forest generators -------------------------------------


def gen_family_D(m: int, seed: int) -> FamilyInstance:
    """m two-leaf stars, their centers joined by random acyclic edges."""
    _require(1 <= m and 3 * m <= 64, "bad family size")
    rng = random.Random(seed)
    edges = []
    centers = [3 * i for i in range(m)]
    for c in centers:
        edges += [(c, c + 1), (c, c + 2)]
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    rng.shuffle(pairs)
    trace = []
    for i, j in pairs:
        if rng.random() < 0.5 and find(i) != find(j):
            parent[find(i)] = find(j)
            edges.append((centers[i], centers[j]))
            trace.append([centers[i], centers[j]])
    labels = {"centers": centers, "trace": trace}
    return FamilyInstance("familyD", {"m": m, "seed": seed}, Graph(3 * m, edges), labels)


def _gen_blocks(kind: str, k: int, seed: int) -> FamilyInstance:
    """Shared builder for the two peel families.

    Blocks are paths 3i - 3i+1 - 3i+2.  Each new block may send at most one
    edge to each existing component; the center 3i+1 never carries one.  In
    the end-anchored family every such edge leaves from the designated end
    3i+2; in the other it may leave from either end.
    """
    _require(1 <= k and 3 * k <= 64, "bad family size")
    rng = random.Random(seed)
    edges = []
    trace = []
    g = Graph(0, [])
    for i in range(k):
        a, b, v = 3 * i, 3 * i + 1, 3 * i + 2
        comps = g.components() if g.n else []
        new_edges = [(a, b), (b, v)]
        for comp in comps:
            if rng.random() < 0.5:
                src = v if kind == "familyF" else rng.choice([a, v])
                dst = rng.choice(sorted(bits_of(comp)))
                new_edges.append((src, dst))
                trace.append([src, dst])
        edges += new_edges
        g = Graph(3 * (i + 1), edges)
    labels = {
        "blocks": [[3 * i, 3 * i + 1, 3 * i + 2] for i in range(k)],
        "trace": trace,
    }
    return FamilyInstance(kind, {"k": k, "seed": seed}, g, labels)


def gen_family_E(k: int, seed: int) -> FamilyInstance:
    return _gen_blocks("familyE", k, seed)


def gen_family_F(k: int, seed: int) -> FamilyInstance:
    return _gen_blocks("familyF", k, seed)


# -- recognizers for the perfect forest families -------------------------------


def _check_forest(g: Graph) -> None:
    if not g.is_forest():
        raise InvalidInput("recognizers expect a forest")


def in_family_D(g: Graph) -> bool:
    """Forests assembled from two-leaf stars joined at their centers:
    every component has order >= 3 and every non-leaf vertex has exactly
    two leaf neighbors."""
    _check_forest(g)
    for comp in g.components():
        if comp.bit_count() < 3:
            return False
    for v in range(g.n):
        if g.degree(v) <= 1:
            continue
        leaf_nbrs = sum(1 for w in bits_of(g.adj[v]) if g.degree(w) == 1)
        if leaf_nbrs != 2:
            return False
    return True


def in_family_E(g: Graph) -> bool:
    """Peel recursion: some vertex of degree exactly 2 comes off with both
    its neighbors, and what remains stays in the family."""
    _check_forest(g)
    if g.n % 3 != 0:
        return False
    adj = g.adj
    full = (1 << g.n) - 1
    seen: dict[int, bool] = {}

    def rec(mask: int) -> bool:
        if mask == 0:
            return True
        got = seen.get(mask)
        if got is not None:
            return got
        ok = False
        for v in bits_of(mask):
            nb = adj[v] & mask
            if nb.bit_count() == 2:
                if rec(mask & ~(nb | (1 << v))):
                    ok = True
                    break
        seen[mask] = ok
        return ok

    return rec(full)


def in_family_F(g: Graph) -> bool:
    """Peel recursion anchored at a pendant path: a leaf a, its degree-2
    neighbor b, and b's other neighbor v come off together."""
    _check_forest(g)
    if g.n % 3 != 0:
        return False
    adj = g.adj
    full = (1 << g.n) - 1
    seen: dict[int, bool] = {}

    def rec(mask: int) -> bool:
        if mask == 0:
            return True
        got = seen.get(mask)
        if got is not None:
            return got
        ok = False
        for a in bits_of(mask):
            nb_a = adj[a] & mask
            if nb_a.bit_count() != 1:
                continue
            b = nb_a.bit_length() - 1
            nb_b = adj[b] & mask
            if nb_b.bit_count() != 2:
                continue
            v_bit = nb_b & ~(1 << a)
            if rec(mask & ~((1 << a) | (1 << b) | v_bit)):
                ok = True
                break
        seen[mask] = ok
        return ok

    return rec(full)


# -- closed forms --------------------------------------------------------------


@lru_cache(maxsize=None)
def recurrence_f(n: int) -> int:
    """Worst-case move count for the path stripe game with the minimizing
    player nominating, built from the split recursion.

    Nominating vertex k on a path of n vertices makes the responder choose
    between the two sides; each branch needs enough room for the taken copy.
    The move itself contributes the leading 1.  Solves to floor((n+1)/4).
    """
    if n < 0:
        raise InvalidInput("recurrence argument must be nonnegative")
    if n <= 2:
        return 0
    best = None
    for k in range(1, n + 1):
        branches = []
        if k <= n - 2:
            branches.append(recurrence_f(k - 1) + recurrence_f(n - k - 2))
        if k >= 3:
            branches.append(recurrence_f(k - 3) + recurrence_f(n - k))
        if not branches:
            continue
        worst = max(branches)
        if best is None or worst < best:
            best = worst
    assert best is not None
    return 1 + best


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def closed_form(family: str, params: Mapping[str, int], spec: GameSpec) -> int | None:
    """Known exact value for this (family, game) pair, or None if the pair
    has no settled formula."""
    kind = spec.pattern.kind
    if kind == engine.GENERIC:
        return None
    init = spec.initiator
    p = dict(params)

    if family == "path":
        n = p["n"]
        if n < 3:
            return 0
        if kind == engine.STAR:
            # Minimizer initiating builds a smallest maximal packing: blocks
            # of (skip 2, take 3) force ceil((n-2)/5) = floor((n+2)/5) copies.
            return n // 3 if init == engine.MAXIMIZER else (n + 2) // 5
        if kind == engine.STRIPE:
            return n // 3 if init == engine.MAXIMIZER else (n + 1) // 4
        if kind == engine.UNROOTED and init == engine.MINIMIZER:
            return n // 3  # responder-Max play realizes the packing number
        return None

    if family == "complete_bipartite":
        r, s = sorted((p["r"], p["s"]))
        if s < 2 or kind == engine.UNROOTED:
            return None
        return min(r, (r + s) // 3) if init == engine.MAXIMIZER else _ceil_div(r, 2)

    if family == "comb":
        m = p["m"]
        if kind in (engine.STAR, engine.STRIPE) and init == engine.MINIMIZER:
            return _ceil_div(m, 2)
        return None

    if family == "double_corona":
        m = p["m"]
        if kind == engine.STAR and init == engine.MAXIMIZER and m % 3 == 0:
            return m // 3
        return None

    if family == "caterpillar":
        m = p["m"]
        if kind == engine.STAR and init == engine.MINIMIZER:
            return m  # member of the two-leaf-star family, hence perfect
        if kind in (engine.STAR, engine.STRIPE) and init == engine.MAXIMIZER:
            return _ceil_div(m, 2)
        return None

    if family == "grid":
        rows, m = p["rows"], p["cols"]
        if rows == 2 and m >= 2:
            if kind == engine.STAR:
                return _ceil_div(m, 2)
            if kind == engine.STRIPE:
                return _ceil_div(m, 2) if init == engine.MINIMIZER else m // 2
        if rows == 3:
            if kind == engine.STAR and init == engine.MAXIMIZER:
                return m
            if kind == engine.STRIPE and init == engine.MAXIMIZER:
                # perfect only at widths 1 and 3; at width 2 the responder
                # splits the board after one move (the graph is the 2x3 grid)
                return m if m in (1, 3) else m - 1
        return None

    if family == "rooks2":
        m = p["m"]
        if m % 3 != 0 or kind == engine.UNROOTED:
            return None
        if kind == engine.STAR or init == engine.MINIMIZER:
            return 2 * m // 3
        # stripe with the minimizing player responding
        return 2 if m == 3 else 2 * m // 3 - 1

    if family == "mop":
        name = p.get("name")
        if name == "k3":
            return 1
        if name in ("fan6", "snake6", "sun6"):
            if kind == engine.STRIPE and init == engine.MAXIMIZER:
                return 1
            if kind in (engine.STAR, engine.STRIPE):
                return 2
        return None

    if family == "familyD":
        if kind == engine.STAR and init == engine.MINIMIZER:
            return p["m"]
        return None

    if family == "familyE":
        if kind == engine.STAR and init == engine.MAXIMIZER:
            return p["k"]
        return None

    if family == "familyF":
        if kind == engine.STRIPE and init == engine.MAXIMIZER:
            return p["k"]
        return None

    return None


def closed_form_instance(inst: FamilyInstance, spec: GameSpec) -> int | None:
    return closed_form(inst.family, inst.params, spec)


# -- specifier parsing ----------------------------------------------------------

_ALIASES = {
    "kbip": "complete_bipartite",
    "combe": "comb",
}


def parse_family(text: str) -> FamilyInstance:
    """Build an instance from a compact specifier.

    Examples: ``path:7``, ``grid:2x9``, ``kbip:3x4``, ``rooks2:6``,
    ``comb:3``, ``mop:fan6``, ``familyE:seed=42,k=3``, ``claw_gadget``.
    """
    text = text.strip()
    name, _, arg = text.partition(":")
    name = _ALIASES.get(name, name)
    try:
        if name == "claw_gadget":
            _require(arg == "", "claw_gadget takes no parameters")
            return gen_claw_gadget()
        _require(arg != "", f"family {name!r} needs parameters")
        if name == "path":
            return gen_path(int(arg))
        if name == "cycle":
            return gen_cycle(int(arg))
        if name == "comb":
            return gen_comb(int(arg))
        if name == "double_corona":
            return gen_double_corona(int(arg))
        if name == "caterpillar":
            return gen_caterpillar(int(arg))
        if name == "rooks2":
            return gen_rooks2(int(arg))
        if name == "grid":
            a, _, b = arg.partition("x")
            return gen_grid(int(a), int(b))
        if name == "complete_bipartite":
            a, _, b = arg.partition("x")
            return gen_complete_bipartite(int(a), int(b))
        if name == "mop":
            if "=" not in arg:
                return gen_mop(name=arg)
            kv = _parse_kv(arg, {"n", "chords"})
            chords = [
                tuple(int(x) for x in c.split("-"))
                for c in str(kv.get("chords", "")).split(";")
                if c
            ]
            return gen_mop(n=int(kv["n"]), chords=chords)
        if name in ("familyD", "familyE", "familyF"):
            kv = _parse_kv(arg, {"seed", "m", "k"})
            seed = int(kv.get("seed", 0))
            if name == "familyD":
                return gen_family_D(int(kv["m"]), seed)
            size = int(kv["k"])
            gen = gen_family_E if name == "familyE" else gen_family_F
            return gen(size, seed)
    except InvalidInput:
        raise
    except (KeyError, ValueError) as exc:
        raise InvalidInput(f"bad family specifier {text!r}: {exc}") from exc
    raise InvalidInput(f"unknown family {name!r}")


def _parse_kv(arg: str, allowed: set[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    for part in arg.split(","):
        key, eq, val = part.partition("=")
        _require(eq == "=", f"expected key=value, got {part!r}")
        key = key.strip()
        _require(key in allowed, f"unknown parameter {key!r}")
        out[key] = val.strip()
    return out
