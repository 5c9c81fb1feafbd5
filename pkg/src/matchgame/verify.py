"""Verification suites: closed forms against the solver, perfect-tree scans
against the recognizers, and randomized invariant corpora.

Each suite returns a :class:`VerificationReport` of (instance, predicted,
computed) rows; a report passes only if every row matches.  The suites are
deterministic given the seed, so the CLI, the test suite, and a fresh
checkout all see the same numbers.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import engine, families, packing, solver, strategies
from .engine import MAXIMIZER, MINIMIZER, GameSpec, Pattern
from .errors import InvalidInput
from .graphs import Graph, enumerate_free_trees, random_gnp

DEFAULT_SEED = 20260822


@dataclass(frozen=True, slots=True)
class Row:
    """One checked fact: a predicted and a computed value for an instance."""

    instance: str
    predicted: str
    computed: str
    ok: bool

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "predicted": self.predicted,
            "computed": self.computed,
            "ok": self.ok,
        }


@dataclass(slots=True)
class VerificationReport:
    """A named suite of rows; passes only when every row matches."""

    suite: str
    claim: str
    rows: list[Row] = field(default_factory=list)
    seconds: float = 0.0

    def check(self, instance: str, predicted, computed) -> None:
        self.rows.append(
            Row(instance, str(predicted), str(computed), predicted == computed)
        )

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def failures(self) -> list[Row]:
        return [row for row in self.rows if not row.ok]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "claim": self.claim,
            "passed": self.passed,
            "checked": len(self.rows),
            "failed": len(self.failures),
            "seconds": round(self.seconds, 3),
            "rows": [row.to_dict() for row in self.rows],
        }

    def render_text(self, verbose: bool = False) -> str:
        mark = "PASS" if self.passed else "FAIL"
        head = (
            f"[{mark}] {self.suite}: {len(self.rows) - len(self.failures)}"
            f"/{len(self.rows)} checks ({self.seconds:.2f}s)  -- {self.claim}"
        )
        shown = self.rows if verbose else self.failures
        width = max((len(r.instance) for r in shown), default=0)
        lines = [head]
        for row in shown:
            tag = "ok  " if row.ok else "FAIL"
            lines.append(
                f"  {tag} {row.instance:<{width}}  predicted={row.predicted}"
                f"  computed={row.computed}"
            )
        return "\n".join(lines)


def _timed(fn):
    """Stamp the report with its wall-clock runtime."""

    def wrapper(*args, **kwargs) -> VerificationReport:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.seconds = time.perf_counter() - t0
        return report

    return wrapper


def _spec(kind: str, initiator: str) -> GameSpec:
    return GameSpec(Pattern(kind), initiator)


def _solve_value(g: Graph, spec: GameSpec) -> int:
    return solver.solve(g, spec, want_pv=False).value


def _corpus(rng: random.Random, count: int, min_n: int, max_n: int,
            ps: tuple[float, ...]) -> list[tuple[str, Graph]]:
    out = []
    for i in range(count):
        n = rng.randrange(min_n, max_n + 1)
        p = ps[i % len(ps)]
        g = random_gnp(n, p, rng)
        out.append((f"gnp#{i}(n={n},p={p})", g))
    return out


# -- closed-form suites -------------------------------------------------------


@_timed
def suite_recurrence() -> VerificationReport:
    rep = VerificationReport(
        "recurrence",
        "segment recurrence equals floor((n+1)/4) and matches the solver on paths",
    )
    for n in range(0, 41):
        rep.check(f"f({n})", (n + 1) // 4, families.recurrence_f(n))
    spec = _spec(engine.STRIPE, MINIMIZER)
    for n in range(3, 17):
        g = families.parse_family(f"path:{n}").graph
        rep.check(f"path:{n} stripe min-init", families.recurrence_f(n), _solve_value(g, spec))
    return rep


@_timed
def suite_paths() -> VerificationReport:
    rep = VerificationReport(
        "paths",
        "path game values match their closed forms; the star game with the "
        "minimizer initiating equals the minimum maximal packing size",
    )
    for n in range(3, 17):
        inst = families.parse_family(f"path:{n}")
        for kind in (engine.STAR, engine.STRIPE):
            for init in (MAXIMIZER, MINIMIZER):
                spec = _spec(kind, init)
                want = families.closed_form_instance(inst, spec)
                rep.check(
                    f"path:{n} {kind} {init}-init",
                    want,
                    _solve_value(inst.graph, spec),
                )
        rep.check(
            f"path:{n} star min-init = min_maximal",
            _solve_value(inst.graph, _spec(engine.STAR, MINIMIZER)),
            packing.min_maximal(inst.graph).size,
        )
        rep.check(
            f"path:{n} unrooted min-init = mu",
            families.closed_form_instance(inst, _spec(engine.UNROOTED, MINIMIZER)),
            packing.mu(inst.graph).size,
        )
    return rep


@_timed
def suite_complete_bipartite() -> VerificationReport:
    rep = VerificationReport(
        "complete-bipartite",
        "complete bipartite values: min(r, floor((r+s)/3)) when the maximizer "
        "initiates, ceil(r/2) when the minimizer initiates (r <= s)",
    )
    for r in range(1, 4):
        for s in range(max(r, 3), 6):
            inst = families.parse_family(f"kbip:{r}x{s}")
            for kind in (engine.STAR, engine.STRIPE):
                for init in (MAXIMIZER, MINIMIZER):
                    spec = _spec(kind, init)
                    rep.check(
                        f"kbip:{r}x{s} {kind} {init}-init",
                        families.closed_form_instance(inst, spec),
                        _solve_value(inst.graph, spec),
                    )
    return rep


@_timed
def suite_grids() -> VerificationReport:
    rep = VerificationReport(
        "grids",
        "two-row grids: star value ceil(m/2) for every role split, stripe "
        "ceil(m/2)/floor(m/2) by initiator; three-row grids: star perfect with "
        "the maximizer initiating, stripe m only at widths 1 and 3",
    )
    for m in range(2, 8):
        inst = families.parse_family(f"grid:2x{m}")
        for kind in (engine.STAR, engine.STRIPE):
            for init in (MAXIMIZER, MINIMIZER):
                spec = _spec(kind, init)
                rep.check(
                    f"grid:2x{m} {kind} {init}-init",
                    families.closed_form_instance(inst, spec),
                    _solve_value(inst.graph, spec),
                )
    for m in range(1, 6):
        inst = families.parse_family(f"grid:3x{m}")
        for kind in (engine.STAR, engine.STRIPE):
            spec = _spec(kind, MAXIMIZER)
            rep.check(
                f"grid:3x{m} {kind} max-init",
                families.closed_form_instance(inst, spec),
                _solve_value(inst.graph, spec),
            )
    return rep


@_timed
def suite_rooks() -> VerificationReport:
    rep = VerificationReport(
        "rooks",
        "two-row rook graphs (m divisible by 3): star value 2m/3 for both "
        "initiators; stripe 2m/3 with the minimizer initiating, and 2 (m=3) "
        "or 2m/3-1 (m=6) with the maximizer initiating",
    )
    for m in (3, 6):
        inst = families.parse_family(f"rooks2:{m}")
        for kind in (engine.STAR, engine.STRIPE):
            for init in (MAXIMIZER, MINIMIZER):
                spec = _spec(kind, init)
                rep.check(
                    f"rooks2:{m} {kind} {init}-init",
                    families.closed_form_instance(inst, spec),
                    _solve_value(inst.graph, spec),
                )
    return rep


@_timed
def suite_tree_families(seed: int = DEFAULT_SEED) -> VerificationReport:
    rep = VerificationReport(
        "tree-families",
        "comb, double corona, caterpillar, and the three recognizer families "
        "attain their sharp closed-form values",
    )
    for m in range(1, 6):
        inst = families.parse_family(f"comb:{m}")
        for kind in (engine.STAR, engine.STRIPE):
            spec = _spec(kind, MINIMIZER)
            rep.check(
                f"comb:{m} {kind} min-init",
                families.closed_form_instance(inst, spec),
                _solve_value(inst.graph, spec),
            )
    for m in (3, 6):
        inst = families.parse_family(f"double_corona:{m}")
        spec = _spec(engine.STAR, MAXIMIZER)
        rep.check(
            f"double_corona:{m} star max-init",
            families.closed_form_instance(inst, spec),
            _solve_value(inst.graph, spec),
        )
    for m in range(1, 6):
        inst = families.parse_family(f"caterpillar:{m}")
        spec = _spec(engine.STAR, MINIMIZER)
        rep.check(
            f"caterpillar:{m} star min-init",
            m,
            _solve_value(inst.graph, spec),
        )
        for kind in (engine.STAR, engine.STRIPE):
            spec = _spec(kind, MAXIMIZER)
            rep.check(
                f"caterpillar:{m} {kind} max-init",
                families.closed_form_instance(inst, spec),
                _solve_value(inst.graph, spec),
            )
    rng = random.Random(seed)
    for idx in range(6):
        m = 3 + idx % 3
        inst = families.parse_family(f"familyD:m={m},seed={rng.randrange(10**6)}")
        rep.check(
            f"{inst.family} m={m} #{idx} star min-init",
            m,
            _solve_value(inst.graph, _spec(engine.STAR, MINIMIZER)),
        )
    for idx in range(6):
        k = 2 + idx % 4
        inst = families.parse_family(f"familyE:k={k},seed={rng.randrange(10**6)}")
        rep.check(
            f"{inst.family} k={k} #{idx} star max-init",
            k,
            _solve_value(inst.graph, _spec(engine.STAR, MAXIMIZER)),
        )
        inst = families.parse_family(f"familyF:k={k},seed={rng.randrange(10**6)}")
        rep.check(
            f"{inst.family} k={k} #{idx} stripe max-init",
            k,
            _solve_value(inst.graph, _spec(engine.STRIPE, MAXIMIZER)),
        )
    return rep


@_timed
def suite_mops() -> VerificationReport:
    rep = VerificationReport(
        "mops",
        "the three named six-vertex outerplanar graphs have stripe value 1 "
        "with the minimizer responding and are perfect in the other three "
        "games; the triangle is perfect in all four",
    )
    for name in ("fan6", "snake6", "sun6"):
        inst = families.parse_family(f"mop:{name}")
        for kind in (engine.STAR, engine.STRIPE):
            for init in (MAXIMIZER, MINIMIZER):
                spec = _spec(kind, init)
                want = families.closed_form_instance(inst, spec)
                rep.check(
                    f"mop:{name} {kind} {init}-init",
                    want,
                    _solve_value(inst.graph, spec),
                )
    inst = families.parse_family("mop:k3")
    for kind in (engine.STAR, engine.STRIPE):
        for init in (MAXIMIZER, MINIMIZER):
            rep.check(
                f"mop:k3 {kind} {init}-init",
                1,
                _solve_value(inst.graph, _spec(kind, init)),
            )
    return rep


# -- perfect-tree scans -------------------------------------------------------

_SCAN_CASES = {
    # (pattern kind, responder) -> recognizer for "perfect"
    (engine.STAR, MAXIMIZER): families.in_family_D,
    (engine.STRIPE, MAXIMIZER): lambda g: g.n == 3 and g.is_tree() and g.m == 2,
    (engine.STAR, MINIMIZER): families.in_family_E,
    (engine.STRIPE, MINIMIZER): families.in_family_F,
}


def scan_trees(n: int, kind: str, responder: str) -> tuple[int, int, list[Graph]]:
    """(trees scanned, perfect count, mismatching trees) for one game."""
    recognize = _SCAN_CASES[(kind, responder)]
    initiator = MAXIMIZER if responder == MINIMIZER else MINIMIZER
    spec = _spec(kind, initiator)
    mismatches = []
    perfect_count = 0
    trees = enumerate_free_trees(n)
    for t in trees:
        predicted = recognize(t)
        actual = solver.is_perfect(t, spec)
        if actual:
            perfect_count += 1
        if predicted != actual:
            mismatches.append(t)
    return len(trees), perfect_count, mismatches


@_timed
def suite_tree_scan(orders: tuple[int, ...] = (3, 6, 9, 12)) -> VerificationReport:
    rep = VerificationReport(
        "tree-scan",
        "over every free tree of the given orders, the solver's perfection "
        "flag coincides with the matching structural recognizer in all four "
        "games",
    )
    for n in orders:
        for (kind, responder), _ in _SCAN_CASES.items():
            total, perfect_count, bad = scan_trees(n, kind, responder)
            rep.check(
                f"n={n} {kind} {responder}-responding"
                f" ({total} trees, {perfect_count} perfect)",
                0,
                len(bad),
            )
            for t in bad:
                rep.check(f"  mismatch edges={sorted(t.edges)}", "agree", "differ")
    return rep


# -- randomized invariant corpora ---------------------------------------------


@_timed
def suite_game_bounds(seed: int = DEFAULT_SEED, count: int = 200) -> VerificationReport:
    rep = VerificationReport(
        "game-bounds",
        "on a seeded random corpus: every value is at most mu; with the "
        "maximizer responding the value is at least ceil(mu/2); with the "
        "minimizer responding the star value is at least ceil(mu/3)",
    )
    rng = random.Random(seed)
    violations_le = 0
    violations_half = 0
    violations_third = 0
    total = 0
    for name, g in _corpus(rng, count, 3, 13, (0.15, 0.3, 0.5)):
        mu = packing.mu(g).size
        total += 1
        for kind in (engine.STAR, engine.STRIPE, engine.UNROOTED):
            for init in (MAXIMIZER, MINIMIZER):
                val = _solve_value(g, _spec(kind, init))
                if val > mu:
                    violations_le += 1
                    rep.check(f"{name} {kind} {init}-init <= mu", f"<= {mu}", val)
        for kind in (engine.STAR, engine.STRIPE):
            val = _solve_value(g, _spec(kind, MINIMIZER))  # maximizer responds
            if val < -(-mu // 2):
                violations_half += 1
                rep.check(f"{name} {kind} max-responding >= ceil(mu/2)", f">= {-(-mu // 2)}", val)
        val = _solve_value(g, _spec(engine.STAR, MAXIMIZER))  # minimizer responds
        if val < -(-mu // 3):
            violations_third += 1
            rep.check(f"{name} star min-responding >= ceil(mu/3)", f">= {-(-mu // 3)}", val)
    rep.check(f"value <= mu violations over {total} graphs x 6 games", 0, violations_le)
    rep.check("max-responding ceil(mu/2) violations", 0, violations_half)
    rep.check("star min-responding ceil(mu/3) violations", 0, violations_third)
    return rep


@_timed
def suite_tree_bounds(max_n: int = 12) -> VerificationReport:
    rep = VerificationReport(
        "tree-bounds",
        "exhaustively over free trees, star and stripe values with the "
        "minimizer responding are at least ceil(mu/2)",
    )
    for n in range(3, max_n + 1):
        bad = 0
        trees = enumerate_free_trees(n)
        for t in trees:
            mu = packing.mu(t).size
            for kind in (engine.STAR, engine.STRIPE):
                val = _solve_value(t, _spec(kind, MAXIMIZER))  # minimizer responds
                if val < -(-mu // 2):
                    bad += 1
        rep.check(f"trees n={n} ({len(trees)} trees)", 0, bad)
    return rep


@_timed
def suite_k3_partition(seed: int = DEFAULT_SEED) -> VerificationReport:
    rep = VerificationReport(
        "triangle-partition",
        "every graph whose vertex set partitions into triangles is perfect "
        "for star and stripe with the maximizer responding",
    )
    rng = random.Random(seed)
    cases: list[tuple[str, Graph]] = [
        ("rooks2:3", families.parse_family("rooks2:3").graph),
        ("K3", Graph(3, [(0, 1), (1, 2), (0, 2)])),
        ("K6", Graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6)])),
    ]
    found = 0
    for i in range(160):
        n = rng.choice((6, 9, 12))
        g = random_gnp(n, rng.choice((0.5, 0.65, 0.8)), rng)
        if packing.has_k3_partition(g):
            found += 1
            cases.append((f"gnp#{i}(n={n})", g))
    rep.check("partitionable random graphs found (want >= 20)", True, found >= 20)
    for name, g in cases:
        if not packing.has_k3_partition(g):
            rep.check(f"{name} has partition", True, False)
            continue
        for kind in (engine.STAR, engine.STRIPE):
            spec = _spec(kind, MINIMIZER)  # maximizer responds
            rep.check(
                f"{name} {kind} min-init perfect",
                True,
                solver.is_perfect(g, spec),
            )
    return rep


@_timed
def suite_unrooted(seed: int = DEFAULT_SEED, count: int = 200) -> VerificationReport:
    rep = VerificationReport(
        "unrooted",
        "with the maximizer responding the unrooted value equals mu; with the "
        "minimizer responding it is at most the stripe value",
    )
    rng = random.Random(seed)
    bad_mu = 0
    bad_le = 0
    corpus = _corpus(rng, count, 3, 12, (0.2, 0.4))
    for name, g in corpus:
        mu = packing.mu(g).size
        val = _solve_value(g, _spec(engine.UNROOTED, MINIMIZER))  # max responds
        if val != mu:
            bad_mu += 1
            rep.check(f"{name} unrooted min-init = mu", mu, val)
        ur = _solve_value(g, _spec(engine.UNROOTED, MAXIMIZER))  # min responds
        st = _solve_value(g, _spec(engine.STRIPE, MAXIMIZER))
        if ur > st:
            bad_le += 1
            rep.check(f"{name} unrooted <= stripe (min responding)", f"<= {st}", ur)
    rep.check(f"unrooted = mu violations over {len(corpus)} graphs", 0, bad_mu)
    bad_trees = 0
    tree_count = 0
    for n in range(3, 11):
        for t in enumerate_free_trees(n):
            tree_count += 1
            ur = _solve_value(t, _spec(engine.UNROOTED, MAXIMIZER))
            st = _solve_value(t, _spec(engine.STRIPE, MAXIMIZER))
            if ur > st:
                bad_trees += 1
    rep.check(f"unrooted <= stripe violations, random corpus", 0, bad_le)
    rep.check(f"unrooted <= stripe violations over {tree_count} trees", 0, bad_trees)
    return rep


@_timed
def suite_packing_bounds(seed: int = DEFAULT_SEED, count: int = 300) -> VerificationReport:
    rep = VerificationReport(
        "packing-bounds",
        "ceil(mu/3) <= minimum maximal <= mu; 3*mu <= n; witnesses verify "
        "independently; mu never drops when an edge is added",
    )
    rng = random.Random(seed)
    bad_low = bad_high = bad_three = bad_wit = bad_mono = 0
    total = 0
    for name, g in _corpus(rng, count, 2, 14, (0.15, 0.3, 0.5)):
        total += 1
        res_mu = packing.mu(g)
        res_mm = packing.min_maximal(g)
        if res_mm.size < -(-res_mu.size // 3):
            bad_low += 1
            rep.check(f"{name} mm >= ceil(mu/3)", f">= {-(-res_mu.size // 3)}", res_mm.size)
        if res_mm.size > res_mu.size:
            bad_high += 1
            rep.check(f"{name} mm <= mu", f"<= {res_mu.size}", res_mm.size)
        if 3 * res_mu.size > g.n:
            bad_three += 1
            rep.check(f"{name} 3*mu <= n", f"<= {g.n}", 3 * res_mu.size)
        if len(res_mu.witness) != res_mu.size or not packing.is_packing(g, res_mu.witness):
            bad_wit += 1
            rep.check(f"{name} mu witness valid", True, False)
        if len(res_mm.witness) != res_mm.size or not packing.is_maximal_packing(g, res_mm.witness):
            bad_wit += 1
            rep.check(f"{name} min-maximal witness maximal", True, False)
        missing = [
            (i, j)
            for i in range(g.n)
            for j in range(i + 1, g.n)
            if not g.has_edge(i, j)
        ]
        if missing:
            extra = rng.choice(missing)
            g2 = Graph(g.n, list(g.edges) + [extra])
            if packing.mu(g2).size < res_mu.size:
                bad_mono += 1
                rep.check(f"{name}+{extra} mu monotone", f">= {res_mu.size}", packing.mu(g2).size)
    rep.check(f"lower-bound violations over {total} graphs", 0, bad_low)
    rep.check("upper-bound violations", 0, bad_high)
    rep.check("3*mu <= n violations", 0, bad_three)
    rep.check("witness violations", 0, bad_wit)
    rep.check("monotonicity violations", 0, bad_mono)
    return rep


# -- engine / solver cross-checks ---------------------------------------------


@_timed
def suite_memo(seed: int = DEFAULT_SEED, count: int = 18) -> VerificationReport:
    rep = VerificationReport(
        "memo-soundness",
        "disabling the memo table never changes a game value",
    )
    rng = random.Random(seed)
    for name, g in _corpus(rng, count, 3, 9, (0.25, 0.45)):
        for kind in (engine.STAR, engine.STRIPE, engine.UNROOTED):
            for init in (MAXIMIZER, MINIMIZER):
                spec = _spec(kind, init)
                rep.check(
                    f"{name} {kind} {init}-init",
                    solver.solve(g, spec, use_memo=False, want_pv=False).value,
                    _solve_value(g, spec),
                )
    g = families.parse_family("path:10").graph
    for init in (MAXIMIZER, MINIMIZER):
        spec = _spec(engine.STAR, init)
        rep.check(
            f"path:10 star {init}-init",
            solver.solve(g, spec, use_memo=False, want_pv=False).value,
            _solve_value(g, spec),
        )
    return rep


@_timed
def suite_pv(seed: int = DEFAULT_SEED, count: int = 40) -> VerificationReport:
    rep = VerificationReport(
        "principal-variation",
        "the reported line replays legally, lasts exactly `value` moves, and "
        "ends in a terminal state",
    )
    rng = random.Random(seed)
    cases = _corpus(rng, count, 3, 11, (0.2, 0.4))
    cases.append(("path:9", families.parse_family("path:9").graph))
    cases.append(("grid:2x4", families.parse_family("grid:2x4").graph))
    bad = 0
    for name, g in cases:
        for kind in (engine.STAR, engine.STRIPE, engine.UNROOTED):
            for init in (MAXIMIZER, MINIMIZER):
                spec = _spec(kind, init)
                res = solver.solve(g, spec)
                state = engine.GameState.initial(g)
                legal = True
                for mv in res.pv:
                    if mv.initiation not in engine.legal_initiations(state, spec):
                        legal = False
                        break
                    if mv.image.bits not in engine.image_masks(
                        g, state.available.bits, spec.pattern, mv.initiation
                    ):
                        legal = False
                        break
                    state = engine.apply_move(state, spec, mv)
                if not (
                    legal
                    and len(res.pv) == res.value
                    and engine.is_terminal(state, spec)
                ):
                    bad += 1
                    rep.check(f"{name} {kind} {init}-init PV", "legal", "broken")
    rep.check(f"PV violations over {len(cases)} graphs x 6 games", 0, bad)
    return rep


@_timed
def suite_move_generation(seed: int = DEFAULT_SEED, count: int = 120) -> VerificationReport:
    rep = VerificationReport(
        "move-generation",
        "specialized three-vertex-path move generators agree with the generic "
        "pattern embedder on random graphs and availability masks",
    )
    rng = random.Random(seed)
    bad = 0
    checked = 0
    for name, g in _corpus(rng, count, 2, 10, (0.25, 0.5)):
        avail = rng.randrange(1 << g.n)
        for kind in (engine.STAR, engine.STRIPE, engine.UNROOTED):
            generic = engine.p3_equivalent_generic(kind)
            for v in range(g.n):
                checked += 1
                a = engine.image_masks(g, avail, Pattern(kind), v)
                b = engine.image_masks(g, avail, generic, v)
                if a != b:
                    bad += 1
                    rep.check(f"{name} {kind} v={v} avail={avail:#x}", a, b)
    rep.check(f"mismatches over {checked} (graph, mask, vertex) probes", 0, bad)
    return rep


@_timed
def suite_parallel(seed: int = DEFAULT_SEED) -> VerificationReport:
    rep = VerificationReport(
        "parallel-determinism",
        "splitting the root nominations across worker processes returns "
        "exactly the serial value",
    )
    cases = [
        ("grid:2x6 stripe max", families.parse_family("grid:2x6").graph, _spec(engine.STRIPE, MAXIMIZER)),
        ("path:14 star min", families.parse_family("path:14").graph, _spec(engine.STAR, MINIMIZER)),
        ("kbip:3x5 star max", families.parse_family("kbip:3x5").graph, _spec(engine.STAR, MAXIMIZER)),
    ]
    rng = random.Random(seed)
    for name, g in _corpus(rng, 3, 8, 11, (0.3,)):
        cases.append((f"{name} unrooted min", g, _spec(engine.UNROOTED, MINIMIZER)))
    for name, g, spec in cases:
        serial = _solve_value(g, spec)
        par = solver.solve(g, spec, jobs=2, want_pv=False).value
        rep.check(name, serial, par)
    return rep


@_timed
def suite_strategies() -> VerificationReport:
    rep = VerificationReport(
        "strategy-guarantees",
        "each scripted strategy meets its bound against every legal line of "
        "the other seat, checked by exhaustive game-tree walk",
    )

    def run(name: str, inst, spec, strat, seat, bound, direction) -> None:
        report = strategies.check_guarantee(inst.graph, spec, strat, seat, bound, direction)
        rep.check(
            f"{name} {direction} {bound} (worst {report.worst_value}, {report.leaves} lines)",
            True,
            report.holds,
        )

    for n in range(3, 13):
        inst = families.parse_family(f"path:{n}")
        spec = _spec(engine.STRIPE, MINIMIZER)
        run(f"path:{n} stripe blocker", inst, spec,
            strategies.PathStripeInitiator(inst), "initiator", (n + 1) // 4, "at_most")
    for m in range(2, 7):
        inst = families.parse_family(f"grid:2x{m}")
        run(f"grid:2x{m} star sweep", inst, _spec(engine.STAR, MAXIMIZER),
            strategies.TwoRowStarInitiator(inst), "initiator", -(-m // 2), "at_least")
        run(f"grid:2x{m} star subgrid", inst, _spec(engine.STAR, MAXIMIZER),
            strategies.TwoRowStarResponder(inst), "responder", -(-m // 2), "at_most")
        run(f"grid:2x{m} stripe columns(max)", inst, _spec(engine.STRIPE, MINIMIZER),
            strategies.TwoRowStripeResponder(inst, MAXIMIZER), "responder", -(-m // 2), "at_least")
        run(f"grid:2x{m} stripe columns(min)", inst, _spec(engine.STRIPE, MAXIMIZER),
            strategies.TwoRowStripeResponder(inst, MINIMIZER), "responder", m // 2, "at_most")
    for m in range(1, 5):
        inst = families.parse_family(f"grid:3x{m}")
        run(f"grid:3x{m} star sweep", inst, _spec(engine.STAR, MAXIMIZER),
            strategies.ThreeRowStarInitiator(inst), "initiator", m, "at_least")
    for m, bound in ((3, 2), (6, 4)):
        inst = families.parse_family(f"rooks2:{m}")
        run(f"rooks2:{m} star rows", inst, _spec(engine.STAR, MAXIMIZER),
            strategies.RooksStarInitiator(inst), "initiator", bound, "at_least")
    for m, bound in ((3, 2), (6, 3)):
        inst = families.parse_family(f"rooks2:{m}")
        run(f"rooks2:{m} stripe ledger", inst, _spec(engine.STRIPE, MAXIMIZER),
            strategies.RooksStripeResponder(inst), "responder", bound, "at_most")
    return rep


# -- aggregation ----------------------------------------------------------------

ALL_SUITES = (
    ("recurrence", suite_recurrence),
    ("paths", suite_paths),
    ("complete-bipartite", suite_complete_bipartite),
    ("grids", suite_grids),
    ("rooks", suite_rooks),
    ("tree-families", suite_tree_families),
    ("mops", suite_mops),
    ("tree-scan", suite_tree_scan),
    ("game-bounds", suite_game_bounds),
    ("tree-bounds", suite_tree_bounds),
    ("triangle-partition", suite_k3_partition),
    ("unrooted", suite_unrooted),
    ("packing-bounds", suite_packing_bounds),
    ("memo-soundness", suite_memo),
    ("principal-variation", suite_pv),
    ("move-generation", suite_move_generation),
    ("parallel-determinism", suite_parallel),
    ("strategy-guarantees", suite_strategies),
)


def verify_all(
    quick: bool = False, suites: tuple[str, ...] | None = None
) -> list[VerificationReport]:
    """Run every suite (or the named subset); ``quick`` trims the heavy scans."""
    if suites is not None:
        known = {name for name, _ in ALL_SUITES}
        unknown = [s for s in suites if s not in known]
        if unknown:
            raise InvalidInput(
                f"unknown suite(s) {', '.join(sorted(unknown))}; "
                f"choose from {', '.join(sorted(known))}"
            )
    out = []
    for name, fn in ALL_SUITES:
        if suites is not None and name not in suites:
            continue
        if quick:
            if name == "tree-scan":
                out.append(fn(orders=(3, 6, 9)))
                continue
            if name == "tree-bounds":
                out.append(fn(max_n=10))
                continue
            if name == "game-bounds":
                out.append(fn(count=60))
                continue
            if name == "packing-bounds":
                out.append(fn(count=80))
                continue
            if name == "unrooted":
                out.append(fn(count=60))
                continue
        out.append(fn())
    return out
