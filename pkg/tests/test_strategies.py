"""Scripted strategies: the match runner, the optimal wrapper, and exhaustive
guarantee checks against every legal line of the opposing seat."""

from __future__ import annotations

import pytest

from conftest import ALL_P3_SPECS, spec
from matchgame import engine, families, solver, strategies
from matchgame.engine import GameState
from matchgame.errors import StrategyError
from matchgame.graphs import enumerate_free_trees
from matchgame.strategies import (
    OptimalStrategy,
    PathStripeInitiator,
    RooksStarInitiator,
    RooksStripeResponder,
    ThreeRowStarInitiator,
    TwoRowStarInitiator,
    TwoRowStarResponder,
    TwoRowStripeResponder,
    check_guarantee,
    run_match,
)


def optimal(g, s):
    return OptimalStrategy(solver.Analyzer(g, s))


# -- run_match ------------------------------------------------------------------------


def test_scripted_path_minimizer_vs_optimal_responder():
    inst = families.parse_family("path:7")
    s = spec("stripe", "min")
    record = run_match(inst.graph, s, PathStripeInitiator(inst), optimal(inst.graph, s))
    assert record.value == 2
    assert len(record.moves) == 2
    assert record.taken == 6


def test_subgrid_responder_vs_optimal_initiator_on_2x4():
    inst = families.parse_family("grid:2x4")
    s = spec("star", "max")  # Minimizer responds with the paired-column script
    record = run_match(inst.graph, s, optimal(inst.graph, s), TwoRowStarResponder(inst))
    assert record.value == 2


def test_optimal_vs_optimal_equals_solve():
    for name in ("path:8", "grid:2x4", "rooks2:3", "comb:3"):
        g = families.parse_family(name).graph
        for s in ALL_P3_SPECS:
            record = run_match(g, s, optimal(g, s), optimal(g, s))
            assert record.value == solver.solve(g, s, want_pv=False).value


def test_match_record_serialization():
    g = families.parse_family("path:6").graph
    s = spec("star", "max")
    record = run_match(g, s, optimal(g, s), optimal(g, s))
    d = record.to_dict()
    assert d["value"] == len(d["moves"]) == 2
    assert d["taken"] == 6 and d["remaining"] == []


# -- optimal strategy behavior ---------------------------------------------------------


def test_optimal_takes_unique_move_on_p3():
    g = families.parse_family("path:3").graph
    s = spec("star", "max")
    strat = optimal(g, s)
    state = GameState.initial(g)
    v = strat.initiation(state, s)
    assert v == 1
    assert strat.response(state, s, v).to_list() == [0, 1, 2]


def test_optimal_min_responder_drains_corona_centers():
    inst = families.parse_family("double_corona:3")
    s = spec("star", "max")  # Maximizer initiates, Minimizer responds
    strat = optimal(inst.graph, s)
    state = GameState.initial(inst.graph)
    centers = set(inst.labels["centers"])
    for v in engine.legal_initiations(state, s):
        image = strat.response(state, s, v)
        assert set(image.to_list()) == centers  # all three centers in one move


def test_optimal_matches_solver_on_all_small_trees():
    for n in range(3, 10):
        for tree in enumerate_free_trees(n):
            for kind in ("star", "stripe"):
                for who in ("max", "min"):
                    s = spec(kind, who)
                    record = run_match(tree, s, optimal(tree, s), optimal(tree, s))
                    assert record.value == solver.solve(tree, s, want_pv=False).value


# -- scripted strategies are checked, not trusted --------------------------------------


def test_path_blocker_guarantee():
    for n in range(3, 13):
        inst = families.parse_family(f"path:{n}")
        rep = check_guarantee(
            inst.graph, spec("stripe", "min"), PathStripeInitiator(inst),
            "initiator", (n + 1) // 4, "at_most",
        )
        assert rep.holds, rep.describe()
        assert rep.worst_value == (n + 1) // 4  # the script is exactly optimal here


@pytest.mark.parametrize("m", range(2, 7))
def test_two_row_grid_guarantees(m):
    inst = families.parse_family(f"grid:2x{m}")
    half_up, half_down = -(-m // 2), m // 2
    rep = check_guarantee(inst.graph, spec("star", "max"),
                          TwoRowStarInitiator(inst), "initiator", half_up, "at_least")
    assert rep.holds, rep.describe()
    rep = check_guarantee(inst.graph, spec("star", "max"),
                          TwoRowStarResponder(inst), "responder", half_up, "at_most")
    assert rep.holds, rep.describe()
    rep = check_guarantee(inst.graph, spec("stripe", "min"),
                          TwoRowStripeResponder(inst, "max"), "responder", half_up, "at_least")
    assert rep.holds, rep.describe()
    rep = check_guarantee(inst.graph, spec("stripe", "max"),
                          TwoRowStripeResponder(inst, "min"), "responder", half_down, "at_most")
    assert rep.holds, rep.describe()


@pytest.mark.parametrize("m", range(1, 5))
def test_three_row_sweep_guarantee(m):
    inst = families.parse_family(f"grid:3x{m}")
    rep = check_guarantee(inst.graph, spec("star", "max"),
                          ThreeRowStarInitiator(inst), "initiator", m, "at_least")
    assert rep.holds, rep.describe()


@pytest.mark.parametrize("m, bound", [(3, 2), (6, 4)])
def test_rooks_row_initiator_guarantee(m, bound):
    inst = families.parse_family(f"rooks2:{m}")
    rep = check_guarantee(inst.graph, spec("star", "max"),
                          RooksStarInitiator(inst), "initiator", bound, "at_least")
    assert rep.holds, rep.describe()


@pytest.mark.parametrize("m, bound", [(3, 2), (6, 3)])
def test_rooks_ledger_responder_guarantee(m, bound):
    inst = families.parse_family(f"rooks2:{m}")
    rep = check_guarantee(inst.graph, spec("stripe", "max"),
                          RooksStripeResponder(inst), "responder", bound, "at_most")
    assert rep.holds, rep.describe()
    if m == 6:
        assert not rep.holds or rep.worst_value <= 3  # imperfect: 3 < 2m/3


# -- guarantee checker semantics --------------------------------------------------------


def test_check_guarantee_searches_all_adversary_lines():
    # a bound the strategy cannot actually force must be reported as failing
    inst = families.parse_family("grid:2x4")
    rep = check_guarantee(inst.graph, spec("star", "max"),
                          TwoRowStarInitiator(inst), "initiator", 3, "at_least")
    assert not rep.holds
    assert rep.worst_value == 2


def test_check_guarantee_validates_arguments():
    inst = families.parse_family("path:5")
    strat = PathStripeInitiator(inst)
    with pytest.raises(ValueError):
        check_guarantee(inst.graph, spec("stripe", "min"), strat, "referee", 1, "at_most")
    with pytest.raises(ValueError):
        check_guarantee(inst.graph, spec("stripe", "min"), strat, "initiator", 1, "sideways")


def test_scripted_strategy_rejects_wrong_family():
    inst = families.parse_family("grid:2x4")
    with pytest.raises(StrategyError):
        PathStripeInitiator(inst)
