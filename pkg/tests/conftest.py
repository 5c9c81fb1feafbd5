"""Shared helpers for the test suite.

Most tests need a (pattern, initiator) pair and the corresponding exact game
value; these helpers keep that boilerplate in one place.
"""

from __future__ import annotations

import pytest

from matchgame import engine, families, solver
from matchgame.engine import GameSpec, Pattern


def spec(kind: str, initiator: str) -> GameSpec:
    """Build a GameSpec from short names ("star"/"stripe"/"unrooted", "max"/"min")."""
    pattern = {
        "star": Pattern.star,
        "stripe": Pattern.stripe,
        "unrooted": Pattern.unrooted_p3,
    }[kind]()
    return GameSpec(pattern, initiator)


ALL_P3_SPECS = tuple(
    spec(kind, who)
    for kind in ("star", "stripe", "unrooted")
    for who in (engine.MAXIMIZER, engine.MINIMIZER)
)


def value(g, game_spec: GameSpec, cap: int = 24) -> int:
    """Exact game value without the PV (faster for bulk checks)."""
    return solver.solve(g, game_spec, cap=cap, want_pv=False).value


def family_graph(text: str):
    """Graph of the family instance described by a CLI-style specifier."""
    return families.parse_family(text).graph


@pytest.fixture
def path7():
    return family_graph("path:7")
