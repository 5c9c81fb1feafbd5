"""Game mechanics: legal initiations, responses, move application, terminal
detection, generic-pattern embeddings, and playout invariants."""

from __future__ import annotations

import random

import pytest

from conftest import ALL_P3_SPECS, spec
from matchgame import engine, families
from matchgame.engine import GameSpec, GameState, Move, Pattern
from matchgame.graphs import Graph, VertexSet, make_graph, random_gnp

P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
P5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
CLAW = make_graph(4, [(0, 1), (0, 2), (0, 3)])
C4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K3 = make_graph(3, [(0, 1), (1, 2), (2, 0)])


# -- pattern construction ------------------------------------------------------------


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern("star", F=K3)  # named variants carry no explicit graph
    with pytest.raises(ValueError):
        Pattern.generic(Graph(1, []))  # too small
    with pytest.raises(ValueError):
        Pattern.generic(Graph(9, [(i, i + 1) for i in range(8)]))  # too big
    with pytest.raises(ValueError):
        Pattern.generic(Graph(4, [(0, 1), (2, 3)]))  # disconnected
    with pytest.raises(ValueError):
        Pattern.generic(K3, root=5)  # root outside pattern
    assert Pattern.star().order == 3
    assert Pattern.generic(Graph(2, [(0, 1)]), root=0).order == 2


def test_spec_serialization_round_trip():
    for s in ALL_P3_SPECS:
        assert GameSpec.from_dict(s.to_dict()) == s
    gen = GameSpec(Pattern.generic(CLAW, root=0), engine.MINIMIZER)
    back = GameSpec.from_dict(gen.to_dict())
    assert back.pattern.kind == "generic" and back.pattern.root == 0
    assert back.pattern.F == CLAW


def test_move_serialization_round_trip():
    mv = Move(1, VertexSet.of(4, [1, 2, 3]))
    assert mv.to_dict() == {"init": 1, "image": [1, 2, 3]}
    assert Move.from_dict(mv.to_dict(), 4) == mv


# -- legal initiations ---------------------------------------------------------------


def test_p4_star_initiations_are_interior():
    state = GameState.initial(P4)
    assert engine.legal_initiations(state, spec("star", "max")).to_list() == [1, 2]


def test_p4_stripe_initiations_everywhere():
    state = GameState.initial(P4)
    assert engine.legal_initiations(state, spec("stripe", "max")).to_list() == [0, 1, 2, 3]


def test_claw_initiations_by_variant():
    state = GameState.initial(CLAW)
    assert engine.legal_initiations(state, spec("unrooted", "max")).to_list() == [0, 1, 2, 3]
    assert engine.legal_initiations(state, spec("stripe", "max")).to_list() == [1, 2, 3]
    assert engine.legal_initiations(state, spec("star", "max")).to_list() == [0]


# -- responses -----------------------------------------------------------------------


def test_p5_star_center_has_unique_response():
    state = GameState.initial(P5)
    moves = engine.responses(state, spec("star", "max"), 2)
    assert [mv.image.to_list() for mv in moves] == [[1, 2, 3]]


def test_claw_center_star_has_three_leaf_pairs():
    state = GameState.initial(CLAW)
    moves = engine.responses(state, spec("star", "max"), 0)
    assert {tuple(mv.image.to_list()) for mv in moves} == {(0, 1, 2), (0, 1, 3), (0, 2, 3)}


def test_c4_stripe_end_has_two_directions():
    state = GameState.initial(C4)
    moves = engine.responses(state, spec("stripe", "max"), 0)
    assert {tuple(mv.image.to_list()) for mv in moves} == {(0, 1, 2), (0, 2, 3)}


def test_response_requires_legal_initiation():
    state = GameState.initial(P4)
    with pytest.raises(ValueError):
        engine.responses(state, spec("star", "max"), 0)  # end vertex, no star image


def test_responses_deduplicated_by_image():
    # triangle, star at 0: orderings of {1,2} give the same image set once
    state = GameState.initial(K3)
    assert len(engine.responses(state, spec("star", "max"), 0)) == 1


# -- apply / terminal ----------------------------------------------------------------


def test_single_move_empties_p3():
    p3 = make_graph(3, [(0, 1), (1, 2)])
    for s in ALL_P3_SPECS:
        state = GameState.initial(p3)
        assert not engine.is_terminal(state, s)
        v = engine.legal_initiations(state, s).to_list()[0]
        mv = engine.responses(state, s, v)[0]
        state = engine.apply_move(state, s, mv)
        assert engine.is_terminal(state, s)
        assert state.available.to_list() == []
        assert state.moves_played == 1


def test_p4_after_taking_tail_is_terminal():
    s = spec("star", "max")
    state = GameState.initial(P4)
    state = engine.apply_move(state, s, Move(2, VertexSet.of(4, [1, 2, 3])))
    assert state.available.to_list() == [0]
    assert engine.is_terminal(state, s)


def test_2x2_grid_any_move_is_terminal():
    g = families.parse_family("grid:2x2").graph
    for s in ALL_P3_SPECS:
        root = GameState.initial(g)
        for v in engine.legal_initiations(root, s):
            for mv in engine.responses(root, s, v):
                nxt = engine.apply_move(root, s, mv)
                assert len(nxt.available) == 1
                assert engine.is_terminal(nxt, s)


def test_apply_rejects_illegal_move():
    s = spec("star", "max")
    state = GameState.initial(P4)
    with pytest.raises(ValueError):
        engine.apply_move(state, s, Move(1, VertexSet.of(4, [0, 1, 3])))  # not a star image


# -- generic embeddings --------------------------------------------------------------


def test_rooted_edge_pattern_on_path():
    k2 = Pattern.generic(Graph(2, [(0, 1)]), root=0)
    p3 = make_graph(3, [(0, 1), (1, 2)])
    masks = engine.image_masks(p3, 0b111, k2, 1)
    assert set(masks) == {0b011, 0b110}


def test_claw_pattern_at_gadget_apex():
    inst = families.gen_claw_gadget()
    pattern = Pattern.generic(CLAW, root=0)  # root at the degree-3 center
    apex = inst.labels["apex"]
    full = (1 << inst.graph.n) - 1
    masks = engine.image_masks(inst.graph, full, pattern, apex)
    assert len(masks) >= 1
    for m in masks:
        assert m & (1 << apex)
        assert m.bit_count() == 4


def test_non_induced_copy_allowed_on_triangle():
    star_center = Pattern.generic(make_graph(3, [(0, 1), (0, 2)]), root=0)
    masks = engine.image_masks(K3, 0b111, star_center, 0)
    assert masks == [0b111]


def test_automorphic_images_deduplicated():
    # P3 rooted at an end mapped into C4 at v=0: two direction choices, two images
    p3_end = Pattern.generic(make_graph(3, [(0, 1), (1, 2)]), root=0)
    masks = engine.image_masks(C4, 0b1111, p3_end, 0)
    assert sorted(masks) == [0b0111, 0b1101]


# -- specialized vs generic equivalence ----------------------------------------------


@pytest.mark.parametrize("kind", ["star", "stripe", "unrooted"])
def test_specialized_matches_generic_on_random_states(kind):
    rng = random.Random(hash(kind) & 0xFFFF)
    generic = engine.p3_equivalent_generic(kind)
    named = {"star": Pattern.star(), "stripe": Pattern.stripe(), "unrooted": Pattern.unrooted_p3()}[kind]
    for _ in range(170):
        n = rng.randint(3, 12)
        g = random_gnp(n, rng.choice((0.2, 0.35, 0.5)), rng)
        avail = rng.getrandbits(n)
        assert engine.initiation_mask(g, avail, named) == engine.initiation_mask(g, avail, generic)
        for v in range(n):
            if avail & (1 << v):
                a = sorted(engine.image_masks(g, avail, named, v))
                b = sorted(engine.image_masks(g, avail, generic, v))
                assert a == b


def test_terminal_coincides_across_p3_variants_exhaustively():
    rng = random.Random(99)
    patterns = [Pattern.star(), Pattern.stripe(), Pattern.unrooted_p3()]
    for _ in range(40):
        n = rng.randint(3, 10)
        g = random_gnp(n, 0.3, rng)
        for _ in range(30):
            avail = rng.getrandbits(n)
            answers = {engine.initiation_mask(g, avail, p) == 0 for p in patterns}
            assert len(answers) == 1


# -- playout invariants --------------------------------------------------------------


def random_playout(g, game_spec, rng):
    state = GameState.initial(g)
    while not engine.is_terminal(state, game_spec):
        opts = engine.legal_initiations(state, game_spec).to_list()
        v = rng.choice(opts)
        mv = rng.choice(engine.responses(state, game_spec, v))
        state = engine.apply_move(state, game_spec, mv)
    return state


def test_random_playouts_respect_disjointness_and_bounds():
    rng = random.Random(5)
    for _ in range(60):
        g = random_gnp(rng.randint(3, 11), 0.4, rng)
        s = rng.choice(ALL_P3_SPECS)
        state = random_playout(g, s, rng)
        union = 0
        for mv in state.history:
            assert mv.initiation in mv.image
            assert union & mv.image.bits == 0
            union |= mv.image.bits
            # each image really was a legal copy when it was taken
            assert mv.image.bits.bit_count() == 3
        assert union | state.available.bits == (1 << g.n) - 1 if g.n else True
        assert engine.initiation_mask(g, state.available.bits, s.pattern) == 0
        assert state.moves_played <= g.n // 3
