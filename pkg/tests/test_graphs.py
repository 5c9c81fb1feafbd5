"""Graph core: construction, bitset sets, serialization, tree canonicalization,
and the free-tree enumerator (cross-checked against a labeled-tree oracle)."""

from __future__ import annotations

import itertools
import random

import pytest

from matchgame import graphs
from matchgame.errors import InvalidInput
from matchgame.graphs import (
    Graph,
    VertexSet,
    enumerate_free_trees,
    graph_from_json,
    graph_to_json,
    make_graph,
    random_gnp,
    read_edge_list,
    relabel,
    tree_code,
    tree_from_prufer,
    write_edge_list,
)


# -- construction -------------------------------------------------------------------


def test_path3_degrees():
    g = make_graph(3, [(0, 1), (1, 2)])
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]


def test_empty_graph():
    g = make_graph(0, [])
    assert g.n == 0 and g.m == 0


def test_cycle4_degrees():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert all(g.degree(v) == 2 for v in range(4))


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(0, 3)]),  # endpoint out of range
        (3, [(1, 1)]),  # self-loop
        (65, []),  # vertex cap
        (-1, []),  # negative order
    ],
)
def test_construction_rejects_bad_input(n, edges):
    with pytest.raises((InvalidInput, ValueError)):
        Graph(n, edges)


def test_adjacency_symmetry_random():
    rng = random.Random(7)
    for _ in range(25):
        g = random_gnp(rng.randint(1, 16), rng.random(), rng)
        for u in range(g.n):
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)
            assert not g.has_edge(u, u)
            assert g.adj[u] >> g.n == 0  # no bits above n-1


def test_duplicate_and_reversed_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


# -- neighbor queries restricted to an available set --------------------------------


def test_neighbors_within_available():
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    full = VertexSet.full(4)
    assert p4.neighbors_in(1, full).to_list() == [0, 2]
    assert p4.neighbors_in(1, VertexSet.of(4, [0, 1, 3])).to_list() == [0]
    # queried vertex outside the set: empty, not an error
    assert p4.neighbors_in(1, VertexSet.empty(4)).to_list() == []


def test_vertexset_algebra():
    a = VertexSet.of(8, [0, 2, 4])
    b = VertexSet.of(8, [2, 3])
    assert (a & b).to_list() == [2]
    assert (a | b).to_list() == [0, 2, 3, 4]
    assert (a - b).to_list() == [0, 4]
    assert len(a) == 3 and 4 in a and 5 not in a
    assert a.add(5).to_list() == [0, 2, 4, 5]
    assert a.remove(0).to_list() == [2, 4]
    assert a.complement().to_list() == [1, 3, 5, 6, 7]


def test_vertexset_rejects_stray_bits():
    with pytest.raises((InvalidInput, ValueError)):
        VertexSet(1 << 5, 3)


# -- serialization -------------------------------------------------------------------


def test_json_round_trip():
    g = make_graph(4, [(2, 3), (0, 1), (1, 2)])
    text = graph_to_json(g)
    assert graph_from_json(text) == g
    # edges are sorted lexicographically on output
    assert text.index("[0, 1]") < text.index("[1, 2]") < text.index("[2, 3]")


def test_edge_list_round_trip():
    g = make_graph(5, [(0, 1), (0, 2), (3, 4)])
    text = write_edge_list(g)
    first = text.splitlines()[0].split()
    assert first == ["5", "3"]
    assert read_edge_list(text) == g


@pytest.mark.parametrize("text", ['{"n": 3}', '{"edges": []}', '{"n": 3, "edges": [[0]]}', "junk"])
def test_malformed_json_rejected(text):
    with pytest.raises((InvalidInput, ValueError)):
        graph_from_json(text)


# -- tree codes ----------------------------------------------------------------------


def test_tree_code_equal_for_relabeled_p3():
    a = make_graph(3, [(0, 1), (1, 2)])
    b = make_graph(3, [(0, 2), (2, 1)])
    assert tree_code(a) == tree_code(b)


def test_tree_code_separates_p4_from_claw():
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    claw = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert tree_code(p4) != tree_code(claw)


def test_all_labelings_of_p3_share_one_code():
    codes = set()
    for perm in itertools.permutations(range(3)):
        codes.add(tree_code(make_graph(3, [(perm[0], perm[1]), (perm[1], perm[2])])))
    assert len(codes) == 1


def test_tree_code_rejects_non_tree():
    with pytest.raises((InvalidInput, ValueError)):
        tree_code(make_graph(3, [(0, 1), (1, 2), (2, 0)]))


def test_tree_code_relabel_invariance_property():
    rng = random.Random(11)
    for n in range(2, 11):
        for tree in enumerate_free_trees(n)[:10]:
            code = tree_code(tree)
            for _ in range(10):
                perm = list(range(n))
                rng.shuffle(perm)
                assert tree_code(relabel(tree, perm)) == code


# -- free-tree enumeration -----------------------------------------------------------


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47), (10, 106)])
def test_free_tree_counts(n, count):
    reps = enumerate_free_trees(n)
    assert len(reps) == count
    codes = {tree_code(t) for t in reps}
    assert len(codes) == count  # pairwise non-isomorphic
    assert all(t.is_tree() for t in reps)


def test_free_tree_count_orders_11_and_12():
    assert len(enumerate_free_trees(11)) == 235
    assert len(enumerate_free_trees(12)) == 551


def test_enumeration_bounds_enforced():
    with pytest.raises((InvalidInput, ValueError)):
        enumerate_free_trees(0)
    with pytest.raises((InvalidInput, ValueError)):
        enumerate_free_trees(graphs.MAX_ENUM_ORDER + 1)


def test_prufer_oracle_exhaustive_small():
    """Every labeled tree (via its defining sequence) maps onto some representative."""
    for n in range(3, 8):
        codes = {tree_code(t) for t in enumerate_free_trees(n)}
        seen = set()
        for seq in itertools.product(range(n), repeat=n - 2):
            seen.add(tree_code(tree_from_prufer(seq)))
        assert seen == codes


def test_prufer_oracle_randomized_larger():
    rng = random.Random(20260822)
    for n in (9, 12):
        codes = {tree_code(t) for t in enumerate_free_trees(n)}
        for _ in range(400):
            seq = tuple(rng.randrange(n) for _ in range(n - 2))
            assert tree_code(tree_from_prufer(seq)) in codes


def test_free_tree_counts_match_networkx():
    nx = pytest.importorskip("networkx")
    for n in range(2, 11):
        ours = len(enumerate_free_trees(n))
        theirs = sum(1 for _ in nx.nonisomorphic_trees(n))
        assert ours == theirs


# -- misc structure queries ----------------------------------------------------------


def test_components_and_forest_checks():
    g = make_graph(6, [(0, 1), (2, 3), (3, 4)])
    comps = g.components()
    assert len(comps) == 3  # {0,1}, {2,3,4}, {5}
    assert g.is_forest() and not g.is_tree()
    assert make_graph(3, [(0, 1), (1, 2)]).is_tree()
    assert not make_graph(3, [(0, 1), (1, 2), (2, 0)]).is_forest()


def test_random_gnp_edge_count_is_plausible():
    rng = random.Random(3)
    g = random_gnp(30, 0.5, rng)
    # 435 candidate edges; a fair-coin count outside [130, 300] would be absurd
    assert 130 <= g.m <= 300
    assert random_gnp(10, 0.0, rng).m == 0
    assert random_gnp(10, 1.0, rng).m == 45
