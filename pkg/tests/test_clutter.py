import random
from itertools import combinations

import pytest

import oracles
from vnum import InvalidInput
from vnum.clutter import (
    Clutter,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    even_connection_graph,
    graph_power,
    is_connected,
    is_stable,
    is_vertex_cover,
    matching_number,
    matchings,
    min_cover_stable_sets,
    minimal_vertex_covers,
    neighborhood,
    path,
    random_tree,
    stable_sets_with_cover_neighborhoods,
)
from vnum.constructors import edge_ideal, squarefree_power
from vnum.monomial import Monomial, VarSet, colon


def edges(G):
    return sorted(tuple(sorted(v + 1 for v in e)) for e in G.edges)


def S(*one_based):
    return frozenset(v - 1 for v in one_based)


FAMILY = [path(n) for n in range(2, 9)] + [cycle(n) for n in range(3, 9)] + [complete(n) for n in range(2, 6)] \
    + [complete_bipartite(2, 3), random_tree(7, 1), random_tree(9, 4)]


def test_named_graphs():
    assert edges(path(4)) == [(1, 2), (2, 3), (3, 4)]
    assert cycle(3).edges == complete(3).edges
    assert len(complete(4).edges) == 6
    assert edges(complete_bipartite(2, 2)) == [(1, 3), (1, 4), (2, 3), (2, 4)]


@pytest.mark.parametrize("make,n", [(path, 1), (cycle, 2), (complete, 1)])
def test_named_graphs_reject_small_n(make, n):
    with pytest.raises(InvalidInput):
        make(n)


def test_clutter_rejects_non_antichain():
    with pytest.raises(InvalidInput):
        Clutter(VarSet.standard(3), (frozenset({0, 1}), frozenset({0, 1, 2})))
    with pytest.raises(InvalidInput):
        Graph(VarSet.standard(3), (frozenset({0, 1, 2}),))


def test_graph_power_examples():
    assert edges(graph_power(path(4), 2)) == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
    assert graph_power(cycle(6), 1) == cycle(6)
    for d in range(2, 8):
        assert graph_power(path(d), d - 1).edges == complete(d).edges


def test_graph_power_on_disconnected_graph():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert graph_power(G, 3).edges == G.edges
    assert not is_connected(G)


@pytest.mark.parametrize("G", FAMILY, ids=lambda G: G.render())
def test_graph_power_monotone_and_complete_at_diameter(G):
    for k in range(1, 5):
        assert set(graph_power(G, k).edges) <= set(graph_power(G, k + 1).edges)
    assert graph_power(G, int(diameter(G))).edges == complete(G.n).edges


def test_stable_and_neighborhood_examples():
    K3 = complete(3)
    assert is_stable(K3, S(1)) and neighborhood(K3, S(1)) == S(2, 3)
    assert neighborhood(graph_power(path(6), 2), S(4)) == S(2, 3, 5, 6)
    for G in FAMILY:
        assert is_stable(G, ()) and neighborhood(G, ()) == frozenset()


def test_minimal_vertex_cover_examples():
    assert set(minimal_vertex_covers(path(4))) == {S(2, 4), S(1, 3), S(2, 3)}
    assert set(minimal_vertex_covers(complete(3))) == {S(1, 2), S(1, 3), S(2, 3)}
    assert set(minimal_vertex_covers(path(2))) == {S(1), S(2)}


@pytest.mark.parametrize("G", FAMILY, ids=lambda G: G.render())
def test_minimal_vertex_covers_against_oracle(G):
    covers = minimal_vertex_covers(G)
    assert set(covers) == set(oracles.min_covers(G.n, [set(e) for e in G.edges]))
    assert covers == sorted(covers, key=lambda c: (len(c), sorted(c)))


@pytest.mark.parametrize("G", FAMILY + [cycle(12), path(12)], ids=lambda G: G.render())
def test_stable_cover_duality(G):
    everything = frozenset(range(G.n))
    rng = random.Random(G.n)
    subsets = [frozenset(v for v in range(G.n) if rng.random() < 0.5) for _ in range(300)]
    if G.n <= 9:
        subsets = [frozenset(c) for k in range(G.n + 1) for c in combinations(range(G.n), k)]
    for A in subsets:
        assert is_stable(G, A) == is_vertex_cover(G, everything - A)


def test_cover_stable_set_examples():
    assert set(stable_sets_with_cover_neighborhoods(complete(3))) == {S(1), S(2), S(3)}
    assert S(3) in stable_sets_with_cover_neighborhoods(path(5))
    assert S(4) in stable_sets_with_cover_neighborhoods(graph_power(path(6), 2))


@pytest.mark.parametrize("G", FAMILY, ids=lambda G: G.render())
def test_cover_stable_sets_round_trip(G):
    covers = set(minimal_vertex_covers(G))
    found = stable_sets_with_cover_neighborhoods(G)
    for A in found:
        assert is_stable(G, A) and neighborhood(G, A) in covers
    brute = [frozenset(c) for k in range(G.n + 1) for c in combinations(range(G.n), k)
             if is_stable(G, c) and neighborhood(G, c) in covers]
    assert set(found) == set(brute)
    smallest = min(len(A) for A in brute)
    assert set(min_cover_stable_sets(G)) == {A for A in brute if len(A) == smallest}


def test_matching_number_examples():
    assert matching_number(path(4)) == 2
    assert matching_number(complete(5)) == 2
    assert matching_number(path(7)) == 3


@pytest.mark.parametrize("G", FAMILY, ids=lambda G: G.render())
def test_matching_number_against_oracle(G):
    assert matching_number(G) == oracles.matching_number(G.edges)
    for k in range(1, matching_number(G) + 1):
        ms = matchings(G, k)
        assert ms and all(len(set().union(*m)) == 2 * k for m in ms)
    assert matchings(G, matching_number(G) + 1) == []


def test_even_connection_examples():
    H = even_connection_graph(path(5), [S(2, 3)])
    assert edges(H) == [(1, 4), (4, 5)]
    H = even_connection_graph(path(6), [S(3, 4)])
    assert (2, 5) in edges(H)
    # an end edge has nothing to connect through
    H = even_connection_graph(path(5), [S(4, 5)])
    assert edges(H) == [(1, 2), (2, 3)]


def test_even_connection_rejects_bad_matchings():
    with pytest.raises(InvalidInput):
        even_connection_graph(path(5), [S(1, 3)])
    with pytest.raises(InvalidInput):
        even_connection_graph(path(5), [S(1, 2), S(2, 3)])


ECG = [path(5), path(6), path(7), cycle(6), cycle(7), complete(5), complete_bipartite(3, 3), random_tree(8, 2)]


@pytest.mark.parametrize("G", ECG, ids=lambda G: G.render())
def test_even_connection_matches_colon(G):
    I = edge_ideal(G)
    for s in range(1, matching_number(G)):
        target = squarefree_power(I, s + 1)
        for mu in matchings(G, s):
            H = even_connection_graph(G, mu)
            f = Monomial.from_support(G.n, set().union(*mu))
            assert edge_ideal(H) == colon(target, f), (s, mu)


@pytest.mark.parametrize("n", range(4, 15))
def test_path_square_minimum_sets_avoid_both_endpoints(n):
    mins = min_cover_stable_sets(graph_power(path(n), 2))
    assert mins and not any({0, n - 1} <= A for A in mins)
