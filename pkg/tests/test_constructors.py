from itertools import combinations, product

import pytest

import oracles
from vnum import InvalidInput, MonomialIdeal, intersect, power
from vnum.clutter import Graph, complete, cycle, matchings, path, random_tree
from vnum.constructors import (
    MixedSpec,
    edge_ideal,
    forest_recursion_rhs,
    in_symbolic_power,
    minimal_primes_squarefree,
    mixed_decomposition,
    mixed_ideal,
    squarefree_power,
    symbolic_power,
)
from vnum.monomial import intersect_all, parse_monomial


def gens_text(I):
    return sorted(m.render(I.vars) for m in I.monomials)


def test_edge_ideal_examples():
    assert gens_text(edge_ideal(path(4))) == ["x1*x2", "x2*x3", "x3*x4"]
    assert gens_text(edge_ideal(complete(3))) == ["x1*x2", "x1*x3", "x2*x3"]
    assert len(edge_ideal(cycle(4)).gens) == 4


def test_mixed_examples():
    assert gens_text(mixed_ideal(MixedSpec(3, 0, [(2, 0)]))) == ["x1*x2", "x1*x3", "x2*x3"]
    assert gens_text(mixed_ideal(MixedSpec(2, 2, [(1, 1)]))) == ["x1*y1", "x1*y2", "x2*y1", "x2*y2"]
    # two terms on a 4 + 3 block
    I = mixed_ideal(MixedSpec(4, 3, [(2, 2), (3, 1)]))
    assert I.vars.names == ("x1", "x2", "x3", "x4", "y1", "y2", "y3")
    assert all(sum(g) == 4 for g in I.gens)


@pytest.mark.parametrize("terms", [[(1, 2), (2, 2)], [(2, 1), (1, 2)], [(3, 1)], [(1, 5)], [], [(0, 0)]])
def test_mixed_spec_rejects_bad_terms(terms):
    with pytest.raises(InvalidInput):
        MixedSpec(2, 2, terms)


def _mixed_specs(limit=4):
    for n, m in product(range(1, limit + 1), repeat=2):
        for s in (1, 2, 3):
            for qs in combinations(range(1, n + 1), s):
                for rs in combinations(range(m, 0, -1), s):
                    yield MixedSpec(n, m, tuple(zip(qs, rs)))


@pytest.mark.parametrize("spec", list(_mixed_specs()), ids=lambda s: s.render())
def test_mixed_decomposition(spec):
    assert intersect_all(mixed_decomposition(spec)) == mixed_ideal(spec)


def test_mixed_count():
    # I_2 J_1 on 3 + 3 variables has C(3,2) * 3 generators
    assert len(mixed_ideal(MixedSpec(3, 3, [(2, 1)])).gens) == 9


def test_squarefree_power_examples():
    L4, L5 = edge_ideal(path(4)), edge_ideal(path(5))
    assert gens_text(squarefree_power(L4, 2)) == ["x1*x2*x3*x4"]
    assert squarefree_power(L4, 1) == L4
    assert gens_text(squarefree_power(L5, 2)) == ["x1*x2*x3*x4", "x1*x2*x4*x5", "x2*x3*x4*x5"]
    assert squarefree_power(L4, 3).is_zero()


@pytest.mark.parametrize("G", [path(6), cycle(6), complete(5), random_tree(8, 3)], ids=lambda G: G.render())
def test_squarefree_power_is_squarefree_part_of_power(G):
    I = edge_ideal(G)
    for k in range(1, 4):
        sq = squarefree_power(I, k)
        assert sq.is_squarefree()
        assert all(g in power(I, k) for g in sq.gens)
        expected = {g for g in oracles.box(G.n, 1) if oracles.member(g, power(I, k).gens)}
        assert {g for g in oracles.box(G.n, 1) if g in sq} == expected
        assert set(sq.gens) == {tuple(1 if v in set().union(*m) else 0 for v in range(G.n)) for m in matchings(G, k)}


@pytest.mark.parametrize("G", [path(n) for n in range(4, 11)] + [random_tree(10, s) for s in range(10)],
                         ids=lambda G: G.render())
def test_forest_recursion(G):
    I = edge_ideal(G)
    for k in range(1, 4):
        assert squarefree_power(I, k) == forest_recursion_rhs(G, k)


def test_forest_recursion_needs_leaf_edge():
    with pytest.raises(InvalidInput):
        forest_recursion_rhs(Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)]), 1)


def test_random_tree_labels_last_vertex_as_leaf():
    for seed in range(20):
        T = random_tree(9, seed)
        assert len(T.edges) == 8
        last = [e for e in T.edges if 8 in e]
        assert last == [frozenset((7, 8))]


def test_symbolic_power_examples():
    K3 = edge_ideal(complete(3))
    x123 = parse_monomial(K3.vars, "x1*x2*x3")
    assert x123 in symbolic_power(K3, 2) and x123 not in power(K3, 2)
    assert symbolic_power(K3, 1) == K3
    L4 = edge_ideal(path(4))
    assert all(g in symbolic_power(L4, 2) for g in power(L4, 2).gens)
    K2 = edge_ideal(complete(2))
    for k in (1, 2, 3):
        assert symbolic_power(K2, k) == power(K2, k)


def test_symbolic_power_rejects_non_squarefree():
    I = MonomialIdeal(complete(2).vertices, [(2, 0)])
    with pytest.raises(InvalidInput):
        symbolic_power(I, 2)


@pytest.mark.parametrize("G", [complete(4), cycle(5), path(5)], ids=lambda G: G.render())
def test_symbolic_power_membership_fast_path(G):
    I = edge_ideal(G)
    primes = minimal_primes_squarefree(I)
    for k in (1, 2, 3):
        Ik = symbolic_power(I, k)
        assert all(g in Ik for g in power(I, k).gens)
        for h in oracles.box(G.n, k):
            assert (h in Ik) == in_symbolic_power(primes, k, h)
        assert Ik == intersect(Ik, symbolic_power(I, 1))
