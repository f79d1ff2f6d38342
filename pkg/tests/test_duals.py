import random
from fractions import Fraction

import pytest

from phitsp import (
    EdgeMultiSet,
    LaminarDual,
    LaminarFamily,
    WeightedGraph,
    build_laminar_dual,
    build_laminar_family,
    cuts_with_few_edges,
    oracle_t_joins,
    shortest_t_join,
    solve_cut_packing,
    uncross,
)
from phitsp.errors import SizeLimitError

from conftest import random_connected_graph, unit_graph


def test_laminar_family_validation_and_width():
    fam = LaminarFamily([{0}, {0, 1}, {2}])
    assert fam.width() == 2
    assert len(fam) == 3
    with pytest.raises(ValueError):
        LaminarFamily([{0, 1}, {1, 2}])
    with pytest.raises(ValueError):
        LaminarFamily([set()])
    chain = LaminarFamily([{0}, {0, 1}, {0, 1, 2}])
    assert chain.width() == 1


def test_cut_packing_single_edge():
    G = WeightedGraph(2, [(0, 1, 5)])
    y, value = solve_cut_packing(G, {0, 1}, 1)
    assert value == 5
    assert y == {frozenset({0}): Fraction(5)}


def test_cut_packing_empty_t(path4):
    y, value = solve_cut_packing(path4, (), None)
    assert y == {} and value == 0


def test_cut_packing_unit_path(path4):
    y, value = solve_cut_packing(path4, {0, 3}, 3)
    assert value == 3
    # any optimum packs to the shortest-join length; feasibility per edge
    for eid, (u, v, l) in enumerate(path4.edges):
        load = sum((val for s, val in y.items() if (u in s) != (v in s)), Fraction(0))
        assert load <= l


def test_cut_packing_caps():
    big = WeightedGraph(15, [(i, i + 1, 1) for i in range(14)])
    with pytest.raises(SizeLimitError):
        solve_cut_packing(big, {0, 14}, 14)


def test_uncross_leaves_laminar_input_alone():
    y = {frozenset({0}): Fraction(1), frozenset({0, 1}): Fraction(2)}
    assert uncross(y, {0, 3}, 4) == y


def test_uncross_crossing_pair_intersection_case():
    # C4 with T = {1, 3}: shores {0,1} and {1,2} cross, |A&B&T| odd
    y = {frozenset({0, 1}): Fraction(1), frozenset({1, 2}): Fraction(1)}
    out = uncross(y, {1, 3}, 4)
    assert out == {frozenset({1}): Fraction(2)} or out == {
        frozenset({1}): Fraction(1),
        frozenset({0, 1, 2}): Fraction(1),
    }
    assert sum(out.values()) == 2
    LaminarFamily(out.keys())


def test_uncrossed_lp_outputs_pass_all_invariants():
    rng = random.Random(12)
    done = 0
    while done < 50:
        n = rng.randint(3, 8)
        G = random_connected_graph(rng, n, max_len=9)
        if G.m > 12:
            continue
        size = rng.choice([2, 2, 4])
        if size > n:
            continue
        T = frozenset(rng.sample(range(n), size))
        t = min(T)
        raw, value = solve_cut_packing(G, T, t)
        flat = uncross(raw, T, G.n)
        dual = LaminarDual(LaminarFamily(flat.keys()), flat, t)
        assert dual.violations(G, T) == []
        done += 1


def test_build_laminar_family_examples(path4):
    assert build_laminar_family(path4, ()) == LaminarFamily.empty()
    edge = WeightedGraph(2, [(0, 1, 5)])
    fam = build_laminar_family(edge, {0, 1})
    # t = min(T) = 0 is excluded, so the one shore is {1}
    assert fam == LaminarFamily([{1}]) and fam.width() == 1
    fam = build_laminar_family(path4, {0, 3})
    assert fam.width() == 1
    assert len(fam) <= 3


def test_dual_width_bound_sweep():
    rng = random.Random(4)
    done = 0
    while done < 25:
        n = rng.randint(2, 8)
        G = random_connected_graph(rng, n)
        if G.m > 12:
            continue
        size = rng.choice([0, 2, 4])
        if size > n:
            continue
        T = frozenset(rng.sample(range(n), size))
        dual = build_laminar_dual(G, T)
        assert dual.family.width() <= max(0, len(T) - 1)
        assert dual.value() == (shortest_t_join(G, T).length if T else 0)
        done += 1


def test_cuts_with_few_edges_examples(path4):
    got_fam, got_r = cuts_with_few_edges(path4, EdgeMultiSet({0: 1}), LaminarFamily.empty(), 2)
    assert got_fam == LaminarFamily.empty() and got_r == EdgeMultiSet.empty()

    fam = LaminarFamily([{0}, {0, 1}, {0, 1, 2}])
    R1 = EdgeMultiSet({0: 1, 1: 1, 2: 1})
    sel, rk = cuts_with_few_edges(path4, R1, fam, 1)
    assert sel == fam and rk == R1

    R2 = EdgeMultiSet({0: 2, 1: 2, 2: 2})
    sel, rk = cuts_with_few_edges(path4, R2, fam, 1)
    assert sel == LaminarFamily.empty() and rk == EdgeMultiSet.empty()


def test_lemma_42_inequality_sweep():
    rng = random.Random(8)
    done = 0
    while done < 15:
        n = rng.randint(3, 6)
        G = random_connected_graph(rng, n, max_len=6)
        if G.m > 9:
            continue
        size = rng.choice([2, 4])
        if size > n:
            continue
        T = frozenset(rng.sample(range(n), size))
        fam = build_laminar_family(G, T)
        jl = shortest_t_join(G, T).length
        for R in oracle_t_joins(G, T):
            lr = G.multiset_length(R)
            for k in range(4):
                _, rk = cuts_with_few_edges(G, R, fam, k)
                assert G.multiset_length(rk) >= jl - lr / (k + 1)
        done += 1
