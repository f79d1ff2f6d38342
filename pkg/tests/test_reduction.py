import random
from fractions import Fraction

import pytest

from phitsp import (
    BoostParams,
    EdgeMultiSet,
    InfeasibleError,
    Interface,
    LaminarFamily,
    PhiInstance,
    PreconditionError,
    WeightedGraph,
    boost_once,
    boost_schedule,
    build_laminar_family,
    dp_guess,
    get_phi,
    get_tsp,
    is_phi_tour,
    long_tjoin_algo,
    oracle_phi_opt,
    short_tjoin_algo,
    shortest_t_join,
    simple_phi,
    solve_path_tsp,
    solve_phi_tsp,
)

from conftest import random_connected_graph, unit_graph

EXACT_TSP = get_tsp("exact")
CHRISTOFIDES = get_tsp("christofides")
SEVEN = get_phi("seven-approx")
EXACT_PHI = get_phi("exact")


def test_simple_phi_tsp_interface_is_just_the_tsp_tour(c5):
    inst = PhiInstance(c5, Interface.empty())
    join = shortest_t_join(c5, ())
    out = simple_phi(inst, EXACT_TSP, join)
    assert out == EXACT_TSP.run(c5)


def test_simple_phi_k4_example(k4):
    inst = PhiInstance(k4, Interface({0, 1}, {0, 1}, [{0, 1}]))
    join = shortest_t_join(k4, {0, 1})
    out = simple_phi(inst, EXACT_TSP, join)
    assert k4.multiset_length(out) == 5
    assert is_phi_tour(out, inst)


def test_simple_phi_spans_multiple_components():
    # two triangles, interface vertices anchor both sides
    G = unit_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    inst = PhiInstance(G, Interface({0, 3}, (), [{0}, {3}]))
    join = shortest_t_join(G, ())
    out = simple_phi(inst, EXACT_TSP, join)
    assert is_phi_tour(out, inst)
    assert G.multiset_length(out) == 6  # one triangle tour per side


def test_simple_phi_infeasible_errors():
    G = unit_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    inst = PhiInstance(G, Interface.empty())
    with pytest.raises(InfeasibleError):
        simple_phi(inst, EXACT_TSP, shortest_t_join(G, ()))


def test_short_tjoin_zero_interface_budget(c5):
    # |I| = 0 forces H* = {} so the run sweeps pure threshold deletions
    inst = PhiInstance(c5, Interface.empty())
    out = short_tjoin_algo(inst, EXACT_TSP, Fraction(1, 2))
    assert is_phi_tour(out, inst)
    assert c5.multiset_length(out) == 5


def test_short_tjoin_k4_bound(k4):
    inst = PhiInstance(k4, Interface({0, 1}, {0, 1}, [{0, 1}]))
    out = short_tjoin_algo(inst, EXACT_TSP, 1)
    assert is_phi_tour(out, inst)
    # (1+delta)*alpha*OPT + (alpha+1)*l(J) = 2*3 + 2*1
    assert k4.multiset_length(out) <= 8


def test_short_tjoin_heavy_edge_deletion_wins():
    # two unit triangles bridged by a huge edge; the tour need not cross it
    G = WeightedGraph(
        6,
        [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1), (2, 3, 100)],
    )
    inst = PhiInstance(G, Interface({0, 3}, (), [{0}, {3}]))
    join = shortest_t_join(G, ())
    naive = simple_phi(inst, EXACT_TSP, join)
    clever = short_tjoin_algo(inst, EXACT_TSP, 1)
    assert G.multiset_length(naive) >= 200
    assert G.multiset_length(clever) == 6
    assert is_phi_tour(clever, inst)


def test_short_tjoin_hstar_cap_errors(k4):
    from phitsp import SizeLimitError

    inst = PhiInstance(k4, Interface({0, 1}, {0, 1}, [{0, 1}]))
    with pytest.raises(SizeLimitError):
        short_tjoin_algo(inst, EXACT_TSP, Fraction(1, 1000), hstar_cap=10)


def test_dp_guess_empty_family_degenerates_to_base(k4, path4):
    inst = PhiInstance(k4, Interface({0, 1}, {0, 1}, [{0, 1}]))
    out = dp_guess(inst, LaminarFamily.empty(), 2, EXACT_PHI)
    assert k4.multiset_length(out) == oracle_phi_opt(inst).require()
    out7 = dp_guess(inst, LaminarFamily.empty(), 2, SEVEN)
    base_len = k4.multiset_length(SEVEN.run(inst))
    assert k4.multiset_length(out7) <= base_len
    assert is_phi_tour(out7, inst)


def test_dp_guess_k0_bound(path4_instance):
    fam = build_laminar_family(path4_instance.graph, {0, 3})
    out = dp_guess(path4_instance, fam, 0, SEVEN)
    opt = oracle_phi_opt(path4_instance).require()
    assert path4_instance.graph.multiset_length(out) <= 7 * opt
    assert is_phi_tour(out, path4_instance)


def test_dp_guess_unit_path_reaches_the_optimum(path4_instance):
    fam = LaminarFamily([{0}, {0, 1}, {0, 1, 2}])
    out = dp_guess(path4_instance, fam, 1, SEVEN)
    assert path4_instance.graph.multiset_length(out) == 3


def test_dp_guess_infeasible_and_bad_args(path4_instance):
    G = unit_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(InfeasibleError):
        dp_guess(PhiInstance(G, Interface.empty()), LaminarFamily.empty(), 1, SEVEN)
    with pytest.raises(PreconditionError):
        dp_guess(path4_instance, LaminarFamily.empty(), -1, SEVEN)
    from phitsp import SizeLimitError

    with pytest.raises(SizeLimitError):
        dp_guess(path4_instance, LaminarFamily([{0}, {0, 1}]), 1, SEVEN, node_cap=1)


def test_dp_guess_exact_base_with_doubled_x_is_optimal():
    rng = random.Random(41)
    done = 0
    while done < 10:
        n = rng.randint(3, 6)
        G = random_connected_graph(rng, n, max_len=6)
        if G.m > 9:
            continue
        s, t = rng.sample(range(n), 2)
        inst = PhiInstance(G, Interface.for_path(s, t))
        fam = build_laminar_family(G, {s, t})
        out = dp_guess(inst, fam, 2, EXACT_PHI, x_multiplicity=2)
        assert G.multiset_length(out) == oracle_phi_opt(inst).require()
        done += 1


def test_long_tjoin_empty_t_calls_base_directly(c5):
    inst = PhiInstance(c5, Interface.empty())
    assert long_tjoin_algo(inst, SEVEN, Fraction(1, 8)) == SEVEN.run(inst)


def test_long_tjoin_matches_dp_composition(path4_instance):
    G = path4_instance.graph
    fam = build_laminar_family(G, {0, 3})
    # delta = 1 gives k = 1; delta = 1/8 gives k = 8
    assert long_tjoin_algo(path4_instance, SEVEN, 1) == dp_guess(path4_instance, fam, 1, SEVEN)
    assert long_tjoin_algo(path4_instance, SEVEN, Fraction(1, 8)) == dp_guess(
        path4_instance, fam, 8, SEVEN
    )


def test_boost_once_returns_valid_and_bounded(k4):
    inst = PhiInstance(k4, Interface({0, 1}, {0, 1}, [{0, 1}]))
    opt = oracle_phi_opt(inst).require()
    for eps in (Fraction(1), Fraction(1, 2)):
        out = boost_once(inst, EXACT_TSP, SEVEN, eps)
        assert is_phi_tour(out, inst)
        bound = max((1 + eps) * 1, 7 - eps / 8 * 6) * opt
        assert k4.multiset_length(out) <= bound


def test_boost_once_epsilon_range(k4):
    inst = PhiInstance(k4, Interface({0, 1}, {0, 1}, [{0, 1}]))
    with pytest.raises(PreconditionError):
        boost_once(inst, EXACT_TSP, SEVEN, 2)
    with pytest.raises(PreconditionError):
        boost_once(inst, EXACT_TSP, SEVEN, 0)


def test_eq1_factor_arithmetic():
    # max{(1+eps)alpha, beta - eps/8 (beta-1)} at the quoted parameter points
    def factor(eps, alpha, beta):
        return max((1 + eps) * alpha, beta - eps / 8 * (beta - 1))

    assert factor(Fraction(1), Fraction(3, 2), Fraction(4)) == Fraction(29, 8)  # 3.625
    assert factor(Fraction(1, 10), Fraction(3, 2), Fraction(4)) == Fraction(317, 80)  # 3.9625


def test_boost_schedule_paper_values():
    sched = boost_schedule(2, Fraction(1, 2), Fraction(3, 2), 4)
    assert sched.i_max == 96
    assert sched.levels[-1].beta == Fraction(3, 2) + Fraction(1, 2)
    sched = boost_schedule(2, 1, Fraction(3, 2), 4)
    assert sched.eps_prime == Fraction(2, 3)
    # k_{i-1} = 13.5 * k_i
    assert sched.levels[0].k_budget == Fraction(27, 2) * sched.levels[1].k_budget
    assert sched.levels[-1].k_budget == 2


def test_boost_schedule_fixed_point_grid():
    for alpha, eps, beta0 in [
        (Fraction(3, 2), Fraction(1, 2), Fraction(4)),
        (Fraction(3, 2), Fraction(1), Fraction(7)),
        (Fraction(5, 4), Fraction(1, 4), Fraction(7)),
        (Fraction(7, 5), Fraction(1, 3), Fraction(4)),
    ]:
        sched = boost_schedule(2, eps, alpha, beta0)
        assert sched.levels[-1].beta == alpha + eps
        betas = [lvl.beta for lvl in sched.levels]
        assert all(b2 <= b1 for b1, b2 in zip(betas, betas[1:]))


def test_boost_schedule_preconditions():
    with pytest.raises(PreconditionError):
        boost_schedule(2, 1, 1, 4)  # alpha must exceed 1
    with pytest.raises(PreconditionError):
        boost_schedule(2, 0, Fraction(3, 2), 4)
    with pytest.raises(PreconditionError):
        boost_schedule(2, 1, Fraction(3, 2), Fraction(5, 2))  # beta0 <= alpha+eps


def test_solve_phi_tsp_zero_levels_is_the_base(k4):
    inst = PhiInstance(k4, Interface({0, 1}, {0, 1}, [{0, 1}]))
    params = BoostParams(max_boost_iters=0)
    tour, report = solve_phi_tsp(inst, params)
    assert tour == SEVEN.run(inst)
    assert report.levels == 0 and report.valid


def test_solve_path_tsp_fixtures_with_exact_oracles(k4, path4):
    params = BoostParams(epsilon=1, tsp_id="exact", base_id="exact", max_boost_iters=1)
    tour, report = solve_path_tsp(k4, 0, 1, params)
    assert report.length == 3
    tour, report = solve_path_tsp(path4, 0, 3, params)
    assert report.length == 3


def test_solve_path_tsp_default_stack_on_unit_path(path4):
    params = BoostParams(epsilon=1, max_boost_iters=1)
    tour, report = solve_path_tsp(path4, 0, 3, params)
    assert report.length == 3
    assert report.levels == 1
    assert report.level_betas[0] == 7
    assert report.level_lengths[-1] == 3


def test_solve_path_tsp_degenerate_endpoints(c5):
    params = BoostParams(epsilon=1, max_boost_iters=0)
    tour, report = solve_path_tsp(c5, 2, 2, params)
    assert c5.odd_vertices(tour) == frozenset()
    assert report.valid


def test_solve_path_tsp_c5_with_christofides(c5):
    params = BoostParams(epsilon=1, max_boost_iters=1)
    tour, report = solve_path_tsp(c5, 0, 2, params)
    inst = PhiInstance(c5, Interface.for_path(0, 2))
    assert is_phi_tour(tour, inst)
    opt = oracle_phi_opt(inst).require()
    eps_prime = Fraction(1) / Fraction(3, 2)
    bound = max((1 + eps_prime) * Fraction(3, 2), 7 - eps_prime / 8 * 6)
    assert report.length <= bound * opt


def test_solve_interface_cap(k4):
    inst = PhiInstance(k4, Interface({0, 1, 2}, (), [{0}, {1}, {2}]))
    from phitsp import SizeLimitError

    with pytest.raises(SizeLimitError):
        solve_phi_tsp(inst, BoostParams(k_interface_cap=2))
    tour, report = solve_phi_tsp(inst, BoostParams(k_interface_cap=3, max_boost_iters=0))
    assert report.valid


def test_determinism_of_the_full_stack(path4):
    params = BoostParams(epsilon=1, max_boost_iters=1)
    a, _ = solve_path_tsp(path4, 0, 3, params)
    b, _ = solve_path_tsp(path4, 0, 3, params)
    assert a == b
    rng1 = random.Random(50)
    G = random_connected_graph(rng1, 5, max_len=6)
    inst = PhiInstance(G, Interface.for_path(0, 4))
    x = boost_once(inst, CHRISTOFIDES, SEVEN, Fraction(1, 2))
    y = boost_once(inst, CHRISTOFIDES, SEVEN, Fraction(1, 2))
    assert x == y
