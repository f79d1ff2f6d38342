"""Constant-factor building blocks and the algorithm registry.

Registered TSP algorithms: "christofides" (3/2) and "exact" (1, backed by the
enumeration oracle).  Registered Phi-TSP algorithms: "seven-approx" (7) and
"exact" (1).  The exact entries let the harness separate reduction overhead
from oracle error.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .errors import InfeasibleError, PreconditionError
from .graphs import EdgeMultiSet, UnionFind, WeightedGraph, multi_union
from .interfaces import PhiInstance, check_feasibility
from .joins import shortest_t_join
from .oracle import oracle_phi_opt, oracle_tsp


def christofides_tsp(G: WeightedGraph) -> EdgeMultiSet:
    """Classic 3/2-approximate tour: spanning tree plus a parity-fixing join."""
    if G.n == 0:
        return EdgeMultiSet.empty()
    if not G.is_connected():
        raise PreconditionError("christofides_tsp needs a connected graph")
    tree = G.mst()
    odd = G.odd_vertices(tree)
    join = shortest_t_join(G, odd).join
    return tree + join


def steiner_forest_2approx(G: WeightedGraph, groups: Iterable[Iterable[int]]) -> EdgeMultiSet:
    """Primal-dual moat growing with reverse-delete pruning.

    Components still separating some group grow uniformly; an edge whose
    accumulated charge reaches its length merges its sides.  Moat-event ties
    resolve in canonical edge order, keeping the output deterministic.
    """
    want = [frozenset(g) for g in groups]
    for g in want:
        if any(not (0 <= v < G.n) for v in g):
            raise ValueError("group vertex out of range")
    want = [g for g in want if len(g) > 1]
    if not want:
        return EdgeMultiSet.empty()
    comps = G.components()
    for g in want:
        if not any(g <= c for c in comps):
            raise PreconditionError(f"group {sorted(g)} is split across components")

    uf = UnionFind(G.n)
    charge = [Fraction(0)] * G.m
    picked: list[int] = []

    def groups_ok(uf_: UnionFind) -> bool:
        return all(
            all(uf_.find(v) == uf_.find(min(g)) for v in g)
            for g in want
        )

    while True:
        active: set[int] = set()
        for g in want:
            roots = {uf.find(v) for v in g}
            if len(roots) > 1:
                active |= roots
        if not active:
            break
        best = None
        for eid, (u, v, l) in enumerate(G.edges):
            ru, rv = uf.find(u), uf.find(v)
            if ru == rv:
                continue
            rate = (ru in active) + (rv in active)
            if rate == 0:
                continue
            dt = (l - charge[eid]) / rate
            if best is None or dt < best:
                best = dt
        assert best is not None  # an active component always has a leaving edge
        for eid, (u, v, l) in enumerate(G.edges):
            ru, rv = uf.find(u), uf.find(v)
            if ru == rv:
                continue
            rate = (ru in active) + (rv in active)
            if rate:
                charge[eid] += best * rate
        for eid, (u, v, l) in enumerate(G.edges):
            if charge[eid] == l and uf.find(u) != uf.find(v):
                uf.union(u, v)
                picked.append(eid)

    kept = list(picked)
    for eid in reversed(picked):
        trial = [e for e in kept if e != eid]
        uf2 = UnionFind(G.n)
        for e in trial:
            u, v, _ = G.edges[e]
            uf2.union(u, v)
        if groups_ok(uf2):
            kept = trial
    return EdgeMultiSet.from_ids(kept)


def seven_approx_phi(inst: PhiInstance) -> EdgeMultiSet:
    """The explicit 7-approximation: join + doubled quotient tree + doubled forest.

    F1 fixes parity (shortest T-join), F2 makes (V,F)/I connected (spanning
    tree of G/I, each quotient edge lifted to its cheapest original), F3
    connects each part of C (2-approximate Steiner forest).  Doubling F2 and
    F3 cancels their parity, so odd(F) = T survives.
    """
    report = check_feasibility(inst)
    if not report:
        raise InfeasibleError(f"no Phi-tour exists (condition {report.condition})", report)
    G, phi = inst.graph, inst.interface
    f1 = shortest_t_join(G, phi.T).join
    quot = G.contract(phi.I)
    f2 = quot.lift(quot.graph.mst())
    f3 = steiner_forest_2approx(G, phi.parts)
    return multi_union(f1, f2, f2, f3, f3)


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class TspAlgorithm:
    id: str
    guarantee: Fraction
    run: Callable[[WeightedGraph], EdgeMultiSet] = field(compare=False)


@dataclass(frozen=True)
class PhiAlgorithm:
    id: str
    guarantee: Fraction
    run: Callable[[PhiInstance], EdgeMultiSet] = field(compare=False)


_TSP_REGISTRY: dict[str, TspAlgorithm] = {}
_PHI_REGISTRY: dict[str, PhiAlgorithm] = {}


def register_tsp(algo: TspAlgorithm) -> TspAlgorithm:
    _TSP_REGISTRY[algo.id] = algo
    return algo


def register_phi(algo: PhiAlgorithm) -> PhiAlgorithm:
    _PHI_REGISTRY[algo.id] = algo
    return algo


def get_tsp(algo_id: str) -> TspAlgorithm:
    try:
        return _TSP_REGISTRY[algo_id]
    except KeyError:
        raise KeyError(f"unknown TSP algorithm {algo_id!r}; have {sorted(_TSP_REGISTRY)}") from None


def get_phi(algo_id: str) -> PhiAlgorithm:
    try:
        return _PHI_REGISTRY[algo_id]
    except KeyError:
        raise KeyError(f"unknown Phi algorithm {algo_id!r}; have {sorted(_PHI_REGISTRY)}") from None


def tsp_algorithm_ids() -> tuple[str, ...]:
    return tuple(sorted(_TSP_REGISTRY))


def phi_algorithm_ids() -> tuple[str, ...]:
    return tuple(sorted(_PHI_REGISTRY))


@lru_cache(maxsize=4096)
def _exact_tsp_cached(G: WeightedGraph) -> EdgeMultiSet:
    res = oracle_tsp(G)
    if not res.feasible:
        raise PreconditionError("exact TSP called on a disconnected graph")
    return res.witness


def _exact_tsp(G: WeightedGraph) -> EdgeMultiSet:
    return _exact_tsp_cached(G)


def _exact_phi(inst: PhiInstance) -> EdgeMultiSet:
    res = oracle_phi_opt(inst)
    if not res.feasible:
        raise InfeasibleError("exact Phi solver called on an infeasible instance")
    return res.witness


CHRISTOFIDES = register_tsp(TspAlgorithm("christofides", Fraction(3, 2), christofides_tsp))
EXACT_TSP = register_tsp(TspAlgorithm("exact", Fraction(1), _exact_tsp))
SEVEN_APPROX = register_phi(PhiAlgorithm("seven-approx", Fraction(7), seven_approx_phi))
EXACT_PHI = register_phi(PhiAlgorithm("exact", Fraction(1), _exact_phi))
