"""The core pipeline: per-component TSP plus join, heavy-edge guessing, the
laminar-family dynamic program, the boosting combinator, and the level schedule.

All tour comparisons are exact; among equal-length tours the one with the
lexicographically smallest dense multiplicity vector wins, so every algorithm
here is deterministic.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable

from ._enum import iter_disjoint_subfamilies, iter_subsets, set_partitions
from .baselines import PhiAlgorithm, TspAlgorithm, get_phi, get_tsp
from .duals import LaminarFamily, build_laminar_family
from .errors import InfeasibleError, PreconditionError, SizeLimitError
from .graphs import EdgeMultiSet, WeightedGraph, multi_union, translate_multiset
from .interfaces import Interface, PhiInstance, check_feasibility, is_phi_tour
from .joins import JoinResult, shortest_t_join

DEFAULT_DP_NODE_CAP = 5_000_000
DEFAULT_HSTAR_CAP = 200_000


@dataclass(frozen=True)
class BoostParams:
    """Knobs for one end-to-end solve.

    `alpha` / `beta` default to the registered guarantees of the chosen
    algorithms.  `dp_k` overrides the per-cut guess budget that the theory
    sets to floor(1/delta); leave None for the faithful value.
    """

    epsilon: Fraction = Fraction(1)
    alpha: Fraction | None = None
    beta: Fraction | None = None
    k_interface_cap: int = 2
    max_boost_iters: int = 1
    dp_k: int | None = None
    x_multiplicity: int = 1
    tsp_id: str = "christofides"
    base_id: str = "seven-approx"
    dp_node_cap: int = DEFAULT_DP_NODE_CAP
    hstar_cap: int = DEFAULT_HSTAR_CAP


@dataclass(frozen=True)
class ScheduleLevel:
    index: int
    beta: Fraction
    k_budget: Fraction


@dataclass(frozen=True)
class BoostSchedule:
    eps_prime: Fraction
    i_max: int
    levels: tuple[ScheduleLevel, ...]


@dataclass(frozen=True)
class SolveReport:
    instance: str
    algorithm: str
    epsilon: Fraction
    k: int
    levels: int
    length: Fraction
    optimum: Fraction | None
    ratio: Fraction | None
    valid: bool
    millis: int
    level_betas: tuple[Fraction, ...] = ()
    level_lengths: tuple[Fraction, ...] = ()

    def with_optimum(self, optimum: Fraction) -> "SolveReport":
        ratio = None if optimum == 0 else self.length / optimum
        return replace(self, optimum=optimum, ratio=ratio)


def _better(G: WeightedGraph, a: EdgeMultiSet | None, b: EdgeMultiSet | None) -> EdgeMultiSet | None:
    if a is None:
        return b
    if b is None:
        return a
    ka = (G.multiset_int_length(a), G.multiset_key(a))
    kb = (G.multiset_int_length(b), G.multiset_key(b))
    return a if ka <= kb else b


# -- Algorithm: per-component TSP tours plus a T-join -----------------------------


def simple_phi(
    inst: PhiInstance,
    tsp: TspAlgorithm,
    join: JoinResult | EdgeMultiSet,
    *,
    _tsp_cache: dict | None = None,
) -> EdgeMultiSet:
    """Q union J where Q glues a TSP tour per connected component.

    Feasibility of the instance is exactly what makes the output a tour.
    """
    report = check_feasibility(inst)
    if not report:
        raise InfeasibleError(f"no Phi-tour exists (condition {report.condition})", report)
    G = inst.graph
    j = join.join if isinstance(join, JoinResult) else join
    G.validate_multiset(j)
    pieces = []
    for comp in G.components():
        sub = G.induced(comp)
        tour_local = None if _tsp_cache is None else _tsp_cache.get(sub.graph)
        if tour_local is None:
            tour_local = tsp.run(sub.graph)
            if _tsp_cache is not None:
                _tsp_cache[sub.graph] = tour_local
        pieces.append(sub.lift(tour_local))
    return multi_union(*pieces, j)


# -- Algorithm: guess-and-delete heavy edges ----------------------------------------


def short_tjoin_algo(
    inst: PhiInstance,
    tsp: TspAlgorithm,
    delta: Fraction | int | str,
    *,
    hstar_cap: int = DEFAULT_HSTAR_CAP,
    _tsp_cache: dict | None = None,
) -> EdgeMultiSet:
    """Best simple_phi result over guessed deletions of heavy non-tour edges.

    Candidate heavy sets are the length-threshold sets H_f = {e: l(e) >= l(f)}
    plus the empty set; within each, every subset H* with |H*| <= 2|I|/delta
    is kept.  Deleting D = H \\ (H* u J) and re-running the simple algorithm
    covers the unknown true heavy set, which yields the
    (1+delta)*alpha*OPT + (alpha+1)*l(J) guarantee.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise PreconditionError("delta must be positive")
    report = check_feasibility(inst)
    if not report:
        raise InfeasibleError(f"no Phi-tour exists (condition {report.condition})", report)
    G, phi = inst.graph, inst.interface
    jres = shortest_t_join(G, phi.T)
    j_support = jres.join.support()
    budget = math.floor(Fraction(2 * len(phi.I)) / delta)

    thresholds = sorted({l for _, _, l in G.edges})
    h_sets = [frozenset()]
    for thr in thresholds:
        h_sets.append(frozenset(e for e, (_, _, l) in enumerate(G.edges) if l >= thr))
    h_sets = list(dict.fromkeys(h_sets))

    total = 0
    for h in h_sets:
        for r in range(min(budget, len(h)) + 1):
            total += math.comb(len(h), r)
    if total > hstar_cap:
        raise SizeLimitError(
            f"H* enumeration needs {total} iterations, over the cap {hstar_cap}; "
            f"raise the cap or use a larger delta"
        )

    cache = {} if _tsp_cache is None else _tsp_cache
    seen: set[frozenset[int]] = set()
    best: EdgeMultiSet | None = None
    for h in h_sets:
        members = sorted(h)
        for r in range(min(budget, len(h)) + 1):
            for hstar in combinations(members, r):
                d = h - set(hstar) - j_support
                if d in seen:
                    continue
                seen.add(d)
                sub_graph = G.delete_edges(d)
                sub_inst = PhiInstance(sub_graph, phi)
                if not check_feasibility(sub_inst):
                    continue
                j_sub = translate_multiset(jres.join, G, sub_graph)
                f_sub = simple_phi(sub_inst, tsp, JoinResult(j_sub, jres.length), _tsp_cache=cache)
                best = _better(G, best, translate_multiset(f_sub, sub_graph, G))
    assert best is not None  # H = empty set keeps the feasible original instance
    return best


# -- Algorithm: dynamic program over a laminar family -------------------------------


class _LaminarDP:
    """Bottom-up table of best tours per (laminar set, interface) cell.

    Cells are filled smaller-to-larger.  For each cell host L the code
    enumerates child subfamilies, cross-edge guesses X, and interface vertex
    sets I_L; the interfaces of the children are forced on their I-part and
    enumerated on parity/partition, exactly the space the candidate guard
    re-validates.  Tours are kept as (int length, dense vector, odd-degree
    bitmask, support bitmask) and every stored tour has passed the guard.
    """

    def __init__(
        self,
        inst: PhiInstance,
        fam: LaminarFamily,
        k: int,
        base: PhiAlgorithm,
        x_multiplicity: int,
        node_cap: int,
    ):
        self.G = inst.graph
        self.phi = inst.interface
        self.k = k
        self.base = base
        self.xmult = x_multiplicity
        self.node_cap = node_cap
        self.nodes = 0
        self.V = frozenset(range(self.G.n))
        members = {frozenset(s) for s in fam} | {self.V}
        self.lbar = sorted(members, key=lambda s: (len(s), sorted(s)))
        self.cells: dict[frozenset, dict[tuple, tuple]] = {}
        self.by_i: dict[frozenset, dict[frozenset, list[tuple]]] = {}
        self._subgraphs: dict[frozenset, object] = {}
        self._base_cache: dict[tuple, tuple | None] = {}
        self._options_cache: dict[tuple, list[tuple]] = {}
        self._parent = list(range(self.G.n))
        self._empty_piece = (0, (0,) * self.G.m, 0, 0)

    # tour piece := (len_int, vec, odd_mask, supp_mask)

    def _mask_of(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            m |= 1 << v
        return m

    def _piece_from_multiset(self, F: EdgeMultiSet) -> tuple:
        G = self.G
        vec = [0] * G.m
        odd = 0
        supp = 0
        ln = 0
        w = G.int_lengths
        vm = G.edge_vertex_masks
        for eid, cnt in F.items:
            vec[eid] = cnt
            ln += cnt * w[eid]
            supp |= 1 << eid
            if cnt & 1:
                odd ^= vm[eid]
        return ln, tuple(vec), odd, supp

    def _subgraph(self, L: frozenset):
        sub = self._subgraphs.get(L)
        if sub is None:
            sub = self.G.induced(L)
            self._subgraphs[L] = sub
        return sub

    def _base_call(self, L: frozenset, iface: Interface) -> tuple | None:
        key = (L, iface.key())
        if key in self._base_cache:
            return self._base_cache[key]
        sub = self._subgraph(L)
        local = iface.relabel(sub._vertex_map)
        local_inst = PhiInstance(sub.graph, local)
        if not check_feasibility(local_inst):
            result = None
        else:
            lifted = sub.lift(self.base.run(local_inst))
            result = self._piece_from_multiset(lifted)
        self._base_cache[key] = result
        return result

    def _base_options(self, L0: frozenset, i0: frozenset, forced: frozenset, free: frozenset) -> list[tuple]:
        """Distinct base tours on G[L0] over interfaces (i0, forced+S, C0)."""
        key = (L0, i0, forced, free)
        got = self._options_cache.get(key)
        if got is not None:
            return got
        options: dict[tuple, tuple] = {}
        parts_pool = set_partitions(tuple(sorted(i0)))
        for extra in iter_subsets(free):
            t0 = forced | frozenset(extra)
            if len(t0) % 2:
                continue
            for parts in parts_pool:
                piece = self._base_call(L0, Interface(i0, t0, parts))
                if piece is not None:
                    options.setdefault(piece[1], piece)
        out = list(options.values())
        self._options_cache[key] = out
        return out

    def _iter_cross_sets(self, pool: list[int], crossing: list[tuple[int, ...]], n_children: int):
        """Multisets X over the pool with per-child cut loads <= k (by multiplicity)."""
        G = self.G
        w = G.int_lengths
        vm = G.edge_vertex_masks
        budgets = [self.k] * n_children
        counts = [0] * len(pool)

        def rec(i: int):
            if i == len(pool):
                ln = 0
                odd = 0
                supp = 0
                umask = 0
                vec = [0] * G.m
                for pos, cnt in enumerate(counts):
                    if cnt:
                        eid = pool[pos]
                        vec[eid] = cnt
                        ln += cnt * w[eid]
                        supp |= 1 << eid
                        umask |= vm[eid]
                        if cnt & 1:
                            odd ^= vm[eid]
                yield (ln, tuple(vec), odd, supp), umask
                return
            eid = pool[i]
            max_c = self.xmult
            for child in crossing[i]:
                max_c = min(max_c, budgets[child])
            for c in range(max_c + 1):
                counts[i] = c
                for child in crossing[i]:
                    budgets[child] -= c
                yield from rec(i + 1)
                for child in crossing[i]:
                    budgets[child] += c
            counts[i] = 0

        yield from rec(0)

    def _consider(self, cell, verts, top, il_mask, i_l, pieces):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise SizeLimitError(
                f"DP enumeration exceeded {self.node_cap} candidates "
                f"(currently at a cell with |L| = {len(verts)})"
            )
        ln = 0
        odd = 0
        supp = 0
        for p in pieces:
            ln += p[0]
            odd ^= p[2]
            supp |= p[3]
        if odd & ~il_mask:
            return
        G = self.G
        parent = self._parent
        for v in verts:
            parent[v] = v

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        bits = supp
        while bits:
            low = bits & -bits
            bits ^= low
            u, v, _ = G.edges[low.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        roots = {find(v) for v in verts}
        if i_l:
            roots_i = {find(v) for v in i_l}
            if not roots <= roots_i:
                return
        elif len(roots) > 1:
            return
        t_l = tuple(v for v in sorted(i_l) if odd >> v & 1)

        groups: dict[int, list[int]] = {}
        for v in sorted(i_l):
            groups.setdefault(find(v), []).append(v)
        group_list = list(groups.values())

        vec = None
        i_key = tuple(sorted(i_l))
        if top:
            # only the instance cell is ever read back from the top level
            if frozenset(t_l) != self.phi.T:
                return
            root_of = {v: find(v) for v in i_l}
            for part in self.phi.parts:
                it = iter(part)
                r = root_of[next(it)]
                if any(root_of[v] != r for v in it):
                    return
            keys = [self.phi.key()]
        else:
            keys = []
            for combo in product(*(set_partitions(tuple(g)) for g in group_list)):
                parts = tuple(sorted((p for sub in combo for p in sub), key=lambda p: p[0]))
                keys.append((i_key, t_l, parts))
        for key in keys:
            incumbent = cell.get(key)
            if incumbent is not None and incumbent[0] < ln:
                continue
            if vec is None:
                vec = tuple(sum(col) for col in zip(*(p[1] for p in pieces)))
            if incumbent is None or (ln, vec) < (incumbent[0], incumbent[1]):
                cell[key] = (ln, vec, odd, supp)

    def _process(self, L: frozenset):
        G = self.G
        top = L == self.V
        verts = sorted(L)
        l_mask = self._mask_of(verts)
        cell: dict[tuple, tuple] = {}
        self.cells[L] = cell
        kmax = len(self.phi.I) + self.k
        if top:
            i_cands = [self.phi.I]
        else:
            i_cands = [frozenset(c) for c in iter_subsets(verts, kmax)]
        children_pool = [M for M in self.lbar if M < L]
        edges_in_l = [
            eid for eid, (u, v, _) in enumerate(G.edges) if u in L and v in L
        ]
        for subfam in iter_disjoint_subfamilies(children_pool):
            child_masks = [self._mask_of(c) for c in subfam]
            covered = frozenset().union(*subfam) if subfam else frozenset()
            l0 = L - covered
            l0_mask = l_mask & ~self._mask_of(covered)
            pool = []
            crossing = []
            for eid in edges_in_l:
                vm = G.edge_vertex_masks[eid]
                hits = tuple(
                    i for i, cm in enumerate(child_masks) if (vm & cm) and (vm & ~cm)
                )
                if hits:
                    pool.append(eid)
                    crossing.append(hits)
            child_lists = [self.by_i.get(c, {}) for c in subfam]
            for x_piece, umask in self._iter_cross_sets(pool, crossing, len(subfam)):
                for i_l in i_cands:
                    il_mask = self._mask_of(i_l)
                    opts = []
                    for idx, c in enumerate(subfam):
                        i_child = frozenset(
                            v for v in c if (il_mask | umask) >> v & 1
                        )
                        lst = child_lists[idx].get(i_child)
                        if not lst:
                            opts = None
                            break
                        opts.append(lst)
                    if opts is None:
                        continue
                    i0 = frozenset(v for v in l0 if (il_mask | umask) >> v & 1)
                    i0_mask = self._mask_of(i0)
                    for picked in product(*opts):
                        p_mask = x_piece[2]
                        for t in picked:
                            p_mask ^= t[2]
                        forced_mask = p_mask & ~il_mask
                        if not l0:
                            if forced_mask:
                                continue
                            self._consider(
                                cell, verts, top, il_mask, i_l,
                                (x_piece, *picked),
                            )
                            continue
                        if forced_mask & ~i0_mask:
                            continue
                        forced = frozenset(v for v in i0 if forced_mask >> v & 1)
                        free = frozenset(v for v in i0 if (il_mask & i0_mask) >> v & 1)
                        for f0 in self._base_options(l0, i0, forced, free):
                            self._consider(
                                cell, verts, top, il_mask, i_l,
                                (x_piece, *picked, f0),
                            )
        if not top:
            index: dict[frozenset, dict[tuple, tuple]] = {}
            for key, entry in cell.items():
                i_set = frozenset(key[0])
                index.setdefault(i_set, {})[entry[1]] = entry
            self.by_i[L] = {i: list(vs.values()) for i, vs in index.items()}

    def solve(self) -> EdgeMultiSet:
        for L in self.lbar:
            self._process(L)
        entry = self.cells[self.V].get(self.phi.key())
        assert entry is not None, "feasible instance must yield a top-level tour"
        return EdgeMultiSet({i: c for i, c in enumerate(entry[1]) if c})


def dp_guess(
    inst: PhiInstance,
    fam: LaminarFamily,
    k: int,
    base: PhiAlgorithm,
    *,
    x_multiplicity: int = 1,
    node_cap: int = DEFAULT_DP_NODE_CAP,
) -> EdgeMultiSet:
    """Best tour assembled by guessing up to k tour edges per laminar cut.

    Guarantee (with R ranging over tours): l(F) <= min beta*l(R) -
    (beta-1)*l(R(fam,k)).  Guessed cross sets X use each edge at most
    `x_multiplicity` times; 1 suffices in practice and 2 makes the guarantee
    airtight when a witness doubles an edge across a guessed cut.
    """
    report = check_feasibility(inst)
    if not report:
        raise InfeasibleError(f"no Phi-tour exists (condition {report.condition})", report)
    if k < 0:
        raise PreconditionError("k must be non-negative")
    if x_multiplicity not in (1, 2):
        raise ValueError("x_multiplicity must be 1 or 2")
    for s in fam:
        if any(not (0 <= v < inst.graph.n) for v in s):
            raise ValueError("laminar family member out of range")
    solver = _LaminarDP(inst, fam, k, base, x_multiplicity, node_cap)
    result = solver.solve()
    assert is_phi_tour(result, inst)
    return result


# -- Algorithm: pick the branch by T-join length -------------------------------------


def long_tjoin_algo(
    inst: PhiInstance,
    base: PhiAlgorithm,
    delta: Fraction | int | str,
    *,
    dp_k: int | None = None,
    x_multiplicity: int = 1,
    node_cap: int = DEFAULT_DP_NODE_CAP,
    dual_vertex_cap: int = 14,
) -> EdgeMultiSet:
    """DP over the T-cut packing dual's laminar family with k = floor(1/delta).

    For T = empty set the base algorithm already meets the claimed bound and
    is called directly.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise PreconditionError("delta must be positive")
    report = check_feasibility(inst)
    if not report:
        raise InfeasibleError(f"no Phi-tour exists (condition {report.condition})", report)
    if not inst.interface.T:
        return base.run(inst)
    k = math.floor(Fraction(1) / delta) if dp_k is None else dp_k
    fam = build_laminar_family(inst.graph, inst.interface.T, vertex_cap=dual_vertex_cap)
    return dp_guess(inst, fam, k, base, x_multiplicity=x_multiplicity, node_cap=node_cap)


def boost_once(
    inst: PhiInstance,
    tsp: TspAlgorithm,
    base: PhiAlgorithm,
    epsilon: Fraction | int | str,
    *,
    dp_k: int | None = None,
    x_multiplicity: int = 1,
    node_cap: int = DEFAULT_DP_NODE_CAP,
    hstar_cap: int = DEFAULT_HSTAR_CAP,
    _tsp_cache: dict | None = None,
) -> EdgeMultiSet:
    """One improvement step: the shorter of the two branch algorithms.

    Branch one runs the heavy-edge guesser with delta = eps/2, branch two the
    laminar DP with delta = eps/8; the shorter output satisfies the factor
    max{(1+eps)*alpha, beta - eps/8*(beta-1)}.
    """
    eps = Fraction(epsilon)
    if not 0 < eps <= 1:
        raise PreconditionError(f"epsilon must lie in (0, 1], got {eps}")
    f1 = short_tjoin_algo(inst, tsp, eps / 2, hstar_cap=hstar_cap, _tsp_cache=_tsp_cache)
    f2 = long_tjoin_algo(
        inst,
        base,
        eps / 8,
        dp_k=dp_k,
        x_multiplicity=x_multiplicity,
        node_cap=node_cap,
    )
    return _better(inst.graph, f1, f2)


# -- the level schedule and the end-to-end entry points ---------------------------------


def boost_schedule(
    k: int,
    epsilon: Fraction | int | str,
    alpha: Fraction | int | str,
    beta0: Fraction | int | str,
) -> BoostSchedule:
    """Level count, per-level factors, and interface budgets, pure arithmetic.

    i_max = ceil((beta0 - (alpha+eps))/(alpha-1) * 8*alpha/eps), run with
    eps' = eps/alpha; beta recurrence beta_i = max(alpha+eps,
    beta_{i-1} - eps'/8*(beta_{i-1}-1)); budgets k_i = k*(9/eps')^(i_max-i).
    """
    eps = Fraction(epsilon)
    alpha = Fraction(alpha)
    beta0 = Fraction(beta0)
    if alpha <= 1:
        raise PreconditionError("alpha must exceed 1")
    if eps <= 0:
        raise PreconditionError("epsilon must be positive")
    if beta0 <= alpha + eps:
        raise PreconditionError("beta0 must exceed alpha + epsilon")
    eps_prime = eps / alpha
    i_max = math.ceil((beta0 - (alpha + eps)) / (alpha - 1) * (8 * alpha / eps))
    ratio = 9 / eps_prime
    levels = []
    beta = beta0
    for i in range(i_max + 1):
        if i:
            beta = max(alpha + eps, beta - eps_prime / 8 * (beta - 1))
        levels.append(ScheduleLevel(i, beta, k * ratio ** (i_max - i)))
    return BoostSchedule(eps_prime, i_max, tuple(levels))


def solve_phi_tsp(inst: PhiInstance, params: BoostParams) -> tuple[EdgeMultiSet, SolveReport]:
    """Run min(max_boost_iters, i_max) boosting levels on top of the base.

    Each level's Phi-algorithm is the previous level's composite.  When the
    base factor is already within alpha + epsilon (or alpha = 1 makes the
    level-count formula meaningless while beta0 <= alpha + eps), no levels are
    stacked and the base answers directly.
    """
    started = time.perf_counter()
    tsp = get_tsp(params.tsp_id)
    base = get_phi(params.base_id)
    alpha = Fraction(params.alpha) if params.alpha is not None else tsp.guarantee
    beta0 = Fraction(params.beta) if params.beta is not None else base.guarantee
    eps = Fraction(params.epsilon)
    if not 0 < eps <= 1:
        raise PreconditionError(f"epsilon must lie in (0, 1], got {eps}")
    phi = inst.interface
    if phi.size > params.k_interface_cap:
        raise SizeLimitError(
            f"interface size {phi.size} exceeds the configured cap {params.k_interface_cap}"
        )
    report = check_feasibility(inst)
    if not report:
        raise InfeasibleError(f"no Phi-tour exists (condition {report.condition})", report)

    eps_prime = eps / alpha
    if beta0 <= alpha + eps:
        i_max: int | None = 0
    elif alpha > 1:
        i_max = boost_schedule(params.k_interface_cap, eps, alpha, beta0).i_max
    else:
        i_max = None  # alpha = 1: the formula is void, run the levels requested
    levels_run = params.max_boost_iters if i_max is None else min(params.max_boost_iters, i_max)

    tsp_cache: dict = {}
    runners: list[PhiAlgorithm] = [base]
    betas: list[Fraction] = [beta0]
    for i in range(1, levels_run + 1):
        prev = runners[-1]
        beta_i = max(alpha + eps, betas[-1] - eps_prime / 8 * (betas[-1] - 1))

        def run(sub_inst: PhiInstance, _prev: PhiAlgorithm = prev) -> EdgeMultiSet:
            return boost_once(
                sub_inst,
                tsp,
                _prev,
                eps_prime,
                dp_k=params.dp_k,
                x_multiplicity=params.x_multiplicity,
                node_cap=params.dp_node_cap,
                hstar_cap=params.hstar_cap,
                _tsp_cache=tsp_cache,
            )

        runners.append(PhiAlgorithm(f"{params.base_id}+boost^{i}", beta_i, run))
        betas.append(beta_i)

    level_lengths = []
    result: EdgeMultiSet | None = None
    for runner in runners:
        result = runner.run(inst)
        level_lengths.append(inst.graph.multiset_length(result))
    assert result is not None
    valid = is_phi_tour(result, inst)
    millis = round((time.perf_counter() - started) * 1000)
    report_out = SolveReport(
        instance="",
        algorithm="boost",
        epsilon=eps,
        k=params.k_interface_cap,
        levels=levels_run,
        length=inst.graph.multiset_length(result),
        optimum=None,
        ratio=None,
        valid=valid,
        millis=millis,
        level_betas=tuple(betas),
        level_lengths=tuple(level_lengths),
    )
    return result, report_out


def solve_path_tsp(
    G: WeightedGraph, s: int, t: int, params: BoostParams
) -> tuple[EdgeMultiSet, SolveReport]:
    """Path entry point; s = t degenerates to the tour problem."""
    iface = Interface.empty() if s == t else Interface.for_path(s, t)
    return solve_phi_tsp(PhiInstance(G, iface), params)
