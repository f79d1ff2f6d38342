"""Ground-truth solvers by exhaustive enumeration over tiny instances.

The search space for tour-type problems is every multiplicity vector in
{0,1,2}^E: dropping two copies of any edge with multiplicity >= 3 changes
neither parities nor connectivity, so an optimum lives in that box.  The
enumeration is factored as (support S) x (subset of S to double): the support
alone decides every connectivity condition, and the cheapest doubling with the
required parity is found by a DP over vertex-parity classes.  This visits the
same space as a plain product scan (a test cross-checks the two).

Witness tie-break: the lexicographically smallest multiplicity vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .errors import SizeLimitError
from .graphs import EdgeMultiSet, UnionFind, WeightedGraph
from .interfaces import Interface, PhiInstance

DEFAULT_EDGE_CAP = 18
_VERTEX_CAP = 16  # parity DP state space is 2^n


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    optimum: Fraction | None
    witness: EdgeMultiSet | None
    count: int

    def require(self) -> Fraction:
        if not self.feasible:
            raise ValueError("instance is infeasible")
        assert self.optimum is not None
        return self.optimum


def _check_caps(G: WeightedGraph, edge_cap: int) -> None:
    if G.m > edge_cap:
        raise SizeLimitError(f"|E| = {G.m} exceeds oracle cap {edge_cap}")
    if G.n > _VERTEX_CAP:
        raise SizeLimitError(f"|V| = {G.n} exceeds oracle vertex cap {_VERTEX_CAP}")


def _parity_dp(edge_ids, vmasks, weights, m, target):
    """Cheapest subset of the given edges with odd-degree mask == target.

    Returns (cost, count, subset-mask) or None.  Lexicographic preference is
    encoded by putting edge i at reversed bit position (m-1-i), so smaller
    keys mean lexicographically smaller indicator vectors.
    """
    states: dict[int, tuple[int, int, int]] = {0: (0, 1, 0)}
    for eid in edge_ids:
        vm = vmasks[eid]
        w = weights[eid]
        bit = 1 << (m - 1 - eid)
        nxt = dict(states)
        for p, (c, cnt, key) in states.items():
            q = p ^ vm
            cand = (c + w, cnt, key | bit)
            cur = nxt.get(q)
            if cur is None or cand[0] < cur[0]:
                nxt[q] = cand
            elif cand[0] == cur[0]:
                better_key = cur[2] if cur[2] <= cand[2] else cand[2]
                nxt[q] = (cur[0], cur[1] + cand[1], better_key)
        states = nxt
    got = states.get(target)
    if got is None:
        return None
    cost, cnt, key = got
    sub = 0
    for i in range(m):
        if key >> (m - 1 - i) & 1:
            sub |= 1 << i
    return cost, cnt, sub


def _search_min(
    G: WeightedGraph,
    support_ok: Callable[[int], bool],
    target_mask: int | None,
) -> tuple[int, tuple[int, ...], int] | None:
    """Scan supports by increasing length; return (int length, vector, count).

    target_mask None means a pure edge-set problem (no doubling allowed).
    """
    m = G.m
    w = G.int_lengths
    vmasks = G.edge_vertex_masks
    nmask = 1 << m
    len_of = [0] * nmask
    odd_of = [0] * nmask
    for mask in range(1, nmask):
        low = mask & -mask
        i = low.bit_length() - 1
        len_of[mask] = len_of[mask ^ low] + w[i]
        odd_of[mask] = odd_of[mask ^ low] ^ vmasks[i]
    order = sorted(range(nmask), key=lambda s: (len_of[s], s))

    best_len: int | None = None
    best_vec: tuple[int, ...] | None = None
    best_count = 0
    for S in order:
        base_len = len_of[S]
        if best_len is not None and base_len > best_len:
            break
        if not support_ok(S):
            continue
        sedges = [i for i in range(m) if S >> i & 1]
        if target_mask is None:
            total, cnt, dub = base_len, 1, 0
        else:
            need = odd_of[S] ^ target_mask
            if need == 0:
                total, cnt, dub = base_len, 1, 0
            else:
                got = _parity_dp(sedges, vmasks, w, m, need)
                if got is None:
                    continue
                total, cnt, dub = base_len + got[0], got[1], got[2]
        if best_len is not None and total > best_len:
            continue
        vec = tuple((S >> i & 1) + (dub >> i & 1) for i in range(m))
        if best_len is None or total < best_len:
            best_len, best_vec, best_count = total, vec, cnt
        else:
            best_count += cnt
            if vec < best_vec:
                best_vec = vec
    if best_len is None:
        return None
    return best_len, best_vec, best_count


def _result(G: WeightedGraph, found) -> OracleResult:
    if found is None:
        return OracleResult(False, None, None, 0)
    total, vec, count = found
    witness = EdgeMultiSet({i: c for i, c in enumerate(vec) if c})
    return OracleResult(True, Fraction(total, G.length_scale), witness, count)


def _phi_support_ok(G: WeightedGraph, phi: Interface) -> Callable[[int], bool]:
    n = G.n
    ends = [(u, v) for u, v, _ in G.edges]
    iverts = sorted(phi.I)
    parts = [sorted(p) for p in phi.parts if len(p) > 1]

    def ok(S: int) -> bool:
        uf = UnionFind(n)
        mask = S
        while mask:
            low = mask & -mask
            u, v = ends[low.bit_length() - 1]
            uf.union(u, v)
            mask ^= low
        for p in parts:
            r = uf.find(p[0])
            if any(uf.find(v) != r for v in p[1:]):
                return False
        if iverts:
            for v in iverts[1:]:
                uf.union(iverts[0], v)
        if n:
            r = uf.find(0)
            if any(uf.find(v) != r for v in range(1, n)):
                return False
        return True

    return ok


def _connected_support_ok(G: WeightedGraph) -> Callable[[int], bool]:
    n = G.n
    ends = [(u, v) for u, v, _ in G.edges]

    def ok(S: int) -> bool:
        uf = UnionFind(n)
        mask = S
        while mask:
            low = mask & -mask
            u, v = ends[low.bit_length() - 1]
            uf.union(u, v)
            mask ^= low
        if n == 0:
            return True
        r = uf.find(0)
        return all(uf.find(v) == r for v in range(1, n))

    return ok


def oracle_phi_opt(inst: PhiInstance, *, edge_cap: int = DEFAULT_EDGE_CAP, max_mult: int = 2) -> OracleResult:
    """Optimal Phi-tour by exhaustive search; max_mult=3 is the paranoid mode."""
    G = inst.graph
    _check_caps(G, edge_cap)
    if max_mult == 2:
        target = sum(1 << v for v in inst.interface.T)
        return _result(G, _search_min(G, _phi_support_ok(G, inst.interface), target))
    from .interfaces import is_phi_tour

    return _direct_scan(G, lambda F: is_phi_tour(F, inst), max_mult)


def oracle_tsp(G: WeightedGraph, *, edge_cap: int = DEFAULT_EDGE_CAP, max_mult: int = 2) -> OracleResult:
    """Optimal TSP tour (connected spanning multiset with all degrees even)."""
    _check_caps(G, edge_cap)
    if max_mult == 2:
        return _result(G, _search_min(G, _connected_support_ok(G), 0))
    inst = PhiInstance(G, Interface.empty())
    from .interfaces import is_phi_tour

    return _direct_scan(G, lambda F: is_phi_tour(F, inst), max_mult)


def oracle_path_tsp(G: WeightedGraph, s: int, t: int, *, edge_cap: int = DEFAULT_EDGE_CAP) -> OracleResult:
    """Optimal s-t tour: connected spanning with odd(F) = {s, t}."""
    _check_caps(G, edge_cap)
    if s == t:
        raise ValueError("path endpoints must differ")
    target = (1 << s) | (1 << t)
    return _result(G, _search_min(G, _connected_support_ok(G), target))


def oracle_steiner_forest(
    G: WeightedGraph, groups: Iterable[Iterable[int]], *, edge_cap: int = DEFAULT_EDGE_CAP
) -> OracleResult:
    """Optimal edge set connecting every group within itself (a set, not multiset)."""
    _check_caps(G, edge_cap)
    want = [sorted(set(g)) for g in groups]
    want = [g for g in want if len(g) > 1]
    n = G.n
    ends = [(u, v) for u, v, _ in G.edges]

    def ok(S: int) -> bool:
        uf = UnionFind(n)
        mask = S
        while mask:
            low = mask & -mask
            u, v = ends[low.bit_length() - 1]
            uf.union(u, v)
            mask ^= low
        for g in want:
            r = uf.find(g[0])
            if any(uf.find(v) != r for v in g[1:]):
                return False
        return True

    return _result(G, _search_min(G, ok, None))


def oracle_t_joins(G: WeightedGraph, T: Iterable[int], *, edge_cap: int = DEFAULT_EDGE_CAP) -> list[EdgeMultiSet]:
    """Every inclusion-distinct T-join with multiplicity <= 1, canonically ordered."""
    _check_caps(G, edge_cap)
    target = sum(1 << v for v in frozenset(T))
    m = G.m
    vmasks = G.edge_vertex_masks
    out = []
    for mask in range(1 << m):
        odd = 0
        rest = mask
        while rest:
            low = rest & -rest
            odd ^= vmasks[low.bit_length() - 1]
            rest ^= low
        if odd == target:
            out.append(EdgeMultiSet({i: 1 for i in range(m) if mask >> i & 1}))
    out.sort(key=lambda F: G.multiset_key(F))
    return out


def _direct_scan(G: WeightedGraph, valid: Callable[[EdgeMultiSet], bool], max_mult: int) -> OracleResult:
    """Plain product scan over {0..max_mult}^E; slow, used as the paranoid mode."""
    if G.m > 12:
        raise SizeLimitError(f"direct scan needs |E| <= 12, got {G.m}")
    best = None
    best_vec = None
    count = 0
    w = G.int_lengths
    for vec in product(range(max_mult + 1), repeat=G.m):
        F = EdgeMultiSet({i: c for i, c in enumerate(vec) if c})
        if not valid(F):
            continue
        total = sum(c * w[i] for i, c in enumerate(vec))
        if best is None or total < best:
            best, best_vec, count = total, vec, 1
        elif total == best:
            count += 1
    if best is None:
        return OracleResult(False, None, None, 0)
    witness = EdgeMultiSet({i: c for i, c in enumerate(best_vec) if c})
    return OracleResult(True, Fraction(best, G.length_scale), witness, count)
