"""Shortest T-joins via metric closure plus exact minimum-weight perfect matching."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoMatchingError, NoTJoinError, SizeLimitError
from .graphs import EdgeMultiSet, WeightedGraph

# Subset-DP matching is exact but exponential; 20 points is the desk-scale
# ceiling.  A blossom implementation can replace the internals behind the same
# signature if larger T ever matters.
MATCHING_POINT_CAP = 20

Cost = Fraction | int | None


def min_weight_perfect_matching(cost: Sequence[Sequence[Cost]]) -> tuple[tuple[int, int], ...]:
    """Minimum-cost perfect matching of points 0..k-1 by subset DP.

    `cost` is a symmetric matrix; None marks a forbidden pair.  Deterministic:
    the lowest-indexed unmatched point is always paired with the smallest
    partner among cost ties.
    """
    k = len(cost)
    if k % 2:
        raise NoMatchingError(f"cannot perfectly match an odd number of points ({k})")
    if k == 0:
        return ()
    if k > MATCHING_POINT_CAP:
        raise SizeLimitError(f"matching size {k} exceeds cap {MATCHING_POINT_CAP}")
    full = (1 << k) - 1
    best: list[Cost] = [None] * (full + 1)
    best[0] = Fraction(0)
    choice: list[int] = [-1] * (full + 1)
    for mask in range(1, full + 1):
        if bin(mask).count("1") % 2:
            continue
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        b = None
        pick = -1
        j_bits = rest
        while j_bits:
            j = (j_bits & -j_bits).bit_length() - 1
            j_bits &= j_bits - 1
            cij = cost[i][j]
            sub = best[rest ^ (1 << j)]
            if cij is None or sub is None:
                continue
            cand = sub + cij
            if b is None or cand < b:
                b, pick = cand, j
        best[mask] = b
        choice[mask] = pick
    if best[full] is None:
        raise NoMatchingError("no finite-cost perfect matching exists")
    pairs = []
    mask = full
    while mask:
        i = (mask & -mask).bit_length() - 1
        j = choice[mask]
        pairs.append((i, j))
        mask ^= (1 << i) | (1 << j)
    return tuple(pairs)


@dataclass(frozen=True)
class JoinResult:
    join: EdgeMultiSet
    length: Fraction


def _check_parity(G: WeightedGraph, T: frozenset[int]) -> None:
    for comp in G.components():
        if len(comp & T) % 2:
            raise NoTJoinError(
                f"component {sorted(comp)} contains an odd number of T-vertices"
            )


def shortest_t_join(G: WeightedGraph, T: Iterable[int]) -> JoinResult:
    """Minimum-length T-join: match T on the metric closure, XOR the paths.

    Cancelling repeated edges preserves parity and can only shorten the join,
    so the result has multiplicity <= 1 everywhere and is optimal.
    """
    tset = frozenset(T)
    if any(not (0 <= v < G.n) for v in tset):
        raise ValueError("T out of range")
    if len(tset) % 2:
        raise NoTJoinError(f"|T| = {len(tset)} is odd")
    _check_parity(G, tset)
    if not tset:
        return JoinResult(EdgeMultiSet.empty(), Fraction(0))
    terms = sorted(tset)
    if len(terms) > MATCHING_POINT_CAP:
        raise SizeLimitError(f"|T| = {len(terms)} exceeds matching cap {MATCHING_POINT_CAP}")
    dist = {}
    pred = {}
    for t in terms:
        dist[t], pred[t] = G.dijkstra(t)
    k = len(terms)
    cost: list[list[Cost]] = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j:
                cost[i][j] = dist[terms[i]][terms[j]]
    pairs = min_weight_perfect_matching(cost)
    parity: dict[int, int] = {}
    for i, j in pairs:
        a, b = terms[i], terms[j]
        v = b
        while v != a:
            u = pred[a][v]
            eid = G.edge_id(u, v)
            parity[eid] = parity.get(eid, 0) ^ 1
            v = u
    join = EdgeMultiSet({e: 1 for e, p in parity.items() if p})
    return JoinResult(join, G.multiset_length(join))


def extract_t_join_within(F: EdgeMultiSet | Iterable[int], T: Iterable[int], G: WeightedGraph) -> EdgeMultiSet:
    """A T-join J with J a subset of the edge set F, via shortest paths in (V, F)."""
    if isinstance(F, EdgeMultiSet):
        support = sorted(F.support())
    else:
        support = sorted(set(F))
    sub = WeightedGraph(G.n, [G.edges[e] for e in support])
    tset = frozenset(T)
    _check_parity(sub, tset)
    inner = shortest_t_join(sub, tset)
    out = {}
    for eid, cnt in inner.join.items:
        u, v, _ = sub.edges[eid]
        out[G.edge_id(u, v)] = cnt
    return EdgeMultiSet(out)
