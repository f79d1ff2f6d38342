"""Laminar T-cut packing duals: exact LP solve, uncrossing, and cut families.

The fractional T-cut packing maximises sum(y_Q) over shores Q in V\\{t} with
|Q cap T| odd, subject to sum_{Q: e in delta(Q)} y_Q <= l(e).  Its optimum
equals the shortest T-join length; the support is made laminar by shifting
mass between crossing pairs.  Shores are enumerated exhaustively, so the
vertex count is capped; exactness matters more than scale here.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import SizeLimitError, UncrossingError
from .graphs import EdgeMultiSet, WeightedGraph
from .joins import shortest_t_join

DEFAULT_VERTEX_CAP = 14


class LaminarFamily:
    """Family of vertex sets in which any two members are nested or disjoint."""

    __slots__ = ("sets",)

    def __init__(self, sets: Iterable[Iterable[int]]):
        canon = sorted({frozenset(s) for s in sets}, key=lambda s: (len(s), sorted(s)))
        for s in canon:
            if not s:
                raise ValueError("empty set in laminar family")
        for a, b in combinations(canon, 2):
            inter = a & b
            if inter and not (a <= b or b <= a):
                raise ValueError(f"sets {sorted(a)} and {sorted(b)} cross")
        self.sets: tuple[frozenset[int], ...] = tuple(canon)

    @classmethod
    def empty(cls) -> "LaminarFamily":
        return cls(())

    def width(self) -> int:
        """Number of inclusion-minimal members."""
        return sum(
            1
            for s in self.sets
            if not any(o < s for o in self.sets)
        )

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.sets

    def __eq__(self, other) -> bool:
        return isinstance(other, LaminarFamily) and self.sets == other.sets

    def __hash__(self) -> int:
        return hash(self.sets)

    def __repr__(self) -> str:
        return f"LaminarFamily({[sorted(s) for s in self.sets]})"


@dataclass(frozen=True)
class LaminarDual:
    """Laminar family with positive dual values: the T-cut packing certificate."""

    family: LaminarFamily
    y: Mapping[frozenset[int], Fraction]
    root_exclusion: int | None

    def value(self) -> Fraction:
        return sum(self.y.values(), Fraction(0))

    def violations(self, G: WeightedGraph, T: Iterable[int]) -> list[str]:
        """All broken invariants, empty when the certificate is valid."""
        tset = frozenset(T)
        bad = []
        support = set(self.y)
        if support != set(self.family.sets):
            bad.append("support differs from family")
        for s, val in self.y.items():
            if val <= 0:
                bad.append(f"non-positive dual on {sorted(s)}")
            if len(s & tset) % 2 == 0:
                bad.append(f"|L cap T| even for {sorted(s)}")
            if self.root_exclusion is not None and self.root_exclusion in s:
                bad.append(f"{sorted(s)} contains the excluded vertex")
        for eid, (u, v, l) in enumerate(G.edges):
            load = sum(
                (val for s, val in self.y.items() if (u in s) != (v in s)),
                Fraction(0),
            )
            if load > l:
                bad.append(f"edge ({u},{v}) overloaded: {load} > {l}")
        if tset:
            expect = shortest_t_join(G, tset).length
            if self.value() != expect:
                bad.append(f"total value {self.value()} != shortest join {expect}")
        elif self.value() != 0:
            bad.append("non-zero value with empty T")
        return bad


# -- exact primal simplex for  max c.y  s.t.  A y <= b, y >= 0, b >= 0 ----------

def _simplex_max(columns: list[list[Fraction]], b: list[Fraction]) -> tuple[Fraction, list[Fraction]]:
    """Dense-tableau simplex with Bland's rule; objective coefficients are all 1.

    Starts from the slack basis (valid because b >= 0) and therefore never
    needs a phase one.  Deterministic and exact.
    """
    rows = len(b)
    nvars = len(columns)
    width = nvars + rows + 1
    tab = []
    for i in range(rows):
        row = [columns[j][i] for j in range(nvars)]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(rows)]
        row.append(b[i])
        tab.append(row)
    obj = [Fraction(-1)] * nvars + [Fraction(0)] * (rows + 1)
    basis = list(range(nvars, nvars + rows))
    while True:
        enter = next((j for j in range(width - 1) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best_ratio = None
        for i in range(rows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave]
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("packing LP unbounded; input violates T-join existence")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter
    y = [Fraction(0)] * nvars
    for i, bv in enumerate(basis):
        if bv < nvars:
            y[bv] = tab[i][-1]
    return obj[-1], y


def enumerate_t_cut_shores(n: int, T: frozenset[int], t: int) -> list[frozenset[int]]:
    """All Q in V\\{t} with |Q cap T| odd, in canonical order."""
    others = [v for v in range(n) if v != t]
    shores = []
    for mask in range(1, 1 << len(others)):
        q = frozenset(others[i] for i in range(len(others)) if mask >> i & 1)
        if len(q & T) % 2:
            shores.append(q)
    shores.sort(key=lambda s: (len(s), sorted(s)))
    return shores


def solve_cut_packing(
    G: WeightedGraph,
    T: Iterable[int],
    t: int | None = None,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> tuple[dict[frozenset[int], Fraction], Fraction]:
    """Optimal fractional T-cut packing over explicitly enumerated shores.

    Returns the positive-value support and the optimum, which equals the
    shortest T-join length by strong duality.
    """
    tset = frozenset(T)
    if not tset:
        return {}, Fraction(0)
    if G.n > vertex_cap:
        raise SizeLimitError(f"|V| = {G.n} exceeds cut-packing cap {vertex_cap}")
    if t is None:
        t = min(tset)
    if t not in tset:
        raise ValueError(f"root-exclusion vertex {t} not in T")
    shortest_t_join(G, tset)  # raises NoTJoinError when no join exists
    shores = enumerate_t_cut_shores(G.n, tset, t)
    columns = []
    for q in shores:
        col = [Fraction(1) if (u in q) != (v in q) else Fraction(0) for u, v, _ in G.edges]
        columns.append(col)
    b = [l for _, _, l in G.edges]
    value, y = _simplex_max(columns, b)
    support = {q: val for q, val in zip(shores, y) if val > 0}
    return support, value


def uncross(
    y: Mapping[frozenset[int], Fraction],
    T: Iterable[int],
    n: int,
    *,
    step_budget: int | None = None,
) -> dict[frozenset[int], Fraction]:
    """Shift dual mass off crossing pairs until the support is laminar.

    For crossing A, B: if |A cap B cap T| is odd move min(y_A, y_B) to
    (A cap B, A cup B), otherwise to (A \\ B, B \\ A); exactly one case applies
    by parity.  Pairs are picked canonically.  Termination inside the budget
    is not guaranteed by theory here, so exhaustion raises loudly instead of
    accepting a non-laminar answer.
    """
    tset = frozenset(T)
    cur = {s: v for s, v in y.items() if v > 0}
    if step_budget is None:
        step_budget = max(1, 10 * len(cur) * n * n)
    steps = 0
    while True:
        support = sorted(cur, key=lambda s: (len(s), sorted(s)))
        pair = None
        for i in range(len(support)):
            a = support[i]
            for j in range(i + 1, len(support)):
                b = support[j]
                if a & b and not (a <= b or b <= a):
                    pair = (a, b)
                    break
            if pair:
                break
        if pair is None:
            return cur
        steps += 1
        if steps > step_budget:
            raise UncrossingError(
                f"no laminar support after {steps - 1} uncrossing steps (budget {step_budget})"
            )
        a, b = pair
        shift = min(cur[a], cur[b])
        if len(a & b & tset) % 2:
            targets = (a & b, a | b)
        else:
            targets = (a - b, b - a)
        for s in (a, b):
            cur[s] -= shift
            if cur[s] == 0:
                del cur[s]
        for s in targets:
            cur[s] = cur.get(s, Fraction(0)) + shift


def build_laminar_dual(
    G: WeightedGraph,
    T: Iterable[int],
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    step_budget: int | None = None,
) -> LaminarDual:
    """Certificate with laminar support; empty for T = empty set."""
    tset = frozenset(T)
    if not tset:
        return LaminarDual(LaminarFamily.empty(), {}, None)
    t = min(tset)
    raw, value = solve_cut_packing(G, tset, t, vertex_cap=vertex_cap)
    flat = uncross(raw, tset, G.n, step_budget=step_budget)
    dual = LaminarDual(LaminarFamily(flat.keys()), flat, t)
    problems = dual.violations(G, tset)
    if problems:
        raise UncrossingError("invalid dual after uncrossing: " + "; ".join(problems))
    return dual


def build_laminar_family(
    G: WeightedGraph,
    T: Iterable[int],
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    step_budget: int | None = None,
) -> LaminarFamily:
    return build_laminar_dual(G, T, vertex_cap=vertex_cap, step_budget=step_budget).family


def cuts_with_few_edges(
    G: WeightedGraph,
    R: EdgeMultiSet,
    fam: LaminarFamily,
    k: int,
) -> tuple[LaminarFamily, EdgeMultiSet]:
    """L(R, k) and R(L, k): members whose cut meets R in <= k edges (counting
    multiplicity), and the sub-multiset of R inside those cuts at full
    multiplicity."""
    if k < 0:
        raise ValueError("k must be non-negative")
    G.validate_multiset(R)
    selected = []
    edge_ids: set[int] = set()
    for s in fam:
        cut = G.delta(s)
        crossing = [e for e in cut if R.get(e)]
        load = sum(R.get(e) for e in crossing)
        if load <= k:
            selected.append(s)
            edge_ids.update(crossing)
    sub = EdgeMultiSet({e: R.get(e) for e in edge_ids})
    return LaminarFamily(selected), sub
