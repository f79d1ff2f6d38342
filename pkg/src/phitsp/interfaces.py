"""The Phi-TSP problem model: interfaces, tours, feasibility, induced interfaces.

An interface (I, T, C) prescribes, for an edge multi-set F: odd(F) = T, the
quotient (V,F)/I is connected, and every part of the partition C of I lies in
one connected component of (V,F).  Plain TSP is the empty interface; the s-t
path problem is I = T = {s,t} with the single part {s,t}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MalformedMultisetError, PreconditionError
from .graphs import (
    EdgeMultiSet,
    UnionFind,
    WeightedGraph,
    is_connected_contracted,
    multiset_components,
    restrict_within,
)


class Interface:
    """Canonical triple (I, T, parts); immutable and usable as a dict key."""

    __slots__ = ("I", "T", "parts")

    def __init__(self, I: Iterable[int], T: Iterable[int], parts: Iterable[Iterable[int]]):
        iset = frozenset(I)
        tset = frozenset(T)
        cparts = tuple(sorted((frozenset(p) for p in parts), key=min))
        if not tset <= iset:
            raise ValueError(f"T must be a subset of I; stray vertices {sorted(tset - iset)}")
        if len(tset) % 2:
            raise ValueError(f"|T| must be even, got {len(tset)}")
        if any(not p for p in cparts):
            raise ValueError("empty partition part")
        seen: set[int] = set()
        for p in cparts:
            if seen & p:
                raise ValueError("partition parts overlap")
            seen |= p
        if seen != iset:
            raise ValueError("partition does not cover I")
        object.__setattr__(self, "I", iset)
        object.__setattr__(self, "T", tset)
        object.__setattr__(self, "parts", cparts)

    def __setattr__(self, *args):
        raise AttributeError("Interface is immutable")

    @classmethod
    def empty(cls) -> "Interface":
        return cls((), (), ())

    @classmethod
    def for_path(cls, s: int, t: int) -> "Interface":
        if s == t:
            raise ValueError("path endpoints must differ")
        return cls({s, t}, {s, t}, ({s, t},))

    @property
    def size(self) -> int:
        return len(self.I)

    def key(self) -> tuple:
        return (
            tuple(sorted(self.I)),
            tuple(sorted(self.T)),
            tuple(tuple(sorted(p)) for p in self.parts),
        )

    def relabel(self, mapping: dict[int, int]) -> "Interface":
        return Interface(
            (mapping[v] for v in self.I),
            (mapping[v] for v in self.T),
            ((mapping[v] for v in p) for p in self.parts),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Interface) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Interface(I={sorted(self.I)}, T={sorted(self.T)}, C={[sorted(p) for p in self.parts]})"


@dataclass(frozen=True)
class PhiInstance:
    graph: WeightedGraph
    interface: Interface

    def __post_init__(self):
        bad = [v for v in self.interface.I if not (0 <= v < self.graph.n)]
        if bad:
            raise ValueError(f"interface vertices {bad} out of range for n={self.graph.n}")


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the linear-time tour-existence test.

    `condition` is 1, 2, or 3 for the first violated requirement (T-parity per
    component, quotient connectivity, partition connectivity); `witness` is a
    violating vertex set.
    """

    feasible: bool
    condition: int | None = None
    witness: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.feasible


def check_feasibility(inst: PhiInstance) -> FeasibilityReport:
    G, phi = inst.graph, inst.interface
    comps = G.components()
    for comp in comps:
        if len(comp & phi.T) % 2:
            return FeasibilityReport(False, 1, comp)
    if phi.I:
        for comp in comps:
            if not comp & phi.I:
                return FeasibilityReport(False, 2, comp)
    elif len(comps) > 1:
        return FeasibilityReport(False, 2, comps[1])
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    for part in phi.parts:
        if len({comp_of[v] for v in part}) > 1:
            return FeasibilityReport(False, 3, part)
    return FeasibilityReport(True)


def is_feasible(inst: PhiInstance) -> bool:
    return check_feasibility(inst).feasible


def is_phi_tour(F: EdgeMultiSet, inst: PhiInstance) -> bool:
    """Check the three tour conditions for F on the instance."""
    G, phi = inst.graph, inst.interface
    G.validate_multiset(F)
    if G.odd_vertices(F) != phi.T:
        return False
    if not is_connected_contracted(G, F, phi.I):
        return False
    if phi.parts:
        comps = multiset_components(G, F)
        comp_of = {}
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        for part in phi.parts:
            if len({comp_of[v] for v in part}) > 1:
                return False
    return True


def induce_interface(F: EdgeMultiSet, inst: PhiInstance, W: Iterable[int]) -> Interface:
    """Interface that the tour F imposes on the vertex subset W.

    I_W collects interface vertices inside W plus endpoints of F-edges leaving
    W; T_W = odd(F[W]); the parts group I_W by the components of (W, F[W]).
    """
    G, phi = inst.graph, inst.interface
    ws = frozenset(W)
    if any(not (0 <= v < G.n) for v in ws):
        raise ValueError("W out of range")
    if not is_phi_tour(F, inst):
        raise PreconditionError("induce_interface requires a genuine Phi-tour")
    boundary = set()
    for eid, _ in F.items:
        u, v, _ = G.edges[eid]
        if (u in ws) != (v in ws):
            boundary.add(u if u in ws else v)
    i_w = (phi.I & ws) | boundary
    fw = restrict_within(G, F, ws)
    t_w = G.odd_vertices(fw)
    verts = sorted(ws)
    pos = {v: i for i, v in enumerate(verts)}
    uf = UnionFind(len(verts))
    for eid, _ in fw.items:
        u, v, _ = G.edges[eid]
        uf.union(pos[u], pos[v])
    groups: dict[int, set[int]] = {}
    for v in i_w:
        groups.setdefault(uf.find(pos[v]), set()).add(v)
    return Interface(i_w, t_w, groups.values())


def combine_partial(
    X: EdgeMultiSet,
    tours: list[tuple[frozenset[int], EdgeMultiSet]],
    inst: PhiInstance,
) -> EdgeMultiSet:
    """Glue cross edges X with per-part tours F_i into one multiset on G.

    The W_i must partition V and each F_i is given in the local edge ids of
    G.induced(W_i).  No tour-validity promise is made here: callers re-check
    the combined multiset, mirroring the guard in the dynamic program.
    """
    G = inst.graph
    parts = [frozenset(w) for w, _ in tours]
    if any(not p for p in parts):
        raise PreconditionError("partition parts must be non-empty")
    union: set[int] = set()
    for p in parts:
        if union & p:
            raise PreconditionError("partition parts overlap")
        union |= p
    if union != set(range(G.n)):
        raise PreconditionError("parts do not partition the vertex set")
    G.validate_multiset(X)
    for eid, _ in X.items:
        u, v, _ = G.edges[eid]
        if not any((u in p) != (v in p) for p in parts):
            raise PreconditionError(f"cross edge {eid} does not cross the partition")
    pieces = [X]
    for w, f_local in tours:
        sub = G.induced(w)
        sub.graph.validate_multiset(f_local)
        pieces.append(sub.lift(f_local))
    out = pieces[0]
    for p in pieces[1:]:
        out = out + p
    return out


def canonical_key(iface: Interface, W: Iterable[int]) -> tuple:
    """Totally ordered key for DP memoisation on the pair (W, interface)."""
    return (tuple(sorted(W)), iface.key())
