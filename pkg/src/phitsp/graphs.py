"""Weighted graphs with exact rational lengths, edge multi-sets, and basic primitives.

Vertices are the integers 0..n-1.  Edges are stored in canonical order, sorted
by (min(u,v), max(u,v)), and referenced everywhere else by their index into
that list.  All lengths are `fractions.Fraction`; floats are rejected so that
every comparison in the library stays exact.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import MalformedMultisetError

LengthLike = Fraction | int | str


def as_length(value: LengthLike) -> Fraction:
    """Convert an int, Fraction, or exact string ("5", "2.5", "7/3") to a length.

    Floats are refused: the test suite checks sharp rational identities.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a valid edge length")
    if isinstance(value, (int, Fraction)):
        q = Fraction(value)
    elif isinstance(value, str):
        q = Fraction(value)
    else:
        raise TypeError(f"edge length must be int, Fraction, or string, got {type(value).__name__}")
    if q < 0:
        raise ValueError(f"edge length must be non-negative, got {q}")
    return q


class UnionFind:
    """Array-based disjoint sets with path compression."""

    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


class EdgeMultiSet:
    """Immutable multi-set of edges of a host graph, keyed by edge id.

    Counts are strictly positive; an absent id means multiplicity zero.
    """

    __slots__ = ("_items",)

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(counts, Mapping):
            pairs = counts.items()
        else:
            pairs = counts
        items = []
        for eid, cnt in sorted(pairs):
            if not isinstance(eid, int) or isinstance(eid, bool) or eid < 0:
                raise MalformedMultisetError(f"bad edge id {eid!r}")
            if not isinstance(cnt, int) or isinstance(cnt, bool) or cnt <= 0:
                raise MalformedMultisetError(f"bad multiplicity {cnt!r} for edge {eid}")
            if items and items[-1][0] == eid:
                raise MalformedMultisetError(f"duplicate edge id {eid}")
            items.append((eid, cnt))
        self._items = tuple(items)

    @classmethod
    def empty(cls) -> "EdgeMultiSet":
        return cls()

    @classmethod
    def from_ids(cls, ids: Iterable[int]) -> "EdgeMultiSet":
        """Build from an iterable of edge ids; repeats raise the multiplicity."""
        counts: dict[int, int] = {}
        for eid in ids:
            counts[eid] = counts.get(eid, 0) + 1
        return cls(counts)

    @property
    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def counts(self) -> dict[int, int]:
        return dict(self._items)

    def get(self, eid: int) -> int:
        for e, c in self._items:
            if e == eid:
                return c
        return 0

    def support(self) -> frozenset[int]:
        return frozenset(e for e, _ in self._items)

    def total_count(self) -> int:
        return sum(c for _, c in self._items)

    def __add__(self, other: "EdgeMultiSet") -> "EdgeMultiSet":
        """Multi-set union (counts add)."""
        counts = dict(self._items)
        for e, c in other._items:
            counts[e] = counts.get(e, 0) + c
        return EdgeMultiSet(counts)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeMultiSet) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        inner = ", ".join(f"{e}x{c}" for e, c in self._items)
        return f"EdgeMultiSet({{{inner}}})"


def multi_union(*sets: EdgeMultiSet) -> EdgeMultiSet:
    counts: dict[int, int] = {}
    for s in sets:
        for e, c in s.items:
            counts[e] = counts.get(e, 0) + c
    return EdgeMultiSet(counts)


class WeightedGraph:
    """Simple undirected graph with non-negative rational edge lengths."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int, LengthLike]] = ()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {n!r}")
        norm = []
        for u, v, length in edges:
            if not (isinstance(u, int) and isinstance(v, int)) or isinstance(u, bool) or isinstance(v, bool):
                raise ValueError(f"vertex ids must be ints, got ({u!r}, {v!r})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            a, b = (u, v) if u < v else (v, u)
            norm.append((a, b, as_length(length)))
        norm.sort(key=lambda e: (e[0], e[1]))
        for i in range(1, len(norm)):
            if norm[i][:2] == norm[i - 1][:2]:
                raise ValueError(f"parallel edge ({norm[i][0]}, {norm[i][1]})")
        self.n = n
        self.edges: tuple[tuple[int, int, Fraction], ...] = tuple(norm)
        self._index = {(u, v): i for i, (u, v, _) in enumerate(self.edges)}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        self._adj = tuple(tuple(a) for a in adj)

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._index

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid]
        return u, v

    def length(self, eid: int) -> Fraction:
        return self.edges[eid][2]

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """Pairs (neighbour, edge id) incident to v."""
        return self._adj[v]

    def delta(self, W: Iterable[int]) -> tuple[int, ...]:
        """Edge ids with exactly one endpoint in W."""
        ws = frozenset(W)
        return tuple(i for i, (u, v, _) in enumerate(self.edges) if (u in ws) != (v in ws))

    # -- cached integer view used by enumeration-heavy callers --------------

    @cached_property
    def length_scale(self) -> int:
        """LCM of the length denominators; lengths times this are integers."""
        scale = 1
        for _, _, l in self.edges:
            scale = scale * l.denominator // math.gcd(scale, l.denominator)
        return scale

    @cached_property
    def int_lengths(self) -> tuple[int, ...]:
        s = self.length_scale
        return tuple(l.numerator * (s // l.denominator) for _, _, l in self.edges)

    @cached_property
    def edge_vertex_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v, _ in self.edges)

    # -- multiset helpers ----------------------------------------------------

    def validate_multiset(self, F: EdgeMultiSet) -> None:
        for eid, _ in F.items:
            if eid >= self.m:
                raise MalformedMultisetError(f"edge id {eid} out of range (graph has {self.m} edges)")

    def odd_vertices(self, F: EdgeMultiSet) -> frozenset[int]:
        """Vertices of odd F-degree, counting multiplicities."""
        self.validate_multiset(F)
        mask = 0
        vmasks = self.edge_vertex_masks
        for eid, cnt in F.items:
            if cnt & 1:
                mask ^= vmasks[eid]
        return frozenset(v for v in range(self.n) if mask >> v & 1)

    def multiset_length(self, F: EdgeMultiSet) -> Fraction:
        self.validate_multiset(F)
        return sum((cnt * self.edges[eid][2] for eid, cnt in F.items), Fraction(0))

    def multiset_int_length(self, F: EdgeMultiSet) -> int:
        self.validate_multiset(F)
        w = self.int_lengths
        return sum(cnt * w[eid] for eid, cnt in F.items)

    def multiset_key(self, F: EdgeMultiSet) -> tuple[int, ...]:
        """Dense multiplicity vector; the canonical tie-breaking encoding."""
        self.validate_multiset(F)
        vec = [0] * self.m
        for eid, cnt in F.items:
            vec[eid] = cnt
        return tuple(vec)

    # -- connectivity --------------------------------------------------------

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components as vertex sets, sorted by smallest member."""
        uf = UnionFind(self.n)
        for u, v, _ in self.edges:
            uf.union(u, v)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(uf.find(v), []).append(v)
        return tuple(sorted((frozenset(g) for g in groups.values()), key=min))

    def is_connected(self) -> bool:
        """True when the graph has at most one connected component."""
        return len(self.components()) <= 1

    # -- derived graphs --------------------------------------------------------

    def contract(self, I: Iterable[int]) -> "Quotient":
        """Contract the vertex set I into a single super-vertex.

        Parallel edges arising from the contraction are collapsed keeping the
        minimum length (ties keep the smallest parent edge id); loops vanish.
        Contracting the empty set returns the graph unchanged.
        """
        iset = frozenset(I)
        if not iset:
            return Quotient(self, tuple(range(self.n)), tuple(range(self.m)))
        if not all(0 <= v < self.n for v in iset):
            raise ValueError("contraction set out of range")
        rep = min(iset)
        vmap = []
        nxt = 0
        for v in range(self.n):
            if v in iset and v != rep:
                vmap.append(-1)
            else:
                vmap.append(nxt)
                nxt += 1
        blob = vmap[rep]
        vmap = [blob if v in iset else vmap[v] for v in range(self.n)]
        best: dict[tuple[int, int], tuple[Fraction, int]] = {}
        for eid, (u, v, l) in enumerate(self.edges):
            a, b = vmap[u], vmap[v]
            if a == b:
                continue
            key = (a, b) if a < b else (b, a)
            cur = best.get(key)
            if cur is None or (l, eid) < cur:
                best[key] = (l, eid)
        quot_edges = [(a, b, l) for (a, b), (l, _) in best.items()]
        graph = WeightedGraph(nxt, quot_edges)
        parent = [0] * graph.m
        for (a, b), (_, eid) in best.items():
            parent[graph.edge_id(a, b)] = eid
        return Quotient(graph, tuple(vmap), tuple(parent))

    def induced(self, W: Iterable[int]) -> "Subgraph":
        """Induced subgraph on W with vertices relabelled in sorted order."""
        verts = sorted(frozenset(W))
        if verts and not (0 <= verts[0] and verts[-1] < self.n):
            raise ValueError("induced vertex set out of range")
        local = {v: i for i, v in enumerate(verts)}
        edges = []
        parent_edges = []
        for eid, (u, v, l) in enumerate(self.edges):
            if u in local and v in local:
                edges.append((local[u], local[v], l))
                parent_edges.append(eid)
        return Subgraph(WeightedGraph(len(verts), edges), tuple(verts), tuple(parent_edges))

    def delete_edges(self, eids: Iterable[int]) -> "WeightedGraph":
        """Copy of the graph without the given edges (vertex ids unchanged)."""
        drop = frozenset(eids)
        return WeightedGraph(self.n, [e for i, e in enumerate(self.edges) if i not in drop])

    # -- shortest paths and spanning forests ------------------------------------

    def dijkstra(self, s: int) -> tuple[list[Fraction | None], list[int | None]]:
        """Distances and predecessors from s; ties keep the smallest predecessor."""
        if not (0 <= s < self.n):
            raise ValueError(f"source {s} out of range")
        dist: list[Fraction | None] = [None] * self.n
        pred: list[int | None] = [None] * self.n
        dist[s] = Fraction(0)
        heap: list[tuple[Fraction, int]] = [(Fraction(0), s)]
        done = [False] * self.n
        while heap:
            d, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            for v, eid in self._adj[u]:
                nd = d + self.edges[eid][2]
                dv = dist[v]
                if dv is None or nd < dv:
                    dist[v] = nd
                    pred[v] = u
                    heapq.heappush(heap, (nd, v))
                elif nd == dv and pred[v] is not None and u < pred[v]:
                    pred[v] = u
        return dist, pred

    def mst(self) -> EdgeMultiSet:
        """Minimum spanning forest via Kruskal over canonically ordered edges."""
        order = sorted(range(self.m), key=lambda i: (self.edges[i][2], i))
        uf = UnionFind(self.n)
        picked = [i for i in order if uf.union(self.edges[i][0], self.edges[i][1])]
        return EdgeMultiSet.from_ids(picked)

    # -- identity -----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightedGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Subgraph:
    """Induced subgraph together with the relabelling bijection."""

    graph: WeightedGraph
    vertices: tuple[int, ...]        # local id -> parent id
    parent_edges: tuple[int, ...]    # local edge id -> parent edge id

    def to_local_vertex(self, v: int) -> int:
        return self.vertices.index(v)

    @cached_property
    def _vertex_map(self) -> dict[int, int]:
        return {pv: lv for lv, pv in enumerate(self.vertices)}

    @cached_property
    def _edge_map(self) -> dict[int, int]:
        return {pe: le for le, pe in enumerate(self.parent_edges)}

    def local_vertices(self, W: Iterable[int]) -> frozenset[int]:
        vm = self._vertex_map
        return frozenset(vm[v] for v in W)

    def parent_vertices(self, W: Iterable[int]) -> frozenset[int]:
        return frozenset(self.vertices[v] for v in W)

    def lift(self, F_local: EdgeMultiSet) -> EdgeMultiSet:
        """Translate a multiset on the subgraph back to parent edge ids."""
        self.graph.validate_multiset(F_local)
        return EdgeMultiSet({self.parent_edges[e]: c for e, c in F_local.items})

    def restrict(self, F_parent: EdgeMultiSet) -> EdgeMultiSet:
        """Keep the edges with both endpoints inside, in local edge ids."""
        em = self._edge_map
        return EdgeMultiSet({em[e]: c for e, c in F_parent.items if e in em})


@dataclass(frozen=True)
class Quotient:
    """Contracted graph with the vertex map and representative parent edges."""

    graph: WeightedGraph
    vertex_map: tuple[int, ...]      # parent vertex -> quotient vertex
    parent_edges: tuple[int, ...]    # quotient edge id -> representative parent edge id

    def lift(self, F_quot: EdgeMultiSet) -> EdgeMultiSet:
        self.graph.validate_multiset(F_quot)
        return EdgeMultiSet({self.parent_edges[e]: c for e, c in F_quot.items})


# -- spec-level operation aliases (argument order per the module contract) ------

def odd_vertices(F: EdgeMultiSet, G: WeightedGraph) -> frozenset[int]:
    return G.odd_vertices(F)


def multiset_length(F: EdgeMultiSet, G: WeightedGraph) -> Fraction:
    return G.multiset_length(F)


def contract(G: WeightedGraph, I: Iterable[int]) -> Quotient:
    return G.contract(I)


def induced(G: WeightedGraph, W: Iterable[int]) -> Subgraph:
    return G.induced(W)


def restrict(F: EdgeMultiSet, W: Iterable[int], G: WeightedGraph) -> EdgeMultiSet:
    """F[W] in the local ids of G.induced(W)."""
    return G.induced(W).restrict(F)


def restrict_within(G: WeightedGraph, F: EdgeMultiSet, W: Iterable[int]) -> EdgeMultiSet:
    """F[W] keeping parent edge ids."""
    ws = frozenset(W)
    keep = {}
    for eid, cnt in F.items:
        u, v, _ = G.edges[eid]
        if u in ws and v in ws:
            keep[eid] = cnt
    return EdgeMultiSet(keep)


def components(G: WeightedGraph) -> tuple[frozenset[int], ...]:
    return G.components()


def is_connected_contracted(G: WeightedGraph, F: EdgeMultiSet, I: Iterable[int]) -> bool:
    """Is (V, F)/I connected?  Conventions: graphs on <= 1 vertex are connected."""
    G.validate_multiset(F)
    if G.n == 0:
        return True
    uf = UnionFind(G.n)
    iset = sorted(frozenset(I))
    for v in iset[1:]:
        uf.union(iset[0], v)
    for eid, _ in F.items:
        u, v, _ = G.edges[eid]
        uf.union(u, v)
    root = uf.find(0)
    return all(uf.find(v) == root for v in range(1, G.n))


def multiset_components(G: WeightedGraph, F: EdgeMultiSet) -> tuple[frozenset[int], ...]:
    """Connected components of (V, F), including isolated vertices."""
    G.validate_multiset(F)
    uf = UnionFind(G.n)
    for eid, _ in F.items:
        u, v, _ = G.edges[eid]
        uf.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(uf.find(v), []).append(v)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def dijkstra(G: WeightedGraph, s: int) -> tuple[list[Fraction | None], list[int | None]]:
    return G.dijkstra(s)


def mst(G: WeightedGraph) -> EdgeMultiSet:
    return G.mst()


def translate_multiset(F: EdgeMultiSet, src: WeightedGraph, dst: WeightedGraph) -> EdgeMultiSet:
    """Re-key a multiset between graphs sharing vertex ids, via endpoints."""
    src.validate_multiset(F)
    out = {}
    for eid, cnt in F.items:
        u, v, _ = src.edges[eid]
        out[dst.edge_id(u, v)] = cnt
    return EdgeMultiSet(out)
