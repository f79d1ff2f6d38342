"""Instance and tour file formats, plus the seeded random instance generator.

Instance grammar (line-oriented, '#' starts a comment, whitespace-separated):

    n <int>
    m <int>
    e <u> <v> <length>     # m lines, u < v, length = int | decimal | p/q
    I <ids...>             # possibly the bare line "I"
    T <ids...>
    C <ids> ; <ids> ; ...  # partition parts split on ';'; empty when I is empty

Tour files are lines "u v mult".  Writing always produces the normal form:
integer lengths bare, anything else as p/q.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import ParseError, PreconditionError, SemanticError
from .graphs import EdgeMultiSet, WeightedGraph, as_length
from .interfaces import Interface, PhiInstance, is_feasible


def _format_length(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {token!r}", line) from None


class _Lines:
    def __init__(self, text: str):
        self.rows = []
        for idx, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].strip()
            if body:
                self.rows.append((idx, body))
        self.pos = 0

    def next(self, expect: str) -> tuple[int, list[str]]:
        if self.pos >= len(self.rows):
            raise ParseError(f"unexpected end of file, expected a '{expect}' line")
        idx, body = self.rows[self.pos]
        self.pos += 1
        tokens = body.split()
        if tokens[0] != expect:
            raise ParseError(f"expected a '{expect}' line, got {tokens[0]!r}", idx, 1)
        return idx, tokens[1:]

    def done(self) -> bool:
        return self.pos >= len(self.rows)


def parse_instance(text: str) -> PhiInstance:
    lines = _Lines(text)
    ln, toks = lines.next("n")
    if len(toks) != 1:
        raise ParseError("'n' line takes exactly one value", ln)
    n = _parse_int(toks[0], ln, "vertex count")
    ln, toks = lines.next("m")
    if len(toks) != 1:
        raise ParseError("'m' line takes exactly one value", ln)
    m = _parse_int(toks[0], ln, "edge count")
    edges = []
    for _ in range(m):
        ln, toks = lines.next("e")
        if len(toks) != 3:
            raise ParseError("'e' line needs: e <u> <v> <length>", ln)
        u = _parse_int(toks[0], ln, "endpoint")
        v = _parse_int(toks[1], ln, "endpoint")
        if not u < v:
            raise SemanticError(f"edge endpoints must satisfy u < v, got {u} {v}", ln)
        try:
            length = as_length(toks[2])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad length {toks[2]!r}: {exc}", ln) from None
        edges.append((u, v, length))
    ln_i, toks_i = lines.next("I")
    iverts = [_parse_int(t, ln_i, "interface vertex") for t in toks_i]
    ln_t, toks_t = lines.next("T")
    tverts = [_parse_int(t, ln_t, "parity vertex") for t in toks_t]
    ln_c, toks_c = lines.next("C")
    parts: list[list[int]] = []
    cur: list[int] = []
    for tok in toks_c:
        if tok == ";":
            if not cur:
                raise SemanticError("empty partition part", ln_c)
            parts.append(cur)
            cur = []
        else:
            cur.append(_parse_int(tok, ln_c, "partition vertex"))
    if cur:
        parts.append(cur)
    if not lines.done():
        idx, body = lines.rows[lines.pos]
        raise ParseError(f"trailing content {body!r}", idx)

    try:
        graph = WeightedGraph(n, edges)
    except ValueError as exc:
        raise SemanticError(str(exc)) from None
    stray = sorted(set(tverts) - set(iverts))
    if stray:
        raise SemanticError(f"T vertices {stray} are not in I", ln_t)
    try:
        iface = Interface(iverts, tverts, parts)
    except ValueError as exc:
        raise SemanticError(str(exc), ln_c) from None
    bad = [v for v in iface.I if not (0 <= v < n)]
    if bad:
        raise SemanticError(f"interface vertices {bad} out of range", ln_i)
    return PhiInstance(graph, iface)


def write_instance(inst: PhiInstance) -> str:
    G, phi = inst.graph, inst.interface
    out = [f"n {G.n}", f"m {G.m}"]
    for u, v, l in G.edges:
        out.append(f"e {u} {v} {_format_length(l)}")
    out.append(("I " + " ".join(str(v) for v in sorted(phi.I))).rstrip())
    out.append(("T " + " ".join(str(v) for v in sorted(phi.T))).rstrip())
    parts = " ; ".join(" ".join(str(v) for v in sorted(p)) for p in phi.parts)
    out.append(("C " + parts).rstrip())
    return "\n".join(out) + "\n"


def parse_tour(text: str, graph: WeightedGraph) -> EdgeMultiSet:
    counts: dict[int, int] = {}
    for idx, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        toks = body.split()
        if len(toks) != 3:
            raise ParseError("tour line needs: <u> <v> <mult>", idx)
        u = _parse_int(toks[0], idx, "endpoint")
        v = _parse_int(toks[1], idx, "endpoint")
        mult = _parse_int(toks[2], idx, "multiplicity")
        if mult <= 0:
            raise SemanticError(f"multiplicity must be positive, got {mult}", idx)
        try:
            eid = graph.edge_id(u, v)
        except KeyError:
            raise SemanticError(f"no edge ({u}, {v}) in the instance", idx) from None
        if eid in counts:
            raise SemanticError(f"edge ({u}, {v}) listed twice", idx)
        counts[eid] = mult
    return EdgeMultiSet(counts)


def write_tour(graph: WeightedGraph, F: EdgeMultiSet) -> str:
    graph.validate_multiset(F)
    lines = []
    for eid, cnt in F.items:
        u, v, _ = graph.edges[eid]
        lines.append(f"{u} {v} {cnt}")
    return "\n".join(lines) + ("\n" if lines else "")


def gen_random(
    n: int,
    m: int,
    max_len: int,
    seed: int,
    mode: str = "phi",
    *,
    i_size: int | None = None,
    t_size: int | None = None,
    parts: int | None = None,
    retries: int = 50,
) -> PhiInstance:
    """Seeded random feasible instance: spanning tree plus extra edges.

    Modes: "tsp" (empty interface), "path" (I = T = {s, t}), "phi" (sampled
    interface of the requested shape).  The graph is connected by
    construction, and the interface is re-sampled until the existence test
    passes, with a bounded number of retries.
    """
    if n < 1:
        raise PreconditionError("need at least one vertex")
    if mode == "path" and n < 2:
        raise PreconditionError("path mode needs two vertices")
    max_m = n * (n - 1) // 2
    if not (n - 1 <= m <= max_m):
        raise PreconditionError(f"m must lie in [{n - 1}, {max_m}] for n = {n}")
    if max_len < 1:
        raise PreconditionError("max_len must be at least 1")
    rng = random.Random(seed)

    order = list(range(n))
    rng.shuffle(order)
    chosen = set()
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        chosen.add((min(u, v), max(u, v)))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(all_pairs)
    for pair in all_pairs:
        if len(chosen) >= m:
            break
        chosen.add(pair)
    graph = WeightedGraph(n, [(u, v, rng.randint(1, max_len)) for u, v in sorted(chosen)])

    for _ in range(retries):
        if mode == "tsp":
            iface = Interface.empty()
        elif mode == "path":
            s, t = rng.sample(range(n), 2)
            iface = Interface.for_path(s, t)
        elif mode == "phi":
            want_i = min(n, 2 if i_size is None else i_size)
            want_t = (want_i - want_i % 2) if t_size is None else t_size
            want_parts = max(1, 1 if parts is None else parts)
            if want_t % 2 or want_t > want_i:
                raise PreconditionError("t_size must be even and at most i_size")
            iverts = rng.sample(range(n), want_i) if want_i else []
            tverts = rng.sample(iverts, want_t) if want_t else []
            if iverts:
                n_parts = min(want_parts, len(iverts))
                labels = list(range(n_parts)) + [
                    rng.randrange(n_parts) for _ in range(len(iverts) - n_parts)
                ]
                rng.shuffle(labels)
                grouped: dict[int, list[int]] = {}
                for v, lab in zip(iverts, labels):
                    grouped.setdefault(lab, []).append(v)
                iface = Interface(iverts, tverts, grouped.values())
            else:
                iface = Interface.empty()
        else:
            raise PreconditionError(f"unknown mode {mode!r}")
        inst = PhiInstance(graph, iface)
        if is_feasible(inst):
            return inst
    raise PreconditionError("could not sample a feasible interface within the retry budget")
