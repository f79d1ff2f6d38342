"""Small enumeration helpers shared by the DP and the base algorithms."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


def iter_subsets(items: Iterable[int], max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """All subsets of the sorted items, smallest first, lexicographic within a size."""
    pool = sorted(items)
    top = len(pool) if max_size is None else min(max_size, len(pool))
    for r in range(top + 1):
        yield from combinations(pool, r)


def iter_even_subsets(items: Iterable[int]) -> Iterator[tuple[int, ...]]:
    pool = sorted(items)
    for r in range(0, len(pool) + 1, 2):
        yield from combinations(pool, r)


@lru_cache(maxsize=None)
def set_partitions(items: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All partitions of the sorted tuple into non-empty parts, canonical form.

    Parts are sorted tuples, listed by smallest member; the whole result is
    cached because the DP asks for the same small ground sets over and over.
    """
    items = tuple(sorted(items))
    if not items:
        return ((),)
    head, rest = items[0], items[1:]
    out = []
    for sub in set_partitions(rest):
        # head joins an existing part or starts its own
        for i, part in enumerate(sub):
            out.append(sub[:i] + (((head,) + part),) + sub[i + 1:])
        out.append(((head,),) + sub)
    canon = {tuple(sorted((tuple(sorted(p)) for p in parts), key=lambda p: p[0])) for parts in out}
    return tuple(sorted(canon))


def iter_disjoint_subfamilies(sets: list[frozenset]) -> Iterator[tuple[frozenset, ...]]:
    """All subfamilies of pairwise-disjoint members, including the empty one."""
    order = sorted(sets, key=lambda s: (len(s), sorted(s)))

    def rec(i: int, chosen: tuple[frozenset, ...], used: frozenset):
        yield chosen
        for j in range(i, len(order)):
            s = order[j]
            if used & s:
                continue
            yield from rec(j + 1, chosen + (s,), used | s)

    yield from rec(0, (), frozenset())
