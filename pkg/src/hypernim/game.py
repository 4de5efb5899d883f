"""Positions and moves of hypergraph NIM.

A position is a plain tuple of nonnegative pile counts.  A move picks an edge
and strictly decreases every pile in it, leaving the other piles alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import IllegalMoveError
from .hypergraph import members_of


def position(piles: Iterable[int]) -> tuple:
    x = tuple(int(p) for p in piles)
    if any(p < 0 for p in x):
        raise ValueError(f"pile counts must be nonnegative: {x}")
    return x


def zeros(n: int) -> tuple:
    return (0,) * n


def ones(n: int) -> tuple:
    """The all-ones vector."""
    return (1,) * n


def parse_position(text: str) -> tuple:
    """Parse the comma-separated form, e.g. ``"3,1,2"``."""
    try:
        return position(p.strip() for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad position {text!r}: {exc}") from None


def format_position(x: Sequence[int]) -> str:
    return ",".join(str(p) for p in x)


def normalize(x: Sequence[int]) -> tuple:
    """Piles sorted in non-increasing order.

    Only meaningful for symmetric hypergraphs, where any permutation of a
    position plays identically.
    """
    return tuple(sorted(x, reverse=True))


def characteristic_vector(n: int, edge: Iterable[int]) -> tuple:
    members = set(edge)
    return tuple(1 if i in members else 0 for i in range(1, n + 1))


@dataclass(frozen=True)
class Move:
    edge: frozenset
    target: tuple


def _playable(x: Sequence[int], mask: int) -> bool:
    i = 0
    while mask:
        if mask & 1 and x[i] == 0:
            return False
        mask >>= 1
        i += 1
    return True


def _indices(mask: int) -> list:
    return [i - 1 for i in sorted(members_of(mask))]


def _targets(x: Sequence[int], idx: Sequence[int]) -> Iterator[tuple]:
    base = list(x)
    for values in itertools.product(*(range(x[i]) for i in idx)):
        for i, v in zip(idx, values):
            base[i] = v
        yield tuple(base)


def moves(H, x: Sequence[int]) -> Iterator[Move]:
    """Every (edge, target) pair, edges in canonical order and targets in
    lexicographic order."""
    for m in H.masks:
        if _playable(x, m):
            edge = members_of(m)
            for t in _targets(x, _indices(m)):
                yield Move(edge, t)


def successors(H, x: Sequence[int]) -> Iterator[tuple]:
    """Distinct positions reachable from ``x`` in one move."""
    seen = set()
    for m in H.masks:
        if not _playable(x, m):
            continue
        for t in _targets(x, _indices(m)):
            if t not in seen:
                seen.add(t)
                yield t


def slow_move(x: Sequence[int], edge: Iterable[int]) -> tuple:
    """Take exactly one stone from every pile of ``edge``."""
    out = list(x)
    for i in edge:
        if out[i - 1] <= 0:
            raise IllegalMoveError(f"pile {i} is empty in {tuple(x)}")
        out[i - 1] -= 1
    return tuple(out)


def _slow_move_mask(x: Sequence[int], mask: int) -> tuple:
    out = list(x)
    i = 0
    while mask:
        if mask & 1:
            out[i] -= 1
        mask >>= 1
        i += 1
    return tuple(out)


def _groups(x: Sequence[int]) -> list:
    """Runs of equal positive values in a non-increasing position, as
    (start, length) pairs."""
    groups = []
    i = 0
    n = len(x)
    while i < n and x[i] > 0:
        j = i
        while j < n and x[j] == x[i]:
            j += 1
        groups.append((i, j - i))
        i = j
    return groups


def canonical_edges(x: Sequence[int], size: int) -> Iterator[int]:
    """One representative edge mask of ``size`` positive piles per class of
    edges that a pile-permutation fixing the sorted position ``x`` identifies.

    Within each run of equal piles the representative takes the last members,
    so decrementing them keeps the position sorted.
    """
    groups = _groups(x)

    def rec(g, remaining, mask):
        if remaining == 0:
            yield mask
            return
        if g == len(groups):
            return
        start, length = groups[g]
        for c in range(min(length, remaining), -1, -1):
            part = 0
            for i in range(start + length - c, start + length):
                part |= 1 << i
            yield from rec(g + 1, remaining - c, mask | part)

    yield from rec(0, size, 0)


def symmetric_successors(sizes: Sequence[int], x: Sequence[int]) -> set:
    """Normalized successors of a sorted position under the symmetric
    hypergraph with the given edge sizes."""
    out = set()
    for k in sizes:
        for m in canonical_edges(x, k):
            for t in _targets(x, _indices(m)):
                out.add(normalize(t))
    return out


def symmetric_slow_moves(k: int, x: Sequence[int]) -> set:
    """Sorted targets of slow moves on ``k``-edges from a sorted position."""
    return {_slow_move_mask(x, m) for m in canonical_edges(x, k)}

