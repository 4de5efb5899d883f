"""Slow, independent reference implementations used to cross-check the
solvers.

Nothing here shares move generation with :mod:`hypernim.game`: a move
``x -> y`` is recognised by scanning every ``y <= x`` and testing whether the
set of strictly decreased piles is an edge.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence


def brute_successors(edge_sets, x: Sequence[int]) -> list:
    """All ``y`` with ``{i : y_i < x_i}`` an edge, ``edge_sets`` being 1-based
    frozensets."""
    edges = set(edge_sets)
    out = []
    for y in itertools.product(*(range(p + 1) for p in x)):
        dropped = frozenset(i + 1 for i in range(len(x)) if y[i] < x[i])
        if dropped in edges:
            out.append(y)
    return out


def brute_tetris(H):
    """Longest play over every edge and every strict decrease."""
    edges = tuple(H.edges)

    @lru_cache(maxsize=None)
    def T(x):
        best = 0
        for y in brute_successors(edges, x):
            best = max(best, 1 + T(y))
        return best

    return T


def brute_sg(H):
    """Sprague-Grundy value by the plain mex recursion."""
    edges = tuple(H.edges)

    @lru_cache(maxsize=None)
    def G(x):
        seen = {G(y) for y in brute_successors(edges, x)}
        g = 0
        while g in seen:
            g += 1
        return g

    return G


def xor_all(x: Sequence[int]) -> int:
    out = 0
    for p in x:
        out ^= p
    return out
