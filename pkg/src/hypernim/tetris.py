"""Tetris value: the longest possible play from a position.

The longest play only ever needs slow moves on inclusion-minimal edges, so the
recursion is ``T(x) = 1 + max T(x - chi(H))`` over minimal edges ``H`` that
are playable at ``x``, and ``T(x) = 0`` when none is.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .errors import ResourceLimitError
from .game import _playable, _slow_move_mask, normalize, symmetric_slow_moves
from .hypergraph import minimal_edge_masks

MAX_BOX_POSITIONS = 5_000_000


class TetrisMemo:
    """Memo of Tetris values for one hypergraph.

    Keys are sorted positions when the hypergraph is symmetric and raw
    positions otherwise.
    """

    def __init__(self, H):
        self.hypergraph = H
        spectrum = H.spectrum
        self.symmetric = spectrum is not None
        if self.symmetric:
            self._k = spectrum.sizes[0]
        else:
            self._minimal = minimal_edge_masks(H)
        self.values = {}

    def key(self, x: Sequence[int]) -> tuple:
        return normalize(x) if self.symmetric else tuple(x)

    def children(self, key: tuple):
        if self.symmetric:
            return symmetric_slow_moves(self._k, key)
        return {_slow_move_mask(key, m) for m in self._minimal if _playable(key, m)}

    def __contains__(self, key):
        return key in self.values

    def __getitem__(self, key):
        return self.values[key]

    def __len__(self):
        return len(self.values)


def tetris_value(H, x: Sequence[int], memo: TetrisMemo | None = None) -> int:
    if memo is None:
        memo = TetrisMemo(H)
    values = memo.values
    root = memo.key(x)
    if root in values:
        return values[root]
    # explicit stack: play lengths reach the total pile count
    stack = [root]
    while stack:
        key = stack[-1]
        if key in values:
            stack.pop()
            continue
        children = memo.children(key)
        pending = [c for c in children if c not in values]
        if pending:
            stack.extend(pending)
            continue
        values[key] = 1 + max(values[c] for c in children) if children else 0
        stack.pop()
    return values[root]


def box_positions(bounds: Sequence[int]):
    """All positions 0 <= x <= bounds in lexicographic order."""
    return itertools.product(*(range(b + 1) for b in bounds))


def box_size(bounds: Sequence[int]) -> int:
    size = 1
    for b in bounds:
        size *= b + 1
    return size


def check_budget(bounds: Sequence[int], limit: int = MAX_BOX_POSITIONS):
    if box_size(bounds) > limit:
        raise ResourceLimitError(
            f"box {tuple(bounds)} has {box_size(bounds)} positions, limit is {limit}"
        )


def tetris_on_box(H, bounds: Sequence[int], memo: TetrisMemo | None = None,
                  limit: int = MAX_BOX_POSITIONS) -> np.ndarray:
    """Tetris values over the box ``[0, bounds]`` as an integer array indexed by
    position."""
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != H.n:
        raise ValueError(f"bounds {bounds} do not match n={H.n}")
    check_budget(bounds, limit)
    if memo is None:
        memo = TetrisMemo(H)
    table = np.zeros([b + 1 for b in bounds], dtype=np.int64)
    for x in sorted(box_positions(bounds), key=sum):
        table[x] = tetris_value(H, x, memo)
    return table
