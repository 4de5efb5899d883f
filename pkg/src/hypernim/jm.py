"""The Jenkyns-Mayberry closed form ``U(x)`` and its intermediate quantities."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import DomainError
from .tetris import TetrisMemo, tetris_value


@dataclass(frozen=True)
class JmBreakdown:
    m: int
    y: int
    v: int | None  # None on the long branch, where v is not used
    is_long: bool
    u: int

    def to_dict(self) -> dict:
        return {"m": self.m, "y": self.y, "v": self.v, "long": self.is_long, "u": self.u}


def m_of(x: Sequence[int]) -> int:
    return min(x)


def y_of(H, x: Sequence[int], memo: TetrisMemo | None = None) -> int:
    """One more than the Tetris value of ``x`` with the minimum pile
    subtracted from every pile."""
    m = min(x)
    return tetris_value(H, [p - m for p in x], memo) + 1


def v_of(m: int, y: int) -> int:
    """``C(y,2) + ((m - C(y,2) - 1) mod y)``, defined only for ``m > C(y,2)``."""
    if y < 1:
        raise DomainError(f"y must be positive, got {y}")
    c = comb(y, 2)
    if m <= c:
        raise DomainError(f"v is defined for m > C(y,2); got m={m}, C({y},2)={c}")
    return c + (m - c - 1) % y


def is_long(m: int, y: int) -> bool:
    return m <= comb(y, 2)


def u_of(H, x: Sequence[int], memo: TetrisMemo | None = None) -> JmBreakdown:
    if memo is None:
        memo = TetrisMemo(H)
    m = m_of(x)
    y = y_of(H, x, memo)
    if is_long(m, y):
        return JmBreakdown(m, y, None, True, tetris_value(H, x, memo))
    v = v_of(m, y)
    return JmBreakdown(m, y, v, False, v)
