"""Exhaustive checks of the JM characterization on finite boxes.

Every box ``[0, b]`` is closed under moves, so each check sees the complete
successor set of every position it quantifies over.  Failures carry the
lexicographically first witness.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .game import normalize, successors, symmetric_successors
from .hypergraph import (
    Spectrum,
    all_spectra,
    is_minimal_transversal_free,
    is_transversal_free,
    make_symmetric,
    members_of,
    spectrum_is_minimal_tf,
)
from .jm import is_long, u_of
from .sg import sg_on_box
from .tetris import TetrisMemo, box_positions, tetris_on_box, tetris_value

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


@dataclass
class VerificationReport:
    subject: str
    hypergraph: str | None
    bounds: list | None
    outcome: str
    witness: dict | None = None
    checked: int = 0
    details: list = field(default_factory=list)

    def __post_init__(self):
        if self.outcome == FAILS and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def holds(self) -> bool:
        return self.outcome == HOLDS

    def to_dict(self) -> dict:
        out = asdict(self)
        if not out["details"]:
            del out["details"]
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def predicts_jm(H) -> bool:
    """Whether the characterization says ``H`` is JM (symmetric hypergraphs
    only; ``None`` for others)."""
    if not H.is_symmetric:
        return None
    return H.n >= 3 and spectrum_is_minimal_tf(H.spectrum)


def _uniform(bounds) -> bool:
    return len(set(bounds)) <= 1


def _representatives(H, bounds):
    """Positions to quantify over.  For a symmetric hypergraph on a cube every
    check below is permutation invariant, so sorted positions suffice."""
    if H.is_symmetric and _uniform(bounds):
        return sorted({normalize(x) for x in box_positions(bounds)})
    return list(box_positions(bounds))


def _successor_set(H, x):
    if H.is_symmetric:
        return symmetric_successors(H.spectrum.sizes, normalize(x))
    return set(successors(H, x))


class _Profile:
    """Memoized (m, y, T, long) for positions of one hypergraph."""

    def __init__(self, H):
        self.H = H
        self.memo = TetrisMemo(H)
        self._cache = {}

    def __call__(self, x):
        key = self.memo.key(x)
        hit = self._cache.get(key)
        if hit is None:
            m = min(key)
            y = tetris_value(self.H, [p - m for p in key], self.memo) + 1
            t = tetris_value(self.H, key, self.memo)
            hit = (m, y, t, is_long(m, y))
            self._cache[key] = hit
        return hit


def verify_jm_on_box(H, bounds: Sequence[int], jobs: int = 1, table=None) -> VerificationReport:
    """Compare the JM value with the exact SG value at every box position."""
    bounds = [int(b) for b in bounds]
    if table is None:
        table = sg_on_box(H, bounds, jobs=jobs)
    memo = TetrisMemo(H)
    cache = {}
    checked = 0
    for x in box_positions(bounds):
        key = table.key(x)
        br = cache.get(key)
        if br is None:
            br = cache[key] = u_of(H, x, memo)
        checked += 1
        g = table[x]
        if br.u != g:
            witness = {"position": list(x), "expected": br.u, "actual": g,
                       "jm": br.to_dict(), "sg": g}
            return VerificationReport("jm", H.descriptor(), bounds, FAILS, witness, checked)
    return VerificationReport("jm", H.descriptor(), bounds, HOLDS, None, checked)


def find_sg_violation(table) -> dict | None:
    """Check the two defining properties of an SG table: no move keeps the
    value, and every smaller value is reachable.  Returns the first violation."""
    for key in sorted(table.values):
        g = table.values[key]
        reach = {table.values[s] for s in table.successor_keys(key)}
        if g in reach:
            return {"position": list(key), "sg": g, "condition": "move preserves value"}
        missing = [z for z in range(g) if z not in reach]
        if missing:
            return {"position": list(key), "sg": g, "condition": "value unreachable",
                    "z": missing[0]}
    return None


def check_A0(H) -> VerificationReport:
    holds = is_transversal_free(H)
    witness = None
    if not holds:
        for m in H.masks:
            if all(m & other for other in H.masks):
                edge = members_of(m)
                witness = {"edge": sorted(edge),
                           "mask": [1 if i in edge else 0 for i in range(1, H.n + 1)]}
                break
    return VerificationReport("A0", H.descriptor(), None, HOLDS if holds else FAILS,
                              witness, len(H))


def check_B1(H, bounds: Sequence[int]) -> VerificationReport:
    """Long x, m(x) <= z < T(x): some move reaches a long x' with T(x') = z."""
    bounds = [int(b) for b in bounds]
    prof = _Profile(H)
    checked = 0
    for x in _representatives(H, bounds):
        m, _, t, long_ = prof(x)
        if not long_:
            continue
        checked += 1
        reach = set()
        for s in _successor_set(H, x):
            _, _, ts, ls = prof(s)
            if ls:
                reach.add(ts)
        for z in range(m, t):
            if z not in reach:
                witness = {"position": list(x), "z": z, "tetris": t, "m": m}
                return VerificationReport("B1", H.descriptor(), bounds, FAILS, witness, checked)
    return VerificationReport("B1", H.descriptor(), bounds, HOLDS, None, checked)


def check_C2(H, bounds: Sequence[int]) -> VerificationReport:
    """1 <= eta < y(x): some move keeps m and reaches y(x') = eta."""
    bounds = [int(b) for b in bounds]
    prof = _Profile(H)
    checked = 0
    for x in _representatives(H, bounds):
        m, y, _, _ = prof(x)
        checked += 1
        reach = set()
        for s in _successor_set(H, x):
            ms, ys, _, _ = prof(s)
            if ms == m:
                reach.add(ys)
        for eta in range(1, y):
            if eta not in reach:
                witness = {"position": list(x), "eta": eta, "m": m, "y": y}
                return VerificationReport("C2", H.descriptor(), bounds, FAILS, witness, checked)
    return VerificationReport("C2", H.descriptor(), bounds, HOLDS, None, checked)


def check_C3(H, bounds: Sequence[int]) -> VerificationReport:
    """0 <= mu < m(x), m(x) - mu + 1 <= eta <= y(x): some move reaches
    m(x') = mu and y(x') = eta."""
    bounds = [int(b) for b in bounds]
    prof = _Profile(H)
    checked = 0
    for x in _representatives(H, bounds):
        m, y, _, _ = prof(x)
        checked += 1
        if m == 0:
            continue
        reach = set()
        for s in _successor_set(H, x):
            ms, ys, _, _ = prof(s)
            reach.add((ms, ys))
        for mu in range(m):
            for eta in range(m - mu + 1, y + 1):
                if (mu, eta) not in reach:
                    witness = {"position": list(x), "mu": mu, "eta": eta, "m": m, "y": y}
                    return VerificationReport("C3", H.descriptor(), bounds, FAILS,
                                              witness, checked)
    return VerificationReport("C3", H.descriptor(), bounds, HOLDS, None, checked)


def check_conditions(H, bounds: Sequence[int]) -> VerificationReport:
    """All four sufficient conditions; holds iff each one does."""
    parts = [check_A0(H), check_B1(H, bounds), check_C2(H, bounds), check_C3(H, bounds)]
    failed = [p for p in parts if p.outcome == FAILS]
    witness = None
    if failed:
        witness = {"condition": failed[0].subject, **failed[0].witness}
    return VerificationReport("conditions", H.descriptor(), [int(b) for b in bounds],
                              FAILS if failed else HOLDS, witness,
                              sum(p.checked for p in parts),
                              [p.to_dict() for p in parts])


def _monotone_contiguity(T: np.ndarray):
    """First comparable pair (lo <= hi) violating monotonicity or interval
    contiguity of Tetris values, else None.  Returns (lo, hi, checked)."""
    shape = T.shape
    checked = 0
    for lo in itertools.product(*(range(s) for s in shape)):
        for hi in itertools.product(*(range(a, s) for a, s in zip(lo, shape))):
            checked += 1
            t_lo, t_hi = int(T[lo]), int(T[hi])
            if t_lo > t_hi:
                return lo, hi, "monotonicity", checked
            block = T[tuple(slice(a, b + 1) for a, b in zip(lo, hi))]
            if len(np.unique(block)) != t_hi - t_lo + 1:
                return lo, hi, "contiguity", checked
    return None, None, None, checked


def _exchange_violation(H, T, memo):
    n = H.n
    checked = 0
    for x in box_positions([s - 1 for s in T.shape]):
        t = int(T[x])
        for i in range(n):
            for j in range(n):
                if i == j or x[i] <= x[j]:
                    continue
                checked += 1
                x2 = list(x)
                x2[i] -= 1
                x2[j] += 1
                t2 = tetris_value(H, x2, memo)
                if t2 < t:
                    return {"position": list(x), "from": i + 1, "to": j + 1,
                            "tetris": t, "after": t2}, checked
    return None, checked


def _slow_move_violation(H, T, drop_last: bool):
    """Sorted positive x: both slow moves on {1..k} and on that set with one
    member swapped for n lower the Tetris value by exactly one.  The swapped
    member is 1, or k when ``drop_last`` is set."""
    n = H.n
    k = H.spectrum.sizes[0]
    first = list(range(k))
    if k == n:
        edges = [first]
    elif drop_last:
        edges = [first, first[:-1] + [n - 1]]
    else:
        edges = [first, first[1:] + [n - 1]]
    checked = 0
    for x in box_positions([s - 1 for s in T.shape]):
        if min(x) == 0 or list(x) != sorted(x, reverse=True):
            continue
        t = int(T[x])
        for edge in edges:
            checked += 1
            x2 = list(x)
            for i in edge:
                x2[i] -= 1
            t2 = int(T[tuple(x2)])
            if t2 != t - 1:
                return {"position": list(x), "edge": [i + 1 for i in edge],
                        "tetris": t, "after": t2}, checked
    return None, checked


def check_tetris_lemmas(H, bounds: Sequence[int]) -> VerificationReport:
    """Tetris properties over a box, one detail entry per property.

    * ``monotonicity-contiguity``: on every comparable pair lo <= hi, T(lo) <=
      T(hi) and the values on [lo, hi] fill the integer interval between.
    * ``exchange`` (symmetric only): moving a stone from a larger pile to a
      smaller one never lowers T.
    * ``slow-move`` (symmetric only): for sorted positive x, slow moves on
      {1..k} and on {2..k, n} each lower T by exactly one, k being the
      smallest edge size.
    * ``slow-move-variant``: the same with {1..k-1, n} as second edge.  It is
      reported for information and does not affect the outcome.
    """
    bounds = [int(b) for b in bounds]
    memo = TetrisMemo(H)
    T = tetris_on_box(H, bounds, memo)
    parts = []
    lo, hi, what, checked = _monotone_contiguity(T)
    witness = None
    if what is not None:
        witness = {"property": what, "lower": list(lo), "upper": list(hi),
                   "tetris_lower": int(T[lo]), "tetris_upper": int(T[hi])}
    parts.append(("monotonicity-contiguity", witness, checked))
    if H.is_symmetric:
        parts.append(("exchange", *_exchange_violation(H, T, memo)))
        parts.append(("slow-move", *_slow_move_violation(H, T, drop_last=False)))
        parts.append(("slow-move-variant", *_slow_move_violation(H, T, drop_last=True)))
    desc = H.descriptor()
    details = [VerificationReport(name, desc, bounds, HOLDS if w is None else FAILS, w, c)
               for name, w, c in parts]
    failed = [d for d in details if d.outcome == FAILS and d.subject != "slow-move-variant"]
    witness = {"property": failed[0].subject, **failed[0].witness} if failed else None
    return VerificationReport("tetris-lemmas", desc, bounds, FAILS if failed else HOLDS,
                              witness, sum(d.checked for d in details),
                              [d.to_dict() for d in details])


def verify_theorem2(n: int) -> VerificationReport:
    """Closed-form spectrum test against the definition, for every spectrum."""
    checked = 0
    for spec in all_spectra(n):
        checked += 1
        closed = spectrum_is_minimal_tf(spec)
        direct = is_minimal_transversal_free(make_symmetric(n, spec))
        if closed != direct:
            witness = {"spectrum": list(spec.sizes), "closed_form": closed,
                       "definition": direct}
            return VerificationReport("theorem2", None, None, FAILS, witness, checked)
    return VerificationReport("theorem2", None, None, HOLDS, None, checked)


def verify_theorem1(n: int, bounds: Sequence[int] | None = None, jobs: int = 1,
                    spectra: Sequence[Spectrum] | None = None) -> VerificationReport:
    """For every spectrum over ``n``: predicted-JM hypergraphs must match on
    the whole box; the rest must show a mismatch somewhere in it.

    A missing mismatch is inconclusive, not a counterexample, since the box
    is finite.
    """
    if bounds is None:
        bounds = [5] * n
    bounds = [int(b) for b in bounds]
    details = []
    checked = 0
    witness = None
    discrepancy = inconclusive = False
    for spec in spectra if spectra is not None else all_spectra(n):
        H = make_symmetric(n, spec)
        expected = predicts_jm(H)
        rep = verify_jm_on_box(H, bounds, jobs=jobs)
        checked += rep.checked
        entry = {"spectrum": list(spec.sizes), "predicted_jm": expected,
                 "outcome": rep.outcome, "witness": rep.witness}
        if expected:
            entry["status"] = "consistent" if rep.holds else "discrepancy"
            if not rep.holds and witness is None:
                discrepancy = True
                witness = {"spectrum": list(spec.sizes), **rep.witness}
        elif rep.holds:
            entry["status"] = "no witness within bound"
            inconclusive = True
        else:
            entry["status"] = "witness found"
        details.append(entry)
    outcome = FAILS if discrepancy else INCONCLUSIVE if inconclusive else HOLDS
    return VerificationReport("theorem1", f"sym:n={n}", bounds, outcome, witness,
                              checked, details)
