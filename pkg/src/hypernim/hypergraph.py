"""Hypergraphs on the ground set {1, ..., n} and their transversal structure.

Edges are stored internally as bitmasks (bit ``i - 1`` set for element
``i``).  The public surface speaks 1-based element sets, matching the way
piles are numbered in the game.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import SpectrumError

MAX_SYMMETRIC_N = 20
MAX_EXPLICIT_N = 16


def mask_of(members: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based elements."""
    mask = 0
    for i in members:
        mask |= 1 << (int(i) - 1)
    return mask


def members_of(mask: int) -> frozenset:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _canonical_key(mask: int):
    return (bin(mask).count("1"), tuple(sorted(members_of(mask))))


@dataclass(frozen=True)
class Spectrum:
    """Strictly increasing list of edge sizes over a ground set of size ``n``."""

    n: int
    sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if self.n < 1:
            raise SpectrumError(f"ground set size must be positive, got {self.n}")
        if not sizes:
            raise SpectrumError("spectrum must contain at least one size")
        if sizes[0] <= 0:
            raise SpectrumError(f"smallest edge size must be positive, got {sizes[0]}")
        if any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise SpectrumError(f"spectrum must be strictly increasing, got {sizes}")
        if sizes[-1] > self.n:
            raise SpectrumError(f"edge size {sizes[-1]} exceeds n={self.n}")

    def __str__(self):
        return ",".join(str(s) for s in self.sizes)


class Hypergraph:
    """A nonempty family of nonempty subsets of {1, ..., n}.

    Build explicit hypergraphs from 1-based edge lists, or symmetric ones with
    :func:`make_symmetric`.  Symmetric hypergraphs keep only their spectrum and
    materialize edges on first access.
    """

    __slots__ = ("n", "_masks", "_spectrum", "_spectrum_checked")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 1:
            raise SpectrumError(f"ground set size must be positive, got {n}")
        masks = []
        for edge in edges:
            members = list(edge)
            if not members:
                raise SpectrumError("the empty set cannot be an edge")
            if any(not 1 <= int(i) <= n for i in members):
                raise SpectrumError(f"edge {sorted(members)} is not a subset of 1..{n}")
            masks.append(mask_of(members))
        if not masks:
            raise SpectrumError("a hypergraph needs at least one edge")
        if len(set(masks)) != len(masks):
            raise SpectrumError("duplicate edges")
        self.n = n
        self._masks = tuple(sorted(masks, key=_canonical_key))
        self._spectrum = None
        self._spectrum_checked = False

    @classmethod
    def _symmetric(cls, spectrum: Spectrum) -> "Hypergraph":
        self = cls.__new__(cls)
        self.n = spectrum.n
        self._masks = None
        self._spectrum = spectrum
        self._spectrum_checked = True
        return self

    @property
    def masks(self) -> tuple:
        """Edge bitmasks in canonical order (by size, then lexicographically)."""
        if self._masks is None:
            out = []
            for k in self._spectrum.sizes:
                for combo in itertools.combinations(range(self.n), k):
                    out.append(sum(1 << i for i in combo))
            self._masks = tuple(out)
        return self._masks

    @property
    def edges(self) -> tuple:
        return tuple(members_of(m) for m in self.masks)

    @property
    def spectrum(self) -> Spectrum | None:
        """The spectrum if the hypergraph is symmetric, else ``None``."""
        if not self._spectrum_checked:
            sizes = sorted({bin(m).count("1") for m in self._masks})
            if len(self._masks) == sum(comb(self.n, k) for k in sizes):
                self._spectrum = Spectrum(self.n, tuple(sizes))
            self._spectrum_checked = True
        return self._spectrum

    @property
    def is_symmetric(self) -> bool:
        return self.spectrum is not None

    def __len__(self):
        if self._masks is None:
            return sum(comb(self.n, k) for k in self._spectrum.sizes)
        return len(self._masks)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.edges)

    def __bool__(self):
        return True

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and set(self.masks) == set(other.masks)

    def __hash__(self):
        return hash((self.n, frozenset(self.masks)))

    def descriptor(self) -> str:
        """Text form: spectrum shorthand when symmetric, JSON otherwise."""
        if self.spectrum is not None:
            return f"sym:n={self.n};lambda={self.spectrum}"
        edges = [sorted(e) for e in self.edges]
        return json.dumps({"n": self.n, "edges": edges}, separators=(",", ":"))

    def __repr__(self):
        return f"Hypergraph({self.descriptor()})"


class EmptySubhypergraph:
    """Induced subhypergraph with no edges.

    Not a :class:`Hypergraph`, since those are never empty.  It is falsy and
    has no edges, so callers can branch on it directly.
    """

    __slots__ = ("n",)
    masks = ()
    edges = ()

    def __init__(self, n: int):
        self.n = n

    def __bool__(self):
        return False

    def __len__(self):
        return 0

    def __iter__(self):
        return iter(())

    def __eq__(self, other):
        return isinstance(other, EmptySubhypergraph) and other.n == self.n

    def __hash__(self):
        return hash(("empty", self.n))

    def __repr__(self):
        return f"EmptySubhypergraph(n={self.n})"


def make_symmetric(n: int, spectrum: Spectrum | Sequence[int]) -> Hypergraph:
    """All subsets of {1..n} whose size appears in ``spectrum``."""
    if not isinstance(spectrum, Spectrum):
        spectrum = Spectrum(n, tuple(spectrum))
    elif spectrum.n != n:
        raise SpectrumError(f"spectrum is over n={spectrum.n}, not n={n}")
    if n > MAX_SYMMETRIC_N:
        raise SpectrumError(f"symmetric hypergraphs are capped at n={MAX_SYMMETRIC_N}")
    return Hypergraph._symmetric(spectrum)


def induced_subhypergraph(H: Hypergraph, S: Iterable[int]):
    """Edges of ``H`` contained in ``S``; an :class:`EmptySubhypergraph` if none."""
    smask = mask_of(S)
    inside = [members_of(m) for m in H.masks if m & smask == m]
    if not inside:
        return EmptySubhypergraph(H.n)
    return Hypergraph(H.n, inside)


def is_transversal(H, T: Iterable[int]) -> bool:
    tmask = mask_of(T)
    return all(m & tmask for m in H.masks)


def _contains_edge_table(n: int, masks: Iterable[int]) -> np.ndarray:
    """Boolean array over all 2**n masks: does some edge fit inside the mask?"""
    table = np.zeros(1 << n, dtype=bool)
    table[list(masks)] = True
    for bit in range(n):
        view = table.reshape(-1, 2, 1 << bit)
        view[:, 1, :] |= view[:, 0, :]
    return table


def _symmetric_contains_table(spectrum: Spectrum) -> np.ndarray:
    n = spectrum.n
    popcount = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        popcount.reshape(-1, 2, 1 << bit)[:, 1, :] += 1
    indicator = np.isin(popcount, spectrum.sizes)
    table = indicator
    for bit in range(n):
        view = table.reshape(-1, 2, 1 << bit)
        view[:, 1, :] |= view[:, 0, :]
    return table


def is_transversal_free(H) -> bool:
    """True iff no edge meets every edge."""
    if not H:
        return True
    full = (1 << H.n) - 1
    spectrum = H.spectrum
    if spectrum is not None and H.n > MAX_EXPLICIT_N:
        # one representative edge per size; complement of an a-set holds an
        # edge iff it is at least as large as the smallest edge
        return all(H.n - a >= spectrum.sizes[0] for a in spectrum.sizes)
    table = _contains_edge_table(H.n, H.masks)
    return all(table[full & ~m] for m in H.masks)


def _mtf_general(n: int, masks: Sequence[int]) -> bool:
    full = (1 << n) - 1
    table = _contains_edge_table(n, masks)
    if not all(table[full & ~m] for m in masks):
        return False
    subsets = np.arange(1 << n, dtype=np.int64)
    has_transversal = np.zeros(1 << n, dtype=bool)
    for m in masks:
        inside = (subsets & m) == m
        has_transversal |= inside & ~table[subsets & ~m]
    proper = subsets[1:full]
    nonempty = proper[table[proper]]
    return bool(has_transversal[nonempty].all())


def _mtf_symmetric(spectrum: Spectrum) -> bool:
    # Induced subhypergraphs on equal-size S are isomorphic, as are the edges of
    # one size inside S, so one representative of each suffices.
    n = spectrum.n
    full = (1 << n) - 1
    table = _symmetric_contains_table(spectrum)
    for a in spectrum.sizes:
        if not table[full & ~((1 << a) - 1)]:
            return False
    for s in range(1, n):
        smask = (1 << s) - 1
        if not table[smask]:
            continue
        found = False
        for a in spectrum.sizes:
            if a > s:
                break
            if not table[smask & ~((1 << a) - 1)]:
                found = True
                break
        if not found:
            return False
    return True


def is_minimal_transversal_free(H) -> bool:
    """Transversal-free, and every proper induced subhypergraph with at least
    one edge has an edge that is a transversal of it.

    Evaluated from the definition by enumerating vertex subsets.
    """
    if not H:
        return False
    spectrum = H.spectrum
    if spectrum is not None:
        return _mtf_symmetric(spectrum)
    if H.n > MAX_EXPLICIT_N:
        raise SpectrumError(f"explicit hypergraphs are capped at n={MAX_EXPLICIT_N}")
    return _mtf_general(H.n, H.masks)


def spectrum_is_minimal_tf(spectrum: Spectrum) -> bool:
    """Closed-form test: consecutive gaps at most the smallest size, and the
    smallest and largest sizes sum to ``n``."""
    sizes = spectrum.sizes
    gaps_ok = all(b - a <= sizes[0] for a, b in zip(sizes, sizes[1:]))
    return gaps_ok and sizes[0] + sizes[-1] == spectrum.n


def all_spectra(n: int) -> list:
    """Every nonempty spectrum over ``n``, in lexicographic order."""
    out = []
    for r in range(1, n + 1):
        for sizes in itertools.combinations(range(1, n + 1), r):
            out.append(Spectrum(n, sizes))
    return sorted(out, key=lambda s: s.sizes)


def enumerate_mtf_spectra(n: int) -> list:
    if n < 1:
        raise SpectrumError(f"ground set size must be positive, got {n}")
    return [s for s in all_spectra(n) if spectrum_is_minimal_tf(s)]


def minimal_edges(H) -> list:
    """Inclusion-wise minimal edges, as 1-based frozensets in canonical order."""
    return [members_of(m) for m in minimal_edge_masks(H)]


def minimal_edge_masks(H) -> tuple:
    spectrum = H.spectrum
    if spectrum is not None:
        k = spectrum.sizes[0]
        return tuple(sum(1 << i for i in c) for c in itertools.combinations(range(H.n), k))
    masks = H.masks
    edge_set = set(masks)
    out = []
    for m in masks:
        minimal = True
        for other in edge_set:
            if other != m and other & m == other:
                minimal = False
                break
        if minimal:
            out.append(m)
    return tuple(out)
