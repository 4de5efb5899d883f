"""Exact Sprague-Grundy values for hypergraph NIM.

Box tables are filled bottom-up by total pile count: every move strictly
lowers the total, so a layer only depends on layers already committed.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CacheIntegrityError
from .game import normalize, successors, symmetric_successors
from .tetris import MAX_BOX_POSITIONS, box_positions, check_budget

FORMAT_VERSION = 1


def mex(values: Iterable[int]) -> int:
    """Smallest nonnegative integer not in ``values``."""
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


def nim_sum(x: Sequence[int]) -> int:
    out = 0
    for p in x:
        out ^= p
    return out


class SgTable:
    """Map from positions to SG values for one hypergraph.

    Keys are sorted positions exactly when the hypergraph is symmetric;
    lookups accept any permutation in that case.
    """

    def __init__(self, H, bounds: Sequence[int] | None = None):
        self.hypergraph = H
        self.descriptor = H.descriptor()
        self.n = H.n
        self.bounds = tuple(bounds) if bounds is not None else None
        self.normalized = H.is_symmetric
        self.values = {}

    def key(self, x: Sequence[int]) -> tuple:
        return normalize(x) if self.normalized else tuple(x)

    def __getitem__(self, x):
        return self.values[self.key(x)]

    def __contains__(self, x):
        return self.key(x) in self.values

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, SgTable):
            return NotImplemented
        return (self.descriptor, self.bounds, self.values) == (
            other.descriptor, other.bounds, other.values)

    def successor_keys(self, key: tuple):
        H = self.hypergraph
        if self.normalized:
            return symmetric_successors(H.spectrum.sizes, key)
        return set(successors(H, key))

    def header(self) -> list:
        return [f"x{i}" for i in range(1, self.n + 1)] + ["sg"]

    def to_csv(self) -> str:
        """Stored rows sorted lexicographically under an ``x1..xn,sg`` header."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header())
        for key in sorted(self.values):
            writer.writerow(list(key) + [self.values[key]])
        return buf.getvalue()

    def expanded_csv(self) -> str:
        """One row per position of the full box, including every permutation
        that the stored table folds together."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header())
        for x in box_positions(self.bounds):
            writer.writerow(list(x) + [self[x]])
        return buf.getvalue()

    def metadata(self, csv_text: str | None = None) -> dict:
        if csv_text is None:
            csv_text = self.to_csv()
        return {
            "format_version": FORMAT_VERSION,
            "hypergraph": self.descriptor,
            "bounds": list(self.bounds) if self.bounds is not None else None,
            "normalized": self.normalized,
            "rows": len(self.values),
            "sha256": hashlib.sha256(csv_text.encode()).hexdigest(),
        }

    def write(self, path) -> Path:
        """Write the CSV table and its ``.json`` metadata sidecar."""
        path = Path(path)
        text = self.to_csv()
        path.write_text(text)
        sidecar = path.with_suffix(".json")
        sidecar.write_text(json.dumps(self.metadata(text), indent=2, sort_keys=True) + "\n")
        return path

    @classmethod
    def read(cls, path, H) -> "SgTable":
        """Load a table written by :meth:`write`, checking it against the
        sidecar and the expected hypergraph."""
        path = Path(path)
        sidecar = path.with_suffix(".json")
        try:
            text = path.read_text()
            meta = json.loads(sidecar.read_text())
        except (OSError, ValueError) as exc:
            raise CacheIntegrityError(f"cannot read table {path}: {exc}") from None
        if meta.get("format_version") != FORMAT_VERSION:
            raise CacheIntegrityError(f"{path}: unsupported format version")
        if hashlib.sha256(text.encode()).hexdigest() != meta.get("sha256"):
            raise CacheIntegrityError(f"{path}: content hash does not match sidecar")
        if meta.get("hypergraph") != H.descriptor():
            raise CacheIntegrityError(f"{path}: table is for {meta.get('hypergraph')}")
        table = cls(H, meta["bounds"])
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header != table.header():
            raise CacheIntegrityError(f"{path}: unexpected header {header}")
        for row in reader:
            *x, g = (int(v) for v in row)
            table.values[tuple(x)] = g
        if len(table.values) != meta.get("rows"):
            raise CacheIntegrityError(f"{path}: row count does not match sidecar")
        return table


def sg_value(H, x: Sequence[int], table: SgTable | None = None) -> int:
    """Exact SG value of ``x``; ``table`` is filled with everything visited."""
    if table is None:
        table = SgTable(H)
    values = table.values
    root = table.key(x)
    stack = [root]
    while stack:
        key = stack[-1]
        if key in values:
            stack.pop()
            continue
        succ = table.successor_keys(key)
        pending = [s for s in succ if s not in values]
        if pending:
            stack.extend(pending)
            continue
        values[key] = mex(values[s] for s in succ)
        stack.pop()
    return values[root]


def _solve_chunk(table: SgTable, keys: list) -> list:
    values = table.values
    return [(key, mex(values[s] for s in table.successor_keys(key))) for key in keys]


def _solve_chunk_remote(args):
    H, bounds, values, keys = args
    table = SgTable(H, bounds)
    table.values = values
    return _solve_chunk(table, keys)


def sg_on_box(H, bounds: Sequence[int], jobs: int = 1,
              limit: int = MAX_BOX_POSITIONS) -> SgTable:
    """Complete SG table over ``[0, bounds]``.

    With ``jobs > 1`` each layer is split across worker processes; the result
    does not depend on the worker count.
    """
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != H.n:
        raise ValueError(f"bounds {bounds} do not match n={H.n}")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    check_budget(bounds, limit)
    table = SgTable(H, bounds)
    keys = {table.key(x) for x in box_positions(bounds)}
    layers = {}
    for key in keys:
        layers.setdefault(sum(key), []).append(key)

    if jobs == 1:
        for total in sorted(layers):
            for key, g in _solve_chunk(table, sorted(layers[total])):
                table.values[key] = g
        return table

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for total in sorted(layers):
            layer = sorted(layers[total])
            chunks = [layer[i::jobs] for i in range(jobs) if layer[i::jobs]]
            if len(chunks) == 1:
                results = [_solve_chunk(table, chunks[0])]
            else:
                snapshot = dict(table.values)
                results = pool.map(_solve_chunk_remote,
                                   [(H, bounds, snapshot, c) for c in chunks])
            for part in results:
                for key, g in part:
                    table.values[key] = g
    return table
