"""Text forms of hypergraphs.

Two forms are accepted:

    sym:n=5;lambda=2,3                      symmetric, by spectrum
    {"n": 5, "edges": [[1,2],[3,4,5]]}      explicit, 1-based, inline or in a file
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import SpectrumError
from .hypergraph import Hypergraph, Spectrum, make_symmetric

_SYM = re.compile(r"^sym:n=(\d+);lambda=(\d+(?:,\d+)*)$")


def parse_spectrum_shorthand(text: str) -> Spectrum:
    match = _SYM.match(text.strip().replace(" ", ""))
    if match is None:
        raise SpectrumError(f"expected sym:n=<int>;lambda=<int>(,<int>)*, got {text!r}")
    n = int(match.group(1))
    sizes = tuple(int(s) for s in match.group(2).split(","))
    return Spectrum(n, sizes)


def hypergraph_from_json(data) -> Hypergraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["n"])
        edges = [[int(i) for i in e] for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpectrumError(f"bad hypergraph JSON: {exc}") from None
    return Hypergraph(n, edges)


def parse_hypergraph(text: str) -> Hypergraph:
    """Spectrum shorthand, inline JSON, or a path to a JSON file."""
    text = text.strip()
    if text.startswith("sym:"):
        spec = parse_spectrum_shorthand(text)
        return make_symmetric(spec.n, spec)
    if text.startswith("{"):
        try:
            return hypergraph_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SpectrumError(f"bad hypergraph JSON: {exc}") from None
    path = Path(text)
    if not path.is_file():
        raise SpectrumError(f"not a hypergraph descriptor or JSON file: {text!r}")
    try:
        return hypergraph_from_json(json.loads(path.read_text()))
    except json.JSONDecodeError as exc:
        raise SpectrumError(f"{path}: bad hypergraph JSON: {exc}") from None
