"""Exact Sprague-Grundy, Tetris and JM-formula computations for hypergraph NIM,
with exhaustive checks of the symmetric JM characterization on finite boxes."""

from .errors import (
    CacheIntegrityError,
    DomainError,
    HypernimError,
    IllegalMoveError,
    ResourceLimitError,
    SpectrumError,
)
from .formats import parse_hypergraph
from .game import normalize, parse_position, slow_move, successors
from .hypergraph import (
    EmptySubhypergraph,
    Hypergraph,
    Spectrum,
    enumerate_mtf_spectra,
    induced_subhypergraph,
    is_minimal_transversal_free,
    is_transversal,
    is_transversal_free,
    make_symmetric,
    minimal_edges,
    spectrum_is_minimal_tf,
)
from .jm import JmBreakdown, m_of, u_of, v_of, y_of
from .sg import SgTable, mex, nim_sum, sg_on_box, sg_value
from .tetris import TetrisMemo, tetris_on_box, tetris_value
from .verify import VerificationReport

__version__ = "0.1.0"
