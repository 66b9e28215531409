"""Exact Penrose-type tilings by strip projection and their inflation symmetries."""

from .golden import SQRT5, TAU, TAU_CONJ, ZETA, Cyclo, Quad
from .inflation import (
    InflationTriple,
    TripleClass,
    classify,
    enumerate_lambda,
    find_centers,
    matrix_A,
    triple_from_abg,
    verify_patch,
)
from .pattern import Shift, build_edges_faces, generate, is_member, singular_witness

__version__ = "0.1.0"
