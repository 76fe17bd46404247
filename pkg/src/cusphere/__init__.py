"""Six-dimensional rotation group built from signed permutation matrices."""

from .closed_form import (
    embed_complex,
    group_matrix,
    group_matrix_ce,
    group_matrix_u3,
    spherical_args,
)
from .generators import Angles, ScaleParams, commutator, generator, generator_ce
from .group_core import SignedElement, basis_matrix, cayley_table, identify, multiply
from .numerics import det, expm

__version__ = "0.1.0"
