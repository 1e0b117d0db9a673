"""Equivariant K-theory of compact Lie groups with an involution, computed exactly."""

from .errors import CapacityError, ContractError, EqkError, InvalidInputError
from .involutions import ActionKind, Sigma, SymmetricPair, catalog, classify_pair, sigma_of
from .kmodule import assemble, graded_ranks, wedge_decomposition
from .rootdata import CartanType, cartan_matrix, weyl_orbit

__all__ = [
    "ActionKind",
    "CapacityError",
    "CartanType",
    "ContractError",
    "EqkError",
    "InvalidInputError",
    "Sigma",
    "SymmetricPair",
    "assemble",
    "cartan_matrix",
    "catalog",
    "classify_pair",
    "graded_ranks",
    "sigma_of",
    "wedge_decomposition",
    "weyl_orbit",
]

__version__ = "0.1.0"
