"""Explicit bases of the global Weyl modules W_A(m omega_1) for sl_n (x) A."""

from .algebra import AlgebraSpec, load_algebra, pi, trunc_poly
from .basis import basis_image, basis_matrix, enumerate_tuples, sign_analysis
from .envelope import UElement, act, coproduct, gen
from .linalg import RationalMatrix, rank
from .multiset import Multiset, characteristic
from .qconstruct import q_single, q_tuple
from .symtensor import Tensor, sym_dim, v_vector, w_vector

__all__ = [
    "AlgebraSpec", "load_algebra", "pi", "trunc_poly",
    "basis_image", "basis_matrix", "enumerate_tuples", "sign_analysis",
    "UElement", "act", "coproduct", "gen",
    "RationalMatrix", "rank",
    "Multiset", "characteristic",
    "q_single", "q_tuple",
    "Tensor", "sym_dim", "v_vector", "w_vector",
]
