"""Exact computations for the Schur-Weyl duality between U_q(gl(m|n)) and
the Iwahori-Hecke algebra H_k(q^2) on the tensor superspace V^k."""

from .scalars import LaurentPolynomial, RationalFunction, parse_rational
from .permutations import Permutation, parse_permutation
from .tableaux import Partition, StandardTableau, parse_partition, parse_tableau
from .hecke import HeckeElement, parse_hecke, x_T, xi_of, y_T
from .superspace import RootData, TensorVector, act_E, act_F, act_qh, hecke_act, r_j_apply
from .decompose import decompose, exact_rank, highest_weight_vector, project_module

__all__ = [
    "HeckeElement",
    "LaurentPolynomial",
    "Partition",
    "Permutation",
    "RationalFunction",
    "RootData",
    "StandardTableau",
    "TensorVector",
    "act_E",
    "act_F",
    "act_qh",
    "decompose",
    "exact_rank",
    "hecke_act",
    "highest_weight_vector",
    "parse_hecke",
    "parse_partition",
    "parse_permutation",
    "parse_rational",
    "parse_tableau",
    "project_module",
    "r_j_apply",
    "x_T",
    "xi_of",
    "y_T",
]
