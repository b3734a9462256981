"""Exact Poisson-de Rham Poincare polynomials for hypertoric cones, type A
S3-varieties and nilpotent cones of small rank."""

from .laurent import LaurentPolynomial, RationalFunction
from .matroid import Matroid, from_matrix, complete_graph, cycle_graph
from .hypertoric import denham_phi, hypertoric_poincare, hypertoric_poincare_via_phi, q_ih, p_zero
from .partitions import Partition, kostka, kostka_oracle_hl
from .s3 import S3Variety, s3_poincare
from .coxeter import build_weyl, character_table, generalized_kostka, flag_poincare
from .nilcone import conjecture_poincare, h_multiplicity, assemble_poincare

__all__ = [
    "LaurentPolynomial", "RationalFunction",
    "Matroid", "from_matrix", "complete_graph", "cycle_graph",
    "denham_phi", "hypertoric_poincare", "hypertoric_poincare_via_phi", "q_ih", "p_zero",
    "Partition", "kostka", "kostka_oracle_hl",
    "S3Variety", "s3_poincare",
    "build_weyl", "character_table", "generalized_kostka", "flag_poincare",
    "conjecture_poincare", "h_multiplicity", "assemble_poincare",
]
