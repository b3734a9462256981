"""Assemble P(x, y) from leaf and slice data for a hypertoric cone and for sl_3."""

from poisson_poincare import assemble_poincare, conjecture_poincare, cycle_graph, hypertoric_poincare
from poisson_poincare.nilcone import hypertoric_strata, springer_strata

m = cycle_graph(4)
print("C4 flat sum:  ", hypertoric_poincare(m))
print("C4 assembled: ", assemble_poincare(hypertoric_strata(m)))
print("sl_3 formula:  ", conjecture_poincare("A2"))
print("sl_3 assembled:", assemble_poincare(springer_strata("A2")))
