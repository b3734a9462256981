"""Poincare polynomial of the hypertoric cone of K4, computed two ways."""

from poisson_poincare import complete_graph, hypertoric_poincare, hypertoric_poincare_via_phi, p_zero, q_ih

m = complete_graph(4)
print("Tutte polynomial:", m.tutte())
print("P(x, y) by flats:", hypertoric_poincare(m))
print("P(x, y) via Phi: ", hypertoric_poincare_via_phi(m))
print("Q(x):", q_ih(m))
print("P(0, y):", p_zero(m))
print("P(x, 1):", hypertoric_poincare(m).subs(y=1))
