"""Nilpotent cones of B2 and G2: the formula, its stratified assembly and checks."""

from poisson_poincare.nilcone import verify_springer_case

for name in ("B2", "G2"):
    rep = verify_springer_case(name)
    print(rep.to_text())
    print()
