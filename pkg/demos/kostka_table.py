"""Kostka-Foulkes polynomials for n = 4, checked against the Hall-Littlewood oracle."""

from poisson_poincare import Partition, kostka, kostka_oracle_hl
from poisson_poincare.partitions import dominance_leq, partitions_of

for lam in partitions_of(4):
    for mu in partitions_of(4):
        if dominance_leq(mu, lam):
            k = kostka(lam, mu)
            assert k == kostka_oracle_hl(lam, mu)
            print(f"K[{lam}; {mu}] = {k}")
