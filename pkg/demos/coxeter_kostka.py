"""Generalized Kostka polynomials for B2 and G2 from the coinvariant algebra."""

from poisson_poincare import build_weyl, character_table, flag_poincare, generalized_kostka

for name in ("B2", "G2"):
    w = build_weyl(name)
    table = character_table(w)
    print(name, "order", w.order)
    for lab in table.labels:
        print(f"  K_{lab}(t) = {generalized_kostka(w, lab)}  (dim {table.dim(lab)})")
    print("  flag Poincare:", flag_poincare(w))
