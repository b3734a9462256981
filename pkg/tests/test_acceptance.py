"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or under pytest, where the
lines are repeated in the terminal summary.
"""

import itertools
import random
import time

from poisson_poincare import coxeter, hypertoric, nilcone, s3
from poisson_poincare.laurent import LaurentPolynomial as L, symbols
from poisson_poincare.matroid import (Matroid, complete_graph, cycle_graph, h_broken_circuit,
                                      h_broken_circuit_complex, h_independence_complex,
                                      tutte_corank_nullity, tutte_deletion_contraction)
from poisson_poincare.partitions import dominance_leq, kostka, kostka_matrix_hl, partitions_of

x, y, t = symbols("x y t")

BASE = {"K4": complete_graph(4), "K5": complete_graph(5),
        **{f"C{n}": cycle_graph(n) for n in range(3, 7)}}
CORPUS = {**BASE, **{f"{k}*": m.dual() for k, m in BASE.items()}}


def report(log, n, title, ok, elapsed, limit=None):
    timing = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
    within = limit is None or elapsed < limit
    line = f"criterion {n}: {'PASS' if ok and within else 'FAIL'}  {title}  [{timing}]"
    print(line)
    if log is not None:
        log.append(line)
    assert ok, title
    assert within, f"{title}: {timing}"


def test_corpus_shape():
    assert len(CORPUS) >= 10
    for m in CORPUS.values():
        assert m.is_coloop_free() and not m.loops()
        if m.size <= 10:
            assert m.is_unimodular()


def test_criterion_01_laplacian(acceptance_log):
    start = time.perf_counter()
    ok = all(hypertoric.hypertoric_poincare(m) == hypertoric.hypertoric_poincare_via_phi(m)
             for m in CORPUS.values())
    report(acceptance_log, 1, f"flat sum = Phi substitution on {len(CORPUS)} matroids", ok,
           time.perf_counter() - start, 30)


def test_criterion_02_y_equals_one(acceptance_log):
    polys = {k: hypertoric.hypertoric_poincare(m) for k, m in CORPUS.items()}
    start = time.perf_counter()
    ok = True
    for k, m in CORPUS.items():
        at_one = polys[k].subs(y=1)
        ok &= at_one == m.tutte().subs(x=x ** 2, y=1)
        ok &= at_one == h_independence_complex(m).subs(t=x ** -2) * x ** (2 * m.rk)
    report(acceptance_log, 2, "P(x,1) = T(x^2,1) = x^2rk h(x^-2)", ok, time.perf_counter() - start, 5)


def test_criterion_03_gale_duality(acceptance_log):
    start = time.perf_counter()
    ok = True
    for m in CORPUS.values():
        direct = m.tutte().subs(x=0, y=y ** -2) * y ** (2 * m.size - 2 * m.rk)
        via_dual = hypertoric.q_ih(m.dual()).subs(x=y)
        ok &= direct == via_dual == hypertoric.p_zero(m)
        ok &= m.dual().tutte() == m.tutte().subs(x=y, y=x)
    report(acceptance_log, 3, "p_zero = Q of Gale dual; T_dual(x,y) = T(y,x)", ok, time.perf_counter() - start)


def test_criterion_04_kostka_oracle(acceptance_log):
    start = time.perf_counter()
    ok, pairs = True, 0
    for n in range(1, 7):
        k = kostka_matrix_hl(n)
        for lam, mu in itertools.product(partitions_of(n), repeat=2):
            pairs += dominance_leq(mu, lam)
            ok &= kostka(lam, mu) == k[lam, mu]
    report(acceptance_log, 4, f"charge = Hall-Littlewood oracle, |lam| <= 6 ({pairs} dominance pairs)", ok,
           time.perf_counter() - start, 60)


def test_criterion_05_type_a_generalized_kostka(acceptance_log):
    start = time.perf_counter()
    ok = True
    for r in range(2, 7):
        w = coxeter.build_weyl(f"A{r - 1}")
        for nu in partitions_of(r):
            ok &= coxeter.generalized_kostka(w, str(nu)) == kostka(nu, (1,) * r)
    report(acceptance_log, 5, "K_{g,chi_nu} = K_{nu,1^r} for r <= 6", ok, time.perf_counter() - start)


def test_criterion_06_type_a_same(acceptance_log):
    start = time.perf_counter()
    ok = all(nilcone.conjecture_poincare(f"A{r - 1}") == s3.s3_poincare(s3.S3Variety((r,), (1,) * r))
             for r in range(2, 6))
    report(acceptance_log, 6, "nilcone double sum = S3 formula for (r),(1^r), r <= 5", ok,
           time.perf_counter() - start)


EXPECTED_K = {
    "B2": {"triv": t ** 8, "sigma": 1, "tau": t ** 4, "tau_sigma": t ** 4, "h": t ** 2 + t ** 6},
    "G2": {"triv": t ** 12, "sigma": 1, "tau": t ** 6, "tau_sigma": t ** 6,
           "h": t ** 2 + t ** 10, "h_tau": t ** 4 + t ** 8},
}
EXPECTED_H = {
    "B2": {"triv": y ** -8, "sigma": 1, "tau": y ** -4, "tau_sigma": y ** -4,
           "h": y ** -2 + y ** -6},
    "G2": {"triv": y ** -12, "sigma": 1, "tau": y ** -6, "tau_sigma": y ** -6,
           "h": y ** -2 + y ** -10, "h_tau": y ** -4 + y ** -8},
}


def test_criterion_07_rank_two_tables(acceptance_log):
    start = time.perf_counter()
    ok = True
    for name in ("B2", "G2"):
        w = coxeter.build_weyl(name)
        for chi, expected in EXPECTED_K[name].items():
            ok &= coxeter.generalized_kostka(w, chi).subs(t=t ** 2) == expected
        for chi, expected in EXPECTED_H[name].items():
            ok &= nilcone.h_multiplicity(name, chi) == expected
    ok &= coxeter.generalized_kostka(coxeter.build_weyl("G2"), "h_tau").subs(t=t ** 2).to_text() == "t^8 + t^4"
    report(acceptance_log, 7, "B2 and G2 K-values and h-values", ok, time.perf_counter() - start)


def test_criterion_08_g2_subregular(acceptance_log):
    start = time.perf_counter()
    over = [d for d in nilcone.springer_table("G2") if d.orbit_dim == 10]
    series = sum((d.rank * nilcone.h_multiplicity("G2", d.chi_label) for d in over), L({}, ("y",)))
    ok = series * y ** 10 == 1 + 2 * y ** 4 + y ** 8
    report(acceptance_log, 8, "G2 subregular slice series = 1 + 2y^4 + y^8", ok, time.perf_counter() - start)


def test_criterion_09_palindromicity(acceptance_log):
    start = time.perf_counter()
    ok = True
    for r in range(2, 7):
        w = coxeter.build_weyl(f"A{r - 1}")
        for nu in partitions_of(r):
            nut = nu.conjugate()
            shift = 2 * (nut.n() - nu.n())  # dim O_nu - dim O_nu^t with dim O = r(r-1) - 2 n
            lhs = coxeter.generalized_kostka(w, str(nu)).subs(t=t ** 2)
            rhs = coxeter.generalized_kostka(w, str(nut)).subs(t=t ** 2) * t ** shift
            ok &= lhs == rhs
    report(acceptance_log, 9, "K_chi(t^2) = t^(dim O_chi - dim O_chi.sigma) K_chi.sigma(t^2), r <= 6", ok,
           time.perf_counter() - start, 30)


def test_criterion_10_regular_representation(acceptance_log):
    start = time.perf_counter()
    ok = True
    for name in ("A1", "A2", "A3", "A4", "A5", "B2", "G2"):
        w = coxeter.build_weyl(name)
        table = coxeter.character_table(w)
        total = sum((table.dim(c) * coxeter.generalized_kostka(w, c) for c in table.labels),
                    L({}, ("t",)))
        ok &= total == coxeter.flag_poincare(w)
    report(acceptance_log, 10, "sum dim(chi) K_chi = flag Poincare polynomial", ok, time.perf_counter() - start)


def _poly(rng):
    return L({(rng.randint(-4, 4), rng.randint(-4, 4)): rng.randint(-20, 20)
              for _ in range(rng.randint(0, 5))}, ("x", "y"))


def _matrix(rng, rows, cols):
    while True:
        m = [[rng.choice((-1, 0, 0, 1)) for _ in range(cols)] for _ in range(rows)]
        if all(any(r[j] for r in m) for j in range(cols)):
            return Matroid([tuple(c) for c in zip(*m)])


def test_criterion_11_property_suites(acceptance_log):
    start = time.perf_counter()
    rng = random.Random(11)
    ring = True
    for _ in range(10_000):
        a, b, c = _poly(rng), _poly(rng), _poly(rng)
        ring &= (a + b == b + a and a * b == b * a and (a + b) + c == a + (b + c)
                 and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c)
    submod = True
    for _ in range(50):
        m = _matrix(rng, rng.randint(2, 4), rng.randint(3, 8))
        for _ in range(20):
            p = {e for e in m.ground if rng.random() < 0.5}
            q = {e for e in m.ground if rng.random() < 0.5}
            submod &= m.rank(p | q) + m.rank(p & q) <= m.rank(p) + m.rank(q)
    broken = True
    for n in range(2, 9):
        m = _matrix(rng, min(3, n), n)
        h = h_broken_circuit(m)
        for _ in range(4):
            order = list(m.ground)
            rng.shuffle(order)
            broken &= h_broken_circuit_complex(m, order) == h
    tutte = True
    for n in range(1, 13):
        m = _matrix(rng, rng.randint(1, 5), n)
        tutte &= tutte_corank_nullity(m) == tutte_deletion_contraction(m)
    ok = ring and submod and broken and tutte
    report(acceptance_log, 11, "ring laws (10^4), submodularity, broken circuits (l <= 8), "
           "Tutte methods (l <= 12)", ok, time.perf_counter() - start, 60)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn(None)
            except AssertionError:
                pass
