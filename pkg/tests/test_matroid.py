import itertools
import random
import threading

import pytest
from hypothesis import given, settings, strategies as st

from poisson_poincare.laurent import LaurentPolynomial as L, symbols
from poisson_poincare.matroid import (LoopPresent, Matroid, NotAFlat, char_poly, complete_graph,
                                      cycle_graph, empty_matroid, from_csv, from_json, from_matrix,
                                      h_broken_circuit, h_broken_circuit_complex, h_polynomial,
                                      h_independence_complex, tutte_corank_nullity,
                                      tutte_deletion_contraction)

x, y, t = symbols("x y t")
U23 = [[1, 0, 1], [0, 1, 1]]


# -- brute-force oracles (Leibniz determinants, no elimination) ----------------------

def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inv
        for i, p in enumerate(perm):
            term *= m[i][p]
        total += term
    return total


def oracle_rank(rows, subset):
    cols = sorted(subset)
    for k in range(min(len(rows), len(cols)), 0, -1):
        for rs in itertools.combinations(range(len(rows)), k):
            for cs in itertools.combinations(cols, k):
                if leibniz_det([[rows[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def oracle_tutte(rows, n):
    full = oracle_rank(rows, range(n))
    out = L({}, ("x", "y"))
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            r = oracle_rank(rows, s)
            out = out + (x - 1) ** (full - r) * (y - 1) ** (k - r)
    return out


def oracle_flats(rows, n):
    flats = set()
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            r = oracle_rank(rows, s)
            closure = frozenset(e for e in range(n) if oracle_rank(rows, set(s) | {e}) == r)
            flats.add(closure)
    return flats


def random_matrix(rng, rows, cols, entries=(-1, 0, 0, 1)):
    while True:
        m = [[rng.choice(entries) for _ in range(cols)] for _ in range(rows)]
        if all(any(m[i][j] for i in range(rows)) for j in range(cols)):
            return m


# -- examples ---------------------------------------------------------------------

def test_from_matrix_examples():
    m = from_matrix(U23)
    assert m.size == 3 and m.rk == 2
    c = from_matrix([[1]])
    assert c.rk == 1 and c.coloops() == {0}
    with pytest.raises(LoopPresent):
        from_matrix([[1, 0], [0, 0]])


def test_rank_examples():
    m = from_matrix(U23)
    assert m.rank({0, 1}) == 2
    assert m.rank(set()) == 0
    assert m.rank({0, 1, 2}) == 2


def test_unimodular_examples():
    assert from_matrix(U23).is_unimodular()
    assert not from_matrix([[1, 0, 1], [0, 1, 2]]).is_unimodular()
    assert from_matrix([[1]]).is_unimodular()


def test_unimodular_matches_brute_force():
    rng = random.Random(3)
    for _ in range(30):
        rows = random_matrix(rng, 3, 4, entries=(-1, 0, 1, 2))
        minors = [leibniz_det([[rows[r][c] for c in cs] for r in rs])
                  for k in range(1, 4)
                  for rs in itertools.combinations(range(3), k)
                  for cs in itertools.combinations(range(4), k)]
        assert from_matrix(rows).is_unimodular() == all(d in (-1, 0, 1) for d in minors)


def test_flats_examples():
    m = from_matrix(U23)
    got = [sorted(f.elements) for f in m.flats()]
    assert got == [[], [0], [1], [2], [0, 1, 2]]
    assert [sorted(f.elements) for f in empty_matroid().flats()] == [[]]
    assert [sorted(f.elements) for f in from_matrix([[1, 0], [0, 1]]).flats()] == [[], [0], [1], [0, 1]]


def test_flats_match_brute_force():
    rng = random.Random(5)
    for _ in range(15):
        rows = random_matrix(rng, 3, rng.randint(3, 6))
        m = from_matrix(rows)
        flats = m.flats()
        assert len(flats) == len({f.elements for f in flats})
        assert {f.elements for f in flats} == oracle_flats(rows, len(rows[0]))
        assert [f.sort_key() for f in flats] == sorted(f.sort_key() for f in flats)


def test_coloop_examples():
    m = from_matrix(U23)
    assert m.coloops() == set() and m.is_coloop_free()
    assert from_matrix([[1]]).coloops() == {0}
    assert from_matrix([[1, 0], [0, 1]]).coloops() == {0, 1}


def test_localize_examples():
    m = from_matrix(U23)
    assert m.localize({0, 1, 2}).same_rank_function(m)
    assert m.localize(set()).tutte() == 1
    assert m.localize({0}).tutte() == x
    with pytest.raises(NotAFlat):
        m.localize({0, 1})


def test_restrict_flat_examples():
    m = from_matrix(U23)
    assert m.restrict_flat(set()).same_rank_function(m)
    e = m.restrict_flat({0, 1, 2})
    assert e.size == 0 and e.tutte() == 1
    two = m.restrict_flat({2})
    assert two.size == 2 and two.rk == 1
    assert two.tutte() == x + y
    with pytest.raises(NotAFlat):
        m.restrict_flat({0, 1})


def test_contraction_rank_function():
    rng = random.Random(7)
    for _ in range(10):
        rows = random_matrix(rng, 4, 6)
        m = from_matrix(rows)
        for f in m.flats():
            c = m.restrict_flat(f.elements)
            rest = [e for e in m.ground if e not in f.elements]
            assert not c.loops()
            assert not m.localize(f.elements).loops()
            for k in range(len(rest) + 1):
                for s in itertools.combinations(range(len(rest)), k):
                    orig = {rest[i] for i in s}
                    assert c.rank(s) == m.rank(orig | f.elements) - f.rank


def test_dual_examples():
    m = from_matrix(U23)
    d = m.dual()
    assert d.rk == 1 and d.size == 3
    assert d.tutte() == x + y + y ** 2
    assert d.dual().same_rank_function(m)
    boolean = from_matrix([[1, 0], [0, 1]]).dual()
    assert boolean.rk == 0 and boolean.loops() == {0, 1}
    assert boolean.tutte() == y ** 2


def test_tutte_examples():
    assert from_matrix(U23).tutte() == x ** 2 + x + y
    assert from_matrix([[1]]).tutte() == x
    assert from_matrix([[1, 0], [0, 1]]).tutte() == x ** 2
    assert complete_graph(4).tutte().evaluate({"x": 1, "y": 1}) == 16


def test_tutte_matches_brute_force():
    rng = random.Random(11)
    for _ in range(10):
        rows = random_matrix(rng, 3, rng.randint(2, 6))
        assert from_matrix(rows).tutte() == oracle_tutte(rows, len(rows[0]))


def test_char_poly_examples():
    assert char_poly(from_matrix(U23)) == x ** 2 - 3 * x + 2
    assert char_poly(from_matrix([[1]])) == x - 1
    assert char_poly(from_matrix([[1, 0], [0, 1]])) == (x - 1) ** 2


def test_char_poly_of_graph_is_chromatic_over_components():
    # chromatic polynomial of K4 is q(q-1)(q-2)(q-3); divide by q for one component
    assert char_poly(complete_graph(4)) == (x - 1) * (x - 2) * (x - 3)


def test_h_broken_circuit_examples():
    assert h_broken_circuit(from_matrix(U23)) == 1 + t
    assert h_broken_circuit(from_matrix([[1, 0], [0, 1]])) == 1
    assert h_broken_circuit(from_matrix([[1]])) == 1
    assert h_broken_circuit_complex(from_matrix(U23)) == 1 + t


def test_independence_h_polynomial_two_ways():
    for m in (from_matrix(U23), complete_graph(4), cycle_graph(5)):
        assert h_polynomial(m) == h_independence_complex(m)


def test_matrix_input_formats():
    m = from_json('{"matrix": [[1, 0, 1], [0, 1, 1]]}')
    assert m.tutte() == x ** 2 + x + y
    assert from_csv("1,0,1\n0,1,1\n").same_rank_function(m)


def test_corpus_graphs():
    k4 = complete_graph(4)
    assert (k4.size, k4.rk) == (6, 3)
    assert cycle_graph(3).tutte() == x ** 2 + x + y


def test_concurrent_rank_queries_agree():
    m = complete_graph(5)
    masks = list(range(1 << m.size))
    expected = [Matroid(m.columns).rank([e for e in m.ground if mask >> e & 1]) for mask in masks]
    results = {}

    def work(k):
        results[k] = [m.rank([e for e in m.ground if mask >> e & 1]) for mask in masks]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(r == expected for r in results.values())


# -- properties ---------------------------------------------------------------------

matrices = st.integers(2, 4).flatmap(lambda r: st.integers(2, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(matrices, st.data())
def test_rank_submodular_and_monotone(rows, data):
    m = Matroid([tuple(c) for c in zip(*rows)])
    ground = list(m.ground)
    a = set(data.draw(st.lists(st.sampled_from(ground), max_size=len(ground))))
    b = set(data.draw(st.lists(st.sampled_from(ground), max_size=len(ground))))
    assert m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b)
    assert m.rank(a & b) <= m.rank(a) <= m.rank(a | b)
    assert m.rank(a) <= len(a)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.randoms(use_true_random=False))
def test_broken_circuit_order_independence(n, rnd):
    rows = random_matrix(rnd, rnd.randint(1, min(4, n)), n)
    m = from_matrix(rows)
    h = h_broken_circuit(m)
    for _ in range(3):
        order = list(m.ground)
        rnd.shuffle(order)
        assert h_broken_circuit_complex(m, order) == h


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_tutte_methods_agree(n, rnd):
    m = Matroid([tuple(c) for c in zip(*random_matrix(rnd, rnd.randint(1, 5), n))])
    assert tutte_corank_nullity(m) == tutte_deletion_contraction(m)


def test_tutte_methods_agree_at_twelve_elements():
    rng = random.Random(17)
    for rows in (random_matrix(rng, 4, 12), random_matrix(rng, 5, 12)):
        m = from_matrix(rows)
        assert tutte_corank_nullity(m) == tutte_deletion_contraction(m)
    k5 = complete_graph(5)
    assert tutte_corank_nullity(k5) == tutte_deletion_contraction(k5)


def test_dual_swaps_tutte_on_corpus():
    for m in (complete_graph(4), complete_graph(5), cycle_graph(4), cycle_graph(6), from_matrix(U23)):
        assert m.dual().tutte() == m.tutte().subs(x=y, y=x)


def test_loops_and_coloops_kill_tutte_specializations():
    rng = random.Random(13)
    for _ in range(10):
        rows = random_matrix(rng, 3, 5)
        m = from_matrix(rows)
        if m.coloops():
            assert m.tutte().subs(x=0).is_zero()
        d = m.dual()
        if d.loops():
            assert d.tutte().subs(y=0).is_zero()
