import pytest

from poisson_poincare.coxeter import build_weyl, flag_poincare, generalized_kostka, UnsupportedType
from poisson_poincare.hypertoric import hypertoric_poincare
from poisson_poincare.laurent import LaurentPolynomial as L, symbols
from poisson_poincare.matroid import complete_graph, cycle_graph, from_matrix
from poisson_poincare.nilcone import (InconsistentWeight, SpringerDatum, StratumDatum,
                                      assemble_poincare, conjecture_poincare, conjecture_status,
                                      h_multiplicity, hypertoric_strata, springer_strata,
                                      springer_table, subregular_p0, type_a_orbit_dim,
                                      verify_palindromicity, verify_springer_case)
from poisson_poincare.partitions import Partition, kostka, n_stat, partitions_of

x, y, t = symbols("x y t")
U23 = from_matrix([[1, 0, 1], [0, 1, 1]])


def test_assemble_point():
    assert assemble_poincare([StratumDatum(0, L.constant(1, ("x",)), L.constant(1, ("y",)))]) == 1


def test_assemble_rejects_mixed_weights():
    a = StratumDatum(0, L.constant(1, ("x",)), L.constant(1, ("y",)), 2)
    b = StratumDatum(2, L.constant(1, ("x",)), L.constant(1, ("y",)), 4)
    with pytest.raises(InconsistentWeight):
        assemble_poincare([a, b])


def test_stratum_invariants():
    with pytest.raises(ValueError):
        StratumDatum(3, L.constant(1, ("x",)), L.constant(1, ("y",)))
    with pytest.raises(ValueError):
        StratumDatum(2, x ** 2, L.constant(1, ("y",)))
    # a nontrivial local system has no IH in degree 0
    StratumDatum(2, x ** 2, L.constant(1, ("y",)), trivial_local_system=False)


@pytest.mark.parametrize("m", [U23, complete_graph(4), cycle_graph(5), complete_graph(4).dual()])
def test_assemble_hypertoric(m):
    strata = hypertoric_strata(m)
    assert len(strata) == sum(1 for f in m.flats() if not m.localize(f.elements).coloops())
    assert assemble_poincare(strata) == hypertoric_poincare(m)


def test_u23_has_two_strata():
    assert len(hypertoric_strata(U23)) == 2


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "G2"])
def test_assemble_springer(name):
    assert assemble_poincare(springer_strata(name)) == conjecture_poincare(name)


def test_springer_tables():
    b2 = {d.chi_label: (d.orbit_dim, d.local_system, d.rank) for d in springer_table("B2")}
    assert b2 == {"triv": (8, "trivial", 1), "sigma": (0, "trivial", 1),
                  "tau": (6, "nontrivial", 1), "tau_sigma": (4, "trivial", 1),
                  "h": (6, "trivial", 1)}
    g2 = {d.chi_label: (d.orbit_dim, d.local_system, d.rank) for d in springer_table("G2")}
    assert g2["tau"] == (10, "nontrivial", 2)
    assert g2["h_tau"] == (8, "trivial", 1)
    assert len(g2) == 6
    a2 = {d.chi_label: d.orbit_dim for d in springer_table("A2")}
    assert a2 == {"3": 6, "2,1": 4, "1,1,1": 0}
    with pytest.raises(UnsupportedType):
        springer_table("D4")


@pytest.mark.parametrize("name", ["A1", "A3", "A5", "B2", "G2"])
def test_springer_table_invariants(name):
    table = springer_table(name)
    w = build_weyl(name)
    top = max(d.orbit_dim for d in table)
    assert top == 2 * w.num_reflections
    assert [d.chi_label for d in table if d.orbit_dim == top and d.trivial] in (["triv"], [str(w.rank + 1)])
    zero = [d.chi_label for d in table if d.orbit_dim == 0]
    assert len(zero) == 1
    assert all(d.orbit_dim % 2 == 0 for d in table)


def test_springer_datum_validation():
    with pytest.raises(ValueError):
        SpringerDatum("triv", 3)


def test_conjecture_examples():
    assert conjecture_poincare("A1") == 1 + x ** 2 * y ** -2
    assert conjecture_poincare("B2") == (1 + 2 * x ** 4 * y ** -4 + x ** 8 * y ** -8
                                         + (x ** 2 + x ** 6) * (y ** -2 + y ** -6))
    assert conjecture_status("G2") == "theorem"


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "A5", "B2", "G2"])
def test_conjecture_at_y_equals_one(name):
    p = conjecture_poincare(name)
    assert p.subs(y=1) == flag_poincare(build_weyl(name)).subs(t=x ** 2)


@pytest.mark.parametrize("name", ["A3", "B2", "G2"])
def test_conjecture_swap_symmetry(name):
    p = conjecture_poincare(name)
    for exp, c in p.terms.items():
        e = dict(zip(p.vars, exp))
        assert p.coefficient({"x": -e["y"], "y": -e["x"]}) == c


def test_h_multiplicity_examples():
    assert h_multiplicity("B2", "h") == y ** -2 + y ** -6
    assert h_multiplicity("G2", "h_tau") == y ** -4 + y ** -8
    for name, dim in (("A2", 6), ("B2", 8), ("G2", 12)):
        assert h_multiplicity(name, "triv") == y ** -dim
        assert h_multiplicity(name, "sigma") == 1


@pytest.mark.parametrize("r", range(2, 7))
def test_palindromicity(r):
    rep = verify_palindromicity(r)
    assert rep.passed, rep.failures()
    assert len(rep.checks) == len(partitions_of(r))


def test_orbit_dimension_needs_factor_two():
    # with dim O = r(r-1) - n_nu the identity fails already for sl3
    r = 3
    w = build_weyl("A2")
    assert type_a_orbit_dim((2, 1)) == 4
    k = generalized_kostka(w, "3").subs(t=t ** 2)
    k_t = generalized_kostka(w, "1,1,1").subs(t=t ** 2)
    good = type_a_orbit_dim((3,)) - type_a_orbit_dim((1, 1, 1))
    bad = (r * (r - 1) - n_stat((3,))) - (r * (r - 1) - n_stat((1, 1, 1)))
    assert k == k_t * t ** good
    assert k != k_t * t ** bad


def test_type_a_orbit_dim_matches_s3_dimension():
    for r in range(2, 7):
        for nu in [(r,), (r - 1, 1), (1,) * r]:
            assert type_a_orbit_dim(nu) == 2 * (n_stat((1,) * r) - n_stat(nu))


@pytest.mark.parametrize("name", ["B2", "G2"])
def test_verify_springer_case(name):
    rep = verify_springer_case(name)
    assert rep.passed, rep.failures()


def test_subregular_series():
    assert verify_springer_case("G2").data["subregular slice series"] == "y^8 + 2*y^4 + 1"
    assert verify_springer_case("B2").data["subregular slice series"] == "y^4 + y^2 + 1"
    assert h_multiplicity("B2", "sigma") == 1


def test_subregular_p0_examples():
    assert subregular_p0([2, 3]) == 1 + y ** 2
    assert subregular_p0([2, 6]) == 1 + y ** 8
    assert subregular_p0([2]) == 1


@pytest.mark.parametrize("r", range(3, 7))
def test_subregular_p0_matches_type_a_slice(r):
    # the subregular slice in sl_r is Kleinian of type A_(r-1), degrees 2..r
    nu = Partition((r - 1, 1))
    slice_p0 = kostka(nu, (1,) * r).subs(t=y ** -2) * y ** type_a_orbit_dim(nu)
    assert subregular_p0(range(2, r + 1)) == slice_p0
