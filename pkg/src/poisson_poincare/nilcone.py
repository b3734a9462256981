"""Nilpotent cones of rank <= 2 and type A.

The two-variable polynomial of the nilpotent cone is predicted by

    P(x, y) = sum_chi K_chi(x^2) K_chi(y^-2),

where K_chi is the generalized Kostka polynomial of the Weyl group
irreducible chi.  Springer data (orbit and local system attached to each chi)
is tabulated here for B2 and G2, and is chi_nu -> (O_nu, trivial) in type A.

A stratified space with trivial local systems can also be assembled from
leaf and slice data directly, see ``assemble_poincare``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import (UnsupportedType, build_weyl, character_table, flag_poincare,
                      generalized_kostka, parse_type)
from .hypertoric import p_zero, q_ih
from .laurent import LaurentPolynomial, psum
from .matroid import Matroid
from .partitions import Partition, kostka
from .report import CheckReport

X = LaurentPolynomial.var("x")
Y = LaurentPolynomial.var("y")
T = LaurentPolynomial.var("t")


class InconsistentWeight(ValueError):
    pass


@dataclass(frozen=True)
class SpringerDatum:
    chi_label: str
    orbit_dim: int
    local_system: str = "trivial"
    rank: int = 1

    def __post_init__(self):
        if self.orbit_dim % 2 or self.orbit_dim < 0:
            raise ValueError(f"orbit dimension {self.orbit_dim} must be even and nonnegative")
        if self.local_system not in ("trivial", "nontrivial"):
            raise ValueError(f"unknown local system {self.local_system!r}")

    @property
    def trivial(self) -> bool:
        return self.local_system == "trivial"


@dataclass(frozen=True)
class StratumDatum:
    """One stratum S: its dimension, Q of its closure, and P(0, y) of its slice.

    With a nontrivial local system the closure's IH has no degree 0 class, so
    the constant term check only applies to trivial local systems.
    """
    dim_s: int
    ih_poly: LaurentPolynomial
    slice_p0: LaurentPolynomial
    weight_n: int = 2
    trivial_local_system: bool = True

    def __post_init__(self):
        if self.dim_s % 2 or self.dim_s < 0:
            raise ValueError(f"stratum dimension {self.dim_s} must be even and nonnegative")
        if self.weight_n <= 0:
            raise ValueError("weight must be positive")
        if self.trivial_local_system and self.ih_poly.evaluate({v: 0 for v in self.ih_poly.vars}) != 1:
            raise ValueError(f"IH polynomial {self.ih_poly} does not have constant term 1")


def assemble_poincare(strata: list[StratumDatum]) -> LaurentPolynomial:
    """sum_S x^dim S  y^(-n dim S / 2)  Q_S(x^-1)  P_S(0, y)."""
    weights = {s.weight_n for s in strata}
    if len(weights) > 1:
        raise InconsistentWeight(f"strata disagree on the weight: {sorted(weights)}")
    terms = []
    for s in strata:
        q = s.ih_poly.with_vars(("x",)).subs(x=X ** -1)
        p0 = s.slice_p0.with_vars(("y",))
        shift = X ** s.dim_s * Y ** (-s.weight_n * s.dim_s // 2)
        terms.append(shift * q * p0)
    return psum(terms).with_vars(("x", "y"))


# -- Springer tables ---------------------------------------------------------------

_SPRINGER = {
    "B2": [
        SpringerDatum("triv", 8),
        SpringerDatum("sigma", 0),
        SpringerDatum("tau", 6, "nontrivial", 1),
        SpringerDatum("tau_sigma", 4),
        SpringerDatum("h", 6),
    ],
    "G2": [
        SpringerDatum("triv", 12),
        SpringerDatum("sigma", 0),
        SpringerDatum("tau", 10, "nontrivial", 2),
        SpringerDatum("tau_sigma", 6),
        SpringerDatum("h", 10),
        SpringerDatum("h_tau", 8),
    ],
}

# K_chi(t^2) and h(chi; y) as tabulated for the two rank 2 cases
PUBLISHED_K = {
    "B2": {"triv": "t^8", "sigma": "1", "tau": "t^4", "tau_sigma": "t^4", "h": "t^2 + t^6"},
    "G2": {"triv": "t^12", "sigma": "1", "tau": "t^6", "tau_sigma": "t^6",
           "h": "t^2 + t^10", "h_tau": "t^4 + t^8"},
}
PUBLISHED_H = {
    "B2": {"triv": "y^-8", "sigma": "1", "tau": "y^-4", "tau_sigma": "y^-4",
           "h": "y^-2 + y^-6"},
    "G2": {"triv": "y^-12", "sigma": "1", "tau": "y^-6", "tau_sigma": "y^-6",
           "h": "y^-2 + y^-10", "h_tau": "y^-4 + y^-8"},
}
# slice to the subregular orbit: Kleinian A2 for B2, D4 for G2
SUBREGULAR_SLICE = {
    "B2": (6, "1 + y^2 + y^4"),
    "G2": (10, "1 + 2*y^4 + y^8"),
}


def _type_name(cartan_type: str) -> str:
    kind, rank = parse_type(cartan_type)
    return f"{kind}{rank}"


def type_a_orbit_dim(nu) -> int:
    """dim O_nu = r(r-1) - 2 n_nu in sl_r."""
    nu = Partition(nu)
    r = nu.size
    return r * (r - 1) - 2 * nu.n()


def springer_table(cartan_type: str) -> list[SpringerDatum]:
    name = _type_name(cartan_type)
    if name in _SPRINGER:
        return list(_SPRINGER[name])
    if name[0] != "A":
        raise UnsupportedType(name)
    w = build_weyl(name)
    labels = character_table(w).labels
    return [SpringerDatum(lab, type_a_orbit_dim(Partition.parse(lab))) for lab in labels]


def generalized_kostka_of(cartan_type: str, chi: str) -> LaurentPolynomial:
    return generalized_kostka(build_weyl(_type_name(cartan_type)), chi)


def h_multiplicity(cartan_type: str, chi: str) -> LaurentPolynomial:
    """h(chi; y) = K_chi(y^-2)."""
    k = generalized_kostka_of(cartan_type, chi)
    return k.subs(t=Y ** -2).with_vars(("y",))


def conjecture_status(cartan_type: str) -> str:
    # every supported type (rank <= 2 and type A) is a proven case
    _type_name(cartan_type)
    return "theorem"


def conjecture_poincare(cartan_type: str) -> LaurentPolynomial:
    """sum_chi K_chi(x^2) K_chi(y^-2)."""
    w = build_weyl(_type_name(cartan_type))
    terms = []
    for lab in character_table(w).labels:
        k = generalized_kostka(w, lab)
        terms.append(k.subs(t=X ** 2) * k.subs(t=Y ** -2))
    return psum(terms).with_vars(("x", "y"))


def springer_strata(cartan_type: str) -> list[StratumDatum]:
    """One stratum per Springer pair, with Q = x^dim K_chi(x^-2) and P0 = y^dim K_chi(y^-2)."""
    w = build_weyl(_type_name(cartan_type))
    out = []
    for d in springer_table(cartan_type):
        k = generalized_kostka(w, d.chi_label)
        ih = (k.subs(t=X ** -2) * X ** d.orbit_dim).with_vars(("x",))
        p0 = (k.subs(t=Y ** -2) * Y ** d.orbit_dim).with_vars(("y",))
        out.append(StratumDatum(d.orbit_dim, ih, p0, 2, d.trivial))
    return out


def subregular_p0(degrees) -> LaurentPolynomial:
    """sum_i y^(2(d_i - 2)) for a simply laced ambient algebra with degrees d_i."""
    return psum([Y ** (2 * (d - 2)) for d in degrees]).with_vars(("y",))


def hypertoric_strata(m: Matroid) -> list[StratumDatum]:
    """Strata of X(A) indexed by coloop-free flats F, of dimension 2 crk F."""
    out = []
    for f in m.flats():
        loc = m.localize(f.elements)
        if loc.coloops():
            continue
        contr = m.restrict_flat(f.elements)
        out.append(StratumDatum(2 * (m.rk - f.rank), q_ih(contr, "x"), p_zero(loc)))
    return out


# -- verification ------------------------------------------------------------------

def verify_palindromicity(r: int) -> CheckReport:
    """K_nu(t^2) = t^(dim O_nu - dim O_nu^t) K_nu^t(t^2) in type A_(r-1)."""
    if not 2 <= r <= 6:
        raise ValueError("palindromicity is checked for 2 <= r <= 6")
    rep = CheckReport(f"palindromicity A{r - 1}")
    w = build_weyl(f"A{r - 1}")
    for lab in character_table(w).labels:
        nu = Partition.parse(lab)
        nut = nu.conjugate()
        k = generalized_kostka(w, str(nu)).subs(t=T ** 2)
        kt = generalized_kostka(w, str(nut)).subs(t=T ** 2)
        shift = type_a_orbit_dim(nu) - type_a_orbit_dim(nut)
        rep.checks[f"chi_{lab}"] = k == (kt * T ** shift).with_vars(("t",))
    return rep


def verify_springer_case(cartan_type: str) -> CheckReport:
    name = _type_name(cartan_type)
    if name not in _SPRINGER:
        raise UnsupportedType(f"{name}: only B2 and G2 have tabulated Springer data")
    w = build_weyl(name)
    table = springer_table(name)
    rep = CheckReport(f"springer {name}")

    for lab, expected in PUBLISHED_K[name].items():
        got = generalized_kostka(w, lab).subs(t=T ** 2).with_vars(("t",))
        rep.checks[f"K_{lab}(t^2) = {expected}"] = got == LaurentPolynomial.parse(expected)
    for lab, expected in PUBLISHED_H[name].items():
        got = h_multiplicity(name, lab)
        rep.checks[f"h({lab}; y) = {expected}"] = got == LaurentPolynomial.parse(expected)

    # top degree of K_chi(x^2) is dim O_chi when the local system is trivial
    for d in table:
        if d.trivial:
            top = generalized_kostka(w, d.chi_label).subs(t=X ** 2).degree_range("x")[1]
            rep.checks[f"top degree of K_{d.chi_label}(x^2) = {d.orbit_dim}"] = top == d.orbit_dim

    dim_s, series = SUBREGULAR_SLICE[name]
    over = [d for d in table if d.orbit_dim == dim_s]
    total = psum([h_multiplicity(name, d.chi_label) * d.rank for d in over])
    shifted = (total * Y ** dim_s).with_vars(("y",))
    rep.data["subregular slice series"] = shifted.to_text()
    rep.checks[f"subregular slice series = {series}"] = shifted == LaurentPolynomial.parse(series)

    conj = conjecture_poincare(name)
    at_y1 = conj.subs(y=1).with_vars(("x",))
    rep.checks["P(x, 1) = flag Poincare polynomial at t = x^2"] = (
        at_y1 == flag_poincare(w).subs(t=X ** 2))
    rep.checks["stratified assembly = conjecture formula"] = (
        assemble_poincare(springer_strata(name)) == conj)
    rep.data["P(x,y)"] = conj.to_text()
    return rep
