"""Poisson-de Rham Poincare polynomials of unimodular hypertoric cones.

Everything here is a sum over the flats F of the arrangement, combining the
Tutte polynomial of the contraction A^F (the leaf closure) with that of the
restriction A_F (the slice).
"""

from __future__ import annotations

from .laurent import LaurentPolynomial, psum
from .matroid import Matroid, h_independence_complex
from .report import CheckReport

X = LaurentPolynomial.var("x")
Y = LaurentPolynomial.var("y")
B = LaurentPolynomial.var("b")


def _flat_pieces(m: Matroid):
    for f in m.flats():
        yield f, m.restrict_flat(f.elements), m.localize(f.elements)


def denham_phi(m: Matroid) -> LaurentPolynomial:
    """Sum over flats of T_{A^F}(x-1, 0) T_{A_F}(0, y-1) b^|F| (all b's identified)."""
    terms = []
    for f, contr, loc in _flat_pieces(m):
        slice_part = loc.tutte().subs(x=0, y=Y - 1)
        if slice_part.is_zero():
            continue
        leaf_part = contr.tutte().subs(x=X - 1, y=0)
        terms.append(leaf_part * slice_part * B ** len(f))
    return psum(terms).with_vars(("x", "y", "b"))


def hypertoric_poincare(m: Matroid) -> LaurentPolynomial:
    """y^(-2 rk) * sum_F y^(2|F|) T_{A^F}(x^2, 0) T_{A_F}(0, y^-2)."""
    terms = []
    for f, contr, loc in _flat_pieces(m):
        slice_part = loc.tutte().subs(x=0, y=Y ** -2)
        if slice_part.is_zero():
            continue
        leaf_part = contr.tutte().subs(x=X ** 2, y=0)
        terms.append(leaf_part * slice_part * Y ** (2 * len(f)))
    return (psum(terms) * Y ** (-2 * m.rk)).with_vars(("x", "y"))


def hypertoric_poincare_via_phi(m: Matroid) -> LaurentPolynomial:
    """y^(-2 rk) Phi(x^2 + 1, y^-2 + 1, y^2)."""
    phi = denham_phi(m)
    p = phi.subs(x=X ** 2 + 1, y=Y ** -2 + 1, b=Y ** 2)
    return (p * Y ** (-2 * m.rk)).with_vars(("x", "y"))


def q_ih(m: Matroid, var: str = "x") -> LaurentPolynomial:
    """Intersection cohomology Poincare polynomial x^(2 rk) T(x^-2, 0)."""
    v = LaurentPolynomial.var(var)
    p = m.tutte().subs(x=v ** -2, y=0) * v ** (2 * m.rk)
    return p.with_vars((var,))


def p_zero(m: Matroid) -> LaurentPolynomial:
    """P(0, y) = y^(2|E| - 2 rk) T(0, y^-2)."""
    p = m.tutte().subs(x=0, y=Y ** -2) * Y ** (2 * m.size - 2 * m.rk)
    return p.with_vars(("y",))


def p_zero_via_dual(m: Matroid) -> LaurentPolynomial:
    """The same polynomial read off the Gale dual: Q_{X(A^vee)}(y)."""
    return q_ih(m.dual(), var="y")


def verify_laplacian(m: Matroid, name: str = "matroid") -> CheckReport:
    rep = CheckReport(name)
    if m.loops():
        rep.notes.append("hypothesis violated: matroid has loops")
    if m.coloops():
        rep.notes.append("hypothesis violated: matroid has coloops")
    if m.size <= 12 and m.dim <= 8:
        rep.data["unimodular"] = str(m.is_unimodular()).lower()
        if not m.is_unimodular():
            rep.notes.append("representation is not totally unimodular")
    p = hypertoric_poincare(m)
    p_phi = hypertoric_poincare_via_phi(m)
    diff = p - p_phi
    rep.data["flat_sum"] = p.to_text()
    rep.data["via_phi"] = p_phi.to_text()
    rep.data["difference"] = diff.to_text()
    rep.checks["flat_sum == via_phi"] = diff.is_zero()

    t = m.tutte()
    at_y1 = p.subs(y=1)
    rep.checks["P(x,1) == T(x^2,1)"] = at_y1 == t.subs(x=X ** 2, y=1)
    h = h_independence_complex(m)
    hx = h.subs(t=X ** -2) * X ** (2 * m.rk)
    rep.checks["P(x,1) == x^(2rk) h(x^-2)"] = at_y1 == hx
    p0 = p_zero(m)
    rep.checks["P(0,y) == p_zero"] = p.subs(x=0) == p0
    rep.checks["p_zero == Q of Gale dual"] = p0 == p_zero_via_dual(m)
    rep.checks["P(0,1) == T(0,1)"] = p.evaluate({"x": 0, "y": 1}) == t.evaluate({"x": 0, "y": 1})
    rep.data["p_zero"] = p0.to_text()
    return rep
