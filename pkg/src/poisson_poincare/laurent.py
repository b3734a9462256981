"""Exact sparse Laurent polynomials in named variables.

A :class:`LaurentPolynomial` maps exponent vectors (one signed integer per
variable) to nonzero Python integers.  Values are immutable; every operation
returns a new polynomial.  Variable lists are extended by union whenever two
polynomials meet, so ``x + y`` just works.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class NegativeExponentComposition(ValueError):
    """Raised when a negative power of a variable is composed with a non-monomial."""


class DivisionByZero(ZeroDivisionError):
    pass


class NonPolynomialResult(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def _merge_vars(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    out = list(a)
    for v in b:
        if v not in out:
            out.append(v)
    return tuple(out)


class LaurentPolynomial:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None,
                 variables: Sequence[str] = ()):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match variables {self.vars}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables: Sequence[str] = ()) -> LaurentPolynomial:
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def var(cls, name: str) -> LaurentPolynomial:
        return cls({(1,): 1}, (name,))

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coef: int = 1) -> LaurentPolynomial:
        names = tuple(exps)
        return cls({tuple(exps[v] for v in names): coef}, names)

    @classmethod
    def from_univariate(cls, coeffs: Mapping[int, int], name: str) -> LaurentPolynomial:
        return cls({(e,): c for e, c in coeffs.items()}, (name,))

    # -- structure --------------------------------------------------------

    def with_vars(self, variables: Sequence[str]) -> LaurentPolynomial:
        """Re-express over ``variables`` (a superset of the used variables)."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        idx = []
        for v in variables:
            idx.append(self.vars.index(v) if v in self.vars else None)
        for i, v in enumerate(self.vars):
            if v not in variables and any(e[i] for e in self.terms):
                raise ValueError(f"variable {v!r} is in use and cannot be dropped")
        terms = {tuple(e[i] if i is not None else 0 for i in idx): c
                 for e, c in self.terms.items()}
        return LaurentPolynomial(terms, variables)

    def _align(self, other) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        other = _coerce(other)
        if self.vars == other.vars:
            return self, other
        vs = _merge_vars(self.vars, other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree_range(self, name: str) -> tuple[int, int] | None:
        """(min, max) exponent of ``name``; None for the zero polynomial."""
        if not self.terms:
            return None
        if name not in self.vars:
            return (0, 0)
        i = self.vars.index(name)
        es = [e[i] for e in self.terms]
        return min(es), max(es)

    def coefficient(self, exps: Mapping[str, int]) -> int:
        for v in exps:
            if v not in self.vars and exps[v]:
                return 0
        key = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(key, 0)

    def univariate(self, name: str) -> dict[int, int]:
        """Coefficients as ``{exponent: coef}``; fails if other variables occur."""
        others = [v for v in self.used_vars() if v != name]
        if others:
            raise ValueError(f"polynomial also involves {others}")
        if name not in self.vars:
            return {0: c for c in self.terms.values()}
        i = self.vars.index(name)
        return {e[i]: c for e, c in self.terms.items()}

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPolynomial(terms, a.vars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        a, b = self._align(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPolynomial(terms, a.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self.terms.values()))) != 1:
                raise ValueError("only invertible monomials have negative powers")
            (e, c), = self.terms.items()
            return LaurentPolynomial({tuple(-x * -k for x in e): c ** -k}, self.vars)
        result = LaurentPolynomial.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, exps: Mapping[str, int]) -> LaurentPolynomial:
        """Multiply by the monomial with exponents ``exps``."""
        return self * LaurentPolynomial.monomial(exps)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            a, b = self._align(other)
            return a.terms == b.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            used = self.used_vars()
            p = self.with_vars(sorted(used)) if used else LaurentPolynomial(
                {(): c for c in self.terms.values()}, ())
            self._hash = hash((p.vars, frozenset(p.terms.items())))
        return self._hash

    # -- composition ------------------------------------------------------

    def substitute(self, name: str, q) -> LaurentPolynomial:
        """Replace variable ``name`` by the Laurent polynomial ``q``."""
        q = _coerce(q)
        if name not in self.vars:
            return self
        i = self.vars.index(name)
        rest_vars = self.vars[:i] + self.vars[i + 1:]
        inverse = None
        if any(e[i] < 0 for e in self.terms):
            if not q.is_monomial() or abs(next(iter(q.terms.values()))) != 1:
                raise NegativeExponentComposition(
                    f"{name} occurs with a negative exponent and {q} is not an invertible monomial")
            inverse = q ** -1
        # group by the power of `name`
        groups: dict[int, dict[tuple[int, ...], int]] = {}
        for e, c in self.terms.items():
            groups.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        result = LaurentPolynomial({}, rest_vars)
        powers: dict[int, LaurentPolynomial] = {}
        for k in sorted(groups):
            if k not in powers:
                powers[k] = q ** k if k >= 0 else inverse ** -k
            result = result + LaurentPolynomial(groups[k], rest_vars) * powers[k]
        return result

    def subs(self, **mapping) -> LaurentPolynomial:
        """Simultaneous substitution ``p.subs(x=..., y=...)``."""
        # rename to fresh symbols first so substitutions do not interfere
        p = self
        fresh = {}
        for k, name in enumerate(mapping):
            if name in p.vars:
                tmp = f"__s{k}"
                p = p.rename(name, tmp)
                fresh[tmp] = mapping[name]
        for tmp, q in fresh.items():
            p = p.substitute(tmp, q)
        return p

    def rename(self, old: str, new: str) -> LaurentPolynomial:
        if old not in self.vars:
            return self
        if new in self.vars:
            return self.substitute(old, LaurentPolynomial.var(new))
        return LaurentPolynomial(self.terms, tuple(new if v == old else v for v in self.vars))

    def evaluate(self, point: Mapping[str, int | Fraction]):
        """Exact value at ``point``; returns a Fraction (or int).

        Variables not in ``point`` must not occur in the polynomial.
        """
        missing = [v for v in self.used_vars() if v not in point]
        if missing:
            raise ValueError(f"no value given for {missing}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                val = Fraction(point[v])
                if k < 0 and val == 0:
                    raise DivisionByZero(f"{v} = 0 in a negative power")
                term *= val ** k
            total += term
        return total.numerator if total.denominator == 1 else total

    # -- univariate division ---------------------------------------------

    def divmod_univariate(self, other: LaurentPolynomial, name: str):
        """Long division in one variable; both operands must be polynomials in ``name``."""
        num = self.univariate(name)
        den = _coerce(other).univariate(name)
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if min(num, default=0) < 0 or min(den) < 0:
            raise ValueError("divmod_univariate needs nonnegative exponents")
        dd = max(den)
        lead = den[dd]
        num = dict(num)
        quot: dict[int, Fraction] = {}
        while num and max(num) >= dd:
            top = max(num)
            c = Fraction(num[top]) / lead
            quot[top - dd] = c
            for e, dc in den.items():
                k = top - dd + e
                v = num.get(k, 0) - c * dc
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        if any(Fraction(c).denominator != 1 for c in quot.values()) or \
                any(Fraction(c).denominator != 1 for c in num.values()):
            raise NonPolynomialResult("quotient is not integral")
        q = LaurentPolynomial.from_univariate({e: int(c) for e, c in quot.items()}, name)
        r = LaurentPolynomial.from_univariate({e: int(c) for e, c in num.items()}, name)
        return q, r

    def exact_div_univariate(self, other, name: str) -> LaurentPolynomial:
        q, r = self.divmod_univariate(other, name)
        if not r.is_zero():
            raise NonPolynomialResult(f"{other} does not divide {self}")
        return q

    def div_int(self, d: int) -> LaurentPolynomial:
        if any(c % d for c in self.terms.values()):
            raise NonPolynomialResult(f"coefficients not divisible by {d}")
        return LaurentPolynomial({e: c // d for e, c in self.terms.items()}, self.vars)

    # -- serialisation ----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for v, k in zip(self.vars, e):
                if k == 1:
                    factors.append(v)
                elif k:
                    factors.append(f"{v}^{k}")
            mono = "*".join(factors)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        return {"vars": list(self.vars),
                "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict | str) -> LaurentPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(t["exp"]): int(t["coef"]) for t in data["terms"]}, data["vars"])

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """Inverse of :meth:`to_text` (terms like ``3*x^2*y^-1`` joined by + and -)."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        result = cls()
        for chunk in re.split(r"(?<!\^)(?=[+-])", s):
            if not chunk:
                continue
            coef = -1 if chunk[0] == "-" else 1
            body = chunk.lstrip("+-")
            exps: dict[str, int] = {}
            for factor in body.split("*"):
                if re.fullmatch(r"\d+", factor):
                    coef *= int(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z_]\w*)(?:\^(-?\d+))?", factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                exps[m.group(1)] = exps.get(m.group(1), 0) + int(m.group(2) or 1)
            result = result + cls.monomial(exps, coef)
        return result


def _coerce(p) -> LaurentPolynomial:
    if isinstance(p, LaurentPolynomial):
        return p
    if isinstance(p, int):
        return LaurentPolynomial.constant(p)
    raise TypeError(f"cannot use {type(p).__name__} as a Laurent polynomial")


def arithmetic(a, b, op: str) -> LaurentPolynomial:
    if op == "add":
        return _coerce(a) + b
    if op == "sub":
        return _coerce(a) - b
    if op == "mul":
        return _coerce(a) * b
    raise ValueError(f"unknown op {op!r}")


def substitute(p: LaurentPolynomial, name: str, q) -> LaurentPolynomial:
    return p.substitute(name, q)


def evaluate(p: LaurentPolynomial, point):
    return p.evaluate(point)


def symbols(names: str) -> tuple[LaurentPolynomial, ...]:
    return tuple(LaurentPolynomial.var(n) for n in names.replace(",", " ").split())


def psum(items: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    total = LaurentPolynomial()
    for p in items:
        total = total + p
    return total


class RationalFunction:
    """Quotient of two Laurent polynomials, compared by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = _coerce(num)
        self.den = den

    def __add__(self, other):
        other = _rf(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_rf(other))

    def __mul__(self, other):
        other = _rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPolynomial, RationalFunction)):
            other = _rf(other)
            return self.num * other.den == other.num * self.den
        return NotImplemented

    __hash__ = None

    def to_polynomial(self, name: str) -> LaurentPolynomial:
        """Exact quotient for a univariate function; raises NonPolynomialResult otherwise."""
        num, den = self.num, self.den
        # clear negative powers so long division applies
        lo_n = num.degree_range(name)
        lo_d = den.degree_range(name)
        shift = 0
        if lo_n and lo_n[0] < 0:
            num = num.scale({name: -lo_n[0]})
            shift += lo_n[0]
        if lo_d and lo_d[0] < 0:
            den = den.scale({name: -lo_d[0]})
            shift -= lo_d[0]
        q = num.exact_div_univariate(den, name)
        return q.scale({name: shift}) if shift else q

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


def _rf(p) -> RationalFunction:
    return p if isinstance(p, RationalFunction) else RationalFunction(p)
