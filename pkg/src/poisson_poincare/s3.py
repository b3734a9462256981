"""Type A S3-varieties X_{lambda mu}: the slice to O_mu inside the closure of O_lambda.

The slice polynomial P(0, y) below relies on an unproved statement about
symplectic duals, so ``s3_p_zero`` and ``s3_poincare`` are reported with
status "conditional".
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPolynomial, psum
from .partitions import Partition, dominance_leq, interval, kostka

X = LaurentPolynomial.var("x")
Y = LaurentPolynomial.var("y")

STATUS = "conditional"
MAX_SIZE = 12


class NotDominated(ValueError):
    pass


@dataclass(frozen=True)
class S3Variety:
    lam: Partition
    mu: Partition

    def __init__(self, lam, mu):
        lam, mu = Partition(lam), Partition(mu)
        if not dominance_leq(mu, lam):
            raise NotDominated(f"{mu} is not dominated by {lam}")
        if lam.size > MAX_SIZE:
            raise ValueError(f"partitions of size > {MAX_SIZE} are not supported")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def r(self) -> int:
        return self.lam.size

    @property
    def dim(self) -> int:
        return 2 * (self.mu.n() - self.lam.n())


def s3_ih_poly(v: S3Variety) -> LaurentPolynomial:
    """Q(x) = x^(2(n_mu - n_lam)) K_{lam mu}(x^-2)."""
    k = kostka(v.lam, v.mu)
    return (k.subs(t=X ** -2) * X ** v.dim).with_vars(("x",))


def s3_p_zero(v: S3Variety) -> LaurentPolynomial:
    """P(0, y) = y^(2(n_lam^t - n_mu^t)) K_{mu^t lam^t}(y^-2)."""
    lt, mt = v.lam.conjugate(), v.mu.conjugate()
    k = kostka(mt, lt)
    return (k.subs(t=Y ** -2) * Y ** (2 * (lt.n() - mt.n()))).with_vars(("y",))


def s3_poincare(v: S3Variety) -> LaurentPolynomial:
    """y^(2(n_lam^t - n_mu)) sum_{mu <= nu <= lam} y^(2(n_nu - n_nu^t)) K_{nu mu}(x^2) K_{nu^t lam^t}(y^-2)."""
    lt = v.lam.conjugate()
    terms = []
    for nu in interval(v.mu, v.lam):
        nt = nu.conjugate()
        leaf = kostka(nu, v.mu).subs(t=X ** 2)
        slice_ = kostka(nt, lt).subs(t=Y ** -2)
        terms.append(Y ** (2 * (nu.n() - nt.n())) * leaf * slice_)
    return (psum(terms) * Y ** (2 * (lt.n() - v.mu.n()))).with_vars(("x", "y"))
