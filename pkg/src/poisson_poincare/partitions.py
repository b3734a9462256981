"""Partitions, semistandard tableaux, charge and Kostka-Foulkes polynomials.

Two independent routes to K_{lambda mu}(t):

* :func:`kostka` sums t^charge over semistandard tableaux;
* :func:`kostka_oracle_hl` antisymmetrises the Hall-Littlewood polynomials
  P_mu(x; t) to get their Schur expansion and inverts that unitriangular
  matrix.  No tableau combinatorics is involved.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .laurent import LaurentPolynomial

HL_ORACLE_LIMIT = 8


class SizeMismatch(ValueError):
    pass


class ScaleExceeded(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """'3,1,1', '(1^4)', '2,1^3' all accepted."""
        text = text.strip().strip("()")
        if not text:
            return cls()
        parts: list[int] = []
        for tok in text.split(","):
            tok = tok.strip()
            if "^" in tok:
                a, k = tok.split("^")
                parts.extend([int(a)] * int(k))
            else:
                parts.append(int(tok))
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition([sum(1 for p in self if p > i) for i in range(self[0])])

    def n(self) -> int:
        return sum(i * p for i, p in enumerate(self))

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return ",".join(map(str, self))


def conjugate(lam: Sequence[int]) -> Partition:
    return Partition(lam).conjugate()


def n_stat(lam: Sequence[int]) -> int:
    """sum (i - 1) lambda_i, 1-based."""
    return Partition(lam).n()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    out: list[Partition] = []

    def rec(rem, maxp, acc):
        if rem == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rem, maxp), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(n, n, [])
    return tuple(out)


def _check_sizes(a, b):
    if sum(a) != sum(b):
        raise SizeMismatch(f"|{tuple(a)}| != |{tuple(b)}|")


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu <= lam in dominance order."""
    _check_sizes(mu, lam)
    return all(a <= b for a, b in zip(itertools.accumulate(_pad(mu, len(lam))),
                                       itertools.accumulate(_pad(lam, len(mu)))))


def _pad(p, k):
    p = list(p)
    return p + [0] * max(0, k - len(p))


def interval(mu: Sequence[int], lam: Sequence[int]) -> list[Partition]:
    """All nu with mu <= nu <= lam, in reverse lexicographic order."""
    _check_sizes(mu, lam)
    return [nu for nu in partitions_of(sum(lam))
            if dominance_leq(mu, nu) and dominance_leq(nu, lam)]


# -- tableaux -----------------------------------------------------------------

class Tableau(tuple):
    """Rows of a semistandard tableau (English notation, first row on top)."""

    def __new__(cls, rows):
        return super().__new__(cls, tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self)

    def content(self) -> Partition:
        counts: dict[int, int] = {}
        for r in self:
            for a in r:
                counts[a] = counts.get(a, 0) + 1
        m = max(counts, default=0)
        return Partition([counts.get(i, 0) for i in range(1, m + 1)])

    def is_semistandard(self) -> bool:
        for r in self:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self, self[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def reading_word(self) -> list[int]:
        """Rows from bottom to top, each read left to right."""
        return [a for r in reversed(self) for a in r]


def ssyt(lam: Sequence[int], mu: Sequence[int]) -> list[Tableau]:
    """Semistandard tableaux of shape lam and content mu.

    Built by placing the letters 1, 2, ... in turn as horizontal strips.
    """
    _check_sizes(lam, mu)
    lam = Partition(lam)
    mu = list(mu)
    out: list[Tableau] = []

    def strips(shape: list[int], k: int) -> Iterator[list[int]]:
        # horizontal strips of size k added to `shape`, staying inside lam
        rows = len(lam)
        shape = shape + [0] * (rows - len(shape))

        def rec(i, left, acc):
            if i == rows:
                if left == 0:
                    yield acc
                return
            cap = lam[i] if i == 0 else min(lam[i], shape[i - 1])
            for add in range(min(left, cap - shape[i]), -1, -1):
                yield from rec(i + 1, left - add, acc + [shape[i] + add])

        yield from rec(0, k, [])

    def rec(letter: int, shape: list[int], fill: list[list[int]]):
        if letter > len(mu):
            out.append(Tableau(r for r in fill if r))
            return
        for new in strips(shape, mu[letter - 1]):
            nf = [list(r) for r in fill] + [[] for _ in range(len(new) - len(fill))]
            for i, (a, b) in enumerate(zip(_pad(shape, len(new)), new)):
                nf[i].extend([letter] * (b - a))
            rec(letter + 1, new, nf)

    rec(1, [], [])
    return out


def _standard_subwords(word: list[int]) -> list[list[int]]:
    """Split a word of partition content into standard subwords.

    Scan leftwards (cyclically) from the right end: pick a 1, then a 2 to its
    left, and so on; the picked letters keep their relative positions.
    """
    remaining = list(enumerate(word))
    subwords = []
    while remaining:
        top = max(a for _, a in remaining)
        picked = []
        pos = len(remaining)  # start just past the right end
        for letter in range(1, top + 1):
            # first occurrence of `letter` to the left of pos, cyclically
            cand = [k for k in range(pos - 1, -1, -1) if remaining[k][1] == letter]
            if not cand:
                cand = [k for k in range(len(remaining) - 1, pos - 1, -1)
                        if remaining[k][1] == letter]
            if not cand:
                break
            pos = cand[0]
            picked.append(pos)
        chosen = sorted(picked)
        subwords.append([remaining[k][1] for k in chosen])
        remaining = [r for k, r in enumerate(remaining) if k not in set(chosen)]
    return subwords


def _charge_standard(word: list[int]) -> int:
    pos = {a: i for i, a in enumerate(word)}
    index = 0
    total = 0
    for r in range(2, len(word) + 1):
        if pos[r] > pos[r - 1]:
            index += 1
        total += index
    return total


def charge_word(word: Sequence[int]) -> int:
    return sum(_charge_standard(w) for w in _standard_subwords(list(word)))


def charge(t: Tableau) -> int:
    return charge_word(Tableau(t).reading_word())


def kostka(lam: Sequence[int], mu: Sequence[int]) -> LaurentPolynomial:
    """K_{lam mu}(t) = sum over SSYT(lam, mu) of t^charge."""
    return _kostka(Partition(lam), Partition(mu))


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> LaurentPolynomial:
    _check_sizes(lam, mu)
    counts: dict[int, int] = {}
    if dominance_leq(mu, lam):
        for tab in ssyt(lam, mu):
            c = charge(tab)
            counts[c] = counts.get(c, 0) + 1
    return LaurentPolynomial.from_univariate(counts, "t")


# -- Hall-Littlewood oracle ----------------------------------------------------

@lru_cache(maxsize=None)
def hl_schur_coefficient(mu: Partition, lam: Partition) -> LaurentPolynomial:
    """Coefficient of s_lam in P_mu(x_1..x_n; t), n = |mu|.

    v_mu(t) a_delta P_mu = sum_w sgn(w) w(x^mu prod_{i<j} (x_i - t x_j)), so the
    coefficient of s_lam is the alternating sum of the coefficients of
    x^{w(lam + delta)} in the symmetrand, divided by v_mu(t).
    """
    n = sum(mu)
    mu_full = tuple(mu) + (0,) * (n - len(mu))
    beta = [p + (n - 1 - i) for i, p in enumerate(tuple(lam) + (0,) * (n - len(lam)))]
    acc: dict[int, int] = {}
    for perm in _bounded_perms(beta, mu_full, n - 1):
        alpha = tuple(beta[k] - m for k, m in zip(perm, mu_full))
        c = _tournament_coeff(alpha)
        if not c:
            continue
        sign = _perm_sign(perm)
        for d, val in enumerate(c):
            if val:
                acc[d] = acc.get(d, 0) + sign * val
    p = LaurentPolynomial.from_univariate(acc, "t")
    if p.is_zero():
        return LaurentPolynomial({}, ("t",))
    return p.exact_div_univariate(_v_poly(mu, n), "t").with_vars(("t",))


@lru_cache(maxsize=None)
def _tournament_coeff(alpha: tuple[int, ...]) -> tuple[int, ...]:
    """Coefficient of x^alpha in prod_{i<j} (x_i - t x_j), listed by t-degree.

    Each factor picks one endpoint, so terms are tournaments with score vector
    alpha; a pair won by its larger index contributes -t.
    """
    m = len(alpha)
    if any(a < 0 or a > max(m - 1, 0) for a in alpha) or sum(alpha) != m * (m - 1) // 2:
        return ()
    if m <= 1:
        return (1,)
    a0, rest = alpha[0], alpha[1:]
    lost = m - 1 - a0
    acc: dict[int, int] = {}
    for beaten in combinations(range(m - 1), a0):
        nxt = list(rest)
        for j in set(range(m - 1)) - set(beaten):
            nxt[j] -= 1
        sub = _tournament_coeff(tuple(nxt))
        for d, c in enumerate(sub):
            if c:
                acc[d + lost] = acc.get(d + lost, 0) + (-1) ** lost * c
    if not acc:
        return ()
    top = max(acc)
    return tuple(acc.get(d, 0) for d in range(top + 1))


def _bounded_perms(beta, mu_full, maxdeg):
    """Permutations p with 0 <= beta[p[k]] - mu_full[k] <= maxdeg for all k."""
    n = len(beta)
    used = [False] * n
    perm: list[int] = []

    def rec(k):
        if k == n:
            yield tuple(perm)
            return
        for j in range(n):
            if not used[j] and 0 <= beta[j] - mu_full[k] <= maxdeg:
                used[j] = True
                perm.append(j)
                yield from rec(k + 1)
                perm.pop()
                used[j] = False

    yield from rec(0)


def _perm_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _v_poly(mu: Partition, n: int) -> LaurentPolynomial:
    """v_mu(t) = prod_i prod_{j=1..m_i} (1 - t^j)/(1 - t), m_0 = n - len(mu)."""
    t = LaurentPolynomial.var("t")
    mult: dict[int, int] = {0: n - len(mu)}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    v = LaurentPolynomial.constant(1, ("t",))
    for m in mult.values():
        for j in range(1, m + 1):
            v = v * sum((t ** k for k in range(j)), LaurentPolynomial.constant(0, ("t",)))
    return v


@lru_cache(maxsize=None)
def kostka_matrix_hl(n: int) -> dict[tuple[Partition, Partition], LaurentPolynomial]:
    """All K_{lam mu}(t) for |lam| = |mu| = n by inverting the full HL-to-Schur matrix."""
    if n > HL_ORACLE_LIMIT:
        raise ScaleExceeded(f"Hall-Littlewood oracle is limited to n <= {HL_ORACLE_LIMIT}")
    parts = partitions_of(n)
    inv = {(mu, lam): hl_schur_coefficient(mu, lam) for mu in parts for lam in parts}
    for mu in parts:
        if inv[mu, mu] != 1:
            raise ArithmeticError(f"P_{mu} is not unitriangular in the Schur basis")
    return {(lam, mu): k for lam in parts for mu, k in _solve_row(lam, parts, inv).items()}


def _solve_row(lam, nus, inv) -> dict[Partition, LaurentPolynomial]:
    """Row lam of K = inv^-1; ``nus`` is a reverse-lexicographic list of partitions.

    Reverse lexicographic order extends dominance, and inv[mu][nu] vanishes
    unless nu <= mu, so each entry only needs the ones computed before it.
    """
    row: dict[Partition, LaurentPolynomial] = {}
    for nu in nus:
        acc = LaurentPolynomial.constant(1 if nu == lam else 0, ("t",))
        for mu, k in row.items():
            c = inv[mu, nu] if isinstance(inv, dict) else inv(mu, nu)
            if not c.is_zero():
                acc = acc - k * c
        row[nu] = acc.with_vars(("t",))
    return row


def kostka_oracle_hl(lam: Sequence[int], mu: Sequence[int]) -> LaurentPolynomial:
    """K_{lam mu}(t) from the Hall-Littlewood side only.

    Both transition matrices are unitriangular for dominance order, so the
    entry is obtained by solving on the interval [mu, lam].
    """
    _check_sizes(lam, mu)
    n = sum(lam)
    if n > HL_ORACLE_LIMIT:
        raise ScaleExceeded(f"Hall-Littlewood oracle is limited to n <= {HL_ORACLE_LIMIT}")
    lam, mu = Partition(lam), Partition(mu)
    if not dominance_leq(mu, lam):
        return LaurentPolynomial({}, ("t",))
    nus = interval(mu, lam)
    return _solve_row(lam, nus, hl_schur_coefficient)[mu]
