"""Matroids represented by integer matrices.

Columns are the ground set (normal vectors of a central arrangement).
Ranks are computed by exact Gaussian elimination over the rationals and
memoised per column subset, encoded as a bitmask.
"""

from __future__ import annotations

import itertools
import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import LaurentPolynomial

EXHAUSTIVE_LIMIT = 20


class LoopPresent(ValueError):
    pass


class NotAFlat(ValueError):
    pass


def _rank_of_vectors(vectors: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination (integer entries stay integers)."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        pc = p[c]
        for r in range(rank + 1, len(rows)):
            rc = rows[r][c]
            if rc:
                rows[r] = [a * pc - rc * b for a, b in zip(rows[r], p)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    rows = [[Fraction(a) for a in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [a / lead for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _exact(a):
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else a


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def _integral_column(col: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for a in col:
        den = _lcm(den, Fraction(a).denominator)
    return tuple(int(Fraction(a) * den) for a in col)


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class Flat:
    elements: frozenset
    rank: int

    def __len__(self):
        return len(self.elements)

    def sort_key(self):
        return (self.rank, sorted(self.elements))


class Matroid:
    """Matroid of the columns of an integer (or rational) matrix.

    ``columns`` is a list of column vectors, all of the same length.  Use
    :func:`from_matrix` for user input; the constructor itself tolerates
    loops so that duals and intermediate minors can be represented.
    """

    def __init__(self, columns: Sequence[Sequence[int]], labels: Sequence | None = None,
                 dim: int | None = None):
        self.columns = tuple(tuple(_exact(a) for a in c) for c in columns)
        if dim is None:
            dim = len(self.columns[0]) if self.columns else 0
        self.dim = dim
        if any(len(c) != dim for c in self.columns):
            raise ValueError("columns have inconsistent lengths")
        self.labels = tuple(labels) if labels is not None else tuple(range(len(self.columns)))
        if len(self.labels) != len(self.columns):
            raise ValueError("one label per column required")
        self._rank_cache: dict[int, int] = {0: 0}
        self._lock = threading.Lock()
        self._tutte = None

    # -- basics -------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.columns)

    @property
    def ground(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def matrix(self) -> list[list[Fraction]]:
        """Row-major representation (``dim`` rows, one column per element)."""
        return [[c[i] for c in self.columns] for i in range(self.dim)]

    def _rank_mask(self, mask: int) -> int:
        r = self._rank_cache.get(mask)
        if r is None:
            r = _rank_of_vectors([self.columns[i] for i in _bits(mask)])
            with self._lock:
                self._rank_cache[mask] = r
        return r

    def rank(self, subset: Iterable[int] | None = None) -> int:
        if subset is None:
            return self._rank_mask(self.full_mask)
        return self._rank_mask(_mask(subset))

    @property
    def rk(self) -> int:
        return self.rank()

    def loops(self) -> frozenset:
        return frozenset(i for i in self.ground if self._rank_mask(1 << i) == 0)

    def coloops(self) -> frozenset:
        full = self.rk
        return frozenset(i for i in self.ground
                         if self._rank_mask(self.full_mask & ~(1 << i)) < full)

    def is_coloop_free(self) -> bool:
        return not self.coloops()

    def closure(self, subset: Iterable[int]) -> frozenset:
        m = _mask(subset)
        r = self._rank_mask(m)
        return frozenset(i for i in self.ground
                         if m >> i & 1 or self._rank_mask(m | 1 << i) == r)

    def is_flat(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return self.closure(s) == s

    def flats(self) -> list[Flat]:
        """All flats, grown rank by rank from the closure of the empty set."""
        level = {self.closure(())}
        found = set(level)
        while level:
            nxt = set()
            for f in level:
                for e in self.ground:
                    if e not in f:
                        g = self.closure(f | {e})
                        if g not in found:
                            found.add(g)
                            nxt.add(g)
            level = nxt
        out = [Flat(f, self.rank(f)) for f in found]
        out.sort(key=Flat.sort_key)
        return out

    def same_rank_function(self, other: Matroid) -> bool:
        if self.size != other.size:
            return False
        return all(self._rank_mask(m) == other._rank_mask(m) for m in range(1 << self.size))

    def __repr__(self):
        return f"Matroid(size={self.size}, rank={self.rk})"

    # -- minors -------------------------------------------------------------

    def restriction(self, subset: Iterable[int]) -> Matroid:
        idx = sorted(set(subset))
        return Matroid([self.columns[i] for i in idx], [self.labels[i] for i in idx], self.dim)

    def deletion(self, e: int) -> Matroid:
        return self.restriction(i for i in self.ground if i != e)

    def contraction(self, subset: Iterable[int]) -> Matroid:
        """Contract ``subset``: project the other columns modulo its span.

        Row reduction with the subset's columns placed first picks a basis of
        the column space extending a basis of span(subset); each remaining
        column is written in that basis, the subset's coordinates are dropped
        and the column is rescaled to integers.
        """
        s = sorted(set(subset))
        rest = [i for i in self.ground if i not in set(s)]
        order = s + rest
        red, piv = rref([[self.columns[j][r] for j in order] for r in range(self.dim)])
        k = sum(1 for p in piv if p < len(s))
        cols = [_integral_column([row[len(s) + t] for row in red[k:]])
                for t in range(len(rest))]
        return Matroid(cols, [self.labels[i] for i in rest], len(piv) - k)

    def localize(self, flat: Iterable[int]) -> Matroid:
        f = frozenset(flat)
        if not self.is_flat(f):
            raise NotAFlat(sorted(f))
        return self.restriction(f)

    def restrict_flat(self, flat: Iterable[int]) -> Matroid:
        f = frozenset(flat)
        if not self.is_flat(f):
            raise NotAFlat(sorted(f))
        return self.contraction(f)

    def dual(self) -> Matroid:
        """Gale dual: rows of an integer kernel basis of the representation.

        With the representation reduced to ``[I | A]`` on a basis B, the dual
        is represented by ``[-A^T | I]`` (rows scaled to integers).
        """
        n = self.size
        red, piv = rref(self.matrix())
        r = len(piv)
        nonpiv = [j for j in range(n) if j not in piv]
        rows = []
        for j in nonpiv:
            v = [Fraction(0)] * n
            v[j] = Fraction(1)
            for row, p in zip(red, piv):
                v[p] = -row[j]
            rows.append(_integral_column(v))
        cols = [tuple(rows[k][i] for k in range(len(rows))) for i in range(n)]
        return Matroid(cols, self.labels, n - r)

    # -- unimodularity --------------------------------------------------------

    def is_unimodular(self) -> bool:
        """Total unimodularity of the stored integer representation.

        Exhaustive over all square submatrices; intended for small inputs.
        """
        m = self.matrix()
        if any(a.denominator != 1 for row in m for a in row):
            return False
        m = [[int(a) for a in row] for row in m]
        if any(abs(a) > 1 for row in m for a in row):
            return False
        rows, cols = len(m), self.size
        for k in range(2, min(rows, cols) + 1):
            for rs in itertools.combinations(range(rows), k):
                for cs in itertools.combinations(range(cols), k):
                    if abs(determinant([[m[i][j] for j in cs] for i in rs])) > 1:
                        return False
        return True

    # -- Tutte ------------------------------------------------------------------

    def tutte(self, method: str = "auto") -> LaurentPolynomial:
        if method == "auto":
            if self._tutte is None:
                self._tutte = (tutte_corank_nullity(self) if self.size <= EXHAUSTIVE_LIMIT
                               else tutte_deletion_contraction(self))
            return self._tutte
        if method == "subsets":
            return tutte_corank_nullity(self)
        if method == "deletion-contraction":
            return tutte_deletion_contraction(self)
        raise ValueError(f"unknown method {method!r}")

    def char_poly(self) -> LaurentPolynomial:
        return char_poly(self)

    def h_broken_circuit(self) -> LaurentPolynomial:
        return h_broken_circuit(self)


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _mask(subset: Iterable[int]) -> int:
    m = 0
    for i in subset:
        m |= 1 << i
    return m


def from_matrix(matrix: Sequence[Sequence[int]], labels: Sequence | None = None) -> Matroid:
    """Build the matroid of the columns of ``matrix`` (a list of rows)."""
    rows = [list(r) for r in matrix]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    ncols = len(rows[0]) if rows else 0
    cols = [tuple(r[j] for r in rows) for j in range(ncols)]
    for j, c in enumerate(cols):
        if all(a == 0 for a in c):
            raise LoopPresent(f"column {j} is zero")
    return Matroid(cols, labels, len(rows))


def from_json(text: str) -> Matroid:
    data = json.loads(text)
    return from_matrix(data["matrix"], data.get("labels"))


def from_csv(text: str) -> Matroid:
    rows = [[int(a) for a in line.split(",")] for line in text.splitlines() if line.strip()]
    return from_matrix(rows)


def empty_matroid() -> Matroid:
    return Matroid([], [], 0)


# -- Tutte polynomial -----------------------------------------------------------

_X = LaurentPolynomial.var("x")
_Y = LaurentPolynomial.var("y")


def _xy(a: int, b: int) -> LaurentPolynomial:
    return LaurentPolynomial({(a, b): 1}, ("x", "y"))


def tutte_corank_nullity(m: Matroid) -> LaurentPolynomial:
    """Sum over all subsets S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))."""
    if m.size > EXHAUSTIVE_LIMIT:
        raise ValueError(f"subset expansion is capped at {EXHAUSTIVE_LIMIT} elements")
    rk = m.rk
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << m.size):
        r = m._rank_mask(mask)
        key = (rk - r, bin(mask).count("1") - r)
        counts[key] = counts.get(key, 0) + 1
    xm1 = _X - 1
    ym1 = _Y - 1
    total = LaurentPolynomial({}, ("x", "y"))
    for (a, b), c in counts.items():
        total = total + c * (xm1 ** a) * (ym1 ** b)
    return total.with_vars(("x", "y"))


def _canonical_key(columns: Sequence[Sequence[Fraction]]) -> tuple:
    if not columns:
        return ()
    rows = [[c[i] for c in columns] for i in range(len(columns[0]))]
    red, _ = rref(rows)
    cols = [tuple(row[j] for row in red) for j in range(len(columns))]
    return tuple(sorted(cols))


def tutte_deletion_contraction(m: Matroid) -> LaurentPolynomial:
    """Deletion-contraction, memoised on the sorted columns of the RREF."""
    memo: dict[tuple, LaurentPolynomial] = {}

    def rec(mat: Matroid) -> LaurentPolynomial:
        if mat.size == 0:
            return LaurentPolynomial.constant(1, ("x", "y"))
        key = (mat.size, _canonical_key(mat.columns))
        hit = memo.get(key)
        if hit is not None:
            return hit
        e = mat.size - 1
        if mat._rank_mask(1 << e) == 0:
            res = _Y * rec(mat.deletion(e))
        elif e in mat.coloops():
            res = _X * rec(mat.contraction([e]))
        else:
            res = rec(mat.deletion(e)) + rec(mat.contraction([e]))
        res = res.with_vars(("x", "y"))
        memo[key] = res
        return res

    return rec(m)


def tutte(m: Matroid) -> LaurentPolynomial:
    return m.tutte()


def char_poly(m: Matroid) -> LaurentPolynomial:
    """(-1)^rk T(1 - x, 0), as a polynomial in x."""
    t = m.tutte().subs(x=1 - _X, y=0)
    return (t if m.rk % 2 == 0 else -t).with_vars(("x",))


def h_broken_circuit(m: Matroid) -> LaurentPolynomial:
    """t^rk T(1/t, 0)."""
    tv = LaurentPolynomial.var("t")
    p = m.tutte().subs(x=tv ** -1, y=0).scale({"t": m.rk})
    return p.with_vars(("t",))


def h_polynomial(m: Matroid) -> LaurentPolynomial:
    """h-polynomial of the independence complex, t^rk T(1/t, 1)."""
    tv = LaurentPolynomial.var("t")
    p = m.tutte().subs(x=tv ** -1, y=1).scale({"t": m.rk})
    return p.with_vars(("t",))


def h_independence_complex(m: Matroid) -> LaurentPolynomial:
    """Same polynomial from the f-vector of independent sets."""
    r = m.rk
    f = [0] * (r + 1)
    for mask in range(1 << m.size):
        k = bin(mask).count("1")
        if k <= r and m._rank_mask(mask) == k:
            f[k] += 1
    tv = LaurentPolynomial.var("t")
    h = LaurentPolynomial({}, ("t",))
    for i, fi in enumerate(f):
        h = h + fi * tv ** i * (1 - tv) ** (r - i)
    return h.with_vars(("t",))


def circuits(m: Matroid) -> list[frozenset]:
    """Minimal dependent sets, by brute force over subsets."""
    out = []
    for k in range(1, m.rk + 2):
        for s in itertools.combinations(m.ground, k):
            fs = frozenset(s)
            if m.rank(fs) == k - 1 and not any(c < fs for c in out):
                out.append(fs)
    return out


def h_broken_circuit_complex(m: Matroid, order: Sequence[int] | None = None) -> LaurentPolynomial:
    """h-polynomial of the broken-circuit complex for a ground-set order.

    Faces are independent sets containing no circuit minus its least element;
    h(t) = sum_i f_i t^i (1 - t)^(r - i).
    """
    if order is None:
        order = list(m.ground)
    pos = {e: i for i, e in enumerate(order)}
    broken = [c - {min(c, key=pos.__getitem__)} for c in circuits(m)]
    r = m.rk
    f = [0] * (r + 1)
    for k in range(r + 1):
        for s in itertools.combinations(m.ground, k):
            fs = frozenset(s)
            if m.rank(fs) == k and not any(b <= fs for b in broken):
                f[k] += 1
    tv = LaurentPolynomial.var("t")
    h = LaurentPolynomial({}, ("t",))
    for i, fi in enumerate(f):
        h = h + fi * tv ** i * (1 - tv) ** (r - i)
    return h.with_vars(("t",))


# -- corpora ---------------------------------------------------------------------

def graphic(edges: Sequence[tuple[int, int]], labels: Sequence | None = None) -> Matroid:
    """Graphic matroid via the oriented vertex-edge incidence matrix (totally unimodular)."""
    verts = sorted({v for e in edges for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    rows = [[0] * len(edges) for _ in verts]
    for j, (u, v) in enumerate(edges):
        if u == v:
            raise LoopPresent(f"edge {j} is a graph loop")
        rows[idx[u]][j] = 1
        rows[idx[v]][j] = -1
    cols = [tuple(r[j] for r in rows) for j in range(len(edges))]
    return Matroid(cols, labels, len(rows))


def complete_graph(n: int) -> Matroid:
    return graphic(list(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Matroid:
    return graphic([(i, (i + 1) % n) for i in range(n)])
