"""Weyl groups of types A_n (n <= 5), B2 and G2 as integer matrix groups.

Elements act on the reflection representation h in the basis of simple
roots, so every matrix is integral.  Graded multiplicities of irreducible
characters in the coinvariant algebra come from the Molien-type formula

    m_chi(q) = prod_i (1 - q^d_i) * |W|^-1 * sum_w chi(w) / det(1 - q w),

with h^* in degree 1.  The generalized Kostka polynomial of chi is
m_{chi (x) sigma}(t) with sigma the sign character.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod

from .laurent import LaurentPolynomial, NonPolynomialResult, RationalFunction
from .partitions import Partition, partitions_of

MAX_A_RANK = 5


class UnsupportedType(ValueError):
    pass


Matrix = tuple[tuple[int, ...], ...]


def cartan_matrix(cartan_type: str, rank: int) -> list[list[int]]:
    """Cartan matrix A[i][j] = <alpha_i^vee, alpha_j>.

    B2 lists the long simple root first, G2 the short one.
    """
    if cartan_type == "A":
        return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank)]
                for i in range(rank)]
    if cartan_type == "B" and rank == 2:
        return [[2, -1], [-2, 2]]
    if cartan_type == "G" and rank == 2:
        return [[2, -3], [-1, 2]]
    raise UnsupportedType(f"{cartan_type}{rank}")


def parse_type(text: str) -> tuple[str, int]:
    """'A3', 'B2', 'G2' (case-insensitive, optional underscore)."""
    t = text.strip().upper().replace("_", "")
    if len(t) < 2 or t[0] not in "ABG" or not t[1:].isdigit():
        raise UnsupportedType(text)
    kind, rank = t[0], int(t[1:])
    if kind == "A" and not 1 <= rank <= MAX_A_RANK:
        raise UnsupportedType(f"A{rank}: only ranks 1..{MAX_A_RANK} are supported")
    if kind in "BG" and rank != 2:
        raise UnsupportedType(f"{kind}{rank}")
    return kind, rank


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def char_poly(m: Matrix) -> list[Fraction]:
    """Coefficients c_0..c_n of det(lambda I - m) (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        am = [[sum(m[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        mk = [[am[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)]
              for i in range(n)]
        amk = [[sum(m[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(amk[i][i] for i in range(n)) / k
    return coeffs


def det_one_minus_qw(m: Matrix) -> LaurentPolynomial:
    """det(1 - q w) = q^n p(1/q) for p the characteristic polynomial."""
    c = char_poly(m)
    n = len(m)
    return LaurentPolynomial.from_univariate({n - k: int(v) for k, v in enumerate(c)}, "q")


@dataclass
class ConjugacyClass:
    label: str
    representative: Matrix
    size: int


@dataclass(eq=False)
class WeylGroup:
    cartan_type: str
    rank: int
    generators: list[Matrix]
    elements: list[Matrix]
    words: dict[Matrix, tuple[int, ...]]
    degrees: tuple[int, ...]
    perms: dict[Matrix, tuple[int, ...]] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def num_reflections(self) -> int:
        return sum(d - 1 for d in self.degrees)

    def reflections(self) -> list[Matrix]:
        # order two with a single -1 eigenvalue
        one = _identity(self.rank)
        return [w for w in self.elements
                if w != one and _matmul(w, w) == one and _trace(w) == self.rank - 2]


def _trace(m: Matrix) -> int:
    return sum(m[i][i] for i in range(len(m)))


def _degrees(kind: str, rank: int) -> tuple[int, ...]:
    if kind == "A":
        return tuple(range(2, rank + 2))
    if kind == "B":
        return (2, 4)
    return (2, 6)


@lru_cache(maxsize=None)
def build_weyl(cartan_type: str, rank: int | None = None) -> WeylGroup:
    """Closure of the simple reflections under multiplication (breadth first)."""
    if rank is None:
        cartan_type, rank = parse_type(cartan_type)
    else:
        cartan_type, rank = parse_type(f"{cartan_type}{rank}")
    a = cartan_matrix(cartan_type, rank)
    gens = []
    for i in range(rank):
        rows = [list(r) for r in _identity(rank)]
        for j in range(rank):
            rows[i][j] -= a[i][j]
        gens.append(tuple(tuple(r) for r in rows))
    one = _identity(rank)
    for g in gens:
        assert _matmul(g, g) == one
    words = {one: ()}
    perms = {}
    if cartan_type == "A":
        perms[one] = tuple(range(rank + 1))
    queue = deque([one])
    while queue:
        w = queue.popleft()
        for i, g in enumerate(gens):
            v = _matmul(w, g)
            if v not in words:
                words[v] = words[w] + (i,)
                if cartan_type == "A":
                    p = list(perms[w])
                    # right multiplication by s_i swaps positions i, i+1
                    p[i], p[i + 1] = p[i + 1], p[i]
                    perms[v] = tuple(p)
                queue.append(v)
    degrees = _degrees(cartan_type, rank)
    elements = list(words)
    if len(elements) != prod(degrees):
        raise ArithmeticError(f"|W| = {len(elements)} but prod of degrees is {prod(degrees)}")
    return WeylGroup(cartan_type, rank, gens, elements, words, degrees, perms)


# -- characters -------------------------------------------------------------------

def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            j, k = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            lengths.append(k)
    return Partition(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def mn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama rule on beta-sets."""
    if not rho:
        return 1 if not lam else 0
    k = rho[0]
    rest = Partition(rho[1:])
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        # sign from the number of beads jumped over (= leg length of the rim hook)
        height = sum(1 for c in beta if nb < c < b)
        new = sorted((nb if c == b else c for c in beta), reverse=True)
        m = len(new)
        parts = Partition(v - (m - 1 - i) for i, v in enumerate(new))
        total += (-1) ** height * mn_character(parts, rest)
    return total


@dataclass
class CharacterTable:
    group: WeylGroup
    classes: list[ConjugacyClass]
    labels: list[str]
    values: dict[str, list[int]]
    class_of: dict[Matrix, int]

    def dim(self, label: str) -> int:
        return self.values[self.label(label)][self._identity_class()]

    def _identity_class(self) -> int:
        return self.class_of[_identity(self.group.rank)]

    def label(self, label: str) -> str:
        key = normalize_label(self.group, label)
        if key not in self.values:
            raise KeyError(f"{label!r} is not an irreducible of {self.group.name}; "
                           f"choose from {self.labels}")
        return key

    def inner(self, a: list[int], b: list[int]) -> Fraction:
        return Fraction(sum(c.size * x * y for c, x, y in zip(self.classes, a, b)),
                        self.group.order)

    def tensor(self, a: str, b: str) -> list[int]:
        va, vb = self.values[self.label(a)], self.values[self.label(b)]
        return [x * y for x, y in zip(va, vb)]

    def identify(self, values: list[int]) -> str:
        for lab in self.labels:
            if self.values[lab] == values:
                return lab
        raise KeyError("class function is not an irreducible character")


_ALIASES = {
    "1": "triv", "trivial": "triv", "triv": "triv",
    "sign": "sigma", "sigma": "sigma", "σ": "sigma",
    "tau": "tau", "τ": "tau",
    "tau_sigma": "tau_sigma", "tau*sigma": "tau_sigma", "tau⊗sigma": "tau_sigma",
    "τ⊗σ": "tau_sigma", "tau(x)sigma": "tau_sigma", "tausigma": "tau_sigma",
    "h": "h", "refl": "h", "reflection": "h",
    "h_tau": "h_tau", "h*tau": "h_tau", "h⊗tau": "h_tau", "h⊗τ": "h_tau", "htau": "h_tau",
    "h(x)tau": "h_tau",
}


def normalize_label(w: WeylGroup, label: str) -> str:
    s = str(label).strip()
    if w.cartan_type == "A":
        r = w.rank + 1
        named = {"triv": [r], "trivial": [r], "sigma": [1] * r, "sign": [1] * r,
                 "σ": [1] * r, "h": [r - 1, 1], "refl": [r - 1, 1], "reflection": [r - 1, 1]}
        if s.lower() in named:
            return str(Partition(named[s.lower()]))
        return str(Partition.parse(s))
    return _ALIASES.get(s.lower(), _ALIASES.get(s, s))


@lru_cache(maxsize=None)
def character_table(w: WeylGroup) -> CharacterTable:
    if w.cartan_type == "A":
        return _table_type_a(w)
    return _table_dihedral(w)


def _table_type_a(w: WeylGroup) -> CharacterTable:
    r = w.rank + 1
    by_type: dict[Partition, list[Matrix]] = {}
    for g in w.elements:
        by_type.setdefault(cycle_type(w.perms[g]), []).append(g)
    rhos = [p for p in partitions_of(r) if p in by_type]
    classes = [ConjugacyClass(str(rho), by_type[rho][0], len(by_type[rho])) for rho in rhos]
    class_of = {g: i for i, rho in enumerate(rhos) for g in by_type[rho]}
    labels = [str(lam) for lam in partitions_of(r)]
    values = {str(lam): [mn_character(lam, rho) for rho in rhos] for lam in partitions_of(r)}
    return CharacterTable(w, classes, labels, values, class_of)


def _table_dihedral(w: WeylGroup) -> CharacterTable:
    # conjugacy classes by brute force
    inverse = {g: next(h for h in w.elements if _matmul(g, h) == _identity(w.rank))
               for g in w.elements}
    class_of: dict[Matrix, int] = {}
    classes: list[ConjugacyClass] = []
    for g in w.elements:
        if g in class_of:
            continue
        orbit = {_matmul(_matmul(h, g), inverse[h]) for h in w.elements}
        idx = len(classes)
        for c in orbit:
            class_of[c] = idx
        classes.append(ConjugacyClass(f"c{idx}", g, len(orbit)))
    reps = [c.representative for c in classes]

    def linear(signs: tuple[int, int]) -> list[int]:
        # one-dimensional character given by its values on s_1, s_2
        return [prod(signs[i] for i in w.words[g]) for g in reps]

    long_first = w.cartan_type == "B"  # B2: s_1 long; G2: s_1 short
    tau_signs = (-1, 1) if long_first else (1, -1)
    values = {
        "triv": [1] * len(reps),
        "sigma": linear((-1, -1)),
        "tau": linear(tau_signs),
        "tau_sigma": linear((-tau_signs[0], -tau_signs[1])),
        "h": [_trace(g) for g in reps],
    }
    labels = ["triv", "sigma", "tau", "tau_sigma", "h"]
    if w.cartan_type == "G":
        values["h_tau"] = [a * b for a, b in zip(values["h"], values["tau"])]
        labels.append("h_tau")
    for c, g in enumerate(reps):
        classes[c].label = ",".join(map(str, w.words[g])) or "e"
    return CharacterTable(w, classes, labels, values, class_of)


# -- coinvariant algebra ------------------------------------------------------------

def _class_dets(w: WeylGroup) -> list[LaurentPolynomial]:
    table = character_table(w)
    return [det_one_minus_qw(c.representative) for c in table.classes]


def molien_multiplicity(w: WeylGroup, values: list[int], var: str = "q") -> LaurentPolynomial:
    """Graded multiplicity of a class function in C[h]/(C[h]^W_+)."""
    table = character_table(w)
    q = LaurentPolynomial.var("q")
    top = LaurentPolynomial.constant(1, ("q",))
    for d in w.degrees:
        top = top * (1 - q ** d)
    total = RationalFunction(0)
    for cls, val, det in zip(table.classes, values, _class_dets(w)):
        if val:
            total = total + RationalFunction(top * (cls.size * val), det)
    if total.num.is_zero():
        return LaurentPolynomial({}, (var,))
    poly = total.to_polynomial("q").div_int(w.order)
    lo = poly.degree_range("q")
    if lo and lo[0] < 0:
        raise NonPolynomialResult(f"negative degree in multiplicity {poly}")
    return poly.rename("q", var).with_vars((var,))


def coinvariant_multiplicity(w: WeylGroup, chi: str) -> LaurentPolynomial:
    table = character_table(w)
    return molien_multiplicity(w, table.values[table.label(chi)])


def generalized_kostka(w: WeylGroup, chi: str) -> LaurentPolynomial:
    """K_{g,chi}(t) = graded multiplicity of chi (x) sigma, h^* in degree 1."""
    table = character_table(w)
    vals = table.tensor(chi, "sigma")
    return molien_multiplicity(w, vals, var="t")


def flag_poincare(w: WeylGroup) -> LaurentPolynomial:
    """prod_i (1 + t + ... + t^(d_i - 1))."""
    t = LaurentPolynomial.var("t")
    p = LaurentPolynomial.constant(1, ("t",))
    for d in w.degrees:
        p = p * sum((t ** k for k in range(d)), LaurentPolynomial({}, ("t",)))
    return p.with_vars(("t",))


def orthogonality_defects(table: CharacterTable) -> list[tuple[str, str, Fraction]]:
    """Pairs of irreducibles whose inner product is not the Kronecker delta."""
    bad = []
    for a in table.labels:
        for b in table.labels:
            ip = table.inner(table.values[a], table.values[b])
            if ip != (1 if a == b else 0):
                bad.append((a, b, ip))
    return bad
