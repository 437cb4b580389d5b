"""Exact arithmetic in the matrix Lie algebras so(n), gl(n) and su(n).

Elements are rational linear combinations of a fixed canonical basis built
from the matrix units E_ij: the skew-symmetric pairs B_ij = E_ij - E_ji,
the imaginary symmetric pairs C_ij = i(E_ij + E_ji), and the imaginary
diagonal differences D_ij = i(E_ii - E_jj).  Every coefficient is a
`fractions.Fraction`, so span and rank decisions never touch floating
point.

Brackets are computed twice over: once from the structure constants of the
basis, and once by multiplying exact complex-rational matrices.  The two
routes are kept deliberately independent so that each can check the other.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import EmptyGenerators, KindMismatch, MembershipError

Q = Fraction
_Q0 = Fraction(0)
_Q1 = Fraction(1)


class Family(Enum):
    SO = "so"
    GL = "gl"
    SU = "su"


# basis tags admitted by each family
_ADMITTED = {Family.SO: "B", Family.GL: "E", Family.SU: "BCD"}


@dataclass(frozen=True)
class AlgebraKind:
    """One of the three supported algebras at a fixed size n."""

    family: Family
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"algebra size must be at least 2, got {self.n}")

    @property
    def dimension(self) -> int:
        n = self.n
        if self.family is Family.SO:
            return n * (n - 1) // 2
        if self.family is Family.GL:
            return n * n
        return n * n - 1

    def admits(self, tag: str) -> bool:
        return tag in _ADMITTED[self.family]

    def __str__(self) -> str:
        return f"{self.family.value}({self.n})"


def so(n: int) -> AlgebraKind:
    return AlgebraKind(Family.SO, n)


def gl(n: int) -> AlgebraKind:
    return AlgebraKind(Family.GL, n)


def su(n: int) -> AlgebraKind:
    return AlgebraKind(Family.SU, n)


@dataclass(frozen=True, order=True)
class BasisElement:
    """A single canonical generator: B_ij, C_ij, D_ij or E_ij (1-based)."""

    tag: str
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.tag not in "BCDE":
            raise ValueError(f"unknown basis tag {self.tag!r}")
        if self.i < 1 or self.j < 1:
            raise ValueError("node indices are 1-based")
        if self.tag != "E" and not self.i < self.j:
            raise ValueError(f"{self.tag} generators require i < j, got ({self.i}, {self.j})")

    def __str__(self) -> str:
        if self.i < 10 and self.j < 10:
            return f"{self.tag}{self.i}{self.j}"
        return f"{self.tag}{self.i},{self.j}"


def validate_basis_element(kind: AlgebraKind, b: BasisElement) -> None:
    """Raise KindMismatch unless b is admissible for kind (tag and range)."""
    if not kind.admits(b.tag):
        raise KindMismatch(f"{b} is not a generator of {kind}")
    if b.i > kind.n or b.j > kind.n:
        raise KindMismatch(f"{b} is out of range for {kind}")


@functools.lru_cache(maxsize=None)
def canonical_basis(kind: AlgebraKind) -> tuple[BasisElement, ...]:
    """Ordered basis: B lexicographic, then C, then D_12..D_1n, then E row-major."""
    n = kind.n
    out: list[BasisElement] = []
    if kind.family in (Family.SO, Family.SU):
        out += [BasisElement("B", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    if kind.family is Family.SU:
        out += [BasisElement("C", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        out += [BasisElement("D", 1, k) for k in range(2, n + 1)]
    if kind.family is Family.GL:
        out += [BasisElement("E", i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _basis_index(kind: AlgebraKind) -> dict[BasisElement, int]:
    return {b: k for k, b in enumerate(canonical_basis(kind))}


class AlgebraElement:
    """A rational linear combination of canonical basis elements.

    Terms are stored canonically: no zero coefficients, and every D_ij with
    i > 1 rewritten as D_1j - D_1i, so the stored D support uses only
    {D_1k : 2 <= k <= n}.
    """

    __slots__ = ("kind", "_terms")

    def __init__(self, kind: AlgebraKind, terms: dict[BasisElement, Fraction]):
        self.kind = kind
        self._terms = terms

    @staticmethod
    def build(kind: AlgebraKind, items: Iterable[tuple[BasisElement, Fraction | int]]) -> "AlgebraElement":
        terms: dict[BasisElement, Fraction] = {}

        def bump(b: BasisElement, c: Fraction) -> None:
            v = terms.get(b, _Q0) + c
            if v:
                terms[b] = v
            else:
                terms.pop(b, None)

        for b, raw in items:
            validate_basis_element(kind, b)
            c = Fraction(raw)
            if not c:
                continue
            if b.tag == "D" and b.i > 1:
                bump(BasisElement("D", 1, b.j), c)
                bump(BasisElement("D", 1, b.i), -c)
            else:
                bump(b, c)
        return AlgebraElement(kind, terms)

    @staticmethod
    def basis(kind: AlgebraKind, tag: str, i: int, j: int, coeff: Fraction | int = 1) -> "AlgebraElement":
        return AlgebraElement.build(kind, [(BasisElement(tag, i, j), coeff)])

    @staticmethod
    def zero(kind: AlgebraKind) -> "AlgebraElement":
        return AlgebraElement(kind, {})

    def items(self) -> Iterator[tuple[BasisElement, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, b: BasisElement) -> Fraction:
        return self._terms.get(b, _Q0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self, tag: str) -> list[tuple[BasisElement, Fraction]]:
        return [(b, c) for b, c in self.items() if b.tag == tag]

    def scale(self, c: Fraction | int) -> "AlgebraElement":
        c = Fraction(c)
        if not c:
            return AlgebraElement(self.kind, {})
        return AlgebraElement(self.kind, {b: v * c for b, v in self._terms.items()})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.kind != other.kind:
            raise KindMismatch(f"cannot add {self.kind} and {other.kind} elements")
        terms = dict(self._terms)
        for b, c in other._terms.items():
            v = terms.get(b, _Q0) + c
            if v:
                terms[b] = v
            else:
                del terms[b]
        return AlgebraElement(self.kind, terms)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.kind == other.kind and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.kind, tuple(sorted(self._terms.items()))))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for b, c in self.items():
            if c == 1:
                parts.append(f"{b}")
            elif c == -1:
                parts.append(f"-{b}")
            else:
                parts.append(f"{c}*{b}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_vector(self) -> dict[int, Fraction]:
        index = _basis_index(self.kind)
        return {index[b]: c for b, c in self._terms.items()}

    @staticmethod
    def from_vector(kind: AlgebraKind, vec: dict[int, Fraction]) -> "AlgebraElement":
        basis = canonical_basis(kind)
        return AlgebraElement(kind, {basis[k]: c for k, c in vec.items() if c})


# ---------------------------------------------------------------------------
# complex-rational matrices (the independent bracket route)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cq:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = _Q0
    im: Fraction = _Q0

    def __add__(self, other: "Cq") -> "Cq":
        return Cq(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Cq") -> "Cq":
        return Cq(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "Cq") -> "Cq":
        return Cq(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    def __neg__(self) -> "Cq":
        return Cq(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)


_C0 = Cq()

Matrix = tuple[tuple[Cq, ...], ...]


def _matrix_from_entries(n: int, entries: dict[tuple[int, int], Cq]) -> Matrix:
    return tuple(tuple(entries.get((r, c), _C0) for c in range(n)) for r in range(n))


def to_matrix(e: AlgebraElement) -> Matrix:
    """Render an element as an exact n x n complex-rational matrix."""
    n = e.kind.n
    acc: dict[tuple[int, int], Cq] = {}

    def add(r: int, c: int, v: Cq) -> None:
        cur = acc.get((r, c), _C0) + v
        acc[(r, c)] = cur

    for b, coeff in e.items():
        i, j = b.i - 1, b.j - 1
        if b.tag == "B":
            add(i, j, Cq(coeff, _Q0))
            add(j, i, Cq(-coeff, _Q0))
        elif b.tag == "C":
            add(i, j, Cq(_Q0, coeff))
            add(j, i, Cq(_Q0, coeff))
        elif b.tag == "D":
            add(i, i, Cq(_Q0, coeff))
            add(j, j, Cq(_Q0, -coeff))
        else:
            add(i, j, Cq(coeff, _Q0))
    return _matrix_from_entries(n, acc)


def decompose(m: Matrix, kind: AlgebraKind) -> AlgebraElement:
    """Inverse of to_matrix; raises MembershipError off the algebra."""
    n = kind.n
    if len(m) != n or any(len(row) != n for row in m):
        raise MembershipError(f"expected a {n}x{n} matrix for {kind}")

    terms: list[tuple[BasisElement, Fraction]] = []
    if kind.family in (Family.SO, Family.GL):
        if any(x.im for row in m for x in row):
            raise MembershipError(f"complex entries are not admitted in {kind}")
    if kind.family is Family.SO:
        for i in range(n):
            if m[i][i].re:
                raise MembershipError("skew-symmetric matrices have zero diagonal")
            for j in range(i + 1, n):
                if m[i][j].re != -m[j][i].re:
                    raise MembershipError("matrix is not skew-symmetric")
                terms.append((BasisElement("B", i + 1, j + 1), m[i][j].re))
    elif kind.family is Family.GL:
        for i in range(n):
            for j in range(n):
                terms.append((BasisElement("E", i + 1, j + 1), m[i][j].re))
    else:
        trace = _Q0
        for i in range(n):
            if m[i][i].re:
                raise MembershipError("skew-Hermitian matrices have imaginary diagonal")
            trace += m[i][i].im
            for j in range(i + 1, n):
                if m[i][j].re != -m[j][i].re or m[i][j].im != m[j][i].im:
                    raise MembershipError("matrix is not skew-Hermitian")
                terms.append((BasisElement("B", i + 1, j + 1), m[i][j].re))
                terms.append((BasisElement("C", i + 1, j + 1), m[i][j].im))
        if trace:
            raise MembershipError("matrix has nonzero trace")
        # diagonal i*d_k entries: sum d_k = 0, so D_1k coefficients are -d_k
        for k in range(2, n + 1):
            terms.append((BasisElement("D", 1, k), -m[k - 1][k - 1].im))
    return AlgebraElement.build(kind, terms)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            s = _C0
            for k in range(n):
                x = a[r][k]
                y = b[k][c]
                if x and y:
                    s = s + x * y
            row.append(s)
        rows.append(tuple(row))
    return tuple(rows)


def bracket_via_matrices(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bracket by matrix commutator XY - YX, then decompose."""
    if x.kind != y.kind:
        raise KindMismatch(f"cannot bracket {x.kind} with {y.kind}")
    mx, my = to_matrix(x), to_matrix(y)
    xy, yx = _matmul(mx, my), _matmul(my, mx)
    n = x.kind.n
    comm = tuple(tuple(xy[r][c] - yx[r][c] for c in range(n)) for r in range(n))
    return decompose(comm, x.kind)


# ---------------------------------------------------------------------------
# structure constants
# ---------------------------------------------------------------------------


def _pair_bracket(a: BasisElement, b: BasisElement) -> list[tuple[BasisElement, Fraction]]:
    """Bracket of two generators, expanded over the canonical basis.

    Covers the matrix-unit relation [E_ij, E_kl] = d_jk E_il - d_li E_kj and
    the B/C/D relations; results are normalized (B_pq with p > q flipped,
    diagonal C_pp parts converted to D_1k coordinates).
    """
    acc: dict[BasisElement, Fraction] = {}
    diag: dict[int, Fraction] = {}

    def bump(b_: BasisElement, c: Fraction) -> None:
        v = acc.get(b_, _Q0) + c
        if v:
            acc[b_] = v
        else:
            acc.pop(b_, None)

    def add_E(p: int, q: int, c: Fraction) -> None:
        bump(BasisElement("E", p, q), c)

    def add_B(p: int, q: int, c: Fraction) -> None:
        if p == q:
            return
        if p < q:
            bump(BasisElement("B", p, q), c)
        else:
            bump(BasisElement("B", q, p), -c)

    def add_C(p: int, q: int, c: Fraction) -> None:
        # C_pp stands for 2i E_pp; collect those on the diagonal ledger
        if p == q:
            diag[p] = diag.get(p, _Q0) + 2 * c
        elif p < q:
            bump(BasisElement("C", p, q), c)
        else:
            bump(BasisElement("C", q, p), c)

    i, j, k, l = a.i, a.j, b.i, b.j
    ta, tb = a.tag, b.tag
    one = _Q1

    if ta == "E" and tb == "E":
        if j == k:
            add_E(i, l, one)
        if l == i:
            add_E(k, j, -one)
    elif ta == "B" and tb == "B":
        if j == k:
            add_B(i, l, one)
        if i == l:
            add_B(j, k, one)
        if j == l:
            add_B(k, i, one)
        if i == k:
            add_B(l, j, one)
    elif ta == "C" and tb == "C":
        if l == i:
            add_B(k, j, one)
        if k == i:
            add_B(l, j, one)
        if l == j:
            add_B(k, i, one)
        if k == j:
            add_B(l, i, one)
    elif ta == "B" and tb == "C":
        if j == k:
            add_C(i, l, one)
        if j == l:
            add_C(i, k, one)
        if i == l:
            add_C(k, j, -one)
        if i == k:
            add_C(l, j, -one)
    elif ta == "B" and tb == "D":
        c = Fraction((1 if j == k else 0) + (1 if l == i else 0)
                     - (1 if k == i else 0) - (1 if j == l else 0))
        if c:
            add_C(i, j, c)
    elif ta == "C" and tb == "D":
        c = Fraction((1 if k == i else 0) + (1 if j == l else 0)
                     - (1 if k == j else 0) - (1 if i == l else 0))
        if c:
            add_B(i, j, c)
    elif ta == "D" and tb == "D":
        pass
    else:
        # remaining mixed orders reduce by antisymmetry
        return [(r, -c) for r, c in _pair_bracket(b, a)]

    if diag:
        # sum of i*E_pp coefficients must vanish (brackets are traceless)
        assert sum(diag.values()) == 0
        for p, d in diag.items():
            if p >= 2 and d:
                bump(BasisElement("D", 1, p), -d)
    return sorted(acc.items())


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the structure constants; result canonicalized."""
    if x.kind != y.kind:
        raise KindMismatch(f"cannot bracket {x.kind} with {y.kind}")
    items: list[tuple[BasisElement, Fraction]] = []
    for a, ca in x.items():
        for b, cb in y.items():
            c = ca * cb
            items.extend((r, c * cr) for r, cr in _pair_bracket(a, b))
    return AlgebraElement.build(x.kind, items)


@functools.lru_cache(maxsize=None)
def _bracket_table(kind: AlgebraKind) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
    """All ordered basis-pair brackets as index vectors, for the closure loop."""
    basis = canonical_basis(kind)
    index = _basis_index(kind)
    table: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
    for ia, a in enumerate(basis):
        for ib, b in enumerate(basis):
            if ia == ib:
                continue
            entries = _pair_bracket(a, b)
            if entries:
                table[(ia, ib)] = tuple((index[r], c) for r, c in entries)
    return table


def _bracket_vec(x: dict[int, Fraction], y: dict[int, Fraction],
                 table: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for ia, ca in x.items():
        for ib, cb in y.items():
            ent = table.get((ia, ib))
            if not ent:
                continue
            c = ca * cb
            for idx, coeff in ent:
                v = out.get(idx, _Q0) + c * coeff
                if v:
                    out[idx] = v
                else:
                    del out[idx]
    return out


# ---------------------------------------------------------------------------
# exact span arithmetic and the bracket-closure fixpoint
# ---------------------------------------------------------------------------


class _Echelon:
    """Reduced row echelon form over Fraction coordinate dicts."""

    __slots__ = ("rows",)

    def __init__(self) -> None:
        self.rows: dict[int, dict[int, Fraction]] = {}  # pivot -> row, pivot coeff 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        out = dict(vec)
        for p in sorted(self.rows):
            c = out.get(p)
            if not c:
                continue
            for idx, v in self.rows[p].items():
                nv = out.get(idx, _Q0) - c * v
                if nv:
                    out[idx] = nv
                else:
                    out.pop(idx, None)
        return out

    def contains(self, vec: dict[int, Fraction]) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict[int, Fraction]) -> bool:
        red = self.reduce(vec)
        if not red:
            return False
        p = min(red)
        c = red[p]
        if c != 1:
            red = {idx: v / c for idx, v in red.items()}
        for row in self.rows.values():
            cc = row.get(p)
            if cc:
                for idx, v in red.items():
                    nv = row.get(idx, _Q0) - cc * v
                    if nv:
                        row[idx] = nv
                    else:
                        row.pop(idx, None)
        self.rows[p] = red
        return True

    def ordered_rows(self) -> list[dict[int, Fraction]]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]


@dataclass(frozen=True)
class SpanBasis:
    """Row-reduced basis of a subspace; rank is exact by construction."""

    kind: AlgebraKind
    rows: tuple[AlgebraElement, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _echelon(self) -> _Echelon:
        ech = _Echelon()
        for r in self.rows:
            ech.insert(r.to_vector())
        return ech

    def contains(self, e: AlgebraElement) -> bool:
        if e.kind != self.kind:
            raise KindMismatch(f"element of {e.kind} tested against a {self.kind} span")
        return self._echelon().contains(e.to_vector())

    @staticmethod
    def empty(kind: AlgebraKind) -> "SpanBasis":
        return SpanBasis(kind, ())


def _basis_from_echelon(kind: AlgebraKind, ech: _Echelon) -> SpanBasis:
    rows = tuple(AlgebraElement.from_vector(kind, v) for v in ech.ordered_rows())
    return SpanBasis(kind, rows)


def span_insert(basis: SpanBasis, e: AlgebraElement) -> tuple[SpanBasis, bool]:
    """Insert e into the span; returns the new basis and whether rank grew."""
    if e.kind != basis.kind:
        raise KindMismatch(f"cannot insert a {e.kind} element into a {basis.kind} span")
    ech = basis._echelon()
    inserted = ech.insert(e.to_vector())
    if not inserted:
        return basis, False
    return _basis_from_echelon(basis.kind, ech), True


class LieClosure:
    """Incremental bracket-closure state.

    Newly inserted vectors are bracketed against every vector seen so far,
    sweep by sweep, until the span stabilizes or fills the whole algebra.
    The state can be copied cheaply and extended with more generators, which
    the sampling oracle uses to share the control-set closure across trials.
    """

    def __init__(self, kind: AlgebraKind):
        self.kind = kind
        self.dim = kind.dimension
        self.table = _bracket_table(kind)
        self.ech = _Echelon()
        self.spanning: list[dict[int, Fraction]] = []
        self.frontier: list[dict[int, Fraction]] = []
        self.steps = 0

    def copy(self) -> "LieClosure":
        new = object.__new__(LieClosure)
        new.kind = self.kind
        new.dim = self.dim
        new.table = self.table
        new.ech = _Echelon()
        new.ech.rows = {p: dict(r) for p, r in self.ech.rows.items()}
        new.spanning = list(self.spanning)
        new.frontier = list(self.frontier)
        new.steps = self.steps
        return new

    @property
    def rank(self) -> int:
        return self.ech.rank

    def add_generators(self, elements: Iterable[AlgebraElement]) -> None:
        for e in elements:
            if e.kind != self.kind:
                raise KindMismatch(f"generator of {e.kind} in a {self.kind} closure")
            vec = e.to_vector()
            if self.ech.insert(vec):
                self.spanning.append(vec)
                self.frontier.append(vec)

    def run(self) -> None:
        # sweep cap: rank grows on every productive sweep, so dimension bounds it
        cap = self.dim + 1
        swept = 0
        while self.frontier and self.ech.rank < self.dim and swept <= cap:
            swept += 1
            produced: list[dict[int, Fraction]] = []
            full = False
            for x in self.frontier:
                for y in list(self.spanning):
                    if x is y:
                        continue
                    z = _bracket_vec(x, y, self.table)
                    if z and self.ech.insert(z):
                        self.spanning.append(z)
                        produced.append(z)
                        if self.ech.rank == self.dim:
                            full = True
                            break
                if full:
                    break
            if produced:
                self.steps += 1
            self.frontier = produced
            if full:
                break

    def basis(self) -> SpanBasis:
        return _basis_from_echelon(self.kind, self.ech)


def lie_closure(generators: list[AlgebraElement]) -> tuple[SpanBasis, int, int]:
    """Span of the Lie subalgebra generated by the given elements.

    Returns (span basis, dimension, sweeps until stabilization).
    """
    if not generators:
        raise EmptyGenerators("closure needs at least one generator")
    kind = generators[0].kind
    state = LieClosure(kind)
    state.add_generators(generators)
    state.run()
    return state.basis(), state.rank, state.steps


def contains_sl(basis: SpanBasis) -> bool:
    """True when the span contains every traceless matrix (GL only)."""
    if basis.kind.family is not Family.GL:
        raise KindMismatch(f"sl-containment is defined over gl(n), not {basis.kind}")
    n = basis.kind.n
    index = _basis_index(basis.kind)
    ech = basis._echelon()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if not ech.contains({index[BasisElement("E", i, j)]: _Q1}):
                return False
    for i in range(1, n):
        vec = {index[BasisElement("E", i, i)]: _Q1,
               index[BasisElement("E", i + 1, i + 1)]: -_Q1}
        if not ech.contains(vec):
            return False
    return True
