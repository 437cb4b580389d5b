"""Independent brute-force oracles used to pin expected test values.

Everything here works on dense complex-rational matrices (entries are
(re, im) Fraction pairs) with plain all-pairs commutator sweeps and dense
Gaussian elimination.  None of it shares code with the package's sparse
structure-constant route, so the two can check each other.
"""

from fractions import Fraction
from itertools import product

from structcon.graphs import Color, ColoredMultigraph

Q0 = Fraction(0)
Q1 = Fraction(1)
CZERO = (Q0, Q0)


def cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def csub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def zeros(n):
    return [[CZERO for _ in range(n)] for _ in range(n)]


def gen_matrix(n, tag, i, j):
    """Literal matrix of one generator, built straight from its definition."""
    m = zeros(n)
    i, j = i - 1, j - 1
    if tag == "B":
        m[i][j] = (Q1, Q0)
        m[j][i] = (-Q1, Q0)
    elif tag == "C":
        m[i][j] = (Q0, Q1)
        m[j][i] = (Q0, Q1)
    elif tag == "D":
        m[i][i] = (Q0, Q1)
        m[j][j] = (Q0, -Q1)
    elif tag == "E":
        m[i][j] = (Q1, Q0)
    else:
        raise ValueError(tag)
    return m


def elem_matrix(n, terms):
    """Matrix of a linear combination given as (tag, i, j, coeff) tuples."""
    m = zeros(n)
    for tag, i, j, coeff in terms:
        g = gen_matrix(n, tag, i, j)
        c = (Fraction(coeff), Q0)
        for r in range(n):
            for col in range(n):
                m[r][col] = cadd(m[r][col], cmul(c, g[r][col]))
    return m


def matmul(a, b):
    n = len(a)
    out = zeros(n)
    for r in range(n):
        for k in range(n):
            if a[r][k] == CZERO:
                continue
            for c in range(n):
                if b[k][c] == CZERO:
                    continue
                out[r][c] = cadd(out[r][c], cmul(a[r][k], b[k][c]))
    return out


def commutator(a, b):
    ab, ba = matmul(a, b), matmul(b, a)
    n = len(a)
    return [[csub(ab[r][c], ba[r][c]) for c in range(n)] for r in range(n)]


def flatten(m):
    n = len(m)
    out = []
    for r in range(n):
        for c in range(n):
            out.append(m[r][c][0])
    for r in range(n):
        for c in range(n):
            out.append(m[r][c][1])
    return out


class DenseSpan:
    """Row echelon over dense Fraction vectors: rank and membership."""

    def __init__(self):
        self.rows = []  # (pivot, vector), kept sorted by pivot

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        vec = list(vec)
        for pivot, row in self.rows:
            if vec[pivot]:
                f = vec[pivot] / row[pivot]
                for k in range(pivot, len(vec)):
                    if row[k]:
                        vec[k] -= f * row[k]
        return vec

    def contains(self, vec):
        return not any(self._reduce(vec))

    def insert(self, vec):
        red = self._reduce(vec)
        for pivot, value in enumerate(red):
            if value:
                self.rows.append((pivot, red))
                self.rows.sort(key=lambda pr: pr[0])
                return True
        return False


def brute_closure(n, matrices):
    """All-pairs commutator closure; returns (DenseSpan, spanning matrices)."""
    span = DenseSpan()
    elems = []
    for m in matrices:
        if span.insert(flatten(m)):
            elems.append(m)
    changed = True
    while changed:
        changed = False
        snapshot = list(elems)
        for a, b in product(snapshot, snapshot):
            c = commutator(a, b)
            if span.insert(flatten(c)):
                elems.append(c)
                changed = True
    return span, elems


def brute_closure_dim(n, term_lists):
    """Closure dimension from raw (tag, i, j, coeff) term lists."""
    span, _ = brute_closure(n, [elem_matrix(n, terms) for terms in term_lists])
    return span.rank


# ---------------------------------------------------------------------------
# cycle enumeration for the odd-red detector
# ---------------------------------------------------------------------------


def brute_odd_red_cycle(g: ColoredMultigraph) -> bool:
    """Enumerate simple cycles (including 2-cycles on multi-edges)."""
    edges = [(i, j, c) for i, j, c in g.edges if c is not Color.GREEN]
    by_pair = {}
    for i, j, c in edges:
        by_pair.setdefault((i, j), set()).add(c)
    # a blue+red pair is a 2-cycle with one red edge
    if any(len(colors) >= 2 for colors in by_pair.values()):
        return True

    adj = {v: [] for v in range(1, g.n + 1)}
    for i, j, c in edges:
        adj[i].append((j, c))
        adj[j].append((i, c))

    def walk(start, current, visited, reds):
        for nb, c in adj[current]:
            extra = 1 if c is Color.RED else 0
            if nb == start and len(visited) >= 3:
                if (reds + extra) % 2 == 1:
                    return True
            elif nb not in visited and nb > start:
                if walk(start, nb, visited | {nb}, reds + extra):
                    return True
        return False

    return any(walk(s, s, {s}, 0) for s in range(1, g.n + 1))


def random_pair(rng):
    """Random zero-pattern pair over so/gl/su with n in 2..5."""
    from structcon.algebra import AlgebraElement, BasisElement, gl, so, su
    from structcon.patterns import ControlPattern, DriftPattern, ZeroPatternPair

    family = rng.choice(("so", "gl", "su"))
    n = rng.randint(2, 5)
    if family == "so":
        kind = so(n)
        candidates = [BasisElement("B", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    elif family == "gl":
        kind = gl(n)
        candidates = [BasisElement("E", i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    else:
        kind = su(n)
        candidates = [BasisElement(t, i, j) for t in "BCD"
                      for i in range(1, n) for j in range(i + 1, n + 1)]

    control = rng.sample(candidates, rng.randint(1, min(6, len(candidates))))
    bases = []
    for _ in range(rng.randint(1, 3)):
        picks = rng.sample(candidates, rng.randint(1, min(3, len(candidates))))
        coeffs = [rng.choice([c for c in range(-4, 5) if c]) for _ in picks]
        base = AlgebraElement.build(kind, list(zip(picks, coeffs)))
        assert not base.is_zero
        bases.append(base)
    return ZeroPatternPair(DriftPattern(kind, tuple(bases)),
                           ControlPattern(kind, tuple(control)))


def witness_is_odd_red_cycle(witness) -> bool:
    """Check a witness edge sequence is a closed walk with odd red count."""
    if not witness:
        return False
    reds = sum(1 for _, _, c in witness if c is Color.RED)
    if reds % 2 == 0:
        return False
    first = witness[0]
    for start in (first[0], first[1]):
        node = start
        ok = True
        for i, j, _ in witness:
            if node == i:
                node = j
            elif node == j:
                node = i
            else:
                ok = False
                break
        if ok and node == start:
            return True
    return False
