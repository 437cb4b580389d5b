"""Graphs carried by zero patterns: plain, directed, and edge-colored.

Nodes are 1..n throughout.  Pattern graphs are built from the pattern base
elements, never from a sampled drift, so cancellation in a sample can only
remove edges relative to the pattern graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .algebra import AlgebraElement, Family
from .errors import KindMismatch, SizeMismatch
from .patterns import ControlPattern, DriftPattern


class Color(Enum):
    BLUE = "blue"
    RED = "red"
    GREEN = "green"


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset[tuple[int, int]]  # stored with i < j

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad edge ({i}, {j}) for {self.n} nodes")

    @staticmethod
    def of(n: int, pairs: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        return UndirectedGraph(n, frozenset((min(i, j), max(i, j)) for i, j in pairs))


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]  # self-loops allowed

    def __post_init__(self) -> None:
        for i, j in self.arcs:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"bad arc ({i}, {j}) for {self.n} nodes")

    @staticmethod
    def of(n: int, pairs: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph(n, frozenset(pairs))


@dataclass(frozen=True)
class ColoredMultigraph:
    n: int
    edges: frozenset[tuple[int, int, Color]]  # blue/red with i < j, green loops i == j

    def __post_init__(self) -> None:
        for i, j, color in self.edges:
            if color is Color.GREEN:
                if i != j or not 1 <= i <= self.n:
                    raise ValueError("green edges are exactly self-loops")
            elif not (1 <= i < j <= self.n):
                raise ValueError(f"bad {color.value} edge ({i}, {j}) for {self.n} nodes")

    @staticmethod
    def of(n: int, triples: Iterable[tuple[int, int, Color]]) -> "ColoredMultigraph":
        normal = []
        for i, j, color in triples:
            if color is Color.GREEN:
                normal.append((i, j, color))
            else:
                normal.append((min(i, j), max(i, j), color))
        return ColoredMultigraph(n, frozenset(normal))


Graph = UndirectedGraph | Digraph | ColoredMultigraph


# ---------------------------------------------------------------------------
# support read-off for single elements
# ---------------------------------------------------------------------------


def matrix_graph_so(e: AlgebraElement) -> UndirectedGraph:
    """Edge per nonzero skew-symmetric pair."""
    if e.kind.family is not Family.SO:
        raise KindMismatch(f"expected an so(n) element, got {e.kind}")
    return UndirectedGraph.of(e.kind.n, ((b.i, b.j) for b, _ in e.support("B")))


def matrix_graph_gl(e: AlgebraElement) -> Digraph:
    """Arc per nonzero matrix entry; diagonal entries become self-loops."""
    if e.kind.family is not Family.GL:
        raise KindMismatch(f"expected a gl(n) element, got {e.kind}")
    return Digraph.of(e.kind.n, ((b.i, b.j) for b, _ in e.support("E")))


def _diagonal_support(e: AlgebraElement) -> set[int]:
    # imaginary diagonal of the stored element; D_1k contributes +1 at node 1
    # and -1 at node k, so cancellation at node 1 is possible
    diag: dict[int, Fraction] = {}
    for b, c in e.support("D"):
        diag[b.i] = diag.get(b.i, Fraction(0)) + c
        diag[b.j] = diag.get(b.j, Fraction(0)) - c
    return {k for k, v in diag.items() if v}


def matrix_graph_su(e: AlgebraElement) -> ColoredMultigraph:
    """Blue for B support, red for C support, green loops at nonzero diagonal."""
    if e.kind.family is not Family.SU:
        raise KindMismatch(f"expected an su(n) element, got {e.kind}")
    triples: list[tuple[int, int, Color]] = []
    triples += [(b.i, b.j, Color.BLUE) for b, _ in e.support("B")]
    triples += [(b.i, b.j, Color.RED) for b, _ in e.support("C")]
    triples += [(k, k, Color.GREEN) for k in _diagonal_support(e)]
    return ColoredMultigraph.of(e.kind.n, triples)


def matrix_graph(e: AlgebraElement) -> Graph:
    family = e.kind.family
    if family is Family.SO:
        return matrix_graph_so(e)
    if family is Family.GL:
        return matrix_graph_gl(e)
    return matrix_graph_su(e)


# ---------------------------------------------------------------------------
# pattern graphs
# ---------------------------------------------------------------------------


def drift_graph_so(p: DriftPattern) -> UndirectedGraph:
    if p.kind.family is not Family.SO:
        raise KindMismatch(f"expected an so(n) drift pattern, got {p.kind}")
    graphs = [matrix_graph_so(a) for a in p.bases]
    return UndirectedGraph(p.kind.n, frozenset().union(*(g.edges for g in graphs)))


def contr_graph_so(p: ControlPattern) -> UndirectedGraph:
    if p.kind.family is not Family.SO:
        raise KindMismatch(f"expected an so(n) control pattern, got {p.kind}")
    return UndirectedGraph.of(p.kind.n, ((b.i, b.j) for b in p.bases))


def drift_graph_gl(p: DriftPattern) -> Digraph:
    if p.kind.family is not Family.GL:
        raise KindMismatch(f"expected a gl(n) drift pattern, got {p.kind}")
    graphs = [matrix_graph_gl(a) for a in p.bases]
    return Digraph(p.kind.n, frozenset().union(*(g.arcs for g in graphs)))


def contr_graph_gl(p: ControlPattern) -> Digraph:
    if p.kind.family is not Family.GL:
        raise KindMismatch(f"expected a gl(n) control pattern, got {p.kind}")
    return Digraph.of(p.kind.n, ((b.i, b.j) for b in p.bases))


def drift_graph_su(p: DriftPattern) -> ColoredMultigraph:
    if p.kind.family is not Family.SU:
        raise KindMismatch(f"expected an su(n) drift pattern, got {p.kind}")
    graphs = [matrix_graph_su(a) for a in p.bases]
    return ColoredMultigraph(p.kind.n, frozenset().union(*(g.edges for g in graphs)))


def contr_graph_su(p: ControlPattern) -> ColoredMultigraph:
    """Blue/red per B/C base; each D_ij base puts green loops at both i and j."""
    if p.kind.family is not Family.SU:
        raise KindMismatch(f"expected an su(n) control pattern, got {p.kind}")
    triples: list[tuple[int, int, Color]] = []
    for b in p.bases:
        if b.tag == "B":
            triples.append((b.i, b.j, Color.BLUE))
        elif b.tag == "C":
            triples.append((b.i, b.j, Color.RED))
        else:
            triples.append((b.i, b.i, Color.GREEN))
            triples.append((b.j, b.j, Color.GREEN))
    return ColoredMultigraph.of(p.kind.n, triples)


def drift_graph(p: DriftPattern) -> Graph:
    family = p.kind.family
    if family is Family.SO:
        return drift_graph_so(p)
    if family is Family.GL:
        return drift_graph_gl(p)
    return drift_graph_su(p)


def contr_graph(p: ControlPattern) -> Graph:
    family = p.kind.family
    if family is Family.SO:
        return contr_graph_so(p)
    if family is Family.GL:
        return contr_graph_gl(p)
    return contr_graph_su(p)


def union(g1: Graph, g2: Graph) -> Graph:
    """Edge or arc set union of two graphs of the same type and size."""
    if type(g1) is not type(g2) or g1.n != g2.n:
        raise SizeMismatch("union needs two graphs of the same type and node count")
    if isinstance(g1, UndirectedGraph):
        return UndirectedGraph(g1.n, g1.edges | g2.edges)
    if isinstance(g1, Digraph):
        return Digraph(g1.n, g1.arcs | g2.arcs)
    return ColoredMultigraph(g1.n, g1.edges | g2.edges)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def to_dot(g: Graph) -> str:
    """Graphviz text with deterministic node and edge ordering."""
    lines: list[str] = []
    if isinstance(g, Digraph):
        lines.append("digraph G {")
        lines += [f"  {v};" for v in range(1, g.n + 1)]
        lines += [f"  {i} -> {j};" for i, j in sorted(g.arcs)]
    elif isinstance(g, UndirectedGraph):
        lines.append("graph G {")
        lines += [f"  {v};" for v in range(1, g.n + 1)]
        lines += [f"  {i} -- {j};" for i, j in sorted(g.edges)]
    else:
        lines.append("graph G {")
        lines += [f"  {v};" for v in range(1, g.n + 1)]
        lines += [f"  {i} -- {j} [color={c.value}];"
                  for i, j, c in sorted(g.edges, key=lambda e: (e[0], e[1], e[2].value))]
    lines.append("}")
    return "\n".join(lines) + "\n"
