"""Verdicts: evaluate the graphical conditions on a zero-pattern pair and
cross-check them against the exact rank oracle.

The checkers only use pattern graphs.  The oracle samples rigid drifts,
closes the generated subalgebra exactly, and reports the dimensions
reached; a sufficient verdict that the oracle cannot confirm (or a negative
verdict it refutes) raises the contradiction flag, which is a bug signal.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Sequence

from . import analysis, graphs
from .algebra import AlgebraKind, Family, LieClosure
from .errors import KindMismatch
from .patterns import (
    DEFAULT_POOL,
    ControlPattern,
    ZeroPatternPair,
    control_generators,
    drift_is_basis_subset,
    sample_drift,
)


class Verdict(Enum):
    SUFFICIENT_YES = "SufficientYes"
    EXACT_YES = "ExactYes"
    EXACT_NO = "ExactNo"
    NECESSARY_FAILED_NO = "NecessaryFailedNo"
    INCONCLUSIVE = "Inconclusive"


class GeneratedGl(Enum):
    FULL = "full"
    SL_ONLY = "sl_only"
    NEITHER = "neither"


@dataclass(frozen=True)
class ConditionEval:
    name: str
    holds: bool
    citation: str


@dataclass(frozen=True)
class OracleReport:
    trials: int
    dimensions: tuple[int, ...]
    target: int
    achieved_full: bool
    seed: int


@dataclass(frozen=True)
class Report:
    verdict: Verdict
    conditions: tuple[ConditionEval, ...]
    oracle: OracleReport | None
    contradiction: bool
    decided_by: str

    @property
    def kind_label(self) -> str:
        return self.decided_by


def _require(pair: ZeroPatternPair, family: Family, what: str) -> None:
    if pair.kind.family is not family:
        raise KindMismatch(f"{what} expects {family.value}(n) patterns, got {pair.kind}")


def check_so(pair: ZeroPatternPair) -> Report:
    """Connectivity conditions over SO(n)."""
    _require(pair, Family.SO, "check_so")
    contr = graphs.contr_graph_so(pair.control)
    u = graphs.union(graphs.drift_graph_so(pair.drift), contr)

    union_connected = analysis.is_connected(u)
    comps_ok = all(len(c) >= 3 for c in analysis.components(contr))
    conditions = (
        ConditionEval("union graph connected", union_connected,
                      "necessary condition over SO(n)"),
        ConditionEval("every controlled component has at least 3 nodes", comps_ok,
                      "Theorem 1"),
    )
    if not union_connected:
        verdict, decided = Verdict.NECESSARY_FAILED_NO, "union connectivity necessity"
    elif comps_ok:
        verdict, decided = Verdict.SUFFICIENT_YES, "Theorem 1"
    else:
        verdict, decided = Verdict.INCONCLUSIVE, ""
    return Report(verdict, conditions, None, False, decided)


def _component_strongly_connected(g: graphs.Digraph, comp: frozenset[int]) -> bool:
    # arcs never leave a weak component, so plain BFS from one member suffices
    fwd: dict[int, set[int]] = {v: set() for v in comp}
    back: dict[int, set[int]] = {v: set() for v in comp}
    for i, j in g.arcs:
        if i != j and i in comp and j in comp:
            fwd[i].add(j)
            back[j].add(i)
    rep = min(comp)
    return comp <= analysis._reachable(g.n, fwd, rep) and comp <= analysis._reachable(g.n, back, rep)


def check_gl(pair: ZeroPatternPair) -> Report:
    """Strong-connectivity and self-loop conditions over GL+(n)."""
    _require(pair, Family.GL, "check_gl")
    contr = graphs.contr_graph_gl(pair.control)
    u = graphs.union(graphs.drift_graph_gl(pair.drift), contr)

    union_strong = analysis.strongly_connected(u)
    comps = analysis.weak_components(contr)
    comps_ok = all(len(c) >= 2 and _component_strongly_connected(contr, c) for c in comps)
    contr_loop = bool(analysis.digraph_self_loops(contr))
    basis_drift = drift_is_basis_subset(pair.drift)
    union_loop = bool(analysis.digraph_self_loops(u))
    conditions = (
        ConditionEval("union graph strongly connected", union_strong,
                      "necessary condition over GL+(n); Theorem 2.1(ii)"),
        ConditionEval("every weak controlled component strongly connected with at least 2 nodes",
                      comps_ok, "Theorem 2.1(i)"),
        ConditionEval("controlled graph has a self-loop", contr_loop, "Theorem 2.1(iii)"),
        ConditionEval("drift bases are single matrix units", basis_drift,
                      "Theorem 2.2 hypothesis"),
        ConditionEval("union graph has a self-loop", union_loop, "Theorem 2.2"),
    )
    if not union_strong:
        verdict, decided = Verdict.NECESSARY_FAILED_NO, "union strong-connectivity necessity"
    elif comps_ok and contr_loop:
        verdict, decided = Verdict.SUFFICIENT_YES, "Theorem 2.1"
    elif basis_drift and comps_ok and union_loop:
        verdict, decided = Verdict.SUFFICIENT_YES, "Theorem 2.2"
    else:
        verdict, decided = Verdict.INCONCLUSIVE, ""
    return Report(verdict, conditions, None, False, decided)


def check_su(pair: ZeroPatternPair) -> Report:
    """Self-loop or odd-red-cycle conditions over SU(n)."""
    _require(pair, Family.SU, "check_su")
    drift = graphs.drift_graph_su(pair.drift)
    contr = graphs.contr_graph_su(pair.control)
    u = graphs.union(drift, contr)

    contr_connected = analysis.is_connected(contr)
    odd_red, _ = analysis.has_odd_red_cycle(u)
    feature = bool(analysis.green_loops(u)) or odd_red

    if contr_connected:
        conditions = (
            ConditionEval("controlled graph connected", True, "Theorem 4 hypothesis"),
            ConditionEval("union graph has a self-loop or an odd-red cycle", feature,
                          "Theorem 4"),
        )
        verdict = Verdict.EXACT_YES if feature else Verdict.EXACT_NO
        return Report(verdict, conditions, None, False, "Theorem 4")

    union_connected = analysis.is_connected(u)
    comps_ok = all(len(c) >= 3 for c in analysis.components(contr))
    drift_simple = not analysis.has_multi_edge(drift)
    conditions = (
        ConditionEval("controlled graph connected", False, "Theorem 4 hypothesis"),
        ConditionEval("union graph connected", union_connected,
                      "necessary condition over SU(n); Theorem 5(ii)"),
        ConditionEval("every controlled component has at least 3 nodes", comps_ok,
                      "Theorem 5(i)"),
        ConditionEval("drift graph free of multi-edges", drift_simple, "Theorem 5(ii)"),
        ConditionEval("union graph has a self-loop or an odd-red cycle", feature,
                      "Theorem 5(iii)"),
    )
    if not union_connected:
        verdict, decided = Verdict.NECESSARY_FAILED_NO, "union connectivity necessity"
    elif comps_ok and drift_simple and feature:
        verdict, decided = Verdict.SUFFICIENT_YES, "Theorem 5"
    else:
        verdict, decided = Verdict.INCONCLUSIVE, ""
    return Report(verdict, conditions, None, False, decided)


def check(pair: ZeroPatternPair) -> Report:
    family = pair.kind.family
    if family is Family.SO:
        return check_so(pair)
    if family is Family.GL:
        return check_gl(pair)
    return check_su(pair)


# ---------------------------------------------------------------------------
# generated-subalgebra graph tests (control sets alone, no drift)
# ---------------------------------------------------------------------------


def check_generated_so(s: ControlPattern) -> bool:
    """Generators span all of so(n) iff their graph is connected."""
    if s.kind.family is not Family.SO:
        raise KindMismatch(f"check_generated_so expects so(n), got {s.kind}")
    return analysis.is_connected(graphs.contr_graph_so(s))


def check_generated_gl(s: ControlPattern) -> GeneratedGl:
    """Full gl(n) needs strong connectivity plus a self-loop; strong
    connectivity alone yields exactly the traceless subalgebra."""
    if s.kind.family is not Family.GL:
        raise KindMismatch(f"check_generated_gl expects gl(n), got {s.kind}")
    g = graphs.contr_graph_gl(s)
    if not analysis.strongly_connected(g):
        return GeneratedGl.NEITHER
    return GeneratedGl.FULL if analysis.digraph_self_loops(g) else GeneratedGl.SL_ONLY


def check_generated_su(s: ControlPattern) -> bool:
    """Generators span su(n) iff the colored graph has two-plus colors with a
    spanning connected blue subgraph, or is connected with a self-loop, or is
    connected with an odd-red cycle."""
    if s.kind.family is not Family.SU:
        raise KindMismatch(f"check_generated_su expects su(n), got {s.kind}")
    g = graphs.contr_graph_su(s)
    colors = {c for _, _, c in g.edges}
    blue = graphs.UndirectedGraph.of(g.n, ((i, j) for i, j, c in g.edges if c is graphs.Color.BLUE))
    if len(colors) >= 2 and analysis.is_connected(blue):
        return True
    if not analysis.is_connected(g):
        return False
    if analysis.green_loops(g):
        return True
    return analysis.has_odd_red_cycle(g)[0]


# ---------------------------------------------------------------------------
# the exact rank oracle
# ---------------------------------------------------------------------------


def oracle(pair: ZeroPatternPair, trials: int = 8, seed: int = 0,
           pool: Sequence[Fraction] = DEFAULT_POOL) -> OracleReport:
    """Sample drifts, close {drift} union controls, record dimensions.

    Deterministic per seed.  The control-set closure is computed once and
    extended per trial, which changes nothing about the resulting span.
    """
    if trials < 1:
        raise ValueError("the oracle needs at least one trial")
    kind = pair.kind
    base = LieClosure(kind)
    base.add_generators(control_generators(pair.control))
    base.run()

    dims: list[int] = []
    for t in range(trials):
        drift = sample_drift(pair.drift, pool, seed * 1_000_003 + t)
        state = base.copy()
        state.add_generators([drift])
        state.run()
        dims.append(state.rank)
    target = kind.dimension
    return OracleReport(trials, tuple(dims), target, any(d == target for d in dims), seed)


def _contradicts(verdict: Verdict, orc: OracleReport) -> bool:
    if verdict in (Verdict.SUFFICIENT_YES, Verdict.EXACT_YES):
        return not orc.achieved_full
    if verdict in (Verdict.EXACT_NO, Verdict.NECESSARY_FAILED_NO):
        return orc.achieved_full
    return False


def cross_validate(pair: ZeroPatternPair, trials: int = 8, seed: int = 0,
                   pool: Sequence[Fraction] = DEFAULT_POOL) -> Report:
    """Run the kind-appropriate checker and the oracle; flag any disagreement."""
    report = check(pair)
    orc = oracle(pair, trials=trials, seed=seed, pool=pool)
    return replace(report, oracle=orc, contradiction=_contradicts(report.verdict, orc))
