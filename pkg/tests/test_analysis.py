import random

import pytest

from structcon.analysis import (
    circumjacent_digraph,
    circumjacent_undirected,
    closure_step_M,
    closure_step_T,
    components,
    digraph_self_loops,
    green_loops,
    has_multi_edge,
    has_odd_red_cycle,
    is_connected,
    is_simple_complete,
    iterate_M,
    iterate_T,
    strongly_connected,
    weak_components,
)
from structcon.errors import HasSelfLoop, NotSimple
from structcon.graphs import (
    Color,
    ColoredMultigraph,
    Digraph,
    UndirectedGraph,
    contr_graph_gl,
    contr_graph_so,
    contr_graph_su,
    drift_graph_gl,
    drift_graph_su,
    union,
)

from helpers import brute_odd_red_cycle, witness_is_odd_red_cycle


def test_components_golden(so6_pair, su6_pair):
    assert components(contr_graph_so(so6_pair.control)) == [
        frozenset({1, 2, 3}), frozenset({4, 5, 6})]
    assert components(contr_graph_su(su6_pair.control)) == [
        frozenset({1, 2, 3}), frozenset({4, 5, 6})]
    assert components(UndirectedGraph.of(3, [])) == [
        frozenset({1}), frozenset({2}), frozenset({3})]


def test_green_loops_do_not_join_nodes():
    g = ColoredMultigraph.of(3, [(1, 1, Color.GREEN), (2, 2, Color.GREEN)])
    assert components(g) == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert not is_connected(g)


def test_is_connected():
    assert is_connected(UndirectedGraph.of(1, []))
    assert not is_connected(UndirectedGraph.of(2, []))
    assert is_connected(UndirectedGraph.of(3, [(1, 2), (2, 3)]))


def test_strong_connectivity_golden(gl4_loop_pair):
    u = union(drift_graph_gl(gl4_loop_pair.drift), contr_graph_gl(gl4_loop_pair.control))
    assert strongly_connected(u)
    contr = contr_graph_gl(gl4_loop_pair.control)
    assert weak_components(contr) == [frozenset({1, 2}), frozenset({3, 4})]
    assert digraph_self_loops(contr) == frozenset({1})
    assert not strongly_connected(Digraph.of(2, [(1, 2)]))
    assert strongly_connected(Digraph.of(1, []))
    # self-loops alone do not make a graph strongly connected
    assert not strongly_connected(Digraph.of(2, [(1, 1), (2, 2)]))


def test_multi_edges_and_green_loops(su5_pair, su6_pair):
    assert has_multi_edge(drift_graph_su(su5_pair.drift))
    assert not has_multi_edge(drift_graph_su(su6_pair.drift))
    assert green_loops(drift_graph_su(su5_pair.drift)) == frozenset({1, 5})
    two = ColoredMultigraph.of(3, [(1, 2, Color.BLUE), (1, 2, Color.RED)])
    assert has_multi_edge(two)


def test_odd_red_cycle_basics():
    multi = ColoredMultigraph.of(5, [(1, 5, Color.BLUE), (1, 5, Color.RED)])
    found, witness = has_odd_red_cycle(multi)
    assert found and witness_is_odd_red_cycle(witness)

    blue_triangle = ColoredMultigraph.of(3, [(1, 2, Color.BLUE), (2, 3, Color.BLUE),
                                             (1, 3, Color.BLUE)])
    assert has_odd_red_cycle(blue_triangle) == (False, None)

    one_red = ColoredMultigraph.of(3, [(1, 2, Color.BLUE), (2, 3, Color.BLUE),
                                       (1, 3, Color.RED)])
    found, witness = has_odd_red_cycle(one_red)
    assert found and brute_odd_red_cycle(one_red)
    assert witness_is_odd_red_cycle(witness)

    two_red = ColoredMultigraph.of(3, [(1, 2, Color.BLUE), (2, 3, Color.RED),
                                       (1, 3, Color.RED)])
    assert has_odd_red_cycle(two_red) == (False, None)
    assert not brute_odd_red_cycle(two_red)


def test_odd_red_cycle_ignores_green_and_isolated_parts():
    g = ColoredMultigraph.of(6, [(1, 2, Color.BLUE), (2, 3, Color.BLUE),
                                 (1, 3, Color.RED), (4, 4, Color.GREEN)])
    base, _ = has_odd_red_cycle(g)
    assert base
    bigger = ColoredMultigraph.of(8, set(g.edges) | {(7, 8, Color.RED)})
    again, _ = has_odd_red_cycle(bigger)
    assert again


def _random_multigraph(rng, n, max_edges):
    triples = []
    for _ in range(rng.randint(0, max_edges)):
        kind = rng.random()
        if kind < 0.15:
            v = rng.randint(1, n)
            triples.append((v, v, Color.GREEN))
        else:
            i = rng.randint(1, n - 1)
            j = rng.randint(i + 1, n)
            triples.append((i, j, rng.choice((Color.BLUE, Color.RED))))
    return ColoredMultigraph.of(n, triples)


def test_odd_red_cycle_matches_enumeration_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(300):
        n = rng.randint(2, 5)
        g = _random_multigraph(rng, n, 8)
        found, witness = has_odd_red_cycle(g)
        assert found == brute_odd_red_cycle(g)
        if found:
            assert witness_is_odd_red_cycle(witness)
            assert all(e in g.edges for e in witness)


def test_closure_step_M_and_fixpoints():
    cycle3 = Digraph.of(3, [(1, 2), (2, 3), (3, 1)])
    fix, steps = iterate_M(cycle3)
    assert is_simple_complete(fix) and steps <= 2

    path = Digraph.of(3, [(1, 2), (2, 3)])
    fix, steps = iterate_M(path)
    assert fix.arcs == frozenset({(1, 2), (2, 3), (1, 3)})
    assert not is_simple_complete(fix)
    assert steps == 1

    complete = Digraph.of(3, [(i, j) for i in range(1, 4) for j in range(1, 4) if i != j])
    fix, steps = iterate_M(complete)
    assert steps == 0 and fix == complete

    with pytest.raises(NotSimple):
        closure_step_M(Digraph.of(2, [(1, 1)]))


def test_iterate_M_complete_iff_strongly_connected():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 4)
        arcs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        chosen = [a for a in arcs if rng.random() < 0.4]
        g = Digraph.of(n, chosen)
        fix, _ = iterate_M(g)
        assert is_simple_complete(fix) == strongly_connected(g)


def test_closure_step_T_rules():
    red_red = ColoredMultigraph.of(3, [(1, 2, Color.RED), (2, 3, Color.RED)])
    out = closure_step_T(red_red)
    assert out.edges == red_red.edges | {(1, 3, Color.BLUE)}

    red_blue = ColoredMultigraph.of(3, [(1, 2, Color.RED), (2, 3, Color.BLUE)])
    out = closure_step_T(red_blue)
    assert out.edges == red_blue.edges | {(1, 3, Color.RED)}

    single = ColoredMultigraph.of(3, [(1, 2, Color.BLUE)])
    fix, steps = iterate_T(single)
    assert fix == single and steps == 0

    # a blue+red multi-edge composes to nothing: endpoints coincide
    multi = ColoredMultigraph.of(2, [(1, 2, Color.BLUE), (1, 2, Color.RED)])
    assert closure_step_T(multi) == multi

    with pytest.raises(HasSelfLoop):
        closure_step_T(ColoredMultigraph.of(2, [(1, 1, Color.GREEN)]))


def test_iterate_T_completes_connected_graphs():
    path = ColoredMultigraph.of(4, [(1, 2, Color.BLUE), (2, 3, Color.RED),
                                    (3, 4, Color.BLUE)])
    fix, steps = iterate_T(path)
    covered = {(i, j) for i, j, _ in fix.edges}
    assert covered == {(i, j) for i in range(1, 4) for j in range(i + 1, 5)}
    assert steps >= 1


def test_circumjacent_digraph():
    g = Digraph.of(3, [(3, 1), (2, 3)])
    out = circumjacent_digraph(g, 1, 2)
    assert out.arcs == frozenset({(1, 3), (3, 2)})
    empty = Digraph.of(3, [])
    assert circumjacent_digraph(empty, 1, 2).arcs == frozenset()
    with pytest.raises(NotSimple):
        circumjacent_digraph(Digraph.of(2, [(1, 1)]), 1, 2)


def test_circumjacent_digraph_cardinality():
    # with no arcs between i and j, the result has deg_out(i) + deg_in(j)
    # arcs and only i, j, i's in-neighbors and j's out-neighbors keep degree
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(3, 6)
        arcs = {(a, b) for a in range(1, n + 1) for b in range(1, n + 1)
                if a != b and rng.random() < 0.35}
        i, j = rng.sample(range(1, n + 1), 2)
        arcs -= {(i, j), (j, i)}
        g = Digraph.of(n, arcs)
        out_i = sum(1 for a, b in arcs if a == j)   # j's out-arcs become i's
        in_j = sum(1 for a, b in arcs if b == i)    # i's in-arcs become j's
        result = circumjacent_digraph(g, i, j)
        assert len(result.arcs) == out_i + in_j


def test_circumjacent_undirected():
    g = UndirectedGraph.of(3, [(2, 3)])
    assert circumjacent_undirected(g, 1, 2).edges == frozenset({(1, 3)})
    g = UndirectedGraph.of(4, [])
    assert circumjacent_undirected(g, 1, 2).edges == frozenset()
    g = UndirectedGraph.of(3, [(1, 3), (2, 3)])
    assert circumjacent_undirected(g, 1, 2).edges == frozenset({(1, 3), (2, 3)})
