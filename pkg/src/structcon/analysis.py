"""Graph predicates and closure maps used by the verdict checkers.

Includes components and connectivity for all three graph families, the
parity-based odd-red-cycle detector, the one-step digraph and colored
transitive closure maps with their fixpoint iterators, and the circumjacent
closures that mirror bracketing against a single generator.
"""

from __future__ import annotations

from collections import deque

from .errors import HasSelfLoop, NotSimple
from .graphs import Color, ColoredMultigraph, Digraph, UndirectedGraph

OddRedWitness = tuple[tuple[int, int, Color], ...]


def _joining_pairs(g: UndirectedGraph | ColoredMultigraph) -> set[tuple[int, int]]:
    if isinstance(g, UndirectedGraph):
        return set(g.edges)
    # green self-loops join nothing
    return {(i, j) for i, j, c in g.edges if i != j}


def components(g: UndirectedGraph | ColoredMultigraph) -> list[frozenset[int]]:
    """Partition of 1..n by reachability; isolated nodes are singletons."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for i, j in _joining_pairs(g):
        adj[i].add(j)
        adj[j].add(i)
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for root in range(1, g.n + 1):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in comp:
                    comp.add(v)
                    queue.append(v)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: UndirectedGraph | ColoredMultigraph) -> bool:
    return len(components(g)) == 1


def _reachable(n: int, adj: dict[int, set[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def strongly_connected(g: Digraph) -> bool:
    """Every ordered node pair mutually reachable; self-loops are ignored."""
    if g.n == 1:
        return True
    fwd: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    back: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for i, j in g.arcs:
        if i != j:
            fwd[i].add(j)
            back[j].add(i)
    full = set(range(1, g.n + 1))
    return _reachable(g.n, fwd, 1) == full and _reachable(g.n, back, 1) == full


def weak_components(g: Digraph) -> list[frozenset[int]]:
    """Components of the digraph with arc directions ignored."""
    undirected = UndirectedGraph.of(g.n, ((i, j) for i, j in g.arcs if i != j))
    return components(undirected)


def digraph_self_loops(g: Digraph) -> frozenset[int]:
    return frozenset(i for i, j in g.arcs if i == j)


# ---------------------------------------------------------------------------
# odd-red-cycle detection (parity 2-coloring per component)
# ---------------------------------------------------------------------------


def has_odd_red_cycle(g: ColoredMultigraph) -> tuple[bool, OddRedWitness | None]:
    """Detect a closed walk with an odd number of red edges.

    Blue edges preserve the parity class of their endpoints, red edges flip
    it; a parity conflict found while 2-coloring a component is exactly an
    odd-red cycle.  A blue+red multi-edge is the 2-cycle special case.
    Green self-loops are ignored.  When found, returns a witness cycle as an
    edge sequence whose red count is odd.
    """
    adj: dict[int, list[tuple[int, Color]]] = {v: [] for v in range(1, g.n + 1)}
    for i, j, c in sorted(g.edges, key=lambda e: (e[0], e[1], e[2].value)):
        if c is Color.GREEN:
            continue
        adj[i].append((j, c))
        adj[j].append((i, c))

    potential: dict[int, int] = {}
    parent: dict[int, tuple[int, Color] | None] = {}
    for root in range(1, g.n + 1):
        if root in potential:
            continue
        potential[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, c in adj[u]:
                flip = 1 if c is Color.RED else 0
                if v not in potential:
                    potential[v] = potential[u] ^ flip
                    parent[v] = (u, c)
                    queue.append(v)
                elif potential[v] != potential[u] ^ flip:
                    return True, _conflict_cycle(u, v, c, parent)
    return False, None


def _tree_path(v: int, parent: dict[int, tuple[int, Color] | None]) -> list[int]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]][0])  # type: ignore[index]
    return path


def _conflict_cycle(u: int, v: int, c: Color,
                    parent: dict[int, tuple[int, Color] | None]) -> OddRedWitness:
    pu, pv = _tree_path(u, parent), _tree_path(v, parent)
    common = set(pu) & set(pv)
    lca = next(x for x in pu if x in common)

    def edges_up(path: list[int]) -> list[tuple[int, int, Color]]:
        out = []
        for node in path:
            if node == lca:
                break
            up, color = parent[node]  # type: ignore[misc]
            out.append((min(node, up), max(node, up), color))
        return out

    walk = [(min(u, v), max(u, v), c)]
    walk += edges_up(pv)
    walk += list(reversed(edges_up(pu)))
    return tuple(walk)


def has_multi_edge(g: ColoredMultigraph) -> bool:
    """True when some node pair carries more than one edge."""
    seen: set[tuple[int, int]] = set()
    for i, j, c in g.edges:
        if c is Color.GREEN:
            continue
        if (i, j) in seen:
            return True
        seen.add((i, j))
    return False


def green_loops(g: ColoredMultigraph) -> frozenset[int]:
    return frozenset(i for i, j, c in g.edges if c is Color.GREEN)


# ---------------------------------------------------------------------------
# transitive closure maps
# ---------------------------------------------------------------------------


def closure_step_M(g: Digraph) -> Digraph:
    """Add (i, k) for every 2-path i -> j -> k with i != k (simple digraphs)."""
    if digraph_self_loops(g):
        raise NotSimple("the digraph closure map is defined on simple digraphs")
    out: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for i, j in g.arcs:
        out[i].add(j)
    new = set(g.arcs)
    for i, j in g.arcs:
        for k in out[j]:
            if k != i:
                new.add((i, k))
    return Digraph(g.n, frozenset(new))


def iterate_M(g: Digraph) -> tuple[Digraph, int]:
    """Fixpoint of the digraph closure map and the productive step count."""
    steps = 0
    cap = g.n * g.n  # safety bound; the edge set is monotone and bounded
    current = g
    for _ in range(cap):
        nxt = closure_step_M(current)
        if nxt == current:
            break
        current = nxt
        steps += 1
    return current, steps


def is_simple_complete(g: Digraph) -> bool:
    wanted = {(i, j) for i in range(1, g.n + 1) for j in range(1, g.n + 1) if i != j}
    return set(g.arcs) == wanted


def closure_step_T(g: ColoredMultigraph) -> ColoredMultigraph:
    """One step of the edge-colored closure: blue.blue -> blue,
    red.red -> blue, red.blue -> red (endpoints distinct)."""
    if any(i == j for i, j, _ in g.edges):
        raise HasSelfLoop("the colored closure map is defined on loop-free graphs")
    edges = sorted(g.edges, key=lambda e: (e[0], e[1], e[2].value))
    new = set(g.edges)
    for e1 in edges:
        for e2 in edges:
            if e1 == e2:
                continue
            shared = {e1[0], e1[1]} & {e2[0], e2[1]}
            for j in shared:
                i = e1[0] if e1[1] == j else e1[1]
                k = e2[0] if e2[1] == j else e2[1]
                if i == k:
                    continue
                c1, c2 = e1[2], e2[2]
                if c1 is Color.BLUE and c2 is Color.BLUE:
                    new.add((min(i, k), max(i, k), Color.BLUE))
                elif c1 is Color.RED and c2 is Color.RED:
                    new.add((min(i, k), max(i, k), Color.BLUE))
                elif c1 is Color.RED and c2 is Color.BLUE:
                    new.add((min(i, k), max(i, k), Color.RED))
    return ColoredMultigraph(g.n, frozenset(new))


def iterate_T(g: ColoredMultigraph) -> tuple[ColoredMultigraph, int]:
    steps = 0
    cap = g.n * g.n
    current = g
    for _ in range(cap):
        nxt = closure_step_T(current)
        if nxt == current:
            break
        current = nxt
        steps += 1
    return current, steps


# ---------------------------------------------------------------------------
# circumjacent closures
# ---------------------------------------------------------------------------


def circumjacent_digraph(g: Digraph, i: int, j: int) -> Digraph:
    """Arcs {(i,k) : (j,k) in E, k != i} union {(k,j) : (k,i) in E, k != j}."""
    if digraph_self_loops(g):
        raise NotSimple("the circumjacent closure is defined on simple digraphs")
    new: set[tuple[int, int]] = set()
    for a, b in g.arcs:
        if a == j and b != i:
            new.add((i, b))
        if b == i and a != j:
            new.add((a, j))
    return Digraph(g.n, frozenset(new))


def circumjacent_undirected(g: UndirectedGraph, i: int, j: int) -> UndirectedGraph:
    """Edges {{i,k} : {j,k} in E} union {{j,k} : {i,k} in E}, loops dropped."""
    new: set[tuple[int, int]] = set()
    for a, b in g.edges:
        for x, y in ((a, b), (b, a)):
            if x == j and y != i:
                new.add((min(i, y), max(i, y)))
            if x == i and y != j:
                new.add((min(j, y), max(j, y)))
    return UndirectedGraph(g.n, frozenset(new))
