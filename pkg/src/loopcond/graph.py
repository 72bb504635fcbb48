"""Finite directed graphs: structural predicates, homomorphism search, families.

Graphs are immutable; every operation here is a pure function of its inputs.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from math import gcd

from .errors import BudgetExceeded, NotSymmetric, NotWeaklyConnected

Edge = tuple[int, int]

#: Default node-expansion budget for backtracking searches.
DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class DiGraph:
    """Directed graph on vertices 0..n-1 with optional vertex names."""

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for a, b in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a},{b}) out of range for n={self.n}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("labels must name every vertex")
            if len(set(self.labels)) != self.n:
                raise ValueError("vertex labels must be distinct")

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "DiGraph":
        return DiGraph(n, frozenset((a, b) for a, b in edges),
                       tuple(labels) if labels is not None else None)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Homomorphism:
    """A vertex map source -> target claimed to preserve all edges."""

    source: DiGraph
    target: DiGraph
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.n:
            raise ValueError("mapping must be total on the source vertices")
        for v in self.mapping:
            if not 0 <= v < self.target.n:
                raise ValueError("mapping hits a vertex outside the target")

    def is_valid(self) -> bool:
        m = self.mapping
        return all((m[a], m[b]) in self.target.edges for a, b in self.source.edges)

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)


def has_loop(g: DiGraph) -> bool:
    return any(a == b for a, b in g.edges)


def symmetric_part(g: DiGraph) -> DiGraph:
    kept = frozenset(e for e in g.edges if (e[1], e[0]) in g.edges)
    return DiGraph(g.n, kept, g.labels)


def is_symmetric(g: DiGraph) -> bool:
    return all((b, a) in g.edges for a, b in g.edges)


def _undirected_adjacency(g: DiGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in sorted(g.edges):
        adj[a].append(b)
    return adj


def is_bipartite(g: DiGraph) -> bool:
    """2-colorability of a symmetric graph; a loop counts as an odd cycle."""
    if not is_symmetric(g):
        raise NotSymmetric("bipartiteness is defined for symmetric graphs only")
    if has_loop(g):
        return False
    adj = _undirected_adjacency(g)
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def odd_girth(g: DiGraph) -> int | None:
    """Length of a shortest odd cycle of a symmetric graph; None iff bipartite.

    A loop is an odd cycle of length 1.  Computed as the shortest odd closed
    walk via breadth-first search over (vertex, parity) states.
    """
    if not is_symmetric(g):
        raise NotSymmetric("odd girth is defined for symmetric graphs only")
    adj = _undirected_adjacency(g)
    best: int | None = None
    for s in range(g.n):
        dist = [[-1, -1] for _ in range(g.n)]
        dist[s][0] = 0
        queue = deque([(s, 0)])
        while queue:
            v, p = queue.popleft()
            d = dist[v][p]
            if best is not None and d + 1 >= best:
                continue
            for w in adj[v]:
                if dist[w][1 - p] == -1:
                    dist[w][1 - p] = d + 1
                    queue.append((w, 1 - p))
        if dist[s][1] != -1 and (best is None or dist[s][1] < best):
            best = dist[s][1]
    return best


def is_smooth(g: DiGraph) -> bool:
    """True iff every vertex has at least one incoming and one outgoing edge."""
    outdeg = [0] * g.n
    indeg = [0] * g.n
    for a, b in g.edges:
        outdeg[a] += 1
        indeg[b] += 1
    return all(outdeg[v] >= 1 and indeg[v] >= 1 for v in range(g.n))


def is_weakly_connected(g: DiGraph) -> bool:
    if g.n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return all(seen)


def algebraic_length(g: DiGraph) -> int:
    """gcd of closed-walk discrepancies (forward steps minus backward steps).

    Computed by spanning-tree potentials: traversing an edge forward costs +1,
    backward -1; each edge (a, b) then contributes |pot[a] + 1 - pot[b]|.
    A homomorphism g -> directed k-cycle exists iff k divides the result,
    where every k divides 0.
    """
    if g.n == 0 or not g.edges:
        raise NotWeaklyConnected("algebraic length needs at least one edge")
    und: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for a, b in g.edges:
        und[a].append((b, 1))
        if a != b:
            und[b].append((a, -1))
    pot: list[int | None] = [None] * g.n
    pot[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w, step in und[v]:
            if pot[w] is None:
                pot[w] = pot[v] + step
                stack.append(w)
    if any(p is None for p in pot):
        raise NotWeaklyConnected("graph is not weakly connected")
    d = 0
    for a, b in g.edges:
        d = gcd(d, abs(pot[a] + 1 - pot[b]))
    return d


def _search_hom(g: DiGraph, h: DiGraph, injective: bool, budget: int,
                order: str) -> tuple[int, ...] | None:
    """Backtracking with forward checking.  Deterministic in "index" order:
    vertices assigned ascending, candidates ascending, first solution returned.
    """
    if injective and g.n > h.n:
        return None
    if g.n == 0:
        return ()
    h_edges = h.edges
    h_loops = [v for v in range(h.n) if (v, v) in h_edges]
    domains: dict[int, list[int]] = {}
    for v in range(g.n):
        domains[v] = list(h_loops) if (v, v) in g.edges else list(range(h.n))
    g_edges = g.edges
    expansions = 0

    def prune(rest: dict[int, list[int]], v: int, a: int) -> dict[int, list[int]] | None:
        new: dict[int, list[int]] = {}
        for u, dom in rest.items():
            flt = dom
            if (v, u) in g_edges:
                flt = [b for b in flt if (a, b) in h_edges]
            if (u, v) in g_edges:
                flt = [b for b in flt if (b, a) in h_edges]
            if injective:
                flt = [b for b in flt if b != a]
            if not flt:
                return None
            new[u] = flt
        return new

    def dfs(dom: dict[int, list[int]], partial: dict[int, int]) -> dict[int, int] | None:
        nonlocal expansions
        if not dom:
            return partial
        if order == "mrv":
            v = min(dom, key=lambda u: (len(dom[u]), u))
        else:
            v = min(dom)
        rest = {u: d for u, d in dom.items() if u != v}
        for a in dom[v]:
            expansions += 1
            if expansions > budget:
                raise BudgetExceeded(expansions)
            pruned = prune(rest, v, a)
            if pruned is None:
                continue
            partial[v] = a
            result = dfs(pruned, partial)
            if result is not None:
                return result
            del partial[v]
        return None

    solution = dfs(domains, {})
    if solution is None:
        return None
    return tuple(solution[v] for v in range(g.n))


def find_hom(g: DiGraph, h: DiGraph, *, budget: int = DEFAULT_BUDGET,
             order: str = "index") -> Homomorphism | None:
    """Find a graph homomorphism g -> h, or None if none exists.

    order="index" (default) is deterministic and returns the lexicographically
    least witness; order="mrv" picks most-constrained vertices first and makes
    no promise about which witness is returned.  Raises BudgetExceeded when
    the node-expansion budget runs out before an answer is known.
    """
    mapping = _search_hom(g, h, False, budget, order)
    if mapping is None:
        return None
    hom = Homomorphism(g, h, mapping)
    assert hom.is_valid()
    return hom


def find_embedding(g: DiGraph, h: DiGraph, *, budget: int = DEFAULT_BUDGET,
                   order: str = "index") -> Homomorphism | None:
    """Like find_hom but the witness must be injective (a subgraph copy)."""
    mapping = _search_hom(g, h, True, budget, order)
    if mapping is None:
        return None
    hom = Homomorphism(g, h, mapping)
    assert hom.is_valid() and hom.is_injective()
    return hom


def cycle(n: int) -> DiGraph:
    """Symmetric n-cycle; cycle(1) is a loop, cycle(2) a symmetric edge."""
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    edges = set()
    for i in range(n):
        edges.add((i, (i + 1) % n))
        edges.add(((i + 1) % n, i))
    return DiGraph(n, frozenset(edges))


def clique(n: int) -> DiGraph:
    """Loopless complete symmetric graph on n vertices."""
    if n < 1:
        raise ValueError("clique needs n >= 1")
    return DiGraph(n, frozenset((i, j) for i in range(n) for j in range(n) if i != j))


def directed_cycle(n: int) -> DiGraph:
    if n < 1:
        raise ValueError("directed_cycle needs n >= 1")
    return DiGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> DiGraph:
    """Symmetric path on n vertices (n - 1 unoriented edges)."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    edges = set()
    for i in range(n - 1):
        edges.add((i, i + 1))
        edges.add((i + 1, i))
    return DiGraph(n, frozenset(edges))


def petersen() -> DiGraph:
    """The Petersen graph: outer 5-cycle 0-4, inner pentagram 5-9, spokes."""
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    edges = set()
    for a, b in pairs:
        edges.add((a, b))
        edges.add((b, a))
    return DiGraph(10, frozenset(edges))


def to_dot(g: DiGraph) -> str:
    """DOT text; symmetric graphs render undirected with one `--` per pair."""
    lines = []
    touched = {v for e in g.edges for v in e}
    isolated = [f'  "{g.label(v)}";' for v in range(g.n) if v not in touched]
    if is_symmetric(g):
        lines.append("graph {")
        lines.extend(isolated)
        for a, b in g.sorted_edges():
            if a <= b:
                lines.append(f'  "{g.label(a)}" -- "{g.label(b)}";')
    else:
        lines.append("digraph {")
        lines.extend(isolated)
        for a, b in g.sorted_edges():
            lines.append(f'  "{g.label(a)}" -> "{g.label(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: DiGraph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]},
                      sort_keys=True)


def graph_from_json(text: str) -> DiGraph:
    data = json.loads(text)
    return DiGraph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
