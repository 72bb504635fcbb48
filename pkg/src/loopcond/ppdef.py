"""Relations over finite universes and primitive-positive gadget evaluation.

A gadget is a conjunctive formula in graph form: a vertex set with typed
edges (one type per binary input slot) and a list of distinguished vertices.
Evaluating it against input graphs yields the defined relation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .errors import ArityNotDivisible, BudgetExceeded, SlotMismatch
from .graph import DEFAULT_BUDGET, DiGraph


@dataclass(frozen=True)
class Relation:
    """A k-ary relation: a set of k-tuples over 0..universe_size-1."""

    universe_size: int
    arity: int
    tuples: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.universe_size < 1:
            raise ValueError("universe must be nonempty")
        if self.arity < 0:
            raise ValueError("arity must be nonnegative")
        for t in self.tuples:
            if len(t) != self.arity:
                raise ValueError(f"tuple {t} has wrong arity")
            if any(not 0 <= x < self.universe_size for x in t):
                raise ValueError(f"tuple {t} leaves the universe")

    @classmethod
    def full(cls, universe_size: int, arity: int) -> "Relation":
        return cls(universe_size, arity,
                   frozenset(product(range(universe_size), repeat=arity)))

    def sorted_tuples(self) -> list[tuple[int, ...]]:
        return sorted(self.tuples)


def graph_to_relation(g: DiGraph) -> Relation:
    return Relation(g.n, 2, frozenset(g.edges))


def relation_to_graph(r: Relation) -> DiGraph:
    if r.arity != 2:
        raise ValueError("only binary relations are graphs")
    return DiGraph(r.universe_size, frozenset(r.tuples))


@dataclass(frozen=True)
class Gadget:
    """Pattern graph with typed edges and distinguished output vertices.

    typed_edges holds triples (slot, a, b): the image of (a, b) must be an
    edge of the slot-th input graph.  Distinguished vertices may repeat,
    which imposes equality between output coordinates.
    """

    vertex_count: int
    typed_edges: tuple[tuple[int, int, int], ...]
    distinguished: tuple[int, ...]
    slot_count: int

    def __post_init__(self):
        if self.vertex_count < 0 or self.slot_count < 0:
            raise ValueError("counts must be nonnegative")
        for t, a, b in self.typed_edges:
            if not 0 <= t < self.slot_count:
                raise ValueError(f"edge type {t} has no input slot")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge ({a},{b}) out of range")
        for u in self.distinguished:
            if not 0 <= u < self.vertex_count:
                raise ValueError(f"distinguished vertex {u} out of range")

    @property
    def arity(self) -> int:
        return len(self.distinguished)


def gadget_to_json(g: Gadget) -> str:
    return json.dumps({
        "vertices": g.vertex_count,
        "edges": [list(e) for e in g.typed_edges],
        "distinguished": list(g.distinguished),
        "slots": g.slot_count,
    }, sort_keys=True)


def gadget_from_json(text: str) -> Gadget:
    data = json.loads(text)
    return Gadget(int(data["vertices"]),
                  tuple(tuple(e) for e in data["edges"]),
                  tuple(data["distinguished"]),
                  int(data["slots"]))


class _GadgetSolver:
    """Existence search for gadget assignments with some vertices pinned."""

    def __init__(self, gadget: Gadget, inputs: list[DiGraph], budget: int):
        if len(inputs) != gadget.slot_count:
            raise SlotMismatch(
                f"gadget declares {gadget.slot_count} slots, got {len(inputs)} inputs")
        if not inputs:
            raise SlotMismatch("at least one input graph is required")
        universe = inputs[0].n
        if any(g.n != universe for g in inputs):
            raise SlotMismatch("input graphs must share one vertex set")
        self.gadget = gadget
        self.universe = universe
        self.budget = budget
        self.expansions = 0
        edge_sets = [g.edges for g in inputs]
        # successor/predecessor sets per slot, for support checks
        self.succ = [[set() for _ in range(universe)] for _ in edge_sets]
        self.pred = [[set() for _ in range(universe)] for _ in edge_sets]
        for t, es in enumerate(edge_sets):
            for a, b in es:
                self.succ[t][a].add(b)
                self.pred[t][b].add(a)
        self.constraints: list[list[tuple[int, int, bool]]] = [
            [] for _ in range(gadget.vertex_count)]
        loop_ok = [set(range(universe)) for _ in range(gadget.vertex_count)]
        for t, a, b in gadget.typed_edges:
            if a == b:
                loop_ok[a] &= {x for x in range(universe) if (x, x) in edge_sets[t]}
            else:
                self.constraints[a].append((b, t, True))
                self.constraints[b].append((a, t, False))
        self.base = self._arc_consistent(
            [sorted(loop_ok[v]) for v in range(gadget.vertex_count)])

    def _arc_consistent(self, domains: list[list[int]]) -> list[list[int]]:
        changed = True
        while changed:
            changed = False
            for v in range(self.gadget.vertex_count):
                for u, t, forward in self.constraints[v]:
                    du = set(domains[u])
                    nbr = self.succ[t] if forward else self.pred[t]
                    kept = [x for x in domains[v] if nbr[x] & du]
                    if len(kept) != len(domains[v]):
                        domains[v] = kept
                        changed = True
        return domains

    def solve(self, pins: dict[int, int]) -> tuple[int, ...] | None:
        """Extend pinned vertices to a full assignment, or report None."""
        domains: dict[int, list[int]] = {}
        for v in range(self.gadget.vertex_count):
            if v in pins:
                if pins[v] not in self.base[v]:
                    return None
                domains[v] = [pins[v]]
            else:
                domains[v] = self.base[v]
        # check constraints among pinned vertices up front
        for v, a in pins.items():
            for u, t, forward in self.constraints[v]:
                if u in pins:
                    edge = (a, pins[u]) if forward else (pins[u], a)
                    if edge[1] not in self.succ[t][edge[0]]:
                        return None
        assignment = self._dfs(domains, {})
        if assignment is None:
            return None
        return tuple(assignment[v] for v in range(self.gadget.vertex_count))

    def _dfs(self, domains: dict[int, list[int]],
             partial: dict[int, int]) -> dict[int, int] | None:
        if not domains:
            return partial
        v = min(domains, key=lambda u: (len(domains[u]), u))
        rest = {u: d for u, d in domains.items() if u != v}
        for a in domains[v]:
            self.expansions += 1
            if self.expansions > self.budget:
                raise BudgetExceeded(self.expansions)
            pruned = self._prune(rest, v, a)
            if pruned is None:
                continue
            partial[v] = a
            result = self._dfs(pruned, partial)
            if result is not None:
                return result
            del partial[v]
        return None

    def _prune(self, rest: dict[int, list[int]], v: int,
               a: int) -> dict[int, list[int]] | None:
        new = dict(rest)
        for u, t, forward in self.constraints[v]:
            if u not in new:
                continue
            allowed = self.succ[t][a] if forward else self.pred[t][a]
            flt = [b for b in new[u] if b in allowed]
            if not flt:
                return None
            new[u] = flt
        return new


def _pin_distinguished(gadget: Gadget, values: tuple[int, ...]) -> dict[int, int] | None:
    pins: dict[int, int] = {}
    for vert, val in zip(gadget.distinguished, values):
        if pins.get(vert, val) != val:
            return None
        pins[vert] = val
    return pins


def evaluate(gadget: Gadget, inputs: list[DiGraph], *,
             budget: int = DEFAULT_BUDGET) -> Relation:
    """The relation defined by the gadget over the given input graphs.

    A tuple (v1..vk) is included iff some map from gadget vertices to input
    vertices sends each distinguished vertex to its v_i and every typed edge
    into the corresponding input graph.  Distinguished vertices are pinned in
    an outer enumeration; the rest is backtracking with forward checking.
    """
    solver = _GadgetSolver(gadget, inputs, budget)
    k = gadget.arity
    found = set()
    if any(not d for d in solver.base):
        return Relation(solver.universe, k, frozenset())
    for values in product(range(solver.universe), repeat=k):
        pins = _pin_distinguished(gadget, values)
        if pins is None:
            continue
        if solver.solve(pins) is not None:
            found.add(values)
    return Relation(solver.universe, k, frozenset(found))


def witness(gadget: Gadget, inputs: list[DiGraph], values: tuple[int, ...], *,
            budget: int = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """A full gadget assignment realizing the given output tuple, or None."""
    if len(values) != gadget.arity:
        raise ValueError("witness tuple must match the gadget arity")
    solver = _GadgetSolver(gadget, inputs, budget)
    pins = _pin_distinguished(gadget, values)
    if pins is None:
        return None
    return solver.solve(pins)


def pp_power(r: Relation, l: int) -> Relation:
    """Regroup a (k*l)-ary relation as k-ary over universe^l.

    Blocks of l consecutive coordinates become single elements, encoded in
    mixed radix with the first coordinate most significant.
    """
    if l < 1:
        raise ValueError("power exponent must be positive")
    if r.arity % l != 0:
        raise ArityNotDivisible(f"arity {r.arity} is not divisible by {l}")
    k = r.arity // l
    base = r.universe_size
    tuples = set()
    for t in r.tuples:
        coded = []
        for i in range(k):
            c = 0
            for x in t[i * l:(i + 1) * l]:
                c = c * base + x
            coded.append(c)
        tuples.add(tuple(coded))
    return Relation(base ** l, k, frozenset(tuples))


def pp_flatten(r: Relation, l: int, base: int) -> Relation:
    """Inverse of pp_power: decode each coordinate back into l coordinates."""
    if l < 1:
        raise ValueError("power exponent must be positive")
    if base ** l != r.universe_size:
        raise ValueError("universe is not the stated power")
    tuples = set()
    for t in r.tuples:
        flat: list[int] = []
        for c in t:
            block = []
            for _ in range(l):
                block.append(c % base)
                c //= base
            flat.extend(reversed(block))
        tuples.add(tuple(flat))
    return Relation(base, r.arity * l, frozenset(tuples))
