"""Independent brute-force oracles used to compute and freeze expected values.

These deliberately avoid the library's search/composition code paths: full
enumeration of maps, naive fixpoints, and dynamic programming over walks.
"""

from itertools import permutations, product

from loopcond import DiGraph, Gadget, Relation, find_embedding


def all_homomorphisms(g: DiGraph, h: DiGraph) -> list[tuple[int, ...]]:
    """Every edge-preserving total map g -> h, by enumerating all |h|^|g|."""
    homs = []
    for mapping in product(range(h.n), repeat=g.n):
        if all((mapping[a], mapping[b]) in h.edges for a, b in g.edges):
            homs.append(mapping)
    return homs


def hom_exists_brute(g: DiGraph, h: DiGraph) -> bool:
    return any(all((m[a], m[b]) in h.edges for a, b in g.edges)
               for m in product(range(h.n), repeat=g.n))


def embedding_exists_brute(g: DiGraph, h: DiGraph) -> bool:
    if g.n > h.n:
        return False
    return any(all((m[a], m[b]) in h.edges for a, b in g.edges)
               for m in permutations(range(h.n), g.n))


def evaluate_brute(gadget: Gadget, inputs: list[DiGraph]) -> Relation:
    """Gadget semantics by enumerating all |V|^|U| assignments."""
    universe = inputs[0].n
    tuples = set()
    for f in product(range(universe), repeat=gadget.vertex_count):
        if all((f[a], f[b]) in inputs[t].edges for t, a, b in gadget.typed_edges):
            tuples.add(tuple(f[u] for u in gadget.distinguished))
    return Relation(universe, len(gadget.distinguished), frozenset(tuples))


def walk_pairs_brute(g: DiGraph, k: int) -> set[tuple[int, int]]:
    """Pairs joined by a directed walk of exactly k edges, stepwise."""
    current = {(v, v) for v in range(g.n)}
    for _ in range(k):
        current = {(a, c) for a, b in current for b2, c in g.edges if b2 == b}
    return current


def odd_girth_brute(g: DiGraph) -> int | None:
    """Shortest odd closed walk of a symmetric graph, scanning lengths."""
    for length in range(1, g.n + 1, 2):
        if any(a == b for a, b in walk_pairs_brute(g, length)):
            return length
    return None


def subpower_brute(algebra, k: int, generators) -> set[tuple[int, ...]]:
    """Naive fixpoint closure: full passes until nothing new appears."""
    current = {tuple(g) for g in generators}
    changed = True
    while changed:
        changed = False
        snapshot = sorted(current)
        for op in algebra.operations:
            for args in product(snapshot, repeat=op.arity):
                out = tuple(algebra.apply(op, tuple(t[j] for t in args))
                            for j in range(k))
                if out not in current:
                    current.add(out)
                    changed = True
    return current


def isomorphic(g: DiGraph, h: DiGraph) -> bool:
    """Same size, same edge count, and an injective hom: a graph isomorphism."""
    return (g.n == h.n and len(g.edges) == len(h.edges)
            and find_embedding(g, h) is not None)
