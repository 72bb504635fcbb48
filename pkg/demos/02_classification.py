"""The three classes of unoriented loop conditions.

Every condition whose graph is symmetric falls into exactly one of: trivial
(graph has a loop), bipartite (equivalent to commutativity), or non-bipartite
loopless (the weakest non-trivial conditions; the triangle identity is the
best-known member).  Oriented graphs are reported with the predicates that
settle their strength over finite algebras.
"""

from loopcond import (SIGGERS_IDENTITY, classify, clique, condition_from_graph,
                      cycle, equivalence_note, parse_condition, path, petersen)

named = {
    "siggers": parse_condition(SIGGERS_IDENTITY),
    "commutativity": parse_condition("t(x,y)=t(y,x)"),
    "trivial swap": parse_condition("t(x,y,z)=t(x,z,y)"),
    "oriented smooth": parse_condition("s(a,r,e,a)=s(r,a,r,e)"),
}
for name, c in named.items():
    result = classify(c)
    print(f"{name:16s} -> {result.kind.value}")
    print(f"  {equivalence_note(result)}")
    print()

# Conditions can also be built straight from a graph, one position per edge.
print("graph families:")
for label, g in (("C4", cycle(4)), ("C6", cycle(6)), ("path3", path(3)),
                 ("K3", clique(3)), ("K5", clique(5)), ("C7", cycle(7)),
                 ("petersen", petersen())):
    print(f"  {label:9s} -> {classify(condition_from_graph(g)).kind.value}")
