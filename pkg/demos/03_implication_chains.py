"""Implications between conditions via graph homomorphisms.

A homomorphism from the graph of C to the graph of D proves that C implies D.
The odd cycles map down to the triangle and the cliques embed upward, which
chains every non-bipartite loopless condition together in one direction.
The method is one-sided: triangle => 5-cycle is true (by the cycle
reduction) yet has no witnessing homomorphism.
"""

from loopcond import (clique, condition_from_graph, cycle, implies_by_hom,
                      print_condition)

chain = [("C9", cycle(9)), ("C7", cycle(7)), ("C5", cycle(5)),
         ("K3", clique(3)), ("K4", clique(4)), ("K5", clique(5))]

print("the implication chain:")
for (name_c, g), (name_d, h) in zip(chain, chain[1:]):
    c = condition_from_graph(g)
    d = condition_from_graph(h)
    hom = implies_by_hom(c, d)
    assert hom is not None and hom.is_valid()
    print(f"  {name_c} => {name_d}   via vertex map {list(hom.mapping)}")

print()
triangle = condition_from_graph(clique(3))
five = condition_from_graph(cycle(5))
print("C5 condition:", print_condition(five))
print("C5 => triangle:", implies_by_hom(five, triangle) is not None)
print("triangle => C5 by homomorphism:", implies_by_hom(triangle, five) is not None,
      " (the implication still holds, via the cycle reduction)")
