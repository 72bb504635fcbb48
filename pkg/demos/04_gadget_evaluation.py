"""Primitive-positive definitions as gadgets.

A gadget is a pattern graph with typed edges (one type per input graph) and
distinguished vertices.  Evaluating it lists every tuple of images of the
distinguished vertices under pattern-preserving maps, i.e. the relation the
conjunctive formula defines.  pp-powers regroup coordinates into tuples over
a power of the universe.
"""

from loopcond import (Gadget, Relation, cycle, evaluate, pp_power, walk_gadget,
                      witness)

c9 = cycle(9)

# The identity gadget: one edge, endpoints distinguished.  Evaluating it
# returns the input's own edge set.
identity = Gadget(2, ((0, 0, 1),), (0, 1), 1)
print("identity gadget recovers the 9-cycle:",
      sorted(evaluate(identity, [c9]).tuples)[:4], "...")

# Walks of length 3 on the symmetric 9-cycle: steps may backtrack, so both
# offsets 1 and 3 appear (in both directions).
walks = evaluate(walk_gadget(3), [c9])
offsets = sorted({(b - a) % 9 for a, b in walks.tuples})
print("3-step walk offsets on C9:", offsets)

# A concrete witness for one tuple: the full path assignment.
print("a 3-step walk from 0 to 3:", witness(walk_gadget(3), [c9], (0, 3)))

# pp-power: a 4-ary relation over a 3-element universe becomes binary over
# the 9-element universe of pairs, first coordinate most significant.
r = Relation(3, 4, frozenset({(1, 2, 0, 1), (0, 0, 2, 2)}))
print("pp-power of a 4-ary relation:", sorted(pp_power(r, 2).tuples))
