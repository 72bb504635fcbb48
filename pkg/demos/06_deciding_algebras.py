"""Deciding loop conditions over concrete finite algebras.

The decision procedure realizes the free algebra on the condition's
variables as dense tables A^n -> A, seeds a closure with the pair of
projections for each condition-graph edge, and looks for a pair with equal
coordinates; provenance replay turns that pair into an explicit witness
term, which is re-verified by table comparison.

For the affine algebras (Z_m, x+y-z) there is an exact independent oracle:
a witness exists iff some coefficient vector with sum 1 balances every
variable's left and right occurrences.
"""

import json

from loopcond import (SIGGERS_IDENTITY, Satisfied, affine_remark_audit,
                      affine_satisfies, clique, condition_from_graph, cycle,
                      mod_affine_algebra, parse_condition, projection_algebra,
                      satisfies_condition, term_to_string)

z2 = mod_affine_algebra(2)   # x + y - z == x + y + z over Z_2
siggers = parse_condition(SIGGERS_IDENTITY)
commut = parse_condition("t(x,y)=t(y,x)")

for name, c in (("siggers", siggers), ("commutativity", commut),
                ("C5 condition", condition_from_graph(cycle(5))),
                ("K4 condition", condition_from_graph(clique(4)))):
    decision = satisfies_condition(z2, c)
    affine = affine_satisfies(2, c)
    shown = (f"Satisfied, witness {term_to_string(decision.term)}"
             if isinstance(decision, Satisfied) else type(decision).__name__)
    print(f"(Z_2, x+y+z) on {name:14s}: {shown};  affine oracle: {affine}")

print()
# Over the projection-only algebra a condition holds iff its graph has a
# loop: projections are the entire term clone.
proj = projection_algebra(2)
for text in ("t(x,y,z)=t(x,z,y)", SIGGERS_IDENTITY):
    decision = satisfies_condition(proj, parse_condition(text))
    print(f"projections on {text}: {type(decision).__name__}")

print()
# The classic three-element affine algebra does NOT separate commutativity
# from the triangle: m(x,x,y) = 2x+2y is commutative over Z_3.
print(json.dumps(affine_remark_audit(), indent=2, sort_keys=True))
