"""Parsing identities and drawing their assigned graphs.

A loop condition is a single linear identity t(u1..un) = t(v1..vn).  Its
assigned graph has the variables as vertices and one directed edge (u_i, v_i)
per argument position, deduplicated.  Everything downstream (classification,
implication search, decision procedures) works on this graph.
"""

from loopcond import (SIGGERS_IDENTITY, condition_graph, has_loop,
                      parse_condition, print_condition, to_dot)

for text in (
    SIGGERS_IDENTITY,            # the 6-ary triangle identity
    "t(x,y)=t(y,x)",             # commutativity: a single unoriented edge
    "t(x,y,z)=t(x,z,y)",         # fixing one argument produces a loop
    "s(a,r,e,a)=s(r,a,r,e)",     # a genuinely oriented graph
):
    c = parse_condition(text)
    g = condition_graph(c)
    print(print_condition(c))
    print(f"  arity {c.arity}, variables {' '.join(c.variables)}")
    edges = ", ".join(f"{g.label(a)}->{g.label(b)}" for a, b in g.sorted_edges())
    print(f"  edges: {edges}")
    print(f"  loop: {has_loop(g)}")
    print()

# The Siggers identity's graph is the unoriented triangle; DOT renders
# symmetric graphs with undirected edges.
print(to_dot(condition_graph(parse_condition(SIGGERS_IDENTITY))))
