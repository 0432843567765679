"""
The indispensable complex and Q-matchings
=========================================

"""

from binedge.graphs import Graph
from binedge.complexes import (
    b_and_r,
    build_complex_edge_ideal,
    delta_Q,
    format_complex,
    omega,
    parse_complex,
)

G = Graph(4, [(1, 2), (2, 3), (1, 4), (3, 4), (1, 3)])

# for an edge ideal the complex is one edge (two monomials) per generator
cx = build_complex_edge_ideal(G)
print(format_complex(cx))

value, witness = delta_Q(cx, omega(cx))
print("delta over Omega:", value, "support", len(witness.supp))
print("b, r:", b_and_r(cx))

# a hand-written complex: a filled triangle plus an isolated vertex
tri = parse_complex("vertices 4\n{1}\n{2}\n{3}\n{4}\nfaces\n1 2 3\n")
for Q in ({0}, {0, 1}, {0, 1, 2}):
    print(sorted(Q), delta_Q(tri, Q)[0])
