"""
Graphs, vertex connectivity and minimal primes
==============================================

"""

from binedge.graphs import Graph, parse_graph, recognize_family, vertex_connectivity
from binedge.edgeideal import build_edge_ideal, height_and_unmixed, minimal_primes

# a 4-cycle with one chord: the "diamond"
G = parse_graph("4 5\n1 2\n2 3\n1 4\n3 4\n1 3\n")
print(G.n, G.m, vertex_connectivity(G))

# its binomial edge ideal, one generator per edge
E = build_edge_ideal(G)
for (i, j), f in zip(G.edges, E.generators):
    print(f"f_{i}{j} =", f)

# minimal primes come from cut sets; the chord endpoints disconnect 2 from 4
for P in minimal_primes(G):
    print(P.S, P.dimension, P.describe())

ht, unmixed, dims = height_and_unmixed(G)
print("height", ht, "unmixed", unmixed, "dims", dims)

# the square is not unmixed either: deleting a diagonal pair drops the dimension
C4 = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
print(height_and_unmixed(C4)[:2], recognize_family(C4).kind)
