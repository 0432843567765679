"""
Chains of triangles joined by paths
===================================

"""

from binedge.bounds import bounds_report, build_triangle_chain, generate_certificate, verify_certificate
from binedge.graphs import print_graph, recognize_family

G = build_triangle_chain(2, (2,))
print(print_graph(G))
print(recognize_family(G).to_json())

rep = bounds_report(G)
print(rep.ht, rep.unmixed, rep.stci, rep.ara_exact)

# longer chains: the certificate matches the height, so these are set-theoretic complete intersections
for k, r in [(3, (2, 2)), (3, (3, 2)), (4, (2, 2, 2))]:
    G = build_triangle_chain(k, r)
    cert = generate_certificate(G)
    print(k, r, G.n, bounds_report(G).ht, cert.size, verify_certificate(G, cert).status)
