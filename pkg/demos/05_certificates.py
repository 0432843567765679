"""
Building and checking certificates
==================================

"""

from binedge.bounds import generate_certificate, verify_certificate
from binedge.edgeideal import build_edge_ideal
from binedge.graphs import Graph

paw = Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])

# three polynomials suffice: a triangle reduction at the apex of the tail
cert = generate_certificate(paw)
print(cert.to_text())
verdict = verify_certificate(paw, cert)
print(verdict.status, verdict.max_exponent)

# combine generators by hand; 1-based positions in the edge list
diamond = Graph(4, [(1, 2), (2, 3), (1, 4), (3, 4), (1, 3)])
cert = generate_certificate(diamond, sum_pairs=[(2, 3)])
print(cert.size, verify_certificate(diamond, cert).status)

# dropping a generator breaks the spanning check
f = build_edge_ideal(diamond).generators
bad = verify_certificate(diamond, [f[0], f[2], f[3], f[4]])
print(bad.status, bad.failed_step, bad.message)
