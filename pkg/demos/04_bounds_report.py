"""
Bounds on the arithmetical rank
===============================

"""

from binedge.bounds import bounds_report
from binedge.graphs import Graph, complete_graph, cycle_graph

house = Graph(5, [(1, 2), (2, 3), (1, 3), (2, 4), (4, 5), (3, 5)])
rep = bounds_report(house)
print(rep.to_text())

# cycles: connectivity meets the binomial count
for n in range(3, 7):
    r = bounds_report(cycle_graph(n))
    print(n, r.ara_lower, r.ara_upper, r.lower_source, r.upper_source)

# complete graphs leave a gap between height and 2n-3 only for n >= 4
for n in range(3, 6):
    r = bounds_report(complete_graph(n))
    print(n, r.ht, r.ara_lower, r.ara_upper, r.ara_exact)

# the full machine-readable form
print(rep.dumps())
