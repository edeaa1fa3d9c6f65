"""
Checking a coloring for neighborhood balance
=============================================

A coloring is balanced when every vertex sees as many red as blue
neighbors. The penalty adds up the imbalance over all vertices.
"""

from nbc import Coloring, Graph, is_nbc, parity_lower_bound, penalty

# the four-cycle 0-1-2-3-0
c4 = Graph.cycle(4)

# two adjacent blues, two adjacent reds: every vertex sees one of each
good = Coloring.from_string("BBRR")
print("BBRR", penalty(c4, good).total, is_nbc(c4, good))

# alternating colors: every vertex sees two neighbors of the same color
bad = Coloring.from_string("BRBR")
report = penalty(c4, bad)
print("BRBR", report.total, report.per_vertex)

# odd degrees make a vertex unbalanceable, so K4 can never score below 4
k4 = Graph.complete(4)
print("K4 lower bound", parity_lower_bound(k4))
for text in ("BBBB", "RBBB", "RRBB"):
    print(text, penalty(k4, Coloring.from_string(text)).total)
