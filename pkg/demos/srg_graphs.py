"""Coset and syndrome graphs of two-weight codes are strongly regular."""

from __future__ import annotations

from chaincodes import make_ring, y_matrix
from chaincodes.codes import span
from chaincodes.graphs import complete_multipartite_parts, coset_graph, spectrum, syndrome_graph, verify_srg

z4 = make_ring("zpm", 2, m=2)
gen = y_matrix(z4, 2)

g = coset_graph(span(gen), 6)
p = verify_srg(g)
print("coset graph:", p.to_json())
print("  parts (count, size):", complete_multipartite_parts(g))
print("  spectrum:", spectrum(g))

s = verify_srg(syndrome_graph(gen))
print("syndrome graph:", s.to_json())
