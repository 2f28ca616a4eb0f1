"""Tour of the chain rings: elements, units, ideals and the homogeneous weight."""

from __future__ import annotations

from chaincodes import make_ring
from chaincodes.chain_ring import format_token, ideal_elements, units

for ring in (make_ring("zpm", 2, m=3), make_ring("fqum", 2, 1, 2), make_ring("fqum", 2, 2, 2, (1, 1, 1))):
    tokens = [format_token(ring, a) for a in range(ring.size)]
    print(f"{ring.family.value} q={ring.q} m={ring.m}: {ring.size} elements, {ring.num_units} units")
    print("  weights:", dict(zip(tokens, ring.weight_table.tolist())))
    for j in range(ring.m + 1):
        print(f"  ideal {j}:", [format_token(ring, int(a)) for a in ideal_elements(ring, j)])
    print("  units:", [format_token(ring, int(a)) for a in units(ring)])
