"""Gray images of two-weight codes and their comparison with the SU1 family."""

from __future__ import annotations

from chaincodes import make_ring, optimal_two_weight_code, y_matrix
from chaincodes.codes import span
from chaincodes.gray import compare_su1, gray_image

f2u = make_ring("fqum", 2, 1, 2)
z8 = make_ring("zpm", 2, m=3)
z9 = make_ring("zpm", 3, m=2)

for name, gen in [("F_2+uF_2", y_matrix(f2u, 2)), ("Z_8", y_matrix(z8, 2)),
                  ("Z_9 (2,1)", optimal_two_weight_code(z9, (2, 1), 2))]:
    code = span(gen)
    image = gray_image(code)
    print(f"{name}: image length {image.length}, Hamming weights {image.hamming_distribution}")
    print(f"  linear over the residue field: {image.is_linear}, matches SU1: {compare_su1(code)}")
