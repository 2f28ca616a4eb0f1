"""Build the Y_k family and its extensions, then check the two-weight characterization."""

from __future__ import annotations

from chaincodes import make_ring, optimal_two_weight_code, y_matrix
from chaincodes.codes import characterize_two_weight, code_type, hom_weight_distribution, is_plotkin_optimal, span

z8 = make_ring("zpm", 2, m=3)
z9 = make_ring("zpm", 3, m=2)

cases = [
    ("Y_2 over Z_8", y_matrix(z8, 2)),
    ("profile (3,0,1), t=2 over Z_8", optimal_two_weight_code(z8, (3, 0, 1), 2)),
    ("profile (2,1), t=2 over Z_9", optimal_two_weight_code(z9, (2, 1), 2)),
]
for name, gen in cases:
    code = span(gen)
    report = characterize_two_weight(code)
    print(f"{name}: {gen.rows}x{gen.cols}, |C|={code.card}, type {code_type(code).k_profile}")
    print(f"  weights {hom_weight_distribution(code)}, optimal={is_plotkin_optimal(code)}, t={report.t}")
