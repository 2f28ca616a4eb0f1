"""A three-weight code over Z_4, its triple sum set and the 3-walk-regular extension."""

from __future__ import annotations

import numpy as np

from chaincodes import make_ring
from chaincodes.codes import CodeMatrix, hom_weight_distribution, span
from chaincodes.graphs import (
    code_from_omega,
    extend_omega,
    is_tss,
    omega_from_columns,
    syndrome_graph,
    tss_criterion,
    verify_swrg,
)

z4 = make_ring("zpm", 2, m=2)
h = CodeMatrix(z4, np.array([[1, 0, 1, 1, 1, 2], [0, 1, 0, 3, 3, 1], [0, 0, 2, 2, 0, 0]]))
dist = hom_weight_distribution(span(h))
print("weights:", dist, "criterion:", tss_criterion(h.cols, [w for w in dist if w], z4))

omega = omega_from_columns(h)
print(f"|Omega|={len(omega)}, constants {is_tss(omega)}")

ext = extend_omega(omega, 1)
h_ext = code_from_omega(ext)
print(f"|Omega'|={len(ext)}, constants {is_tss(ext)}, H' is {h_ext.rows}x{h_ext.cols}")
print("3-walk counts of the syndrome graph:", verify_swrg(syndrome_graph(h_ext), 3).to_json())
