"""Minimal codewords of Gray images, the raw material of access structures."""

from __future__ import annotations

from chaincodes import make_ring, y_matrix
from chaincodes.codes import span
from chaincodes.gray import gray_image
from chaincodes.minimality import analyze_minimality, minimal_codewords

for ring in (make_ring("fqum", 2, 1, 2), make_ring("zpm", 2, m=3)):
    image = gray_image(span(y_matrix(ring, 2)))
    report = analyze_minimality(image.vectors, ring.q, image.is_linear)
    print(f"q={ring.q} m={ring.m}: {report.to_json()}")
    # each minimal codeword's support, minus the dealer's coordinate, is a minimal access set
    for word in minimal_codewords(image.vectors)[:3]:
        print("  support", [i for i, x in enumerate(word) if x])
