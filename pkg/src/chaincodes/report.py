"""JSON-ready analysis records; key order is irrelevant since output is dumped with sorted keys."""

from __future__ import annotations

import json

from .codes import (
    CodeMatrix,
    LinearCode,
    characterize_two_weight,
    code_type,
    hom_weight_distribution,
    is_plotkin_optimal,
    is_projective,
    is_regular,
    min_hom_distance,
    plotkin_bound,
    span,
)
from .errors import NotApplicable, NotSrg, NotSwrg, NotTss
from .graphs import (
    Graph,
    OmegaSet,
    code_from_omega,
    complete_multipartite_parts,
    extend_omega,
    is_tss,
    tss_criterion,
    verify_srg,
    verify_swrg,
)
from .gray import gray_image
from .io import format_ring_descriptor
from .minimality import analyze_minimality


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


def _pairs(dist: dict[int, int]) -> list[list[int]]:
    return [[int(w), int(c)] for w, c in sorted(dist.items())]


def analyze_code(gen: CodeMatrix, gray: bool = False, minimal: bool = False) -> dict:
    code = span(gen)
    ring = gen.ring
    dist = hom_weight_distribution(code)
    d = min_hom_distance(code)
    try:
        characterization = characterize_two_weight(code).to_json()
    except NotApplicable:
        characterization = None
    record = {
        "ring": format_ring_descriptor(ring),
        "n": code.n,
        "type": list(code_type(code).k_profile),
        "qdim": code.qdim,
        "cardinality": code.card,
        "weight_distribution": _pairs(dist),
        "min_distance": d,
        "regular": is_regular(gen),
        "projective": is_projective(gen),
        "plotkin_bound": plotkin_bound(ring, code.n, code.card),
        "plotkin_optimal": is_plotkin_optimal(code),
        "two_weight_characterization": characterization,
    }
    if gray or minimal:
        image = gray_image(code)
        if gray:
            record["gray"] = gray_record(image)
        if minimal:
            record["minimal"] = analyze_minimality(image.vectors, ring.q, image.is_linear).to_json()
    return record


def gray_record(image) -> dict:
    return {
        "length": image.length,
        "hamming_distribution": _pairs(image.hamming_distribution),
        "linear": image.is_linear,
    }


def graph_record(g: Graph, swrg: bool = False) -> dict:
    record = {"N": g.n_vertices, "K": None, "lambda": None, "mu": None,
              "restricted_eigenvalues": None, "srg": False, "swrg3": None}
    try:
        record.update(verify_srg(g).to_json())
        record["srg"] = True
    except NotSrg as exc:
        record["violation"] = {"reason": str(exc), "pair": list(exc.witness)}
    parts = complete_multipartite_parts(g)
    record["complete_multipartite"] = list(parts) if parts else None
    if swrg:
        try:
            record["swrg3"] = verify_swrg(g, 3).to_json()
        except NotSwrg as exc:
            record["swrg3"] = None
            record["swrg3_violation"] = {"reason": str(exc), "pair": list(exc.witness)}
    return record


def tss_record(omega: OmegaSet) -> dict:
    record = {"k": omega.k, "omega_size": len(omega), "tss": False, "sigma0": None, "sigma1": None}
    try:
        consts = is_tss(omega)
        record.update(tss=True, sigma0=consts.sigma0, sigma1=consts.sigma1)
    except NotTss as exc:
        record["violation"] = {"reason": str(exc), "h": list(exc.witness)}
    h = code_from_omega(omega)
    dual = LinearCode(h)
    weights = sorted(w for w in hom_weight_distribution(dual) if w)
    record["n"] = h.cols
    record["dual_weights"] = weights
    record["criterion"] = tss_criterion(h.cols, weights, omega.ring) if len(weights) == 3 else None
    return record


def tss_report(omega: OmegaSet, extend: int | None = None) -> dict:
    record = tss_record(omega)
    if extend is not None:
        record["extended"] = tss_record(extend_omega(omega, extend))
    return record
