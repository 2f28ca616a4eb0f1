"""Few-homogeneous-weight linear codes over finite chain rings, their Gray images and graphs."""

from .chain_ring import ChainRing, Family, RingElement, hom_weight, make_ring
from .codes import (
    CodeMatrix,
    LinearCode,
    characterize_two_weight,
    code_type,
    dual_bruteforce,
    hom_weight_distribution,
    is_plotkin_optimal,
    is_projective,
    is_regular,
    min_hom_distance,
    plotkin_bound,
    span,
)
from .constructions import extend_generator, one_weight_generator, optimal_two_weight_code, y_matrix
from .graphs import (
    OmegaSet,
    coset_graph,
    extend_omega,
    is_tss,
    syndrome_graph,
    tss_criterion,
    verify_srg,
    verify_swrg,
)
from .gray import compare_su1, gray_image, gray_vector, su1_parameters
from .io import parse_matrix, parse_ring_descriptor, read_matrix, write_matrix
from .minimality import analyze_minimality, minimal_codewords

__version__ = "0.1.0"

__all__ = [
    "ChainRing",
    "CodeMatrix",
    "Family",
    "LinearCode",
    "OmegaSet",
    "RingElement",
    "analyze_minimality",
    "characterize_two_weight",
    "code_type",
    "compare_su1",
    "coset_graph",
    "dual_bruteforce",
    "extend_generator",
    "extend_omega",
    "gray_image",
    "gray_vector",
    "hom_weight",
    "hom_weight_distribution",
    "is_plotkin_optimal",
    "is_projective",
    "is_regular",
    "is_tss",
    "make_ring",
    "min_hom_distance",
    "minimal_codewords",
    "one_weight_generator",
    "optimal_two_weight_code",
    "parse_matrix",
    "parse_ring_descriptor",
    "plotkin_bound",
    "read_matrix",
    "span",
    "su1_parameters",
    "syndrome_graph",
    "tss_criterion",
    "verify_srg",
    "verify_swrg",
    "write_matrix",
    "y_matrix",
]
