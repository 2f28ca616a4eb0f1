"""Generator matrices for one-weight codes, block extensions, and the Y_k family."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ._guard import check_guard
from .chain_ring import ChainRing, ideal_indices
from .codes import CodeMatrix
from .errors import IndexOutOfRange, InvalidT, ValidationError


@dataclass(frozen=True)
class IdealBlockProfile:
    """Row counts b_0, ..., b_{m-1}; rows in block j take values in <theta^j>."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if any(b < 0 for b in self.sizes) or not any(self.sizes):
            raise ValidationError(f"profile {self.sizes} needs nonnegative sizes, at least one positive")

    @property
    def qdim(self) -> int:
        m = len(self.sizes)
        return sum((m - j) * b for j, b in enumerate(self.sizes))


def _product_columns(pools: list[np.ndarray]) -> np.ndarray:
    """All columns whose i-th entry ranges over ``pools[i]``, first row varying slowest."""
    check_guard(int(np.prod([len(p) for p in pools])), "column enumeration")
    cols = np.array(list(itertools.product(*[p.tolist() for p in pools])), dtype=np.int64)
    return cols.reshape(-1, len(pools)).T


def one_weight_generator(ring: ChainRing, profile: IdealBlockProfile | tuple[int, ...]) -> CodeMatrix:
    """Every nonzero column with row block j drawn from <theta^j>; spans a one-weight code."""
    if not isinstance(profile, IdealBlockProfile):
        profile = IdealBlockProfile(tuple(profile))
    if len(profile.sizes) != ring.m:
        raise ValidationError(f"profile needs {ring.m} entries, got {len(profile.sizes)}")
    pools = [ideal_indices(ring, j) for j, b in enumerate(profile.sizes) for _ in range(b)]
    cols = _product_columns(pools)
    return CodeMatrix(ring, cols[:, 1:])  # column 0 is the zero vector


def extend_generator(gen: CodeMatrix, m0: int) -> CodeMatrix:
    """[G G ... G; 0 a_1 1 ... a_s 1] with {0, a_1, ..., a_s} = <theta^m0>."""
    ring = gen.ring
    if not 0 <= m0 <= ring.m - 1:
        raise IndexOutOfRange(f"m0={m0} outside 0..{ring.m - 1}")
    scalars = ideal_indices(ring, m0)
    top = np.tile(gen.entries, (1, len(scalars)))
    bottom = np.repeat(scalars, gen.cols)[None, :]
    return CodeMatrix(ring, np.vstack([top, bottom]))


def b_matrix(ring: ChainRing, k: int) -> np.ndarray:
    """All q^((m-1)k) vectors of <theta>^k as columns, zero column first.

    Returned as a raw array since k may be 0 (a 0-row matrix with one column).
    """
    if k < 0:
        raise ValidationError("k must be nonnegative")
    if k == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return _product_columns([ideal_indices(ring, 1)] * k)


def y_matrix(ring: ChainRing, k: int) -> CodeMatrix:
    """Y_1 = [1]; Y_k stacks Y_{k-1} over every scalar row, then B_{k-1} over an all-one row."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    q, m = ring.q, ring.m
    check_guard((q ** (m * k) - q ** ((m - 1) * k)) // (q**m - q ** (m - 1)), "Y_k width")
    y = np.ones((1, 1), dtype=np.int64)
    for level in range(2, k + 1):
        width = y.shape[1]
        left_top = np.tile(y, (1, ring.size))
        left_bottom = np.repeat(np.arange(ring.size), width)[None, :]
        b = b_matrix(ring, level - 1)
        right = np.vstack([b, np.ones((1, b.shape[1]), dtype=np.int64)])
        y = np.hstack([np.vstack([left_top, left_bottom]), right])
    return CodeMatrix(ring, y)


def y_matrix_width(ring: ChainRing, k: int) -> int:
    q, m = ring.q, ring.m
    return (q ** (m * k) - q ** ((m - 1) * k)) // (q**m - q ** (m - 1))


def optimal_two_weight_code(ring: ChainRing, k_profile, t: int) -> CodeMatrix:
    """Extend Y_t by k_0 - t steps at m0 = 0, then k_i steps at m0 = i for i = 1..m-1.

    The span is a Plotkin-optimal two-weight regular projective code of type
    ``k_profile`` and length q^(k-t)(q^t - 1)/(q^m - q^(m-1)).
    """
    k_profile = tuple(int(x) for x in k_profile)
    if len(k_profile) != ring.m or any(x < 0 for x in k_profile):
        raise ValidationError(f"type profile needs {ring.m} nonnegative entries")
    if not 1 <= t <= k_profile[0]:
        raise InvalidT(f"t={t} must satisfy 1 <= t <= k_0={k_profile[0]}")
    k = sum((ring.m - i) * x for i, x in enumerate(k_profile))
    check_guard(ring.q ** (k - t) * (ring.q**t - 1) // ring.num_units, "code length")
    gen = y_matrix(ring, t)
    steps = [0] * (k_profile[0] - t) + [i for i in range(1, ring.m) for _ in range(k_profile[i])]
    for m0 in steps:
        gen = extend_generator(gen, m0)
    return gen


def optimal_two_weight_length(ring: ChainRing, k_profile, t: int) -> int:
    k = sum((ring.m - i) * x for i, x in enumerate(k_profile))
    return ring.q ** (k - t) * (ring.q**t - 1) // ring.num_units


def extended_distribution(ring: ChainRing, dist: dict[int, int], n: int, m0: int) -> dict[int, int]:
    """Weight distribution after one :func:`extend_generator` step at ``m0``.

    Every weight scales by q^(m-m0).  The (q^(m-m0) - 1)|C| new codewords all
    carry weight q^(m-m0) (q^(m-1) - q^(m-2)) n, merging with an existing weight
    when the base code already has weight (q^(m-1) - q^(m-2)) n.
    """
    factor = ring.q ** (ring.m - m0)
    card = sum(dist.values())
    out = {factor * w: c for w, c in dist.items()}
    new_weight = factor * ring.gamma * n
    out[new_weight] = out.get(new_weight, 0) + (factor - 1) * card
    return dict(sorted(out.items()))
