"""Minimal codewords of q-ary codes and the Ashikhmin-Barg sufficient condition."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ._guard import check_guard
from .errors import InvalidWeights, LengthMismatch


def support(c) -> tuple[int, ...]:
    return tuple(int(i) for i in np.flatnonzero(np.asarray(c)))


def covers(c1, c2) -> bool:
    """supp(c2) is a proper subset of supp(c1)."""
    c1, c2 = np.asarray(c1), np.asarray(c2)
    if c1.shape != c2.shape:
        raise LengthMismatch(f"lengths {c1.shape} and {c2.shape} differ")
    s1, s2 = c1 != 0, c2 != 0
    return bool(not (s2 & ~s1).any() and s1.sum() > s2.sum())


def minimal_mask(image: np.ndarray) -> np.ndarray:
    """Boolean mask over the rows of ``image``: nonzero and covering no other nonzero row."""
    image = np.asarray(image)
    check_guard(len(image) ** 2, "pairwise support comparisons")
    supp = (image != 0).astype(np.int64)
    sizes = supp.sum(axis=1)
    nonzero = sizes > 0
    inter = supp @ supp.T
    # row i covers row j when supp(j) is inside supp(i) and strictly smaller
    covered = (inter == sizes[None, :]) & (sizes[None, :] < sizes[:, None]) & nonzero[None, :]
    return nonzero & ~covered.any(axis=1)


def minimal_codewords(image: np.ndarray) -> np.ndarray:
    image = np.asarray(image)
    return image[minimal_mask(image)]


def ab_condition(w_min: int, w_max: int, q: int) -> bool:
    """w_min / w_max > (q - 1) / q, compared exactly."""
    if not 0 < w_min <= w_max:
        raise InvalidWeights(f"need 0 < w_min <= w_max, got {w_min}, {w_max}")
    return w_min * q > w_max * (q - 1)


@dataclass(frozen=True)
class MinimalityReport:
    total: int
    minimal: int
    all_minimal: bool
    ab_condition: bool
    linear: bool

    def to_json(self) -> dict:
        return asdict(self)


def analyze_minimality(image: np.ndarray, q: int, linear: bool) -> MinimalityReport:
    """Count minimal vectors among the nonzero rows of an image set."""
    image = np.asarray(image)
    weights = (image != 0).sum(axis=1)
    nonzero = weights[weights > 0]
    total = int(len(nonzero))
    minimal = int(minimal_mask(image).sum())
    ab = bool(total and ab_condition(int(nonzero.min()), int(nonzero.max()), q))
    return MinimalityReport(total, minimal, minimal == total, ab, linear)
