"""Homogeneous-weight Gray map R^n -> F_q^(q^(m-1) n) built on first-order Reed-Muller vectors."""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass

import numpy as np

from ._guard import check_guard
from .chain_ring import ChainRing, GaloisField
from .codes import LinearCode, characterize_two_weight, hom_weight_distribution
from .errors import InternalInconsistency, InvalidParameters


def _kron(field: GaloisField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # (a_1 b, a_2 b, ...): the left factor varies slowest
    return field.mul_table[a[:, None], b[None, :]].ravel()


@functools.lru_cache(maxsize=None)
def gray_basis(ring: ChainRing) -> np.ndarray:
    """Rows c_0, ..., c_{m-1}; c_i is a tensor product with u in factor i and v elsewhere."""
    field = ring.field
    u = np.arange(ring.q)
    v = np.ones(ring.q, dtype=np.int64)
    rows = []
    for i in range(ring.m):
        vec = np.ones(1, dtype=np.int64)
        for j in range(ring.m - 1):
            vec = _kron(field, vec, u if i == j else v)
        rows.append(vec)
    basis = np.array(rows)
    basis.flags.writeable = False
    return basis


@functools.lru_cache(maxsize=None)
def gray_table(ring: ChainRing) -> np.ndarray:
    """Row ``a`` holds phi(a) = sum_i a^(i) c_i."""
    field = ring.field
    basis = gray_basis(ring)
    table = np.zeros((ring.size, basis.shape[1]), dtype=np.int64)
    for i in range(ring.m):
        scaled = field.mul_table[ring.digit_table[:, i][:, None], basis[i][None, :]]
        table = field.add_table[table, scaled]
    table.flags.writeable = False
    return table


def gray_element(ring: ChainRing, a: int) -> np.ndarray:
    return gray_table(ring)[int(a)].copy()


def gray_vector(ring: ChainRing, x) -> np.ndarray:
    """Concatenation of phi over the coordinates of x (or of each row, for a 2-D input)."""
    x = np.asarray(x, dtype=np.int64)
    img = gray_table(ring)[x]
    return img.reshape(*x.shape[:-1], -1)


def hamming_distance(x: np.ndarray, y: np.ndarray) -> int:
    return int((np.asarray(x) != np.asarray(y)).sum())


def fq_rank(field: GaloisField, rows: np.ndarray) -> int:
    """Rank over F_q by Gaussian elimination on field-index arrays."""
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        return 0
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    rank = 0
    nrows, ncols = a.shape
    for col in range(ncols):
        pivots = np.flatnonzero(a[rank:, col]) + rank
        if len(pivots) == 0:
            continue
        piv = pivots[0]
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = mul[inv[a[rank, col]], a[rank]]
        others = np.flatnonzero(a[:, col])
        others = others[others != rank]
        if len(others):
            factors = neg[a[others, col]]
            a[others] = add[a[others], mul[factors[:, None], a[rank][None, :]]]
        rank += 1
        if rank == nrows:
            break
    return rank


def is_linear_set(field: GaloisField, vectors: np.ndarray) -> bool:
    """A set is a subspace iff it contains 0 and has exactly q^rank elements."""
    vectors = np.unique(np.asarray(vectors, dtype=np.int64), axis=0)
    if not (vectors == 0).all(axis=1).any():
        return False
    return field.q ** fq_rank(field, vectors) == len(vectors)


def is_linear_by_closure(field: GaloisField, vectors: np.ndarray) -> bool:
    """Direct closure test under addition and scalar multiplication (quadratic; small sets only)."""
    vectors = np.unique(np.asarray(vectors, dtype=np.int64), axis=0)
    members = set(map(tuple, vectors.tolist()))
    for a in range(field.q):
        if any(tuple(field.mul_table[a][v].tolist()) not in members for v in vectors):
            return False
    for v in vectors:
        sums = field.add_table[v[None, :], vectors]
        if any(tuple(s) not in members for s in sums.tolist()):
            return False
    return True


@dataclass(frozen=True)
class GrayImage:
    vectors: np.ndarray
    hamming_distribution: dict[int, int]
    is_linear: bool

    @property
    def length(self) -> int:
        return self.vectors.shape[1]


def gray_image(code: LinearCode) -> GrayImage:
    ring = code.ring
    check_guard(code.card * code.n * ring.q ** (ring.m - 1), "Gray image size")
    vectors = gray_vector(ring, code.codewords)
    if len(np.unique(vectors, axis=0)) != code.card:
        raise InternalInconsistency("Gray map is not injective on this code")
    dist = dict(sorted(Counter(int(w) for w in (vectors != 0).sum(axis=1)).items()))
    if dist != hom_weight_distribution(code):
        raise InternalInconsistency("Hamming distribution of the image differs from the homogeneous one")
    vectors.flags.writeable = False
    return GrayImage(vectors, dist, is_linear_set(ring.field, vectors))


@dataclass(frozen=True)
class SU1Parameters:
    n: int
    k: int
    w1: int
    w2: int
    a1: int
    a2: int

    @property
    def distribution(self) -> dict[int, int]:
        return {0: 1, self.w1: self.a1, self.w2: self.a2}


def su1_parameters(q: int, ell: int, s: int) -> SU1Parameters:
    if ell <= 1 or not 1 <= s <= ell - 1:
        raise InvalidParameters(f"need ell > 1 and 1 <= s <= ell - 1, got ell={ell}, s={s}")
    return SU1Parameters(
        n=(q**ell - q**s) // (q - 1),
        k=ell,
        w1=q ** (ell - 1) - q ** (s - 1),
        w2=q ** (ell - 1),
        a1=q**ell - q ** (ell - s),
        a2=q ** (ell - s) - 1,
    )


def compare_su1(code: LinearCode) -> bool:
    """Whether the Gray image has the length and weight distribution of SU1(q, k, k - t)."""
    t = characterize_two_weight(code).t
    k = code.qdim
    if k - t < 1:
        return False
    su1 = su1_parameters(code.ring.q, k, k - t)
    image = gray_image(code)
    return image.length == su1.n and image.hamming_distribution == su1.distribution
