"""Coset and syndrome graphs of codes, strong (walk-)regularity checks, triple sum sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._guard import check_guard
from .chain_ring import ChainRing, ideal_indices
from .codes import CodeMatrix, LinearCode, linear_combinations
from .errors import (
    IndexOutOfRange,
    InternalInconsistency,
    NotRegularVector,
    NotSrg,
    NotSwrg,
    NotTss,
    NotUnitStable,
    ValidationError,
    WeightNotPresent,
)

DENSE_GUARD = 4096
SPECTRUM_CHECK_LIMIT = 256


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph as a dense 0/1 adjacency matrix; ``labels[i]`` names vertex i."""

    adjacency: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValidationError("adjacency must be square")
        if not np.array_equal(a, a.T) or a.diagonal().any() or not np.isin(a, (0, 1)).all():
            raise ValidationError("adjacency must be a symmetric 0/1 matrix with zero diagonal")
        object.__setattr__(self, "adjacency", a)

    @property
    def n_vertices(self) -> int:
        return self.adjacency.shape[0]

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adjacency[v]).tolist()

    def common_neighbors(self, u: int, v: int) -> int:
        return int((self.adjacency[u] & self.adjacency[v]).sum())


def _row_keys(ring: ChainRing, rows: np.ndarray) -> np.ndarray:
    """Injective integer key per row, monotone in lexicographic row order."""
    rows = np.asarray(rows, dtype=np.int64)
    powers = ring.size ** np.arange(rows.shape[1] - 1, -1, -1, dtype=np.int64)
    return rows @ powers


def coset_graph(code: LinearCode, w1: int) -> Graph:
    """Vertices are codewords; x ~ y when wt(x - y) = w1."""
    ring = code.ring
    check_guard(code.card, "codewords")
    if code.card > DENSE_GUARD:
        raise ValidationError(f"{code.card} vertices exceed the dense graph guard {DENSE_GUARD}")
    if w1 not in set(code.weights.tolist()) or w1 == 0:
        raise WeightNotPresent(f"{w1} is not a nonzero weight of the code")
    words = code.codewords
    adj = np.zeros((code.card, code.card), dtype=np.int64)
    for i, x in enumerate(words):
        diff = ring.sub_table[x[None, :], words]
        adj[i] = ring.weight_table[diff].sum(axis=1) == w1
    return Graph(adj, words)


def syndrome_graph(h: CodeMatrix) -> Graph:
    """Cayley graph on the column span of H with connection set {u h_i : u a unit}."""
    ring = h.ring
    check_guard(ring.size**h.rows, "column space")
    vertices = linear_combinations(ring, h.columns)
    if len(vertices) > DENSE_GUARD:
        raise ValidationError(f"{len(vertices)} vertices exceed the dense graph guard {DENSE_GUARD}")
    conn = connection_set(h)
    keys = _row_keys(ring, vertices)
    adj = np.zeros((len(vertices), len(vertices)), dtype=np.int64)
    for s in conn:
        targets = _row_keys(ring, ring.add_table[vertices, s[None, :]])
        idx = np.searchsorted(keys, targets)
        adj[np.arange(len(vertices)), idx] = 1
    return Graph(adj, vertices)


def connection_set(h: CodeMatrix) -> np.ndarray:
    """Distinct unit multiples of the columns of H, as rows."""
    ring = h.ring
    units = np.flatnonzero(ring.unit_mask)
    return np.unique(ring.mul_table[units[:, None, None], h.columns[None, :, :]].reshape(-1, h.rows), axis=0)


@dataclass(frozen=True)
class Surd:
    """The real number a + b * sqrt(d) with rational a, b and a non-square integer d > 1."""

    a: Fraction
    b: Fraction
    d: int

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        return f"{self.a} {'+' if self.b >= 0 else '-'} {abs(self.b)}*sqrt({self.d})"


def _exact(value: Fraction):
    return int(value) if value.denominator == 1 else value


def quadratic_roots(b: int, c: int):
    """Roots of x^2 + b x + c as ints, Fractions or :class:`Surd` records, larger first."""
    disc = b * b - 4 * c
    if disc < 0:
        raise InternalInconsistency("complex eigenvalues for a symmetric matrix")
    r = math.isqrt(disc)
    if r * r == disc:
        return (_exact(Fraction(-b + r, 2)), _exact(Fraction(-b - r, 2)))
    return (Surd(Fraction(-b, 2), Fraction(1, 2), disc), Surd(Fraction(-b, 2), Fraction(-1, 2), disc))


@dataclass(frozen=True)
class SrgParams:
    N: int
    K: int
    lam: int
    mu: int | None
    eigenvalues: tuple | None

    def feasible(self) -> bool:
        if self.mu is None:
            return True
        return self.K * (self.K - self.lam - 1) == (self.N - self.K - 1) * self.mu

    def to_json(self) -> dict:
        ev = None
        if self.eigenvalues is not None:
            ev = [e if isinstance(e, int) else str(e) for e in self.eigenvalues]
        return {"N": self.N, "K": self.K, "lambda": self.lam, "mu": self.mu, "restricted_eigenvalues": ev}


def spectrum(g: Graph, decimals: int = 6) -> dict[float, int]:
    """Distinct adjacency eigenvalues (rounded) with multiplicities."""
    vals = np.round(np.linalg.eigvalsh(g.adjacency.astype(float)), decimals) + 0.0
    uniq, counts = np.unique(vals, return_counts=True)
    return {float(v): int(c) for v, c in zip(uniq, counts)}


def verify_srg(g: Graph) -> SrgParams:
    """Check strong regularity exhaustively; raise :class:`NotSrg` with a violating pair."""
    a = g.adjacency
    n = g.n_vertices
    if n == 0:
        raise ValidationError("empty graph")
    deg = a.sum(axis=1)
    if (deg != deg[0]).any():
        v = int(np.flatnonzero(deg != deg[0])[0])
        raise NotSrg(f"vertex {v} has degree {deg[v]} != {deg[0]}", (0, v))
    k = int(deg[0])
    common = a @ a
    off = ~np.eye(n, dtype=bool)
    adjacent = (a == 1) & off
    nonadjacent = (a == 0) & off
    lam = mu = None
    if adjacent.any():
        vals = common[adjacent]
        lam = int(vals[0])
        if (vals != lam).any():
            i, j = np.argwhere(adjacent & (common != lam))[0]
            raise NotSrg(f"adjacent pair ({i}, {j}) has {common[i, j]} common neighbours, expected {lam}",
                         (int(i), int(j)))
    if nonadjacent.any():
        vals = common[nonadjacent]
        mu = int(vals[0])
        if (vals != mu).any():
            i, j = np.argwhere(nonadjacent & (common != mu))[0]
            raise NotSrg(f"non-adjacent pair ({i}, {j}) has {common[i, j]} common neighbours, expected {mu}",
                         (int(i), int(j)))
    if lam is None:
        lam = 0
    eig = None
    if mu is not None:
        eig = quadratic_roots(mu - lam, mu - k)
        if n <= SPECTRUM_CHECK_LIMIT:
            allowed = [float(k)] + [float(e) for e in eig]
            for value in spectrum(g):
                if min(abs(value - x) for x in allowed) > 1e-6:
                    raise InternalInconsistency(f"eigenvalue {value} not among {allowed}")
    params = SrgParams(n, k, lam, mu, eig)
    if not params.feasible():
        raise InternalInconsistency(f"parameters {params} violate K(K-lambda-1) = (N-K-1)mu")
    return params


def complete_multipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(number of parts, part size) if g is complete multipartite with equal parts, else None.

    Non-adjacency plus equality must be an equivalence relation whose classes are the parts.
    """
    a = g.adjacency
    same = (a == 0).astype(np.int64)
    # transitivity: i~j and j~k imply i~k
    if ((same @ same > 0) & (same == 0)).any():
        return None
    sizes = same.sum(axis=1)
    if (sizes != sizes[0]).any():
        return None
    return g.n_vertices // int(sizes[0]), int(sizes[0])


@dataclass(frozen=True)
class SwrgParams:
    lam: int
    mu: int | None
    nu: int

    def to_json(self) -> dict:
        return {"lambda": self.lam, "mu": self.mu, "nu": self.nu}


def walk_counts(g: Graph, ell: int) -> np.ndarray:
    n = g.n_vertices
    if n > DENSE_GUARD:
        raise ValidationError(f"{n} vertices exceed the dense graph guard {DENSE_GUARD}")
    # int64 holds every entry as long as N^ell stays below 2^62
    dtype = np.int64 if ell * math.log2(max(n, 2)) < 62 else object
    a = g.adjacency.astype(dtype)
    return np.linalg.matrix_power(a, ell) if dtype is np.int64 else _object_power(a, ell)


def _object_power(a: np.ndarray, ell: int) -> np.ndarray:
    out = a.copy()
    for _ in range(ell - 1):
        out = out.dot(a)
    return out


def verify_swrg(g: Graph, ell: int = 3) -> SwrgParams:
    """Walks of length ell between x, y depend only on whether x = y, x ~ y, or neither."""
    if ell < 2:
        raise ValidationError("ell must be >= 2")
    a = g.adjacency
    n = g.n_vertices
    walks = walk_counts(g, ell)
    off = ~np.eye(n, dtype=bool)
    values = {}
    for name, mask in (("nu", ~off), ("lambda", (a == 1) & off), ("mu", (a == 0) & off)):
        if not mask.any():
            values[name] = None
            continue
        vals = walks[mask]
        values[name] = int(vals[0])
        if (vals != vals[0]).any():
            i, j = np.argwhere(mask & (walks != vals[0]))[0]
            raise NotSwrg(f"{name}-class pair ({i}, {j}) has {walks[i, j]} walks, expected {vals[0]}",
                          (int(i), int(j)))
    return SwrgParams(values["lambda"] or 0, values["mu"], values["nu"])


def srg_parameters_from_weights(ring: ChainRing, n: int, card: int, w1: int, w2: int):
    """Coset-graph (N, K, lambda, mu) predicted from a two-weight code's weights.

    Weights are normalised to average value 1 by dividing by (q-1) q^(m-2).
    """
    g = Fraction(ring.gamma)
    n = Fraction(n)
    x, y = Fraction(w1) / g, Fraction(w2) / g
    k = ((n - y) * card + y) / (x - y)
    lam = (n * k * (1 - (1 - x / n) ** 2) + y * (1 - k)) / (x - y)
    mu = (n * k * (1 - (1 - x / n) * (1 - y / n)) - y * k) / (x - y)
    return card, k, lam, mu


@dataclass(frozen=True, eq=False)
class OmegaSet:
    """Unit-stable set of regular nonzero vectors in R^k, stored as sorted unique rows."""

    ring: ChainRing
    vectors: np.ndarray

    def __post_init__(self):
        ring = self.ring
        v = np.unique(np.asarray(self.vectors, dtype=np.int64).reshape(len(self.vectors), -1), axis=0)
        if v.size == 0:
            raise ValidationError("Omega must be nonempty")
        if (v == 0).all(axis=1).any():
            raise ValidationError("Omega must not contain the zero vector")
        irregular = ~ring.unit_mask[v].any(axis=1)
        if irregular.any():
            raise NotRegularVector(f"vector {v[irregular][0].tolist()} has no unit coordinate")
        units = np.flatnonzero(ring.unit_mask)
        orbit = np.unique(ring.mul_table[units[:, None, None], v[None, :, :]].reshape(-1, v.shape[1]), axis=0)
        if len(orbit) != len(v):
            members = set(map(tuple, v.tolist()))
            missing = next(r for r in orbit.tolist() if tuple(r) not in members)
            raise NotUnitStable(f"unit multiple {missing} is missing from Omega")
        v.flags.writeable = False
        object.__setattr__(self, "vectors", v)

    @property
    def k(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, x) -> bool:
        return bool((self.vectors == np.asarray(x)).all(axis=1).any())


def omega_from_columns(h: CodeMatrix) -> OmegaSet:
    """Union of the unit orbits of the columns of H."""
    ring = h.ring
    units = np.flatnonzero(ring.unit_mask)
    return OmegaSet(ring, ring.mul_table[units[:, None, None], h.columns[None, :, :]].reshape(-1, h.rows))


@dataclass(frozen=True)
class TssConstants:
    sigma0: int
    sigma1: int


def triple_sum_counts(omega: OmegaSet) -> np.ndarray:
    """Number of ordered triples of Omega summing to each h in R^k, indexed by row key."""
    ring = omega.ring
    v = omega.vectors
    check_guard(len(v) ** 3, "ordered triples")
    check_guard(ring.size**omega.k, "ambient space R^k")
    pairs = ring.add_table[v[:, None, :], v[None, :, :]].reshape(-1, omega.k)
    counts = np.zeros(ring.size**omega.k, dtype=np.int64)
    for x in v:
        sums = ring.add_table[pairs, x[None, :]]
        counts += np.bincount(_row_keys(ring, sums), minlength=len(counts))
    return counts


def is_tss(omega: OmegaSet) -> TssConstants:
    """Brute-force triple-sum-set test; raises :class:`NotTss` with a violating h.

    sigma0 counts representations of each h in Omega, sigma1 those of each
    nonzero h in span(Omega) outside Omega.  Vectors outside the span have no
    representations at all and are not considered.
    """
    ring = omega.ring
    counts = triple_sum_counts(omega)
    member = np.zeros(len(counts), dtype=bool)
    member[_row_keys(ring, omega.vectors)] = True
    member_counts = counts[member]
    sigma0 = int(member_counts[0])
    if (member_counts != sigma0).any():
        key = int(np.flatnonzero(member & (counts != sigma0))[0])
        raise NotTss(f"h in Omega with {counts[key]} representations, expected {sigma0}", _key_to_row(ring, key, omega.k))
    # h ranges over the group generated by Omega, i.e. the vertex set of its Cayley graph
    outside = np.zeros(len(counts), dtype=bool)
    outside[_row_keys(ring, linear_combinations(ring, omega.vectors))] = True
    outside &= ~member
    outside[0] = False  # h = 0 is excluded
    if not outside.any():
        return TssConstants(sigma0, 0)
    out_counts = counts[outside]
    sigma1 = int(out_counts[0])
    if (out_counts != sigma1).any():
        key = int(np.flatnonzero(outside & (counts != sigma1))[0])
        raise NotTss(f"h outside Omega with {counts[key]} representations, expected {sigma1}",
                     _key_to_row(ring, key, omega.k))
    return TssConstants(sigma0, sigma1)


def _key_to_row(ring: ChainRing, key: int, k: int) -> tuple[int, ...]:
    return tuple((key // ring.size ** (k - 1 - i)) % ring.size for i in range(k))


def tss_criterion(n: int, weights, ring: ChainRing) -> bool:
    """w1 + w2 + w3 = 3 n (q^(m-1) - q^(m-2)) for the three nonzero weights."""
    weights = sorted(int(w) for w in weights)
    if len(weights) != 3 or len(set(weights)) != 3 or weights[0] <= 0:
        raise ValidationError(f"exactly three distinct nonzero weights are required, got {weights}")
    return sum(weights) == 3 * n * ring.gamma


def extend_omega(omega: OmegaSet, j: int) -> OmegaSet:
    """{(a, b) : a in Omega, b in <theta^j>}."""
    ring = omega.ring
    if not 0 <= j <= ring.m - 1:
        raise IndexOutOfRange(f"j={j} outside 0..{ring.m - 1}")
    tail = ideal_indices(ring, j)
    v = omega.vectors
    rows = np.hstack([np.repeat(v, len(tail), axis=0), np.tile(tail, len(v))[:, None]])
    return OmegaSet(ring, rows)


def code_from_omega(omega: OmegaSet) -> CodeMatrix:
    """Parity-check matrix with one column per unit orbit (the orbit's smallest vector)."""
    ring = omega.ring
    units = np.flatnonzero(ring.unit_mask)
    reps = set()
    for x in omega.vectors:
        orbit = ring.mul_table[units[:, None], x[None, :]]
        reps.add(min(map(tuple, orbit.tolist())))
    cols = np.array(sorted(reps), dtype=np.int64)
    return CodeMatrix(ring, cols.T)
