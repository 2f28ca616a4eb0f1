"""Linear codes over a chain ring, enumerated as spans of a generator matrix.

Codewords are rows of an integer array of element indices.  Everything is
computed by exhaustive enumeration, which is exact and fast at the sizes the
constructions in :mod:`chaincodes.constructions` produce.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._guard import check_guard
from .chain_ring import ChainRing, ideal_indices
from .errors import (
    CharacterizationViolated,
    EmptyCode,
    IndexOutOfRange,
    InternalInconsistency,
    NotApplicable,
    NotPowerOfQ,
    RingMismatch,
    TrivialCode,
    ValidationError,
)


@dataclass(frozen=True, eq=False)
class CodeMatrix:
    """An ``rows x cols`` matrix of element indices over ``ring``."""

    ring: ChainRing
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValidationError(f"a code matrix must be 2-D and non-empty, got shape {arr.shape}")
        if arr.min() < 0 or arr.max() >= self.ring.size:
            raise RingMismatch(f"entries must be element indices of {self.ring}")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def columns(self) -> np.ndarray:
        return self.entries.T

    def __eq__(self, other):
        if not isinstance(other, CodeMatrix):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self.entries, other.entries)

    __hash__ = None


def _unique_rows(words: np.ndarray) -> np.ndarray:
    return np.unique(words, axis=0)


def linear_combinations(ring: ChainRing, generators: np.ndarray) -> np.ndarray:
    """All R-linear combinations of the rows of ``generators``, sorted and deduplicated.

    Built row by row as a sumset, so the cost tracks |C| rather than q^(m*rows).
    """
    generators = np.asarray(generators, dtype=np.int64)
    n = generators.shape[1]
    words = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(ring.size)
    for g in generators:
        multiples = _unique_rows(ring.mul_table[scalars[:, None], g[None, :]])
        words = ring.add_table[words[:, None, :], multiples[None, :, :]].reshape(-1, n)
        words = _unique_rows(words)
    return words


def _log_q(ring: ChainRing, count: int) -> int:
    k, c = 0, count
    while c % ring.q == 0 and c > 1:
        c //= ring.q
        k += 1
    if c != 1:
        raise NotPowerOfQ(f"{count} is not a power of q={ring.q}")
    return k


class LinearCode:
    """The R-submodule spanned by a generator matrix (or given as an explicit word set)."""

    def __init__(self, gen: CodeMatrix | None = None, *, words: np.ndarray | None = None,
                 ring: ChainRing | None = None):
        if gen is None and words is None:
            raise ValidationError("need a generator matrix or a codeword set")
        if gen is not None and ring is not None and ring != gen.ring:
            raise RingMismatch(f"generator is over {gen.ring}, not {ring}")
        self.gen = gen
        self.ring = gen.ring if gen is not None else ring
        if self.ring is None:
            raise ValidationError("a ring is required with an explicit codeword set")
        if words is not None:
            self._words = _unique_rows(np.asarray(words, dtype=np.int64))
            self.length = self._words.shape[1]
        else:
            self._words = None
            self.length = gen.cols

    @property
    def codewords(self) -> np.ndarray:
        if self._words is None:
            check_guard(self.ring.size**self.gen.rows, "message space")
            self._words = linear_combinations(self.ring, self.gen.entries)
            self._words.flags.writeable = False
        return self._words

    @property
    def n(self) -> int:
        return self.length

    @property
    def card(self) -> int:
        return self.codewords.shape[0]

    @property
    def qdim(self) -> int:
        return _log_q(self.ring, self.card)

    @functools.cached_property
    def weights(self) -> np.ndarray:
        """Homogeneous weight of each codeword, aligned with :attr:`codewords`."""
        return self.ring.weight_table[self.codewords].sum(axis=1)

    def __contains__(self, vector) -> bool:
        v = np.asarray(vector, dtype=np.int64)
        return bool((self.codewords == v).all(axis=1).any())

    def __len__(self) -> int:
        return self.card


def span(gen: CodeMatrix) -> LinearCode:
    code = LinearCode(gen)
    code.codewords
    return code


@dataclass(frozen=True)
class CodeTypeProfile:
    k_profile: tuple[int, ...]

    @property
    def qdim(self) -> int:
        m = len(self.k_profile)
        return sum((m - i) * k for i, k in enumerate(self.k_profile))

    @property
    def is_free(self) -> bool:
        return not any(self.k_profile[1:])


def code_type(code: LinearCode) -> CodeTypeProfile:
    """Type (k_0, ..., k_{m-1}) from the sizes of theta^j C."""
    ring = code.ring
    d = []
    for j in range(ring.m + 1):
        scaled = ring.mul_table[_theta_power(ring, j), code.codewords]
        d.append(_log_q(ring, _unique_rows(scaled).shape[0]))
    s = [d[j] - d[j + 1] for j in range(ring.m)] + [0]
    ks = tuple(s[ring.m - 1 - i] - s[ring.m - i] for i in range(ring.m))
    if any(k < 0 for k in ks) or sum((ring.m - i) * k for i, k in enumerate(ks)) != d[0]:
        raise NotPowerOfQ(f"inconsistent ideal-chain cardinalities {d}")
    return CodeTypeProfile(ks)


def _theta_power(ring: ChainRing, j: int) -> int:
    # theta^j has index q^j (and theta^m = 0)
    return ring.q**j if j < ring.m else 0


def hom_weight_distribution(code: LinearCode) -> dict[int, int]:
    counts = Counter(int(w) for w in code.weights)
    return dict(sorted(counts.items()))


def min_hom_distance(code: LinearCode) -> int:
    nonzero = [w for w in hom_weight_distribution(code) if w > 0]
    if not nonzero:
        raise EmptyCode("the zero code has no nonzero weight")
    return min(nonzero)


def hamming_weight_distribution(code: LinearCode) -> dict[int, int]:
    counts = Counter(int(w) for w in (code.codewords != 0).sum(axis=1))
    return dict(sorted(counts.items()))


def vector_hom_weight(ring: ChainRing, x) -> int:
    return int(ring.weight_table[np.asarray(x, dtype=np.int64)].sum())


def is_regular(gen: CodeMatrix) -> bool:
    """Every column contains a unit."""
    return bool(gen.ring.unit_mask[gen.entries].any(axis=0).all())


def is_regular_by_definition(gen: CodeMatrix) -> bool:
    """Literal test that {x . g_i : x in R^rows} = R for every column g_i."""
    ring = gen.ring
    check_guard(ring.size**gen.rows, "message space")
    messages = np.array(list(itertools.product(range(ring.size), repeat=gen.rows)), dtype=np.int64)
    for col in gen.columns:
        prods = ring.mul_table[messages, col[None, :]]
        acc = np.zeros(len(messages), dtype=np.int64)
        for i in range(gen.rows):
            acc = ring.add_table[acc, prods[:, i]]
        values = set(acc.tolist())
        if len(values) != ring.size:
            return False
    return True


def column_orbit(ring: ChainRing, column: np.ndarray) -> frozenset[tuple[int, ...]]:
    """The cyclic submodule {a * g : a in R} as a set of tuples."""
    multiples = ring.mul_table[np.arange(ring.size)[:, None], np.asarray(column)[None, :]]
    return frozenset(map(tuple, multiples.tolist()))


def is_projective(gen: CodeMatrix) -> bool:
    orbits = [column_orbit(gen.ring, col) for col in gen.columns]
    return len(set(orbits)) == len(orbits)


def plotkin_bound(ring: ChainRing, n: int, card: int) -> int:
    if card < 2:
        raise TrivialCode("the bound needs at least two codewords")
    c = ring.q ** (ring.m - 1) - ring.q ** (ring.m - 2)
    return c * n * card // (card - 1)


def is_plotkin_optimal(code: LinearCode) -> bool:
    ring = code.ring
    d = min_hom_distance(code)
    optimal = d == plotkin_bound(ring, code.n, code.card)
    if code.gen is not None and is_regular(code.gen) and is_projective(code.gen):
        by_length = d == ring.gamma * code.n
        if by_length != optimal:
            raise InternalInconsistency(
                f"bound test says {optimal} but d = (q^(m-1)-q^(m-2))n test says {by_length}"
            )
    return optimal


def inner_products(ring: ChainRing, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Matrix of inner products x . y for rows x of ``xs`` and rows y of ``ys``."""
    prods = ring.mul_table[xs[:, None, :], ys[None, :, :]]
    acc = np.zeros(prods.shape[:2], dtype=np.int64)
    for i in range(prods.shape[2]):
        acc = ring.add_table[acc, prods[:, :, i]]
    return acc


def _all_vectors(ring: ChainRing, n: int) -> np.ndarray:
    check_guard(ring.size**n, "ambient space R^n")
    return np.array(list(itertools.product(range(ring.size), repeat=n)), dtype=np.int64).reshape(-1, n)


def greedy_generators(ring: ChainRing, words: np.ndarray) -> np.ndarray:
    """A generating set for the module ``words`` picked greedily (not minimal in general)."""
    words = np.asarray(words, dtype=np.int64)
    chosen = []
    current = np.zeros((1, words.shape[1]), dtype=np.int64)
    known = {tuple(current[0])}
    for w in words:
        if tuple(w) in known:
            continue
        chosen.append(w)
        current = linear_combinations(ring, np.array(chosen))
        known = set(map(tuple, current.tolist()))
        if len(known) == len(words):
            break
    if not chosen:
        chosen.append(np.zeros(words.shape[1], dtype=np.int64))
    return np.array(chosen)


def dual_bruteforce(code: LinearCode) -> LinearCode:
    """C^perp by testing every vector of R^n against a generating set of C."""
    ring = code.ring
    gens = code.gen.entries if code.gen is not None else greedy_generators(ring, code.codewords)
    space = _all_vectors(ring, code.n)
    ok = (inner_products(ring, space, gens) == 0).all(axis=1)
    words = space[ok]
    return LinearCode(CodeMatrix(ring, greedy_generators(ring, words)), words=words)


def check_two_weight_relation(n: int, card: int, w1: int, w2: int, a1: int, a2: int,
                              ring: ChainRing) -> bool:
    """Quadratic relation between the two nonzero weights plus the first two moments."""
    if w1 == w2:
        raise ValidationError("the two weights must differ")
    q, m = ring.q, ring.m
    c = Fraction(q ** (m - 1) - q ** (m - 2))
    units = q**m - q ** (m - 1)
    relation = (w1 + w2) * n * c * card == c**2 * (Fraction(n, units) + n**2) * card + w1 * w2 * (card - 1)
    first = a1 * w1 + a2 * w2 == n * c * card
    second = a1 * w1**2 + a2 * w2**2 == c**2 * (Fraction(n, units) + n**2) * card
    return bool(relation and first and second and a1 + a2 == card - 1)


def moment_identities(code: LinearCode) -> tuple[bool, bool]:
    """First and second weight moments of a regular projective code (distance-matrix identities)."""
    ring = code.ring
    q, m, n, size = ring.q, ring.m, code.n, code.card
    c = Fraction(q ** (m - 1) - q ** (m - 2))
    w = [int(x) for x in code.weights]
    first = sum(w) == n * c * size
    second = sum(x * x for x in w) == c**2 * (Fraction(n, q**m - q ** (m - 1)) + n**2) * size
    return first, second


def satisfies_length_bound(code: LinearCode) -> bool:
    """(q^m - q^(m-1)) n <= q^k - q^(k-k_0) for regular projective codes."""
    ring = code.ring
    t = code_type(code)
    k = t.qdim
    return t.k_profile[0] >= 1 and ring.num_units * code.n <= ring.q**k - ring.q ** (k - t.k_profile[0])


@dataclass(frozen=True)
class TwoWeightCharacterization:
    t: int
    distribution: dict[int, int]

    def to_json(self) -> dict:
        return {"t": self.t, "distribution": [[w, c] for w, c in self.distribution.items()]}


def predicted_two_weight_distribution(q: int, k: int, t: int) -> dict[int, int]:
    return {0: 1, q ** (k - t - 1) * (q**t - 1): q**k - q**t, q ** (k - 1): q**t - 1}


def characterize_two_weight(code: LinearCode) -> TwoWeightCharacterization:
    """Recover t for a Plotkin-optimal two-weight regular projective code and check its parameters.

    Raises :class:`NotApplicable` when the code is not of that kind and
    :class:`CharacterizationViolated` when it is but the parameters disagree
    with n = q^(k-t)(q^t - 1)/(q^m - q^(m-1)) and the predicted distribution.
    """
    ring = code.ring
    if code.gen is None:
        raise NotApplicable("a generator matrix is required")
    dist = hom_weight_distribution(code)
    nonzero = sorted(w for w in dist if w)
    if len(nonzero) != 2:
        raise NotApplicable(f"code has {len(nonzero)} nonzero weights, not 2")
    if not (is_regular(code.gen) and is_projective(code.gen)):
        raise NotApplicable("code is not regular and projective")
    if not is_plotkin_optimal(code):
        raise NotApplicable("code is not Plotkin-optimal")
    q = ring.q
    k = code.qdim
    profile = code_type(code).k_profile
    a2 = dist[nonzero[1]]
    try:
        t = _log_q(ring, a2 + 1)
    except NotPowerOfQ as exc:
        raise CharacterizationViolated(f"A_w2 + 1 = {a2 + 1} is not a power of q") from exc
    if not 1 <= t <= profile[0]:
        raise CharacterizationViolated(f"t={t} outside 1..k_0={profile[0]}")
    if code.n * ring.num_units != q ** (k - t) * (q**t - 1):
        raise CharacterizationViolated(f"length {code.n} does not match t={t}, k={k}")
    predicted = predicted_two_weight_distribution(q, k, t)
    if predicted != dist:
        raise CharacterizationViolated(f"distribution {dist} != predicted {predicted}")
    return TwoWeightCharacterization(t, predicted)


def coset_sum(ring: ChainRing, c, j: int) -> int:
    """Sum of wt(c + a*1) over a in <theta^j>."""
    if not 0 <= j <= ring.m - 1:
        raise IndexOutOfRange(f"j={j} outside 0..{ring.m - 1}")
    c = np.asarray(c, dtype=np.int64)
    shifted = ring.add_table[c[None, :], ideal_indices(ring, j)[:, None]]
    return int(ring.weight_table[shifted].sum())


def coset_sum_expected(ring: ChainRing, n: int, j: int) -> int:
    return (ring.q - 1) * ring.q ** (2 * ring.m - 2 - j) * n


def messages(ring: ChainRing, rows: int) -> np.ndarray:
    """All of R^rows in lexicographic order."""
    return _all_vectors(ring, rows)


def encode(gen: CodeMatrix, xs: np.ndarray) -> np.ndarray:
    """x G for each row x of ``xs``."""
    return inner_products(gen.ring, np.asarray(xs, dtype=np.int64), gen.columns)


def top_layer_mask(ring: ChainRing, xs: np.ndarray) -> np.ndarray:
    """Rows of ``xs`` lying in <theta^(m-1)>^k."""
    return (ring.valuation_table[xs] >= ring.m - 1).all(axis=1)


def coset_weight_sums(gen: CodeMatrix) -> dict[tuple[int, ...], int]:
    """For every coset u + <theta^(m-1)>^rows, the total weight of x G over the coset."""
    ring = gen.ring
    xs = messages(ring, gen.rows)
    weights = ring.weight_table[encode(gen, xs)].sum(axis=1)
    # coset label: x reduced modulo theta^(m-1), i.e. digits 0..m-2
    label = ring.digit_table[xs][:, :, : ring.m - 1]
    keys = [tuple(row.ravel().tolist()) for row in label]
    sums: dict[tuple[int, ...], int] = {}
    for key, w in zip(keys, weights.tolist()):
        sums[key] = sums.get(key, 0) + w
    return sums


def coset_weight_sum_expected(gen: CodeMatrix) -> int:
    ring = gen.ring
    return ring.q**gen.rows * ring.gamma * gen.cols


def constant_weight_outside_top_layer(gen: CodeMatrix) -> bool:
    """Whether wt(x G) = (q^(m-1) - q^(m-2)) n for every x outside <theta^(m-1)>^rows."""
    ring = gen.ring
    xs = messages(ring, gen.rows)
    outside = xs[~top_layer_mask(ring, xs)]
    weights = ring.weight_table[encode(gen, outside)].sum(axis=1)
    return bool((weights == ring.gamma * gen.cols).all())
