from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chaincodes.chain_ring import (
    MAX_RING_SIZE,
    add,
    enumerate_ring,
    format_token,
    hom_weight,
    ideal_elements,
    ideal_indices,
    is_irreducible,
    is_unit,
    make_ring,
    mul,
    neg,
    parse_token,
    units,
)
from chaincodes.errors import (
    DepthTooSmall,
    EnumerationTooLarge,
    IndexOutOfRange,
    NonPrime,
    ReduciblePolynomial,
    RingMismatch,
    ValidationError,
)

SMALL_RINGS = [
    ("zpm", 2, 1, 2, None),
    ("zpm", 2, 1, 3, None),
    ("zpm", 3, 1, 2, None),
    ("zpm", 2, 1, 4, None),
    ("fqum", 2, 1, 2, None),
    ("fqum", 2, 1, 3, None),
    ("fqum", 3, 1, 2, None),
    ("fqum", 2, 2, 2, (1, 1, 1)),
    ("fqum", 3, 2, 2, (1, 0, 1)),
    ("fqum", 2, 3, 2, (1, 0, 1, 1)),
]


def ring_of(params):
    family, p, e, m, poly = params
    return make_ring(family, p, e, m, poly)


def _field_mul(a, b, p, poly):
    """Schoolbook product of coefficient lists (low first) reduced by a monic-leading poly (high first)."""
    e = len(poly) - 1
    prod = [0] * (2 * e)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    low = [c % p for c in reversed(poly)]
    inv_lead = pow(low[e], -1, p)
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d] * inv_lead % p
        for i in range(e + 1):
            prod[d - e + i] = (prod[d - e + i] - c * low[i]) % p
    return prod[:e]


def _fqum_oracle(ring):
    """Independent multiplication on F_q[u]/(u^m) from digit and coefficient expansions."""
    p, e, m, q = ring.p, ring.e, ring.m, ring.q
    poly = ring.modulus_poly

    def coeffs(v):
        return [(v // p**i) % p for i in range(e)]

    def index(cs):
        return sum(c * p**i for i, c in enumerate(cs))

    def digits(a):
        return [(a // q**i) % q for i in range(m)]

    def mul_elem(a, b):
        da, db = digits(a), digits(b)
        out = [[0] * e for _ in range(m)]
        for i in range(m):
            for j in range(m - i):
                prod = _field_mul(coeffs(da[i]), coeffs(db[j]), p, poly)
                out[i + j] = [(x + y) % p for x, y in zip(out[i + j], prod)]
        return sum(index(cs) * q**i for i, cs in enumerate(out))

    def add_elem(a, b):
        da, db = digits(a), digits(b)
        return sum(index([(x + y) % p for x, y in zip(coeffs(s), coeffs(t))]) * q**i
                   for i, (s, t) in enumerate(zip(da, db)))

    return add_elem, mul_elem


def test_make_ring_examples():
    z4 = make_ring("zpm", 2, m=2)
    assert (z4.q, z4.size, z4.num_units) == (2, 4, 2)
    f = make_ring("fqum", 2, 1, 2)
    assert [format_token(f, a) for a in range(4)] == ["00", "01", "10", "11"]
    with pytest.raises(DepthTooSmall):
        make_ring("zpm", 2, m=1)


@pytest.mark.parametrize("args, err", [
    (("zpm", 4, 1, 2, None), NonPrime),
    (("fqum", 2, 2, 2, (1, 0, 1)), ReduciblePolynomial),
    (("fqum", 2, 2, 2, None), ValidationError),
    (("zpm", 2, 2, 2, None), ValidationError),
    (("fqum", 2, 2, 2, (0, 1, 1)), ValidationError),
    (("zpm", 2, 1, 13, None), EnumerationTooLarge),
])
def test_make_ring_rejects(args, err):
    with pytest.raises(err):
        make_ring(*args)


def test_irreducibility():
    assert is_irreducible([1, 1, 1], 2)
    assert not is_irreducible([1, 0, 1], 2)
    assert is_irreducible([1, 0, 1], 3)
    assert is_irreducible([1, 0, 1, 1], 2)
    assert not is_irreducible([1, 1, 1, 1], 2)


def test_zpm_arithmetic_examples():
    z8 = make_ring("zpm", 2, m=3)
    a, b = z8.element(5), z8.element(6)
    assert int(a + b) == 3 and int(a * b) == 6
    assert int(add(a, b)) == 3 and int(mul(a, b)) == 6
    assert is_unit(z8.element(3)) and not is_unit(z8.element(4))
    assert [int(x) for x in enumerate_ring(z8)] == list(range(8))


def test_fqum_examples():
    f = make_ring("fqum", 2, 1, 2)
    u, ubar = f.element("10"), f.element("11")
    assert int(u * u) == 0
    assert is_unit(ubar) and not is_unit(u)
    assert int(ubar) == int(u + f.element(1))


def test_ring_mismatch():
    a = make_ring("zpm", 2, m=2).element(1)
    b = make_ring("zpm", 2, m=3).element(1)
    with pytest.raises(RingMismatch):
        add(a, b)


@pytest.mark.parametrize("params", SMALL_RINGS)
def test_tables_match_independent_arithmetic(params):
    ring = ring_of(params)
    n = ring.size
    if ring.family.value == "zpm":
        a = np.arange(n)
        assert np.array_equal(ring.add_table, (a[:, None] + a[None, :]) % n)
        assert np.array_equal(ring.mul_table, (a[:, None] * a[None, :]) % n)
    else:
        add_o, mul_o = _fqum_oracle(ring)
        for x, y in itertools.product(range(n), repeat=2):
            assert ring.add_table[x, y] == add_o(x, y)
            assert ring.mul_table[x, y] == mul_o(x, y)


@pytest.mark.parametrize("params", SMALL_RINGS)
def test_ring_axioms_exhaustive(params):
    ring = ring_of(params)
    A, M = ring.add_table, ring.mul_table
    r = np.arange(ring.size)
    x, y, z = r[:, None, None], r[None, :, None], r[None, None, :]
    assert np.array_equal(A[A[x, y], z], A[x, A[y, z]])
    assert np.array_equal(M[M[x, y], z], M[x, M[y, z]])
    assert np.array_equal(M[x, A[y, z]], A[M[x, y], M[x, z]])
    assert np.array_equal(M, M.T) and np.array_equal(A, A.T)
    assert (A[r, ring.neg_table[r]] == 0).all()
    assert (M[1] == r).all()


@pytest.mark.parametrize("params", SMALL_RINGS)
def test_units_and_ideals(params):
    ring = ring_of(params)
    q, m = ring.q, ring.m
    assert len(units(ring)) == q**m - q ** (m - 1)
    for a in range(ring.size):
        # a unit has a multiplicative inverse; the digit test must agree
        invertible = bool((ring.mul_table[a] == 1).any())
        assert ring.unit_mask[a] == invertible == (ring.digit_table[a, 0] != 0)
    theta = ring.theta
    power = 1
    for j in range(m + 1):
        ideal = {int(ring.mul_table[power, a]) for a in range(ring.size)}
        assert set(ideal_indices(ring, j).tolist()) == ideal
        assert len(ideal) == q ** (m - j)
        power = int(ring.mul_table[power, theta])
    with pytest.raises(IndexOutOfRange):
        ideal_indices(ring, m + 1)


def test_ideal_examples():
    z8 = make_ring("zpm", 2, m=3)
    z9 = make_ring("zpm", 3, m=2)
    assert [int(a) for a in ideal_elements(z8, 2)] == [0, 4]
    assert [int(a) for a in ideal_elements(z9, 1)] == [0, 3, 6]
    assert len(ideal_elements(z8, 0)) == 8
    assert [int(a) for a in ideal_elements(z8, 3)] == [0]
    assert [int(a) for a in units(make_ring("zpm", 2, m=2))] == [1, 3]


def test_hom_weight_examples():
    z4 = make_ring("zpm", 2, m=2)
    z8 = make_ring("zpm", 2, m=3)
    assert [hom_weight(z4.element(a)) for a in range(4)] == [0, 1, 2, 1]
    assert hom_weight(z8.element(4)) == 4 and hom_weight(z8.element(3)) == 2


@pytest.mark.parametrize("params", SMALL_RINGS)
def test_hom_weight_axioms(params):
    """Unit-orbit invariance and the averaging property over every principal ideal Rx."""
    ring = ring_of(params)
    w = ring.weight_table
    gamma = (ring.q - 1) * ring.q ** (ring.m - 2)
    assert set(w.tolist()) == {0, gamma, ring.q ** (ring.m - 1)}
    unit_idx = np.flatnonzero(ring.unit_mask)
    for x in range(ring.size):
        assert len(set(w[ring.mul_table[unit_idx, x]].tolist())) == 1
        if x:
            principal = np.unique(ring.mul_table[:, x])
            assert int(w[principal].sum()) == gamma * len(principal)


@pytest.mark.parametrize("params", SMALL_RINGS)
def test_token_and_digit_round_trip(params):
    ring = ring_of(params)
    for a in range(ring.size):
        assert parse_token(ring, format_token(ring, a)) == a
        el = ring.element(a)
        assert int(type(el).from_digits(ring, el.digits)) == a
        assert int(neg(el) + el) == 0


def test_parse_token_rejects():
    f = make_ring("fqum", 2, 1, 2)
    z4 = make_ring("zpm", 2, m=2)
    for bad in ("1", "012", "02"):
        with pytest.raises(ValidationError):
            parse_token(f, bad)
    with pytest.raises(ValidationError):
        parse_token(z4, "4")


def test_size_cap():
    assert MAX_RING_SIZE == 4096


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_RINGS), st.data())
def test_element_operators_agree_with_tables(params, data):
    ring = ring_of(params)
    a, b = (data.draw(st.integers(0, ring.size - 1)) for _ in range(2))
    x, y = ring.element(a), ring.element(b)
    assert int(x + y) == ring.add_table[a, b]
    assert int(x * y) == ring.mul_table[a, b]
    assert int(x - y) == ring.sub_table[a, b]
    assert int(x - y + y) == a
