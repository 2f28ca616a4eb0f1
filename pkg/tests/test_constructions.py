from __future__ import annotations

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from chaincodes import make_ring
from chaincodes.codes import (
    CodeMatrix,
    code_type,
    encode,
    hom_weight_distribution,
    is_plotkin_optimal,
    is_projective,
    is_regular,
    messages,
    span,
    top_layer_mask,
)
from chaincodes.constructions import (
    IdealBlockProfile,
    b_matrix,
    extend_generator,
    extended_distribution,
    one_weight_generator,
    optimal_two_weight_code,
    optimal_two_weight_length,
    y_matrix,
    y_matrix_width,
)
from chaincodes.errors import EnumerationTooLarge, IndexOutOfRange, InvalidT, ValidationError
from chaincodes.gray import gray_image

Z4 = make_ring("zpm", 2, m=2)
Z8 = make_ring("zpm", 2, m=3)
Z9 = make_ring("zpm", 3, m=2)
F2U = make_ring("fqum", 2, 1, 2)
F4U = make_ring("fqum", 2, 2, 2, (1, 1, 1))
RINGS = [Z4, Z8, Z9, F2U, F4U, make_ring("fqum", 2, 1, 3)]


def test_one_weight_examples():
    g = one_weight_generator(Z4, (1, 0))
    assert g.entries.tolist() == [[1, 2, 3]]
    assert hom_weight_distribution(span(g)) == {0: 1, 4: 3}
    g = one_weight_generator(Z4, IdealBlockProfile((0, 1)))
    assert g.entries.tolist() == [[2]]
    assert hom_weight_distribution(span(g)) == {0: 1, 2: 1}
    image = gray_image(span(one_weight_generator(Z4, (1, 0))))
    assert (image.length, len(image.vectors)) == (6, 4)
    assert image.hamming_distribution == {0: 1, 4: 3}


@pytest.mark.parametrize("ring, sizes", [
    (Z4, (1, 1)), (Z4, (2, 0)), (Z8, (1, 0, 1)), (Z8, (0, 1, 1)), (Z9, (1, 1)), (F2U, (1, 1)), (F4U, (1, 0)),
])
def test_one_weight_family(ring, sizes):
    profile = IdealBlockProfile(sizes)
    g = one_weight_generator(ring, profile)
    k = profile.qdim
    assert g.cols == ring.q**k - 1
    dist = hom_weight_distribution(span(g))
    assert dist == {0: 1, ring.q**k * ring.gamma: ring.q**k - 1}


def test_profile_validation():
    with pytest.raises(ValidationError):
        IdealBlockProfile((0, 0))
    with pytest.raises(ValidationError):
        IdealBlockProfile((1, -1))
    with pytest.raises(ValidationError):
        one_weight_generator(Z8, (1, 0))


def test_b_matrix_examples():
    assert b_matrix(Z8, 1).tolist() == [[0, 2, 4, 6]]
    assert b_matrix(Z9, 1).tolist() == [[0, 3, 6]]
    assert b_matrix(F2U, 1).tolist() == [[0, 2]]
    b = b_matrix(Z4, 2)
    assert b.tolist() == [[0, 0, 2, 2], [0, 2, 0, 2]]
    assert b_matrix(Z4, 0).shape == (0, 1)


def test_y_matrix_examples():
    assert y_matrix(Z8, 2).entries.tolist() == [
        [1, 1, 1, 1, 1, 1, 1, 1, 0, 2, 4, 6],
        [0, 1, 2, 3, 4, 5, 6, 7, 1, 1, 1, 1],
    ]
    assert y_matrix(F2U, 2).entries.tolist() == [[1, 1, 1, 1, 0, 2], [0, 1, 2, 3, 1, 1]]
    assert y_matrix(Z9, 2).entries.tolist() == [[1] * 9 + [0, 3, 6], list(range(9)) + [1, 1, 1]]
    assert y_matrix(Z4, 1).entries.tolist() == [[1]]
    with pytest.raises(ValidationError):
        y_matrix(Z4, 0)


@pytest.mark.parametrize("ring", RINGS)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_y_matrix_family(ring, k):
    """Free, optimal, regular, projective, with the closed-form length and distribution."""
    if ring.q ** (ring.m * k) > 5000:
        pytest.skip("message space too large for a unit test")
    q, m = ring.q, ring.m
    g = y_matrix(ring, k)
    assert g.cols == y_matrix_width(ring, k) == (q ** (m * k) - q ** ((m - 1) * k)) // (q**m - q ** (m - 1))
    code = span(g)
    assert code_type(code).is_free and code_type(code).k_profile[0] == k
    expected = {0: 1, q ** (m * k - 1) - q ** ((m - 1) * k - 1): q ** (m * k) - q**k, q ** (m * k - 1): q**k - 1}
    assert hom_weight_distribution(code) == expected
    assert is_plotkin_optimal(code) and is_regular(g) and is_projective(g)
    # the weight of xY_k is decided by whether x lies in the top layer
    xs = messages(ring, k)
    w = ring.weight_table[encode(g, xs)].sum(axis=1)
    top = top_layer_mask(ring, xs)
    nonzero = xs.any(axis=1)
    assert set(w[~top].tolist()) == {q ** (m * k - 1) - q ** ((m - 1) * k - 1)}
    assert set(w[top & nonzero].tolist()) == {q ** (m * k - 1)}


def test_extend_examples():
    y2 = y_matrix(Z9, 2)
    g = extend_generator(y2, 1)
    assert g.cols == 36 and g.rows == 3
    assert np.array_equal(g.entries[:2], np.tile(y2.entries, 3))
    assert g.entries[2].tolist() == [0] * 12 + [3] * 12 + [6] * 12
    assert g == optimal_two_weight_code(Z9, (2, 1), 2)
    with pytest.raises(IndexOutOfRange):
        extend_generator(y2, 2)


def test_profile_301_layout():
    g = optimal_two_weight_code(Z8, (3, 0, 1), 2)
    assert (g.rows, g.cols) == (4, 192)
    assert g == extend_generator(extend_generator(y_matrix(Z8, 2), 0), 2)
    assert g.entries[2].tolist() == np.tile(np.repeat(np.arange(8), 12), 2).tolist()
    assert g.entries[3].tolist() == [0] * 96 + [4] * 96
    assert optimal_two_weight_length(Z8, (3, 0, 1), 2) == 192


def test_extension_of_y_is_identity_chain():
    for ring in (Z4, Z8, F2U):
        assert optimal_two_weight_code(ring, (2,) + (0,) * (ring.m - 1), 2) == y_matrix(ring, 2)


def test_invalid_t():
    with pytest.raises(InvalidT):
        optimal_two_weight_code(Z8, (1, 0, 1), 2)
    with pytest.raises(InvalidT):
        optimal_two_weight_code(Z8, (1, 0, 1), 0)
    with pytest.raises(ValidationError):
        optimal_two_weight_code(Z8, (1, 0), 1)


def test_extended_distribution_both_cases():
    # case (1): the base weight gamma n already occurs and absorbs the new codewords
    base = {0: 1, 24: 60, 32: 3}
    assert extended_distribution(Z8, base, 12, 0) == {0: 1, 192: 60 + 7 * 64, 256: 3}
    # case (2): no such weight, so exactly one new weight appears
    h = CodeMatrix(Z4, np.array([[3, 0, 1], [0, 1, 3]]))
    dist = hom_weight_distribution(span(h))
    assert dist == {0: 1, 2: 6, 4: 9} and 3 * Z4.gamma not in dist
    out = extended_distribution(Z4, dist, 3, 1)
    assert out == {0: 1, 4: 6, 6: 16, 8: 9}
    assert out == hom_weight_distribution(span(extend_generator(h, 1)))


def test_case_two_new_weight_depends_on_m0():
    """The new weight is q^(m-m0) gamma n; it equals (q-1) q^(2m-2) n only when m0 = 0."""
    g = CodeMatrix(Z8, np.array([[1, 2]]))
    base = span(g)
    dist = hom_weight_distribution(base)
    for m0 in range(3):
        out = hom_weight_distribution(span(extend_generator(g, m0)))
        assert out == extended_distribution(Z8, dist, 2, m0)
        new_weight = 2 ** (3 - m0) * Z8.gamma * 2
        assert out[new_weight] >= (2 ** (3 - m0) - 1) * base.card
    assert 2**3 * Z8.gamma * 2 == (2 - 1) * 2 ** (2 * 3 - 2) * 2


@st.composite
def regular_generators(draw):
    ring = draw(st.sampled_from([Z4, Z8, Z9, F2U]))
    rows = draw(st.integers(1, 2))
    cols = draw(st.integers(1, 4))
    entries = np.array(draw(st.lists(st.lists(st.integers(0, ring.size - 1), min_size=cols, max_size=cols),
                                     min_size=rows, max_size=rows)))
    return CodeMatrix(ring, entries), draw(st.integers(0, ring.m - 1))


@settings(max_examples=60, deadline=None)
@given(regular_generators())
def test_extension_metamorphic(args):
    gen, m0 = args
    assume(is_regular(gen))
    ring = gen.ring
    base = span(gen)
    ext = extend_generator(gen, m0)
    assert ext.cols == ring.q ** (ring.m - m0) * gen.cols and ext.rows == gen.rows + 1
    code = span(ext)
    assert hom_weight_distribution(code) == extended_distribution(ring, hom_weight_distribution(base), gen.cols, m0)
    assert is_regular(ext)
    assert is_projective(ext) == is_projective(gen)
    if base.card > 1 and is_projective(gen):
        assert is_plotkin_optimal(code) == is_plotkin_optimal(base)


def test_projectivity_transfer_needs_regular_columns():
    """A lone zero column is projective, but its extension [0 0 0 0; 0 1 2 3] is not."""
    gen = CodeMatrix(Z4, np.array([[0]]))
    assert is_projective(gen) and not is_regular(gen)
    ext = extend_generator(gen, 0)
    assert not is_projective(ext) and not is_regular(ext)


def test_optimality_transfer_needs_projective_code():
    """[1 1 1] misses the floored bound by one; after extension the floor closes the gap."""
    gen = CodeMatrix(Z4, np.array([[1, 1, 1]]))
    base = span(gen)
    assert min(w for w in hom_weight_distribution(base) if w) == 3
    assert not is_plotkin_optimal(base)
    assert is_plotkin_optimal(span(extend_generator(gen, 0)))


def test_regularity_transfer_both_ways():
    for entries in ([[2, 1]], [[2, 0]], [[1, 3], [0, 2]]):
        gen = CodeMatrix(Z4, np.array(entries))
        for m0 in range(2):
            assert is_regular(extend_generator(gen, m0)) == is_regular(gen)


def test_guard(monkeypatch):
    monkeypatch.setenv("CHAINCODES_ENUM_GUARD", "100")
    with pytest.raises(EnumerationTooLarge):
        y_matrix(Z8, 3)
