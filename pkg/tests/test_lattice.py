from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from enrq import lattice


def det_by_fraction_elimination(matrix):
    # independent oracle: plain Gaussian elimination over Q
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det


def test_gram_determinant_unimodular():
    det = lattice.gram_determinant()
    assert det == det_by_fraction_elimination(lattice.GRAM)
    assert det in (1, -1)


def test_gram_signature_hyperbolic():
    assert lattice.gram_signature() == (1, 9, 0)
    # float oracle: eigenvalue sign count
    eig = np.linalg.eigvalsh(np.array(lattice.GRAM, dtype=float))
    assert (eig > 0).sum() == 1 and (eig < 0).sum() == 9


def test_inner_normalizations():
    assert lattice.inner(lattice.E, lattice.F) == 1
    assert lattice.inner(lattice.E, lattice.E) == 0
    assert lattice.inner(lattice.F, lattice.F) == 0
    for i in range(2, 10):
        assert lattice.inner(lattice.BASIS[i], lattice.BASIS[i]) == -2


def test_e8_block_is_negated_cartan():
    # two blocks orthogonal, E8 block negative definite of determinant 1
    for i in range(2):
        for j in range(2, 10):
            assert lattice.GRAM[i][j] == 0
    block = [row[2:] for row in lattice.GRAM[2:]]
    assert lattice.exact_det(block) == 1
    assert lattice.signature(block) == (0, 8, 0)


def test_reflect_negates_root():
    r = lattice.BASIS[2]
    assert lattice.reflect(r, r) == lattice.neg(r)


def test_reflect_fixes_orthogonal_vectors():
    r = lattice.BASIS[2]
    x = lattice.E
    assert lattice.inner(x, r) == 0
    assert lattice.reflect(r, x) == x


def test_reflect_rejects_non_root():
    with pytest.raises(ValueError):
        lattice.reflect(lattice.E, lattice.F)


coords = st.integers(min_value=-5, max_value=5)
vectors = st.tuples(*[coords] * 10)
root_seeds = st.lists(st.integers(min_value=2, max_value=9), min_size=1, max_size=5)


def seed_to_root(seed):
    r = lattice.BASIS[seed[0]]
    for i in seed[1:]:
        r = lattice.reflect(lattice.BASIS[i], r)
    return r


@settings(max_examples=200, deadline=None, derandomize=True)
@given(root_seeds, vectors, vectors)
def test_reflection_is_isometric_involution(seed, u, v):
    r = seed_to_root(seed)
    assert lattice.inner(r, r) == -2
    assert lattice.reflect(r, lattice.reflect(r, u)) == u
    assert lattice.inner(lattice.reflect(r, u), lattice.reflect(r, v)) == lattice.inner(u, v)


def test_validate_sequence_basics():
    assert lattice.validate_sequence([])
    assert lattice.validate_sequence([lattice.E, lattice.F])
    assert not lattice.validate_sequence([lattice.E, lattice.E])
    assert not lattice.validate_sequence([lattice.BASIS[2]])


def test_search_small_bounds():
    found = lattice.search_sequences(1, 1, cap=None)
    assert any(s.vectors == (lattice.E,) for s in found)
    found2 = lattice.search_sequences(2, 1, cap=None)
    assert any(s.vectors == (lattice.E, lattice.F) for s in found2)
    for s in found2:
        assert lattice.validate_sequence(s.vectors)


def test_search_sequences_rejects_bad_lengths():
    with pytest.raises(ValueError):
        lattice.search_sequences(11, 2)
    with pytest.raises(ValueError):
        lattice.search_sequences(0, 2)
    with pytest.raises(ValueError):
        lattice.search_sequences(2, 0)


def test_search_finds_full_ten_sequence_within_bound_six():
    found = lattice.search_sequences(10, 6, cap=1)
    assert len(found) == 1
    seq = found[0]
    assert len(seq) == 10
    assert lattice.validate_sequence(seq.vectors)
    assert all(abs(c) <= 6 for v in seq for c in v)


def test_search_is_deterministic():
    a = lattice.search_sequences(3, 2, cap=20)
    b = lattice.search_sequences(3, 2, cap=20)
    assert [s.vectors for s in a] == [s.vectors for s in b]


def test_sequence_json_round_trip():
    seq = lattice.IsotropicSequence((lattice.E, lattice.F))
    data = seq.to_json()
    assert data == [[1, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0, 0, 0]]
    assert lattice.IsotropicSequence.from_json(data) == seq
    v = lattice.vector_from_json(lattice.vector_to_json(lattice.E))
    assert v == lattice.E


def test_isotropic_sequence_validates_on_construction():
    with pytest.raises(ValueError):
        lattice.IsotropicSequence((lattice.E, lattice.E))
