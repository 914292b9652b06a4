"""Reduced row echelon subspaces: canonicality, membership, nullspace."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from futility.domains import QQ, PrimeField
from futility.errors import DimensionMismatch
from futility.linalg import (
    Subspace,
    full_subspace,
    mat_inv,
    mat_mul,
    mat_vec,
    nullspace,
    rref,
    subspace_from_vectors,
    subspace_sum,
    unit_vec,
    zero_subspace,
)

F2 = PrimeField(2)
F5 = PrimeField(5)


def test_rref_canonical_pivots():
    rows, pivots = rref(QQ, [(Fraction(2), Fraction(4)), (Fraction(1), Fraction(2))])
    assert rows == ((Fraction(1), Fraction(2)),)
    assert pivots == (0,)


def test_subspace_equality_is_representation_equality():
    a = subspace_from_vectors(QQ, 3, [(Fraction(1), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))])
    b = subspace_from_vectors(
        QQ, 3, [(Fraction(2), Fraction(2), Fraction(2)), (Fraction(0), Fraction(0), Fraction(5))]
    )
    assert a == b


def test_membership_and_reduce():
    s = subspace_from_vectors(F5, 3, [(1, 2, 0), (0, 0, 1)])
    assert s.contains((1, 2, 3))
    assert not s.contains((1, 0, 0))
    with pytest.raises(DimensionMismatch):
        s.contains((1, 0))


def test_coords_roundtrip():
    s = subspace_from_vectors(QQ, 3, [(Fraction(1), Fraction(0), Fraction(2)), (Fraction(0), Fraction(1), Fraction(3))])
    v = (Fraction(2), Fraction(5), Fraction(19))
    c = s.coords(v)
    rebuilt = [QQ.zero] * 3
    for coeff, row in zip(c, s.rows):
        rebuilt = [QQ.add(x, QQ.mul(coeff, y)) for x, y in zip(rebuilt, row)]
    assert tuple(rebuilt) == v


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=0, max_size=5))
def test_rref_idempotent_over_f5(mat):
    vecs = [tuple(x % 5 for x in row) for row in mat]
    s = subspace_from_vectors(F5, 4, vecs)
    again = subspace_from_vectors(F5, 4, s.rows)
    assert s == again
    for v in vecs:
        assert s.contains(v)


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_nullspace_annihilates(mat):
    rows = [tuple(Fraction(x) for x in row) for row in mat]
    for v in nullspace(QQ, rows, 3):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
    s = subspace_from_vectors(QQ, 3, rows)
    assert s.dim + len(nullspace(QQ, rows, 3)) == 3


def test_sum_and_full():
    a = subspace_from_vectors(F2, 3, [(1, 0, 0)])
    b = subspace_from_vectors(F2, 3, [(0, 1, 0), (0, 0, 1)])
    assert subspace_sum(a, b) == full_subspace(F2, 3)
    assert zero_subspace(F2, 3).dim == 0


def test_mat_inv_roundtrip():
    m = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(1)))
    inv = mat_inv(QQ, m)
    prod = mat_mul(QQ, m, inv)
    assert prod == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    assert mat_vec(QQ, m, (Fraction(1), Fraction(0))) == (Fraction(2), Fraction(1))


def test_subspace_key_hashable():
    s = subspace_from_vectors(F2, 2, [(1, 1)])
    t = subspace_from_vectors(F2, 2, [(1, 1), (0, 0)])
    assert s.key() == t.key()
    assert len({s.key(), t.key()}) == 1
