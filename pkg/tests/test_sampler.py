"""Randomized subalgebra sampling and the projective witness family."""

from fractions import Fraction

import pytest

from futility.algebra import element_multiply, make_relative
from futility.constructions import poly_quotient_algebra
from futility.domains import QQ, PrimeField
from futility.errors import NotApplicable, UnsupportedDomain
from futility.linalg import subspace_from_vectors
from futility.polynomials import make_poly, pmul, ppow
from futility.sampler import family_witness, sample_subalgebras


def q(*cs):
    return make_poly(QQ, [Fraction(c) for c in cs])


def x_power_algebra(r):
    return poly_quotient_algebra(make_poly(QQ, [Fraction(0)] * r + [Fraction(1)]))


def test_sample_x3_finds_exactly_three():
    A = x_power_algebra(3)
    h = sample_subalgebras(A, trials=1000, bound=3, seed=7)
    assert h.count == 3
    assert sorted(s.dim for s in h.distinct) == [1, 2, 3]
    assert h.stabilized()


def test_sample_dim1_single_value():
    A = x_power_algebra(1)
    h = sample_subalgebras(A, trials=50, bound=4, seed=1)
    assert h.count == 1


def test_sample_repeated_quadratic_family_grows():
    A = poly_quotient_algebra(ppow(q(1, 0, 1), 2))
    h = sample_subalgebras(A, trials=500, bound=5, seed=0)
    assert h.count >= 20
    assert not h.stabilized()


def test_sample_determinism_and_curve():
    A = x_power_algebra(3)
    h1 = sample_subalgebras(A, trials=200, bound=3, seed=5)
    h2 = sample_subalgebras(A, trials=200, bound=3, seed=5)
    assert h1 == h2
    assert list(h1.growth_curve) == sorted(h1.growth_curve)


def test_sample_monotone_in_bound_pinned_seeds():
    A = poly_quotient_algebra(ppow(q(1, 0, 1), 2))
    for seed in (0, 1, 2):
        h_small = sample_subalgebras(A, trials=300, bound=2, seed=seed)
        h_big = sample_subalgebras(A, trials=300, bound=6, seed=seed)
        assert all(a <= b for a, b in zip(h_small.growth_curve, h_big.growth_curve))


def test_sample_members_revalidate():
    A = poly_quotient_algebra(pmul(q(0, 1), pmul(q(-1, 1), q(-2, 1))))  # x(x-1)(x-2)
    h = sample_subalgebras(A, trials=300, bound=4, seed=11)
    for s in h.distinct:
        assert s.contains(A.unit)
        for u in s.rows:
            for v in s.rows:
                assert s.contains(element_multiply(A, u, v))


def test_sample_rejects_finite_domain():
    F2 = PrimeField(2)
    A = poly_quotient_algebra(make_poly(F2, [0, 0, 1]))
    with pytest.raises(UnsupportedDomain):
        sample_subalgebras(A, trials=10, bound=2, seed=0)


def test_relative_sampling_counts_relative_subalgebras():
    # A = Q[x]/(x^5) over R = Q[t]/(t^2), t -> x^3: futile, so the sampler
    # must stabilize on a small set
    R = x_power_algebra(2)
    m = subspace_from_vectors(QQ, 2, [(Fraction(0), Fraction(1))])
    A = x_power_algebra(5)
    img = [Fraction(0)] * 5
    img[3] = Fraction(1)
    rel = make_relative(QQ, R, m, A, [A.unit, tuple(img)])
    h = sample_subalgebras(rel, trials=5000, bound=5, seed=0)
    assert h.stabilized()
    assert h.count == 4
    for s in h.distinct:
        assert s.contains_subspace(rel.base_image)


def test_family_witness_distinct_points():
    modulus = ppow(q(1, 0, 1), 2)
    pts = [(1, 0), (0, 1), (1, 1)]
    members = family_witness(modulus, pts)
    assert len({m.key() for m in members}) == 3
    for m in members:
        assert m.dim == 2


def test_family_witness_25_points():
    modulus = ppow(q(1, 0, 1), 2)
    pts = [(1, k) for k in range(24)] + [(0, 1)]
    members = family_witness(modulus, pts)
    assert len({m.key() for m in members}) == 25


def test_family_witness_single_point_closed():
    A = poly_quotient_algebra(ppow(q(1, 0, 1), 2))
    (member,) = family_witness(ppow(q(1, 0, 1), 2), [(2, 3)])
    for u in member.rows:
        for v in member.rows:
            assert member.contains(element_multiply(A, u, v))


def test_family_witness_rejects_wrong_shape():
    with pytest.raises(NotApplicable):
        family_witness(ppow(q(1, 1), 2), [(1,)])  # degree-1 factor
    with pytest.raises(NotApplicable):
        family_witness(q(1, 0, 1), [(1, 0)])  # not a square
    with pytest.raises(NotApplicable):
        family_witness(ppow(q(1, 0, 1), 2), [(0, 0)])


def test_family_members_appear_in_samples():
    modulus = ppow(q(1, 0, 1), 2)
    members = family_witness(modulus, [(1, 0), (0, 1), (1, 1), (1, -1)])
    A = poly_quotient_algebra(modulus)
    h = sample_subalgebras(A, trials=800, bound=3, seed=17)
    keys = {s.key() for s in h.distinct}
    for m in members:
        assert m.key() in keys
