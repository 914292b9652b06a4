"""Randomized falsification oracle over the rationals: sample generated
subalgebras, canonicalize, and watch how the count of distinct values
grows.  A stabilized histogram is evidence, never proof; the deciders carry
the proof burden.

Also constructs the explicit infinite family of subalgebras of Q[x]/(f^2)
indexed by projective points, which witnesses non-futility directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import random

from .algebra import (
    RelativeAlgebra,
    StructAlgebra,
    element_multiply,
    generated_by_element,
)
from .constructions import poly_quotient_algebra
from .domains import QQ
from .errors import NotApplicable, UnsupportedDomain
from .linalg import Subspace, subspace_from_vectors
from .polynomials import Poly, pmul, squarefree_decomposition


@dataclass(frozen=True)
class SampleHistogram:
    """Distinct generated subalgebras seen over a sampling run."""

    trials: int
    bound: int
    seed: int
    distinct: tuple  # Subspaces, sorted by (dim, canonical key)
    growth_curve: tuple  # distinct counts after trials 1, 2, 4, ... and at the end

    @property
    def count(self) -> int:
        return len(self.distinct)

    def by_dim(self) -> dict:
        out: dict = {}
        for s in self.distinct:
            out.setdefault(s.dim, []).append(s)
        return out

    def stabilized(self, marks: int = 4) -> bool:
        """True when the last `marks` recorded growth marks are all equal."""
        if len(self.growth_curve) < marks:
            return False
        tail = self.growth_curve[-marks:]
        return all(x == tail[0] for x in tail)


def sample_subalgebras(target, trials: int, bound: int, seed: int = 0) -> SampleHistogram:
    """Draw elements with integer coordinates in [-bound, bound], close each
    under multiplication over the base image, canonicalize and dedupe.

    Trials use per-trial derived seeds, so the merged histogram does not
    depend on evaluation order.
    """
    if isinstance(target, RelativeAlgebra):
        A = target.amb
        base = target.base_image
    elif isinstance(target, StructAlgebra):
        A = target
        base = subspace_from_vectors(A.dom, A.dim, [A.unit])
    else:
        raise UnsupportedDomain("sampler expects an algebra or a relative algebra")
    if A.dom != QQ:
        raise UnsupportedDomain("sampling runs over the rationals; finite domains enumerate")
    seen = {}
    curve = []
    mark = 1
    for t in range(1, trials + 1):
        rng = random.Random(seed * 1_000_003 + t)
        vec = _draw(rng, A.dim, bound)
        if vec is not None:
            s = generated_by_element(A, vec, base)
            seen.setdefault(s.key(), s)
        if t == mark:
            curve.append(len(seen))
            mark *= 2
    curve.append(len(seen))
    distinct = tuple(sorted(seen.values(), key=lambda s: (s.dim, s.key())))
    return SampleHistogram(
        trials=trials, bound=bound, seed=seed, distinct=distinct, growth_curve=tuple(curve)
    )


def _draw(rng, dim: int, bound: int):
    """One master draw with a box-size mixture, rejected against the bound.

    The drawn vector does not depend on the bound, so for a fixed seed
    schedule the accepted set with a smaller box is a subset of the accepted
    set with a larger one; growth curves are then pointwise monotone in the
    bound by construction.
    """
    u = rng.random()
    if u < 0.8:
        box = 5
    elif u < 0.95:
        box = rng.randint(1, 4)
    else:
        box = 8
        while rng.random() < 0.5 and box < 1 << 12:
            box <<= 1
    vec = tuple(Fraction(rng.randint(-box, box)) for _ in range(dim))
    if all(abs(c) <= bound for c in vec):
        return vec
    return None


def family_witness(modulus: Poly, points) -> list[Subspace]:
    """The injective family of subalgebras of Q[x]/(f^2): a projective point
    (a_0 : ... : a_{n-1}) maps to the span of 1 and f * sum a_i x^i.

    The presentation is taken through the modulus, which must be an exact
    square of a squarefree f with deg f >= 2.
    """
    if modulus.dom != QQ:
        raise UnsupportedDomain("family witness runs over the rationals")
    parts = squarefree_decomposition(modulus)
    if len(parts) != 1 or parts[0][1] != 2:
        raise NotApplicable("modulus is not the square of a squarefree polynomial")
    f = parts[0][0]
    n = f.degree
    if n < 2:
        raise NotApplicable("squared factor must have degree at least 2")
    A = poly_quotient_algebra(modulus)
    out = []
    for pt in points:
        coords = [Fraction(c) for c in pt]
        if len(coords) != n:
            raise NotApplicable(f"projective points need {n} coordinates")
        if all(c == 0 for c in coords):
            raise NotApplicable("projective points cannot be all zero")
        gpoly = _trim(coords)
        w = pmul(f, gpoly)
        vec = tuple(w.coeffs) + (Fraction(0),) * (A.dim - len(w.coeffs))
        span = subspace_from_vectors(QQ, A.dim, [A.unit, vec])
        # closed: the line part squares to a multiple of f^2 = 0
        prod = element_multiply(A, vec, vec)
        if not span.contains(prod):
            raise NotApplicable("family member failed its closure check")
        out.append(span)
    return out


def _trim(coords) -> Poly:
    cs = list(coords)
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(QQ, tuple(cs))


def sample_subrings(zp, trials: int, bound: int, seed: int = 0) -> SampleHistogram:
    """Integer analogue of the subalgebra sampler: generate Z[a] for random
    a and count distinct canonical lattices (Hermite bases including the
    relation rows)."""
    from .intmat import hermite_basis, lattice_contains

    n = zp.ngens
    seen = {}
    curve = []
    mark = 1
    for t in range(1, trials + 1):
        rng = random.Random(seed * 1_000_003 + t)
        vec = _draw(rng, n, bound)
        if vec is not None:
            a = [int(c) for c in vec]
            rows = [list(zp.unit)]
            power = list(zp.unit)
            basis = hermite_basis(list(zp.relations) + rows)
            while True:
                power = zp.mul_vec(power, a)
                if lattice_contains(basis, power):
                    break
                rows.append(list(power))
                basis = hermite_basis(list(zp.relations) + rows)
            key = tuple(tuple(r) for r in basis)
            seen.setdefault(key, basis)
        if t == mark:
            curve.append(len(seen))
            mark *= 2
    curve.append(len(seen))
    distinct = tuple(sorted(seen, key=lambda b: (len(b), b)))
    return SampleHistogram(
        trials=trials, bound=bound, seed=seed, distinct=distinct, growth_curve=tuple(curve)
    )
