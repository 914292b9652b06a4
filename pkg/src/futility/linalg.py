"""Exact linear algebra over a ScalarDomain field.

Vectors are tuples of domain elements and matrices are tuples of row
tuples.  Subspaces are stored as reduced row echelon bases, which makes
the representation canonical: two subspaces are equal iff their row
matrices are equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domains import ScalarDomain
from .errors import DimensionMismatch, NotInvertible


def vec_add(dom, u, v):
    return tuple(dom.add(a, b) for a, b in zip(u, v))

def vec_sub(dom, u, v):
    return tuple(dom.sub(a, b) for a, b in zip(u, v))

def vec_scale(dom, c, u):
    return tuple(dom.mul(c, a) for a in u)

def vec_is_zero(dom, u):
    return all(dom.is_zero(a) for a in u)

def zero_vec(dom, n):
    return (dom.zero,) * n

def unit_vec(dom, n, i):
    return tuple(dom.one if j == i else dom.zero for j in range(n))


def rref(dom: ScalarDomain, rows) -> tuple[tuple, tuple]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(work)):
            if not dom.is_zero(work[i][c]):
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = dom.inv(work[r][c])
        work[r] = [dom.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and not dom.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [dom.sub(x, dom.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """Canonical subspace of dom^ambient: reduced-echelon basis rows."""

    dom: ScalarDomain
    ambient: int
    rows: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        """Residual of vec after eliminating all pivot coordinates."""
        if len(vec) != self.ambient:
            raise DimensionMismatch("vector length != ambient dimension")
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not self.dom.is_zero(c):
                v = [self.dom.sub(x, self.dom.mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vec) -> bool:
        return vec_is_zero(self.dom, self.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def coords(self, vec):
        """Coordinates of vec in the echelon basis; vec must lie in the
        subspace (pivot entries of echelon rows are unit, rest eliminated)."""
        if not self.contains(vec):
            raise ValueError("vector not in subspace")
        return tuple(vec[p] for p in self.pivots)

    def key(self):
        """Hashable canonical form (domains with hashable elements only)."""
        return (self.ambient, tuple(tuple(self.dom.key(x) for x in r) for r in self.rows))


def subspace_from_vectors(dom, ambient, vecs) -> Subspace:
    for v in vecs:
        if len(v) != ambient:
            raise DimensionMismatch("vector length != ambient dimension")
    rows, pivots = rref(dom, list(vecs))
    return Subspace(dom, ambient, rows, pivots)


def zero_subspace(dom, ambient) -> Subspace:
    return Subspace(dom, ambient, (), ())


def full_subspace(dom, ambient) -> Subspace:
    return subspace_from_vectors(dom, ambient, [unit_vec(dom, ambient, i) for i in range(ambient)])


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise DimensionMismatch("subspace sum needs equal ambient dimension")
    return subspace_from_vectors(a.dom, a.ambient, list(a.rows) + list(b.rows))


def nullspace(dom, rows, ncols) -> list:
    """Basis of the right nullspace of the matrix given by rows."""
    red, pivots = rref(dom, rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [dom.zero] * ncols
        v[f] = dom.one
        for row, p in zip(red, pivots):
            v[p] = dom.neg(row[f])
        basis.append(tuple(v))
    return basis


def mat_vec(dom, rows, v):
    return tuple(
        _dot(dom, row, v) for row in rows
    )


def _dot(dom, u, v):
    acc = dom.zero
    for a, b in zip(u, v):
        acc = dom.add(acc, dom.mul(a, b))
    return acc


def mat_mul(dom, a, b):
    bt = list(zip(*b))
    return tuple(tuple(_dot(dom, row, col) for col in bt) for row in a)


def identity_matrix(dom, n):
    return tuple(unit_vec(dom, n, i) for i in range(n))


def mat_inv(dom, rows):
    """Inverse of a square matrix; NotInvertible if singular."""
    n = len(rows)
    aug = [list(r) + list(unit_vec(dom, n, i)) for i, r in enumerate(rows)]
    red, pivots = rref(dom, aug)
    if list(pivots) != list(range(n)):
        raise NotInvertible("matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def transpose(rows):
    return tuple(zip(*rows))
