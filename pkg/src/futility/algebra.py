"""Structure-constant algebras and the linear-algebra primitives the
deciders consume: generated subalgebras, commutator ideal, center,
nilradical, local decomposition, quotients, products, minimal polynomials
and Frobenius spans.

A StructAlgebra is a free module of finite rank over a scalar domain with
multiplication given by a structure tensor; associativity and the unit law
are validated at construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .domains import QQ, PrimeField, ScalarDomain
from .errors import (
    BaseNotLocalArtinian,
    CharacteristicZero,
    DimensionMismatch,
    DomainMismatch,
    NotAField,
    NotAnIdeal,
    SearchBudgetExceeded,
    UnsupportedDomain,
    ValidationError,
)
from .linalg import (
    Subspace,
    full_subspace,
    nullspace,
    subspace_from_vectors,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_subspace,
    zero_vec,
)
from .polynomials import (
    Poly,
    factor_over_prime_field,
    factor_over_rationals,
    make_poly,
    pconst,
    pmul,
    ppow,
    pxgcd,
)


@dataclass(frozen=True)
class StructAlgebra:
    """Finite-dimensional unital associative algebra by structure constants.

    table[i][j] holds the coordinates of e_i * e_j; unit holds the
    coordinates of the two-sided identity.
    """

    dom: ScalarDomain
    dim: int
    table: tuple
    unit: tuple

    @property
    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.table[i][j] != self.table[j][i]:
                    return False
        return True

    def basis_vector(self, i):
        return unit_vec(self.dom, self.dim, i)

    def __repr__(self):
        return f"StructAlgebra(dim={self.dim}, dom={self.dom})"


def make_algebra(dom: ScalarDomain, table, unit, check: bool = True) -> StructAlgebra:
    """Build a StructAlgebra, validating the unit law and associativity on
    all basis triples."""
    n = len(table)
    tab = tuple(tuple(tuple(row) for row in block) for block in table)
    unit = tuple(unit)
    for block in tab:
        if len(block) != n or any(len(v) != n for v in block):
            raise ValidationError("structure tensor is not dim x dim x dim")
    if len(unit) != n:
        raise ValidationError("unit vector length differs from dimension")
    A = StructAlgebra(dom, n, tab, unit)
    if check and n:
        for i in range(n):
            e = A.basis_vector(i)
            if element_multiply(A, unit, e) != e or element_multiply(A, e, unit) != e:
                raise ValidationError(f"unit law fails at basis vector {i}")
        for i in range(n):
            for j in range(n):
                ij = tab[i][j]
                for k in range(n):
                    left = element_multiply(A, ij, A.basis_vector(k))
                    right = element_multiply(A, A.basis_vector(i), tab[j][k])
                    if left != right:
                        raise ValidationError(
                            f"associativity fails at basis triple ({i}, {j}, {k})"
                        )
    return A


def element_multiply(A: StructAlgebra, u, v):
    """Bilinear product of coordinate vectors via the structure tensor."""
    if len(u) != A.dim or len(v) != A.dim:
        raise DimensionMismatch("coordinate length differs from dimension")
    dom = A.dom
    out = [dom.zero] * A.dim
    for i, cu in enumerate(u):
        if dom.is_zero(cu):
            continue
        for j, cv in enumerate(v):
            if dom.is_zero(cv):
                continue
            c = dom.mul(cu, cv)
            row = A.table[i][j]
            for k in range(A.dim):
                if not dom.is_zero(row[k]):
                    out[k] = dom.add(out[k], dom.mul(c, row[k]))
    return tuple(out)


def element_power(A: StructAlgebra, u, n: int):
    acc = A.unit
    base = u
    while n:
        if n & 1:
            acc = element_multiply(A, acc, base)
        n >>= 1
        if n:
            base = element_multiply(A, base, base)
    return acc


def mult_rows(A: StructAlgebra, u):
    """Rows of the left-multiplication map: row i = u * e_i."""
    return tuple(element_multiply(A, u, A.basis_vector(i)) for i in range(A.dim))


def mult_trace(A: StructAlgebra, u):
    dom = A.dom
    acc = dom.zero
    for i in range(A.dim):
        acc = dom.add(acc, element_multiply(A, u, A.basis_vector(i))[i])
    return acc


def invert_element(A: StructAlgebra, v):
    """Two-sided inverse of v, or NotAField carrying v as the zero-divisor
    witness when v is nonzero but not invertible."""
    dom = A.dom
    if vec_is_zero(dom, v):
        raise NotAField("zero is not invertible", witness=v)
    rows = mult_rows(A, v)
    # solve x * rows = unit  (x in row coordinates)
    aug = [[rows[i][j] for i in range(A.dim)] + [A.unit[j]] for j in range(A.dim)]
    from .linalg import rref

    red, pivots = rref(dom, aug)
    if A.dim in pivots:
        raise NotAField("element is a zero divisor", witness=v)
    sol = [dom.zero] * A.dim
    for row, p in zip(red, pivots):
        sol[p] = row[A.dim]
    x = tuple(sol)
    if element_multiply(A, v, x) != A.unit:
        raise NotAField("element is a zero divisor", witness=v)
    return x


def subalgebra_generated(A: StructAlgebra, gens, unital_over: Subspace) -> Subspace:
    """Least multiplication-closed subspace containing unital_over and the
    generators; computed by span-and-multiply until the dimension settles."""
    if not unital_over.contains(A.unit):
        raise ValidationError("unital_over must contain the unit")
    for g in gens:
        if len(g) != A.dim:
            raise DimensionMismatch("generator length differs from dimension")
    span = subspace_from_vectors(A.dom, A.dim, list(unital_over.rows) + list(gens))
    while True:
        prods = [element_multiply(A, u, v) for u in span.rows for v in span.rows]
        bigger = subspace_from_vectors(A.dom, A.dim, list(span.rows) + prods)
        if bigger.dim == span.dim:
            return bigger
        span = bigger


def generated_by_element(A: StructAlgebra, a, base: Subspace) -> Subspace:
    """Subalgebra generated by a single element over a central base image:
    the span of base_row * a^j for j < dim, which is already closed because
    the base commutes with everything and powers of a reduce."""
    vecs = list(base.rows)
    powers = [A.unit]
    for _ in range(A.dim - 1):
        powers.append(element_multiply(A, powers[-1], a))
    for b in base.rows:
        for p in powers[1:]:
            vecs.append(element_multiply(A, b, p))
    return subspace_from_vectors(A.dom, A.dim, vecs)


def subspace_product(A: StructAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """Span of all pairwise products of the two subspaces."""
    prods = [element_multiply(A, u, v) for u in s.rows for v in t.rows]
    return subspace_from_vectors(A.dom, A.dim, prods)


def ideal_closure(A: StructAlgebra, vectors) -> Subspace:
    """Two-sided ideal generated by the vectors."""
    span = subspace_from_vectors(A.dom, A.dim, list(vectors))
    while True:
        extra = []
        for v in span.rows:
            for k in range(A.dim):
                e = A.basis_vector(k)
                extra.append(element_multiply(A, e, v))
                extra.append(element_multiply(A, v, e))
        bigger = subspace_from_vectors(A.dom, A.dim, list(span.rows) + extra)
        if bigger.dim == span.dim:
            return bigger
        span = bigger


def commutator_ideal(A: StructAlgebra) -> Subspace:
    """Two-sided ideal generated by all basis commutators."""
    comms = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            comms.append(tuple(A.dom.sub(a, b) for a, b in zip(A.table[i][j], A.table[j][i])))
    if not comms:
        return zero_subspace(A.dom, A.dim)
    return ideal_closure(A, comms)


def center(A: StructAlgebra) -> Subspace:
    """Solution space of x*e_i = e_i*x for every basis vector."""
    dom = A.dom
    rows = []
    for i in range(A.dim):
        for k in range(A.dim):
            rows.append(
                tuple(dom.sub(A.table[j][i][k], A.table[i][j][k]) for j in range(A.dim))
            )
    basis = nullspace(dom, rows, A.dim)
    return subspace_from_vectors(dom, A.dim, basis)


def is_ideal(A: StructAlgebra, s: Subspace) -> bool:
    for v in s.rows:
        for k in range(A.dim):
            e = A.basis_vector(k)
            if not s.contains(element_multiply(A, e, v)):
                return False
            if not s.contains(element_multiply(A, v, e)):
                return False
    return True


def nilradical(A: StructAlgebra) -> Subspace:
    """Nilpotent elements of a commutative algebra over Q or F_p.

    Over Q this is the radical of the trace form.  Over F_p the trace form
    degenerates when p divides dimensions, so the kernel of the iterated
    Frobenius map u -> u^(p^m) with p^m >= dim is used instead; that map is
    F_p-linear and kills exactly the nilpotents.
    """
    dom = A.dom
    if not A.is_commutative:
        raise ValidationError("nilradical needs a commutative algebra")
    if A.dim == 0:
        return zero_subspace(dom, 0)
    if isinstance(dom, PrimeField):
        q = dom.p
        while q < A.dim:
            q *= dom.p
        rows = [element_power(A, A.basis_vector(i), q) for i in range(A.dim)]
        # kernel of x -> sum x_i rows[i]
        basis = nullspace(dom, [tuple(r[k] for r in rows) for k in range(A.dim)], A.dim)
    elif dom == QQ:
        trace_rows = []
        for i in range(A.dim):
            row = []
            for j in range(A.dim):
                row.append(mult_trace(A, A.table[i][j]))
            trace_rows.append(tuple(row))
        basis = nullspace(dom, trace_rows, A.dim)
    else:
        raise UnsupportedDomain("nilradical supports Q and F_p coefficients")
    out = subspace_from_vectors(dom, A.dim, basis)
    for v in out.rows:
        if not vec_is_zero(dom, element_power(A, v, A.dim)):
            raise ValidationError("radical computation produced a non-nilpotent")
    return out


def minimal_polynomial(A: StructAlgebra, a) -> Poly:
    """Monic least-degree polynomial with f(a) = 0, by linear dependence of
    the powers of a."""
    dom = A.dom
    powers = [A.unit]
    cur = A.unit
    while True:
        span = subspace_from_vectors(dom, A.dim, powers)
        cur = element_multiply(A, cur, a)
        if span.contains(cur):
            coeffs = _express(dom, powers, cur, A.dim)
            # x^k - sum coeffs_i x^i
            body = [dom.neg(c) for c in coeffs] + [dom.one]
            return make_poly(dom, body)
        powers.append(cur)


def _express(dom, vectors, target, ambient):
    """Coefficients writing target as a combination of independent vectors."""
    aug = [[v[j] for v in vectors] + [target[j]] for j in range(ambient)]
    from .linalg import rref

    red, pivots = rref(dom, aug)
    n = len(vectors)
    if n in pivots:
        raise ValueError("target not in span")
    sol = [dom.zero] * n
    for row, p in zip(red, pivots):
        sol[p] = row[n]
    return sol


def quotient_algebra(A: StructAlgebra, ideal: Subspace):
    """Quotient by a validated two-sided ideal; returns the quotient algebra
    and the projection matrix (rows = images of the old basis)."""
    if ideal.ambient != A.dim:
        raise DimensionMismatch("ideal ambient dimension differs")
    if not is_ideal(A, ideal):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    dom = A.dom
    keep = [j for j in range(A.dim) if j not in set(ideal.pivots)]
    q = len(keep)

    def project(v):
        r = ideal.reduce(v)
        return tuple(r[j] for j in keep)

    table = []
    for a in keep:
        row = []
        for b in keep:
            row.append(project(A.table[a][b]))
        table.append(row)
    unit = project(A.unit)
    B = make_algebra(dom, table, unit)
    proj = tuple(project(A.basis_vector(i)) for i in range(A.dim))
    return B, proj


def product_algebra(factors) -> StructAlgebra:
    """Direct product with block-diagonal structure constants."""
    factors = list(factors)
    if not factors:
        raise ValidationError("product of zero algebras is not supported")
    dom = factors[0].dom
    for f in factors:
        if f.dom != dom:
            raise DomainMismatch("product factors over different domains")
    n = sum(f.dim for f in factors)
    offs = []
    off = 0
    for f in factors:
        offs.append(off)
        off += f.dim
    table = [[zero_vec(dom, n) for _ in range(n)] for _ in range(n)]
    unit = [dom.zero] * n
    for f, o in zip(factors, offs):
        for i in range(f.dim):
            unit[o + i] = f.unit[i]
            for j in range(f.dim):
                vec = [dom.zero] * n
                for k in range(f.dim):
                    vec[o + k] = f.table[i][j][k]
                table[o + i][o + j] = tuple(vec)
    return make_algebra(dom, table, unit)


def subalgebra_to_algebra(A: StructAlgebra, s: Subspace):
    """Re-express a unital multiplication-closed subspace as an algebra in
    its own right; returns the algebra and the inclusion rows."""
    if not s.contains(A.unit):
        raise ValidationError("subspace does not contain the unit")
    rows = s.rows
    table = []
    for u in rows:
        line = []
        for v in rows:
            prod = element_multiply(A, u, v)
            if not s.contains(prod):
                raise ValidationError("subspace is not multiplication closed")
            line.append(s.coords(prod))
        table.append(line)
    unit = s.coords(A.unit)
    return make_algebra(A.dom, table, unit), rows


def change_of_basis(A: StructAlgebra, new_basis_rows) -> StructAlgebra:
    """Rewrite A in the basis given by the rows (must be invertible)."""
    dom = A.dom
    n = A.dim
    rows = [tuple(r) for r in new_basis_rows]
    span = subspace_from_vectors(dom, n, rows)
    if span.dim != n:
        raise ValidationError("change of basis needs an invertible matrix")
    table = []
    for u in rows:
        line = []
        for v in rows:
            prod = element_multiply(A, u, v)
            line.append(tuple(_express(dom, rows, prod, n)))
        table.append(line)
    unit = tuple(_express(dom, rows, A.unit, n))
    return make_algebra(dom, table, unit)


# ---------------------------------------------------------------------------
# Local decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalFactor:
    """One local factor of a commutative algebra: the idempotent cutting it
    out, the factor presented as an algebra on the ideal e*A, and the
    projection rows A -> factor coordinates."""

    idempotent: tuple
    algebra: StructAlgebra
    projection: tuple


def local_decomposition(A: StructAlgebra, seed: int = 0) -> list[LocalFactor]:
    """Complete orthogonal idempotent system splitting a commutative algebra
    over Q or F_p into local factors.

    Splitting idempotents are found on the semisimple quotient: over F_p
    from the Frobenius-fixed subalgebra, over Q from a factored minimal
    polynomial of a primitive element (basis vectors first, then seeded
    random combinations), and are then lifted along the nilradical.
    """
    if not A.is_commutative:
        raise ValidationError("local decomposition needs a commutative algebra")
    if A.dim == 0:
        return []
    if not (A.dom == QQ or isinstance(A.dom, PrimeField)):
        raise UnsupportedDomain("local decomposition supports Q and F_p")
    rng = random.Random(seed)
    pending = [(A, tuple(A.basis_vector(i) for i in range(A.dim)), A.unit)]
    # entries: (algebra in current coords, inclusion rows back to A, idempotent in A)
    out = []
    while pending:
        B, incl, idem = pending.pop()
        e = _splitting_idempotent(B, rng)
        if e is None:
            out.append((B, incl, idem))
            continue
        one_minus = vec_sub(B.dom, B.unit, e)
        for part in (e, one_minus):
            C, rows_in_B, proj = _peel_factor(B, part)
            incl2 = tuple(_combine(B.dom, r, incl) for r in rows_in_B)
            idem2 = _combine(B.dom, part, incl)
            pending.append((C, incl2, idem2))
    result = []
    for B, incl, idem in out:
        # projection: coordinates of e*v inside the factor
        proj = []
        for i in range(A.dim):
            v = element_multiply(A, idem, A.basis_vector(i))
            proj.append(tuple(_express(A.dom, list(incl), v, A.dim)))
        result.append(LocalFactor(idempotent=idem, algebra=B, projection=tuple(proj)))
    result.sort(key=lambda lf: lf.algebra.dim)
    return result


def _combine(dom, coeffs, rows):
    acc = zero_vec(dom, len(rows[0]))
    for c, r in zip(coeffs, rows):
        acc = vec_add(dom, acc, vec_scale(dom, c, r))
    return acc


def _peel_factor(B: StructAlgebra, e):
    """Algebra structure on the ideal e*B with unit e."""
    dom = B.dom
    vecs = [element_multiply(B, e, B.basis_vector(i)) for i in range(B.dim)]
    s = subspace_from_vectors(dom, B.dim, vecs)
    rows = s.rows
    table = []
    for u in rows:
        line = []
        for v in rows:
            line.append(s.coords(element_multiply(B, u, v)))
        table.append(line)
    unit = s.coords(e)
    C = make_algebra(dom, table, unit)
    return C, rows, s


def _splitting_idempotent(B: StructAlgebra, rng):
    """A nontrivial idempotent of B, or None when B is local.

    The verdict is proof-grade in both directions: over F_p the number of
    local factors equals the dimension of the Frobenius-fixed subalgebra of
    B/nilradical; over Q a primitive element of B/nilradical with
    irreducible minimal polynomial certifies locality, while a factored
    minimal polynomial yields an explicit splitting idempotent.
    """
    dom = B.dom
    nil = nilradical(B)
    R, proj = quotient_algebra(B, nil)
    if R.dim <= 1:
        return None
    lift_rows = _section(B, nil)

    def lift(vec_in_R):
        return _combine(dom, vec_in_R, lift_rows)

    if isinstance(dom, PrimeField):
        p = dom.p
        rows = [element_power(R, R.basis_vector(i), p) for i in range(R.dim)]
        diff = [
            tuple(dom.sub(rows[i][k], R.basis_vector(i)[k]) for i in range(R.dim))
            for k in range(R.dim)
        ]
        fixed = nullspace(dom, diff, R.dim)
        if len(fixed) <= 1:
            return None
        # any fixed vector outside the unit line has a split minimal polynomial
        unit_line = subspace_from_vectors(dom, R.dim, [R.unit])
        b = next(v for v in fixed if not unit_line.contains(v))
        f = minimal_polynomial(R, b)
        fac = factor_over_prime_field(f, seed=0)
        e_red = _crt_idempotent(R, b, fac)
    else:
        e_red = None
        budget = 64 * (B.dim + 1)
        bound = 1
        tried = 0
        while True:
            if tried < R.dim:
                cand = R.basis_vector(tried)
            else:
                cand = tuple(dom.from_int(rng.randint(-bound, bound)) for _ in range(R.dim))
                if tried % 8 == 0:
                    bound *= 2
            tried += 1
            f = minimal_polynomial(R, cand)
            fac = factor_over_rationals(f, seed=0)
            if any(m > 1 for _, m in fac.factors):
                raise ValidationError("semisimple quotient produced a repeated factor")
            if len(fac.factors) > 1:
                e_red = _crt_idempotent(R, cand, fac)
                break
            if f.degree == R.dim:
                return None  # primitive with irreducible minimal polynomial
            if tried > budget:
                raise SearchBudgetExceeded("no primitive element found for splitting")
    if e_red is None:
        return None
    e = lift(e_red)
    # Newton-style idempotent refinement along the nilpotent ideal
    for _ in range(B.dim + 2):
        sq = element_multiply(B, e, e)
        if sq == e:
            break
        three = dom.from_int(3)
        two = dom.from_int(2)
        cube = element_multiply(B, sq, e)
        e = vec_sub(dom, vec_scale(dom, three, sq), vec_scale(dom, two, cube))
    if element_multiply(B, e, e) != e:
        raise ValidationError("idempotent lifting failed to converge")
    if e == B.unit or vec_is_zero(dom, e):
        raise ValidationError("idempotent lifting collapsed to a trivial idempotent")
    return e


def _section(B: StructAlgebra, nil: Subspace):
    """Rows lifting the quotient basis of B/nil back into B."""
    keep = [j for j in range(B.dim) if j not in set(nil.pivots)]
    return tuple(B.basis_vector(j) for j in keep)


def _crt_idempotent(R: StructAlgebra, b, fac):
    """Idempotent from a split factored minimal polynomial of b: with
    f = g*h coprime and s*g + t*h = 1, the element (t*h)(b) is idempotent."""
    dom = R.dom
    g, m = fac.factors[0]
    gpart = ppow(g, m)
    hpart = pconst(dom, dom.one)
    for q, mq in fac.factors[1:]:
        hpart = pmul(hpart, ppow(q, mq))
    one, s, t = pxgcd(gpart, hpart)
    assert one.degree == 0
    # evaluate (t*h) at b inside R
    poly = pmul(t, hpart)
    acc = zero_vec(dom, R.dim)
    power = R.unit
    for c in poly.coeffs:
        acc = vec_add(dom, acc, vec_scale(dom, c, power))
        power = element_multiply(R, power, b)
    return acc


# ---------------------------------------------------------------------------
# Frobenius spans for field towers
# ---------------------------------------------------------------------------

def frobenius_span(L: StructAlgebra) -> Subspace:
    """K-span of the p-th powers of a basis; equals the compositum of the
    p-th power subfield with the coefficient field, by additivity of the
    Frobenius map."""
    p = L.dom.char
    if p == 0:
        raise CharacteristicZero("Frobenius span needs positive characteristic")
    vecs = [element_power(L, L.basis_vector(i), p) for i in range(L.dim)]
    return subspace_from_vectors(L.dom, L.dim, vecs)


def frobenius_chain(L: StructAlgebra) -> list[Subspace]:
    """Chain of iterated Frobenius spans down to its stabilization point
    (the separable closure of the coefficient field inside L)."""
    p = L.dom.char
    if p == 0:
        raise CharacteristicZero("Frobenius chain needs positive characteristic")
    chain = [full_subspace(L.dom, L.dim)]
    while True:
        prev = chain[-1]
        vecs = [element_power(L, v, p) for v in prev.rows]
        nxt = subspace_from_vectors(L.dom, L.dim, vecs)
        if nxt.dim == prev.dim:
            return chain
        chain.append(nxt)


# ---------------------------------------------------------------------------
# Relative algebras over a local artinian base
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelativeAlgebra:
    """A base local artinian algebra, an ambient algebra, and the embedding
    of the base, all over a common ground field."""

    ground: ScalarDomain
    base: StructAlgebra
    max_ideal: Subspace
    amb: StructAlgebra
    emb: tuple  # rows: image of each base basis vector in amb coordinates

    def emb_vec(self, v):
        return _combine(self.ground, v, self.emb)

    @property
    def base_image(self) -> Subspace:
        return subspace_from_vectors(self.ground, self.amb.dim, self.emb)

    @property
    def ideal_image(self) -> Subspace:
        vecs = [self.emb_vec(v) for v in self.max_ideal.rows]
        return subspace_from_vectors(self.ground, self.amb.dim, vecs)


def make_relative(ground, base: StructAlgebra, max_ideal: Subspace, amb: StructAlgebra, emb) -> RelativeAlgebra:
    """Validate and build a relative algebra.

    Checks: the embedding is an injective unital ring map, the designated
    ideal has codimension one, is an ideal, and consists of nilpotents (so
    the base is local artinian with residue field the ground field).
    """
    if base.dom != ground or amb.dom != ground:
        raise DomainMismatch("base and ambient must share the ground field")
    emb = tuple(tuple(r) for r in emb)
    if len(emb) != base.dim or any(len(r) != amb.dim for r in emb):
        raise ValidationError("embedding matrix has wrong shape")
    rel = RelativeAlgebra(ground, base, max_ideal, amb, emb)
    if rel.base_image.dim != base.dim:
        raise ValidationError("embedding is not injective")
    if rel.emb_vec(base.unit) != amb.unit:
        raise ValidationError("embedding does not preserve the unit")
    for i in range(base.dim):
        for j in range(base.dim):
            lhs = rel.emb_vec(base.table[i][j])
            rhs = element_multiply(amb, emb[i], emb[j])
            if lhs != rhs:
                raise ValidationError(f"embedding is not a ring map at pair ({i}, {j})")
    for i in range(base.dim):
        for k in range(amb.dim):
            e = amb.basis_vector(k)
            if element_multiply(amb, emb[i], e) != element_multiply(amb, e, emb[i]):
                raise ValidationError("base image must be central in the ambient algebra")
    if max_ideal.ambient != base.dim:
        raise BaseNotLocalArtinian("maximal ideal lives in the wrong space")
    if max_ideal.dim != base.dim - 1:
        raise BaseNotLocalArtinian("designated ideal does not have codimension one")
    if not is_ideal(base, max_ideal):
        raise BaseNotLocalArtinian("designated subspace is not an ideal")
    for v in max_ideal.rows:
        if not vec_is_zero(ground, element_power(base, v, base.dim + 1)):
            raise BaseNotLocalArtinian("designated ideal contains a non-nilpotent")
    return rel
