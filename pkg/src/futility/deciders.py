"""Decision procedures for whether an algebra has only finitely many
subalgebras, with checkable certificates.

Each decider returns a FutilityReport carrying the verdict, a tag naming
the criterion that was applied, a certificate, and trace notes.  Verdicts
are structural; the randomized sampler and the exhaustive enumerator act
as independent oracles on top of these.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

import random

from .algebra import (
    RelativeAlgebra,
    StructAlgebra,
    commutator_ideal,
    frobenius_chain,
    local_decomposition,
    minimal_polynomial,
    nilradical,
    quotient_algebra,
    subalgebra_generated,
    subalgebra_to_algebra,
    subspace_product,
)
from .domains import QQ, FunctionField, PrimeField
from .errors import (
    BaseNotLocalArtinian,
    BudgetExceeded,
    MalformedPresentation,
    SearchBudgetExceeded,
    UnsupportedDomain,
)
from .finite_enum import (
    DEFAULT_BUDGET,
    FiniteModule,
    enumerate_subalgebras,
    module_quotient_dims,
)
from .intmat import (
    hermite_basis,
    lattice_contains,
    lattice_index,
    smith_normal_form,
)
from .linalg import (
    Subspace,
    full_subspace,
    subspace_from_vectors,
    subspace_sum,
)
from .polynomials import FactoredPoly, factor_over_prime_field, factor_over_rationals

FUTILE = "Futile"
NOT_FUTILE = "NotFutile"


@dataclass(frozen=True)
class FutilityReport:
    """Verdict plus the criterion applied, a checkable certificate, and a
    trace of the reduction steps."""

    verdict: str
    criterion: str
    certificate: dict
    notes: tuple = ()

    @property
    def futile(self) -> bool:
        return self.verdict == FUTILE


# ---------------------------------------------------------------------------
# Generator search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSearch:
    """Result of hunting for a single generator: either a generator with its
    factored minimal polynomial, or a proven/abandoned negative."""

    generator: tuple | None
    factored: FactoredPoly | None
    exhaustive: bool


def find_generator(
    A: StructAlgebra,
    base_image: Subspace,
    seed: int = 0,
    budget: int = 2048,
) -> GeneratorSearch:
    """Search for a with base_image + powers of a spanning all of A.

    Over F_p the search is exhaustive over all p^dim elements, so a None
    comes with a proof flag.  Over Q the search tries basis vectors first
    and then seeded random integer vectors with a doubling coordinate box;
    exceeding the budget raises instead of pretending a proven None.
    """
    dom = A.dom
    if A.dim == 0:
        return GeneratorSearch(generator=(), factored=None, exhaustive=True)
    if isinstance(dom, PrimeField):
        if dom.p**A.dim > budget * 64:
            raise BudgetExceeded("exhaustive generator search over budget")
        for coords in iproduct(range(dom.p), repeat=A.dim):
            if subalgebra_generated(A, [coords], base_image).dim == A.dim:
                f = minimal_polynomial(A, coords)
                return GeneratorSearch(coords, factor_over_prime_field(f, seed=seed), True)
        return GeneratorSearch(None, None, True)
    if dom != QQ:
        raise UnsupportedDomain("generator search supports Q and F_p domains")
    rng = random.Random(seed)
    bound = 1
    for trial in range(budget):
        if trial < A.dim:
            cand = A.basis_vector(trial)
        else:
            cand = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(A.dim))
            if trial % 16 == 0:
                bound *= 2
        if subalgebra_generated(A, [cand], base_image).dim == A.dim:
            f = minimal_polynomial(A, cand)
            return GeneratorSearch(cand, factor_over_rationals(f, seed=seed), False)
    raise SearchBudgetExceeded("no generator found within the search budget")


# ---------------------------------------------------------------------------
# Infinite ground field
# ---------------------------------------------------------------------------

def decide_infinite_field(A: StructAlgebra, seed: int = 0) -> FutilityReport:
    """Classification over Q: split into local factors; futile iff at most
    one factor is non-reduced and that factor is a nilpotent line algebra
    K[x]/(x^r) with r <= 3, every other factor being a (automatically
    primitive) field extension."""
    if A.dom != QQ:
        raise UnsupportedDomain("infinite-field decider runs over Q")
    tag = "infinite-field-classification"
    if A.dim == 0:
        return FutilityReport(FUTILE, tag, {"dim": 0}, ("zero algebra",))
    if not A.is_commutative:
        return FutilityReport(
            NOT_FUTILE,
            tag,
            {"violation": "noncommutative over an infinite field"},
            ("a noncommutative algebra over an infinite field is never futile",),
        )
    factors = local_decomposition(A, seed=seed)
    profile = []
    nonreduced = []
    for lf in factors:
        B = lf.algebra
        nil = nilradical(B)
        nil2 = subspace_product(B, nil, nil)
        entry = {
            "dim": B.dim,
            "nil_dim": nil.dim,
            "residue_dim": B.dim - nil.dim,
            "nil_mod_nil2_dim": nil.dim - nil2.dim,
        }
        profile.append(entry)
        if nil.dim:
            nonreduced.append(entry)
    cert = {"local_profile": profile}
    verdict = FUTILE
    violation = None
    if len(nonreduced) > 1:
        verdict = NOT_FUTILE
        violation = f"{len(nonreduced)} non-reduced local factors"
    elif nonreduced:
        e = nonreduced[0]
        if e["residue_dim"] != 1:
            violation = (
                f"non-reduced factor has residue field of dimension {e['residue_dim']}"
            )
        elif e["dim"] > 3:
            violation = f"non-reduced factor has dimension {e['dim']} > 3"
        elif e["nil_mod_nil2_dim"] > 1:
            violation = "non-reduced factor's maximal ideal is not principal"
        if violation:
            verdict = NOT_FUTILE
    if verdict == FUTILE:
        base = subspace_from_vectors(QQ, A.dim, [A.unit])
        try:
            search = find_generator(A, base, seed=seed)
            cert["generator"] = search.generator
            cert["minimal_polynomial"] = search.factored
        except SearchBudgetExceeded:
            cert["generator"] = None
        notes = ("futile: monogenic with factored minimal polynomial certificate",)
    else:
        cert["violation"] = violation
        notes = (f"not futile: {violation}",)
    return FutilityReport(verdict, tag, cert, notes)


# ---------------------------------------------------------------------------
# Field towers in characteristic p
# ---------------------------------------------------------------------------

def decide_field_extension(L: StructAlgebra) -> FutilityReport:
    """Futility of a finite field extension L/K in characteristic p: futile
    iff the index of the Frobenius-compositum subfield is 1 or p.  The
    certificate carries the whole chain of iterated Frobenius spans down to
    the separable closure."""
    if not isinstance(L.dom, FunctionField):
        raise UnsupportedDomain("field-extension decider runs over F_p(t[,s])")
    p = L.dom.p
    chain = frobenius_chain(L)
    dims = [s.dim for s in chain]
    d0 = dims[0]
    d1 = dims[1] if len(dims) > 1 else dims[0]
    ratio = Fraction(d0, d1)
    futile = ratio in (Fraction(1), Fraction(p))
    cert = {
        "degree_over_base": L.dim,
        "chain_dims": dims,
        "frobenius_index": ratio,
        "separable_closure_dim": dims[-1],
    }
    note = f"[L : L^pK] = {ratio}; futile iff it lies in {{1, {p}}}"
    return FutilityReport(FUTILE if futile else NOT_FUTILE, "field-extension-frobenius", cert, (note,))


# ---------------------------------------------------------------------------
# Local artinian base
# ---------------------------------------------------------------------------

def decide_local_artinian(rel: RelativeAlgebra, seed: int = 0) -> FutilityReport:
    """Relative futility over a local artinian base with infinite residue
    field: commutativity, futility of A/mA and T/mT over the residue field,
    uniseriality of m(A/R), and when the nilradical of T/mT is a plane, the
    subspace identity n^4 + n^2 m + m = mT inside T."""
    if rel.ground != QQ:
        raise UnsupportedDomain("local artinian decider needs ground field Q")
    A = rel.amb
    tag = "local-artinian-conditions"
    notes = []
    conds = {}
    if not A.is_commutative:
        return FutilityReport(
            NOT_FUTILE, tag, {"violation": "ambient algebra is noncommutative"},
            ("not futile: ambient algebra is noncommutative",),
        )
    dom = rel.ground
    m_img = rel.ideal_image
    base_img = rel.base_image
    ambient_full = full_subspace(dom, A.dim)
    mA = subspace_product(A, m_img, ambient_full) if m_img.dim else _zero(dom, A.dim)
    m2A = subspace_product(A, m_img, mA) if mA.dim else _zero(dom, A.dim)
    m3A = subspace_product(A, m_img, m2A) if m2A.dim else _zero(dom, A.dim)

    # A/mA over the residue field (= ground field)
    AmodmA, _ = quotient_algebra(A, mA)
    sub_a = decide_infinite_field(AmodmA, seed=seed)
    conds["A_mod_mA_futile"] = sub_a.futile
    notes.append(f"A/mA has dimension {AmodmA.dim}: {sub_a.verdict}")

    # T = R + nilradical(A)
    nil = nilradical(A)
    T_span = subspace_sum(base_img, nil)
    Talg, Trows = subalgebra_to_algebra(A, T_span)
    mT_amb = subspace_product(A, m_img, T_span) if m_img.dim else _zero(dom, A.dim)
    mT_in_T = subspace_from_vectors(dom, Talg.dim, [T_span.coords(v) for v in mT_amb.rows])
    TmodmT, _ = quotient_algebra(Talg, mT_in_T)
    sub_t = decide_infinite_field(TmodmT, seed=seed)
    conds["T_mod_mT_futile"] = sub_t.futile
    notes.append(f"T/mT has dimension {TmodmT.dim}: {sub_t.verdict}")

    # uniseriality of m(A/R) via the two leading quotient dimensions
    d0 = subspace_sum(mA, base_img).dim - subspace_sum(m2A, base_img).dim
    d1 = subspace_sum(m2A, base_img).dim - subspace_sum(m3A, base_img).dim
    conds["uniserial_dims"] = (d0, d1)
    conds["uniserial"] = d0 <= 1 and d1 <= 1
    notes.append(f"m(A/R) quotient dimensions: ({d0}, {d1})")

    # the plane case needs the subspace identity
    r_T = nilradical(TmodmT).dim
    conds["r_T"] = r_T
    if r_T == 2:
        n2 = subspace_product(A, nil, nil)
        n4 = subspace_product(A, n2, n2)
        n2m = subspace_product(A, n2, m_img) if m_img.dim else _zero(dom, A.dim)
        lhs = subspace_sum(subspace_sum(n4, n2m), m_img)
        conds["plane_identity"] = lhs == mT_amb
        notes.append(
            f"plane case: n^4 + n^2 m + m has dimension {lhs.dim}, mT has {mT_amb.dim}"
        )
    else:
        conds["plane_identity"] = True
    futile = (
        conds["A_mod_mA_futile"]
        and conds["T_mod_mT_futile"]
        and conds["uniserial"]
        and conds["plane_identity"]
    )
    cert = {"conditions": conds, "T_dim": Talg.dim}
    verdict = FUTILE if futile else NOT_FUTILE
    notes.append(f"verdict: {verdict}")
    return FutilityReport(verdict, tag, cert, tuple(notes))


def _zero(dom, n):
    return subspace_from_vectors(dom, n, [])


# ---------------------------------------------------------------------------
# Finite coefficient rings
# ---------------------------------------------------------------------------

def decide_finite_base(A: StructAlgebra, budget: int = DEFAULT_BUDGET) -> FutilityReport:
    """Over a finite coefficient ring every finite-rank algebra is finite,
    hence futile; the certificate is the exhaustive subalgebra count when
    the enumeration budget allows, else the cardinality argument."""
    dom = A.dom
    if not getattr(dom, "is_finite", False):
        raise UnsupportedDomain("finite-base decider needs a finite coefficient ring")
    tag = "finite-base-exhaustion"
    size = dom.size**A.dim
    cert = {"cardinality": size}
    notes = [f"finite algebra with {size} elements over {dom}"]
    if isinstance(dom, PrimeField):
        try:
            base = subspace_from_vectors(dom, A.dim, [A.unit])
            lat = enumerate_subalgebras(A, base, budget)
            cert["subalgebra_count"] = lat.count
            notes.append(f"exhaustive enumeration found {lat.count} subalgebras")
        except BudgetExceeded:
            notes.append("enumeration over budget; cardinality argument applies")
    else:
        notes.append("composite modulus: cardinality argument applies")
    return FutilityReport(FUTILE, tag, cert, tuple(notes))


# ---------------------------------------------------------------------------
# Noncommutative reduction
# ---------------------------------------------------------------------------

def decide_noncommutative(A, seed: int = 0, budget: int = DEFAULT_BUDGET) -> FutilityReport:
    """Reduce along the commutator ideal: futile iff the commutator ideal is
    finite and the commutative quotient is futile."""
    if isinstance(A, ZPresentation):
        return _decide_noncommutative_z(A)
    if not isinstance(A, StructAlgebra):
        raise UnsupportedDomain("expected a structure-constant algebra or Z presentation")
    tag = "commutator-reduction"
    comm = commutator_ideal(A)
    dom = A.dom
    if dom == QQ:
        if comm.dim == 0:
            inner = decide_infinite_field(A, seed=seed)
            return FutilityReport(
                inner.verdict,
                inner.criterion,
                inner.certificate,
                ("commutator ideal is zero; deferring to the commutative decider",)
                + inner.notes,
            )
        cert = {"commutator_dim": comm.dim, "violation": "infinite commutator ideal"}
        return FutilityReport(
            NOT_FUTILE,
            tag,
            cert,
            (f"commutator ideal is a {comm.dim}-dimensional Q-space, hence infinite",),
        )
    if getattr(dom, "is_finite", False):
        size = dom.size**comm.dim
        quot, _ = quotient_algebra(A, comm)
        inner = decide_finite_base(quot, budget)
        notes = (
            f"commutator ideal has dimension {comm.dim} (size {size}), always finite",
            "recursing on the commutative quotient",
        ) + inner.notes
        cert = {
            "commutator_dim": comm.dim,
            "commutator_size": size,
            "quotient": inner.certificate,
        }
        return FutilityReport(inner.verdict, tag, cert, notes)
    raise UnsupportedDomain(f"no noncommutative path for domain {dom}")


# ---------------------------------------------------------------------------
# Integer algebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZPresentation:
    """Module-finite Z-algebra: ngens generators, integer relation rows, a
    multiplication table on generators, and the unit's coordinates."""

    ngens: int
    relations: tuple
    table: tuple
    unit: tuple

    def validate(self):
        n = self.ngens
        rel = [list(r) for r in self.relations]
        for r in rel:
            if len(r) != n:
                raise MalformedPresentation("relation row has wrong length")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise MalformedPresentation("multiplication table is not ngens x ngens")
        for row in self.table:
            for v in row:
                if len(v) != n:
                    raise MalformedPresentation("table entry has wrong length")
        if len(self.unit) != n:
            raise MalformedPresentation("unit vector has wrong length")
        basis = hermite_basis(rel)
        # relations must absorb multiplication on either side
        for r in rel:
            if not any(r):
                continue
            for j in range(n):
                left = self.mul_vec(r, self.gen(j))
                right = self.mul_vec(self.gen(j), r)
                if not lattice_contains(basis, left) or not lattice_contains(basis, right):
                    raise MalformedPresentation(
                        "relation lattice is not an ideal for the given table"
                    )
        for j in range(n):
            g = self.gen(j)
            if not lattice_contains(basis, _vsub(self.mul_vec(self.unit, g), g)):
                raise MalformedPresentation(f"unit law fails at generator {j}")
            if not lattice_contains(basis, _vsub(self.mul_vec(g, self.unit), g)):
                raise MalformedPresentation(f"unit law fails at generator {j}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.mul_vec(self.table[i][j], self.gen(k))
                    rhs = self.mul_vec(self.gen(i), self.table[j][k])
                    if not lattice_contains(basis, _vsub(lhs, rhs)):
                        raise MalformedPresentation(
                            f"associativity fails at generator triple ({i}, {j}, {k})"
                        )
        return basis

    def gen(self, j):
        return tuple(1 if i == j else 0 for i in range(self.ngens))

    def mul_vec(self, u, v):
        n = self.ngens
        out = [0] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                c = u[i] * v[j]
                for k in range(n):
                    out[k] += c * self.table[i][j][k]
        return out

    def commutator_lattice(self):
        """Hermite basis of relations + the two-sided ideal generated by all
        generator commutators."""
        gens = [list(r) for r in self.relations]
        for i in range(self.ngens):
            for j in range(i + 1, self.ngens):
                gens.append(_vsub(self.table[i][j], self.table[j][i]))
        basis = hermite_basis(gens)
        while True:
            extra = []
            for v in basis:
                for j in range(self.ngens):
                    for w in (self.mul_vec(v, self.gen(j)), self.mul_vec(self.gen(j), v)):
                        if not lattice_contains(basis, w):
                            extra.append(w)
            if not extra:
                return basis
            basis = hermite_basis(basis + extra)


def _vsub(a, b):
    return [x - y for x, y in zip(a, b)]


@dataclass(frozen=True)
class LocalizedZ:
    """The subring Z[1/n] of Q, optionally times a finite ring."""

    invert: int
    finite_part_size: int = 1

    def validate(self):
        if self.invert == 0:
            raise MalformedPresentation("cannot invert zero")
        if self.finite_part_size < 1:
            raise MalformedPresentation("finite part size must be positive")


def decide_integer_algebra(P) -> FutilityReport:
    """Futility over Z: a module-finite presentation is futile iff its free
    rank is at most 1 (rank 0 means finite; rank 1 means finite torsion plus
    a copy of Z); the symbolic localized form Z[1/n] x finite is futile."""
    tag = "integer-rank"
    if isinstance(P, LocalizedZ):
        P.validate()
        cert = {
            "localization": f"Z[1/{abs(P.invert)}]",
            "finite_part_size": P.finite_part_size,
        }
        notes = (
            "a localization of Z inside Q is futile, and a finite factor "
            "cannot add more than finitely many subalgebras",
        )
        return FutilityReport(FUTILE, tag, cert, notes)
    if not isinstance(P, ZPresentation):
        raise UnsupportedDomain("expected a Z presentation or localized form")
    P.validate()
    snf = smith_normal_form([list(r) for r in P.relations] or [[0] * P.ngens])
    free_rank = P.ngens - snf.rank
    torsion = [d for d in snf.invariant_factors if d > 1]
    tor_size = 1
    for d in torsion:
        tor_size *= d
    cert = {
        "free_rank": free_rank,
        "invariant_factors": list(snf.invariant_factors),
        "torsion_size": tor_size,
    }
    if free_rank == 0:
        return FutilityReport(
            FUTILE, tag, cert, (f"finite ring of size {tor_size}",)
        )
    if free_rank == 1:
        return FutilityReport(
            FUTILE,
            tag,
            cert,
            (
                f"free rank 1 with finite torsion of size {tor_size}; the "
                "torsion-free quotient is a copy of Z",
            ),
        )
    return FutilityReport(
        NOT_FUTILE,
        tag,
        cert,
        (f"free rank {free_rank} >= 2: the rational span is too big",),
    )


def _decide_noncommutative_z(P: ZPresentation) -> FutilityReport:
    tag = "commutator-reduction"
    rel_basis = P.validate()
    comm = P.commutator_lattice()
    notes = [f"commutator ideal lattice has rank {len(comm)} over relations rank {len(rel_basis)}"]
    if len(comm) != len(rel_basis):
        cert = {"commutator_rank": len(comm) - len(rel_basis)}
        notes.append("commutator ideal has positive free rank, hence is infinite")
        return FutilityReport(NOT_FUTILE, tag, cert, tuple(notes))
    size = lattice_index(comm, rel_basis) if comm else 1
    notes.append(f"commutator ideal is finite of size {size}")
    quotient = ZPresentation(
        ngens=P.ngens,
        relations=tuple(tuple(r) for r in comm),
        table=P.table,
        unit=P.unit,
    )
    inner = decide_integer_algebra(quotient)
    notes.append("recursing on the commutative quotient")
    notes.extend(inner.notes)
    cert = {"commutator_size": size, "quotient": inner.certificate}
    return FutilityReport(inner.verdict, tag, cert, tuple(notes))


# ---------------------------------------------------------------------------
# Uniseriality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearModule:
    """A module over a local artinian base presented by the ground field
    action matrices of the maximal ideal generators (rows = images of basis
    vectors)."""

    dom: object
    dim: int
    action: tuple  # of matrices

    def validate(self):
        for mat in self.action:
            if len(mat) != self.dim or any(len(r) != self.dim for r in mat):
                raise BaseNotLocalArtinian("action matrix has wrong shape")
            # each maximal ideal generator must act nilpotently
            rows = [list(r) for r in mat]
            power = rows
            for _ in range(self.dim):
                power = [
                    [
                        _dotsum(self.dom, power[i], [rows[l][j] for l in range(self.dim)])
                        for j in range(self.dim)
                    ]
                    for i in range(self.dim)
                ]
            if any(not self.dom.is_zero(x) for row in power for x in row):
                raise BaseNotLocalArtinian("action generator is not nilpotent")


def _dotsum(dom, u, v):
    acc = dom.zero
    for a, b in zip(u, v):
        acc = dom.add(acc, dom.mul(a, b))
    return acc


def uniserial_check(M) -> tuple[bool, tuple[int, int]]:
    """True iff dim_k(M/mM) <= 1 and dim_k(mM/m^2 M) <= 1, returning the
    dimension pair; accepts a FiniteModule or a LinearModule."""
    if isinstance(M, FiniteModule):
        d0, d1 = module_quotient_dims(M)
        return (d0 <= 1 and d1 <= 1), (d0, d1)
    if not isinstance(M, LinearModule):
        raise UnsupportedDomain("expected a finite or linear module presentation")
    M.validate()
    dom = M.dom
    if M.dim == 0:
        return True, (0, 0)
    imgs = [row for mat in M.action for row in mat]
    mM = subspace_from_vectors(dom, M.dim, imgs)
    m2_vecs = []
    for mat in M.action:
        for v in mM.rows:
            m2_vecs.append(
                tuple(_dotsum(dom, v, [mat[i][j] for i in range(M.dim)]) for j in range(M.dim))
            )
    m2M = subspace_from_vectors(dom, M.dim, m2_vecs)
    d0 = M.dim - mM.dim
    d1 = mM.dim - m2M.dim
    return (d0 <= 1 and d1 <= 1), (d0, d1)
