"""Case description files: parsing, validation, construction of decider
inputs, and canonical serialization.

Cases are JSON documents with exact scalars written as decimal or fraction
strings; no floating point value is accepted anywhere.  Polynomials use a
small expression grammar over +, -, *, /, ^ with variables x, y, t, s.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import (
    RelativeAlgebra,
    StructAlgebra,
    invert_element,
    make_algebra,
    make_relative,
)
from .constructions import extend_by_poly, matrix_algebra, poly_quotient_algebra
from .deciders import LocalizedZ, ZPresentation
from .domains import QQ, ZZ, FunctionField, ModRing, PrimeField, ScalarDomain
from .errors import ParseError, UnsupportedDomain, ValidationError
from .linalg import subspace_from_vectors
from .polynomials import Poly, padd, pconst, pmul, pneg, psub, pX

FORMAT_VERSION = 1


# ---------------------------------------------------------------------------
# Expression parser
# ---------------------------------------------------------------------------

class _Tok:
    def __init__(self, kind, value, col):
        self.kind = kind
        self.value = value
        self.col = col


def _tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j]), i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            toks.append(_Tok("name", text[i:j], i))
            i = j
            continue
        if c in "+-*/^()":
            toks.append(_Tok(c, c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line=1, col=i + 1)
    toks.append(_Tok("end", None, len(text)))
    return toks


class _ExprParser:
    """Recursive descent over +, -, *, /, ^ with unary minus."""

    def __init__(self, text, ctx):
        self.toks = _tokenize(text)
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        t = self.toks[self.pos]
        if kind and t.kind != kind:
            raise ParseError(f"expected {kind}, found {t.kind}", line=1, col=t.col + 1)
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected trailing {t.kind}", line=1, col=t.col + 1)
        return v

    def expr(self):
        t = self.peek()
        if t.kind == "-":
            self.take()
            v = self.ctx.neg(self.term())
        else:
            v = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            v = self.ctx.add(v, rhs) if op == "+" else self.ctx.sub(v, rhs)
        return v

    def term(self):
        v = self.power()
        while self.peek().kind in ("*", "/"):
            op = self.take()
            rhs = self.power()
            if op.kind == "*":
                v = self.ctx.mul(v, rhs)
            else:
                v = self.ctx.div(v, rhs, op.col)
        return v

    def power(self):
        v = self.atom()
        if self.peek().kind == "^":
            t = self.take()
            e = self.peek()
            if e.kind != "int":
                raise ParseError("exponent must be a literal integer", line=1, col=e.col + 1)
            self.take()
            v = self.ctx.pow(v, e.value)
        return v

    def atom(self):
        t = self.peek()
        if t.kind == "int":
            self.take()
            return self.ctx.const(t.value)
        if t.kind == "name":
            self.take()
            return self.ctx.var(t.value, t.col)
        if t.kind == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if t.kind == "-":
            self.take()
            return self.ctx.neg(self.atom())
        raise ParseError(f"unexpected {t.kind}", line=1, col=t.col + 1)


class PolyContext:
    """Evaluate expressions as dense polynomials over a scalar domain, with
    one indeterminate name and the remaining names bound to constants."""

    def __init__(self, dom: ScalarDomain, indet: str, constants: dict):
        self.dom = dom
        self.indet = indet
        self.constants = constants

    def const(self, n: int):
        return pconst(self.dom, self.dom.from_int(n))

    def var(self, name: str, col: int):
        if name == self.indet:
            return pX(self.dom)
        if name in self.constants:
            return pconst(self.dom, self.constants[name])
        raise ParseError(f"unknown variable {name!r}", line=1, col=col + 1)

    def add(self, a, b):
        return padd(a, b)

    def sub(self, a, b):
        return psub(a, b)

    def mul(self, a, b):
        return pmul(a, b)

    def neg(self, a):
        return pneg(a)

    def pow(self, a, n):
        from .polynomials import ppow

        return ppow(a, n)

    def div(self, a, b, col):
        if b.degree > 0:
            raise ParseError("division by a non-scalar polynomial", line=1, col=col + 1)
        if b.is_zero:
            raise ParseError("division by zero", line=1, col=col + 1)
        inv = self.dom.inv(b.coeffs[0])
        from .polynomials import pscale

        return pscale(a, inv)


def parse_poly(text: str, dom: ScalarDomain, indet: str = "x", constants=None) -> Poly:
    constants = dict(constants or {})
    if isinstance(dom, FunctionField):
        for name in dom.var_names:
            constants.setdefault(name, dom.variable(name))
    return _ExprParser(text, PolyContext(dom, indet, constants)).parse()


# ---------------------------------------------------------------------------
# An algebra used as the coefficient ring for a further quotient level
# ---------------------------------------------------------------------------

class AlgebraScalarDomain(ScalarDomain):
    """A commutative structure-constant algebra viewed as a scalar domain,
    so tower levels can reuse the polynomial machinery; inversion of a zero
    divisor surfaces NotAField with its witness."""

    is_field = False  # possibly a field, but proven only elementwise

    def __init__(self, A: StructAlgebra):
        if not A.is_commutative:
            raise ValidationError("tower levels must be commutative")
        self.A = A
        self.char = A.dom.char

    def _key(self):
        return (id(self.A),)

    def __repr__(self):
        return f"Level({self.A!r})"

    def add(self, a, b):
        return tuple(self.A.dom.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.A.dom.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.A.dom.neg(x) for x in a)

    def mul(self, a, b):
        from .algebra import element_multiply

        return element_multiply(self.A, a, b)

    def inv(self, a):
        return invert_element(self.A, a)

    def from_int(self, n):
        return tuple(self.A.dom.mul(self.A.dom.from_int(n), c) for c in self.A.unit)

    def is_zero(self, a):
        return all(self.A.dom.is_zero(x) for x in a)

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))


# ---------------------------------------------------------------------------
# Case descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseDescription:
    """Validated case file contents, pre-construction."""

    case_id: str
    base: dict
    algebra: dict
    options: dict
    asserts: dict
    raw: dict


@dataclass(frozen=True)
class BuiltCase:
    """A case turned into a concrete decider input."""

    kind: str  # struct | relative | tower | zpres | localized
    payload: object
    base_kind: str
    description: CaseDescription


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise ValidationError(f"missing {key!r} in {where}")
    return d[key]


def _no_floats(obj, path="$"):
    if isinstance(obj, float):
        raise ValidationError(f"float literal at {path}: case files are exact-only")
    if isinstance(obj, dict):
        for k, v in obj.items():
            _no_floats(v, f"{path}.{k}")
    if isinstance(obj, list):
        for i, v in enumerate(obj):
            _no_floats(v, f"{path}[{i}]")


def parse_case(text: str) -> CaseDescription:
    """Parse and validate a case document; errors carry locations when the
    JSON itself is malformed."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, col=exc.colno) from exc
    if not isinstance(raw, dict):
        raise ValidationError("case document must be a JSON object")
    _no_floats(raw)
    version = raw.get("format_version")
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported format_version {version!r}")
    case_id = _require(raw, "id", "case")
    base = _require(raw, "base", "case")
    algebra = _require(raw, "algebra", "case")
    if not isinstance(base, dict) or "kind" not in base:
        raise ValidationError("base must be an object with a 'kind'")
    if not isinstance(algebra, dict) or "kind" not in algebra:
        raise ValidationError("algebra must be an object with a 'kind'")
    options = raw.get("options", {})
    asserts = raw.get("asserts", {})
    return CaseDescription(
        case_id=case_id, base=base, algebra=algebra, options=options, asserts=asserts, raw=raw
    )


def serialize_case(desc: CaseDescription) -> str:
    return json.dumps(desc.raw, sort_keys=True, indent=2) + "\n"


def struct_to_spec(A: StructAlgebra) -> dict:
    """Structure-constant JSON form of an algebra, for case files."""
    dom = A.dom
    return {
        "kind": "structure_constants",
        "dim": A.dim,
        "unit": [dom.to_str(c) for c in A.unit],
        "table": [[[dom.to_str(c) for c in vec] for vec in row] for row in A.table],
    }


def base_domain(base: dict) -> ScalarDomain:
    kind = base["kind"]
    if kind == "Q":
        return QQ
    if kind == "Z":
        return ZZ
    if kind == "Fp":
        return PrimeField(int(_require(base, "p", "base")))
    if kind == "Zmod":
        return ModRing(int(_require(base, "n", "base")))
    if kind == "FpRational":
        return FunctionField(
            int(_require(base, "p", "base")), tuple(_require(base, "vars", "base"))
        )
    raise ValidationError(f"unknown base kind {kind!r}")


def build_case(desc: CaseDescription) -> BuiltCase:
    """Construct the decider input described by a case."""
    bkind = desc.base["kind"]
    akind = desc.algebra["kind"]
    if bkind == "LocalArtinian":
        return _build_relative(desc)
    if bkind == "Z":
        return _build_integer(desc)
    dom = base_domain(desc.base)
    if akind == "tower":
        if not isinstance(dom, FunctionField):
            raise ValidationError("tower cases need an FpRational base")
        return BuiltCase("tower", _build_tower(dom, desc.algebra), bkind, desc)
    A = build_struct_algebra(dom, desc.algebra)
    return BuiltCase("struct", A, bkind, desc)


def build_struct_algebra(dom: ScalarDomain, spec: dict) -> StructAlgebra:
    kind = spec["kind"]
    if kind == "quotient_poly":
        modulus = parse_poly(_require(spec, "modulus", "algebra"), dom)
        return poly_quotient_algebra(modulus)
    if kind == "matrix_algebra":
        return matrix_algebra(dom, int(_require(spec, "size", "algebra")))
    if kind == "structure_constants":
        dim = int(_require(spec, "dim", "algebra"))
        unit = [dom.parse(c) for c in _require(spec, "unit", "algebra")]
        table_raw = _require(spec, "table", "algebra")
        table = [[[dom.parse(c) for c in vec] for vec in row] for row in table_raw]
        if len(table) != dim:
            raise ValidationError("structure table size differs from dim")
        return make_algebra(dom, table, unit)
    if kind == "product":
        from .algebra import product_algebra

        factors = [build_struct_algebra(dom, f) for f in _require(spec, "factors", "algebra")]
        return product_algebra(factors)
    raise ValidationError(f"unknown algebra kind {kind!r} for this base")


def _build_tower(K: FunctionField, spec: dict):
    moduli = _require(spec, "moduli", "algebra")
    if not 1 <= len(moduli) <= 2:
        raise ValidationError("towers support one or two quotient levels")
    level1 = parse_poly(moduli[0], K, indet="x")
    L = poly_quotient_algebra(level1)
    if len(moduli) == 1:
        return L
    adapter = AlgebraScalarDomain(L)
    consts = {"x": L.basis_vector(1) if L.dim > 1 else L.unit}
    for name in K.var_names:
        consts[name] = tuple(
            K.mul(K.variable(name), c) for c in L.unit
        )
    level2 = parse_poly(moduli[1], adapter, indet="y", constants=consts)
    L2, _, _ = extend_by_poly(L, list(level2.coeffs))
    return L2


def _build_integer(desc: CaseDescription) -> BuiltCase:
    spec = desc.algebra
    kind = spec["kind"]
    if kind == "z_presentation":
        ngens = int(_require(spec, "gens", "algebra"))
        relations = tuple(
            tuple(int(x) for x in row) for row in spec.get("relations", [])
        )
        table = tuple(
            tuple(tuple(int(x) for x in vec) for vec in row)
            for row in _require(spec, "table", "algebra")
        )
        unit = tuple(int(x) for x in _require(spec, "unit", "algebra"))
        zp = ZPresentation(ngens=ngens, relations=relations, table=table, unit=unit)
        zp.validate()
        return BuiltCase("zpres", zp, "Z", desc)
    if kind == "localized":
        invert = int(_require(spec, "invert", "algebra"))
        finite_part = spec.get("finite_part")
        size = 1
        if finite_part is not None:
            fdom = base_domain(_require(finite_part, "base", "finite part"))
            if not getattr(fdom, "is_finite", False):
                raise ValidationError("finite part must live over a finite base")
            falg = build_struct_algebra(fdom, _require(finite_part, "algebra", "finite part"))
            size = fdom.size**falg.dim
        loc = LocalizedZ(invert=invert, finite_part_size=size)
        loc.validate()
        return BuiltCase("localized", loc, "Z", desc)
    raise ValidationError(f"unknown algebra kind {kind!r} over Z")


def _build_relative(desc: CaseDescription) -> BuiltCase:
    base = desc.base
    ground = base_domain(_require(base, "ground", "base"))
    if ground != QQ:
        raise UnsupportedDomain("relative cases need ground field Q")
    base_alg = build_struct_algebra(ground, _require(base, "base_algebra", "base"))
    ideal_rows = [
        tuple(ground.parse(c) for c in row) for row in _require(base, "max_ideal", "base")
    ]
    max_ideal = subspace_from_vectors(ground, base_alg.dim, ideal_rows)
    amb = build_struct_algebra(ground, desc.algebra)
    emb_rows = [
        tuple(ground.parse(c) for c in row) for row in _require(base, "embedding", "base")
    ]
    rel = make_relative(ground, base_alg, max_ideal, amb, emb_rows)
    return BuiltCase("relative", rel, "LocalArtinian", desc)
