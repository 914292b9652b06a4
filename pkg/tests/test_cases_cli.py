"""Case parsing, report generation, golden corpus harness, CLI behavior."""

import json
from pathlib import Path

import pytest

from futility.cases import (
    build_case,
    build_struct_algebra,
    parse_case,
    parse_poly,
    serialize_case,
    struct_to_spec,
)
from futility.cli import main as cli_main
from futility.constructions import matrix_algebra, upper_triangular_algebra
from futility.domains import QQ, FunctionField, PrimeField
from futility.errors import (
    InapplicableCommand,
    ParseError,
    ValidationError,
)
from futility.polynomials import poly_to_str
from futility.reports import run_command

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

ALL_CASES = sorted(CORPUS.rglob("*.case"))


def make_case(**kw):
    doc = {
        "format_version": 1,
        "id": "test/inline",
        "base": {"kind": "Q"},
        "algebra": {"kind": "quotient_poly", "modulus": "x^3"},
    }
    doc.update(kw)
    return json.dumps(doc)


# --- polynomial expressions ---------------------------------------------------

def test_parse_poly_basic():
    f = parse_poly("x^3 - 2*x + 1", QQ)
    assert poly_to_str(f) == "x^3 - 2*x + 1"


def test_parse_poly_rational_coefficients():
    f = parse_poly("(1/2)*x^2 - 3", QQ)
    assert f.coeffs[-1] == 0.5 or str(f.coeffs[-1]) == "1/2"


def test_parse_poly_function_field_constants():
    K = FunctionField(2, ("t",))
    f = parse_poly("x^2 - t", K)
    assert f.degree == 2
    assert K.eq(f.coeffs[0], K.neg(K.variable("t")))


def test_parse_poly_errors_carry_columns():
    with pytest.raises(ParseError) as exc:
        parse_poly("x +* 2", QQ)
    assert exc.value.col is not None
    with pytest.raises(ParseError):
        parse_poly("x / (x + 1)", QQ)  # non-scalar division
    with pytest.raises(ParseError):
        parse_poly("y + 1", QQ)  # unknown variable


# --- case documents --------------------------------------------------------------

def test_parse_case_roundtrip_corpus():
    assert len(ALL_CASES) >= 40
    for path in ALL_CASES:
        text = path.read_text()
        desc = parse_case(text)
        again = parse_case(serialize_case(desc))
        assert again == desc


def test_parse_case_rejects_floats():
    with pytest.raises(ValidationError):
        parse_case(make_case(options={"bound": 1.5}))


def test_parse_case_rejects_bad_version():
    with pytest.raises(ValidationError):
        parse_case(make_case(format_version=99))


def test_parse_case_locates_json_errors():
    with pytest.raises(ParseError) as exc:
        parse_case("{\n  broken\n}")
    assert exc.value.line == 2


def test_parse_case_requires_fields():
    with pytest.raises(ValidationError):
        parse_case(json.dumps({"format_version": 1, "id": "x"}))


def test_build_rejects_bad_associativity():
    spec = {
        "kind": "structure_constants",
        "dim": 3,
        "unit": ["1", "0", "0"],
        "table": [
            [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
            [["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]],
            [["0", "0", "1"], ["0", "0", "0"], ["0", "0", "0"]],
        ],
    }
    with pytest.raises(ValidationError) as exc:
        build_struct_algebra(QQ, spec)
    assert "associativity fails at basis triple" in str(exc.value)


def test_struct_to_spec_roundtrip():
    for A in (matrix_algebra(PrimeField(2), 2), upper_triangular_algebra(QQ, 2)):
        spec = struct_to_spec(A)
        B = build_struct_algebra(A.dom, spec)
        assert B.table == A.table and B.unit == A.unit


def test_tower_case_builds():
    desc = parse_case(
        json.dumps(
            {
                "format_version": 1,
                "id": "test/tower",
                "base": {"kind": "FpRational", "p": 2, "vars": ["s", "t"]},
                "algebra": {"kind": "tower", "moduli": ["x^2 - s", "y^2 - t"]},
            }
        )
    )
    built = build_case(desc)
    assert built.kind == "tower"
    assert built.payload.dim == 4


# --- reports -----------------------------------------------------------------------

def test_decide_report_byte_identical():
    desc = parse_case(make_case())
    a = run_command("decide", desc, {}).to_json()
    b = run_command("decide", desc, {}).to_json()
    assert a == b
    assert "timing_ms" in json.loads(a)
    assert json.loads(a)["timing_ms"] is None


def test_report_has_no_floats():
    desc = parse_case(make_case())
    rep = run_command("oracle-compare", desc, {"trials": 50, "bound": 3})

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)

    walk(rep.to_jsonable())


def test_enumerate_command_inapplicable_over_q():
    desc = parse_case(make_case())
    with pytest.raises(InapplicableCommand):
        run_command("enumerate", desc, {})


def test_sample_command_inapplicable_over_fp():
    desc = parse_case(make_case(base={"kind": "Fp", "p": 2}))
    with pytest.raises(InapplicableCommand):
        run_command("sample", desc, {})


def test_factor_command_squarefree_over_function_field():
    desc = parse_case(
        make_case(
            base={"kind": "FpRational", "p": 2, "vars": ["t"]},
            algebra={"kind": "quotient_poly", "modulus": "x^2 - t"},
        )
    )
    res = run_command("factor", desc, {}).result
    assert res["squarefree_parts"] == [["x^2 + t", 1]]


# --- golden corpus --------------------------------------------------------------------

@pytest.mark.parametrize("path", ALL_CASES, ids=lambda p: str(p.relative_to(CORPUS)))
def test_corpus_case_matches_golden(path):
    desc = parse_case(path.read_text())
    report = run_command("oracle-compare", desc, {})
    assert report.agreement is True
    expected = path.with_suffix(".expected")
    assert expected.exists()
    assert report.to_json() == expected.read_text()


def test_corpus_ids_match_paths():
    for path in ALL_CASES:
        desc = parse_case(path.read_text())
        rel = path.relative_to(CORPUS).with_suffix("")
        assert desc.case_id == str(rel)


# --- CLI ------------------------------------------------------------------------------

def test_cli_decide_exit_zero(capsys):
    rc = cli_main(["decide", "--case", str(CORPUS / "infinite-field" / "q-x3.case")])
    assert rc == 0
    out = capsys.readouterr().out
    assert "verdict:   Futile" in out


def test_cli_machine_format(capsys):
    rc = cli_main(
        ["decide", "--case", str(CORPUS / "finite" / "f2-x3.case"), "--format", "machine"]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["verdict"] == "Futile"


def test_cli_error_exit_one(capsys):
    rc = cli_main(["enumerate", "--case", str(CORPUS / "infinite-field" / "q-x3.case")])
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_cli_discrepancy_exit_two(tmp_path, capsys):
    bad = {
        "format_version": 1,
        "id": "tmp/wrong-assert",
        "base": {"kind": "Q"},
        "algebra": {"kind": "quotient_poly", "modulus": "x^3"},
        "options": {"trials": 100, "bound": 3, "seed": 0},
        "asserts": {"verdict": "NotFutile"},
    }
    p = tmp_path / "bad.case"
    p.write_text(json.dumps(bad))
    rc = cli_main(["oracle-compare", "--case", str(p)])
    assert rc == 2


def test_cli_corpus_subdir(capsys):
    rc = cli_main(["corpus", "--dir", str(CORPUS / "integer")])
    assert rc == 0
    out = capsys.readouterr().out
    assert "0 failures" in out


def test_cli_timing_flag(capsys):
    rc = cli_main(
        [
            "decide",
            "--case",
            str(CORPUS / "finite" / "f2-x3.case"),
            "--format",
            "machine",
            "--timing",
        ]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert isinstance(doc["timing_ms"], int)
