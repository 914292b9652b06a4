"""Command line interface.

Exit codes: 0 = run completed (either verdict), 1 = error, 2 = oracle
discrepancy or golden-corpus mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cases import parse_case
from .errors import FutilityError
from .reports import ReportDocument, run_command


def _add_common(p):
    p.add_argument("--case", required=True, help="path to a .case file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.add_argument(
        "--format", choices=("human", "machine"), default="human", dest="fmt"
    )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="futility",
        description="decide whether an algebra has finitely many subalgebras",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)
    for name in ("decide", "enumerate", "sample", "factor", "oracle-compare"):
        p = sub.add_parser(name)
        _add_common(p)
    corpus = sub.add_parser("corpus", help="run oracle-compare over a corpus directory")
    corpus.add_argument("--dir", required=True)
    corpus.add_argument("--update", action="store_true", help="write .expected files")
    corpus.add_argument("--format", choices=("human", "machine"), default="human", dest="fmt")
    return ap


def _overrides(args) -> dict:
    out = {}
    for k in ("seed", "trials", "bound", "budget"):
        v = getattr(args, k, None)
        if v is not None:
            out[k] = v
    if getattr(args, "timing", False):
        out["timing"] = True
    return out


def _emit(report: ReportDocument, fmt: str):
    if fmt == "machine":
        sys.stdout.write(report.to_json())
        return
    r = report.to_jsonable()
    print(f"case:      {r['case']}")
    print(f"command:   {r['command']}")
    res = r["result"]
    if "verdict" in res:
        print(f"verdict:   {res['verdict']}")
        print(f"criterion: {res['criterion']}")
        print("certificate:")
        for line in json.dumps(res["certificate"], sort_keys=True, indent=2).splitlines():
            print(f"  {line}")
        for note in res.get("notes", []):
            print(f"note: {note}")
    else:
        for line in json.dumps(res, sort_keys=True, indent=2).splitlines():
            print(f"  {line}")
    if r["oracle"] is not None:
        print("oracle:")
        for line in json.dumps(r["oracle"], sort_keys=True, indent=2).splitlines():
            print(f"  {line}")
        print(f"agreement: {r['agreement']}")
    if r["timing_ms"] is not None:
        print(f"timing_ms: {r['timing_ms']}")


def run_single(args) -> int:
    text = Path(args.case).read_text()
    desc = parse_case(text)
    report = run_command(args.cmd, desc, _overrides(args))
    _emit(report, args.fmt)
    if report.agreement is False:
        return 2
    return 0


def run_corpus(args) -> int:
    root = Path(args.dir)
    cases = sorted(root.rglob("*.case"))
    if not cases:
        print(f"no .case files under {root}", file=sys.stderr)
        return 1
    bad = 0
    for path in cases:
        desc = parse_case(path.read_text())
        report = run_command("oracle-compare", desc, {})
        expected_path = path.with_suffix(".expected")
        status = "ok"
        if report.agreement is False:
            status = "DISCREPANCY"
            bad += 1
        if args.update:
            expected_path.write_text(report.to_json())
        elif expected_path.exists():
            if expected_path.read_text() != report.to_json():
                status = "GOLDEN-MISMATCH"
                bad += 1
        print(f"{status:16} {desc.case_id}")
    print(f"{len(cases)} cases, {bad} failures")
    return 2 if bad else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "corpus":
            return run_corpus(args)
        return run_single(args)
    except FutilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
