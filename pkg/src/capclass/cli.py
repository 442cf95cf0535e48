"""Command-line front end: cap files, JSON reports, and the verify run.

Cap file format (version 1): a header line ``capfile v1 n=<n>`` followed
by one point per line as an n-character binary string whose leftmost
character is coordinate 1 (bit 0).  Rendered files list points in
ascending integer order with LF endings; duplicate lines are rejected.

Exit codes: 0 success, 1 claim failure, 2 usage error, 3 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .capset import Cap, find_quad, is_cap, is_complete, quad_closure_1
from .classifier import ClassTable, classify, verify_paper
from .decomp import type_census
from .equivalence import are_equivalent, find_isomorphism
from .errors import CapError, CapFileError, UnknownLabelError
from .gf2 import Point, PointSet, affine_dim
from .templates import LABELS, instantiate

_CENSUS_LIMIT = 13


def render_capfile(s: PointSet) -> str:
    lines = [f"capfile v1 n={s.n}"]
    lines += [Point(m, s.n).to_bits() for m in s.sorted_masks()]
    return "\n".join(lines) + "\n"


def parse_capfile(text: str) -> PointSet:
    lines = [line for line in text.split("\n") if line != ""]
    if not lines:
        raise CapFileError("empty cap file")
    header = lines[0]
    if not header.startswith("capfile v1 n="):
        raise CapFileError(f"bad header {header!r}")
    try:
        n = int(header[len("capfile v1 n="):])
    except ValueError:
        raise CapFileError(f"bad dimension in header {header!r}") from None
    if not 1 <= n <= 16:
        raise CapFileError(f"dimension {n} out of range 1..16")
    masks = []
    for line in lines[1:]:
        if len(line) != n or any(c not in "01" for c in line):
            raise CapFileError(f"bad point line {line!r} for n={n}")
        masks.append(Point.from_bits(line).mask)
    if not masks:
        raise CapFileError("cap file lists no points")
    if len(set(masks)) != len(masks):
        raise CapFileError("duplicate point lines")
    return PointSet(n, masks)


def _read_points(path: str) -> PointSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CapFileError(f"cannot read {path}: {exc}") from exc
    return parse_capfile(text)


def _check_payload(s: PointSet) -> dict:
    payload: dict = {"size": len(s), "dim": affine_dim(s)}
    quad = find_quad(s)
    if quad is not None:
        payload["is_cap"] = False
        payload["quad"] = [p.to_bits() for p in quad]
        return payload
    cap = Cap(s)
    payload["is_cap"] = True
    payload["complete"] = is_complete(cap)
    if cap.size <= _CENSUS_LIMIT:
        payload["census"] = sorted(str(t) for t in type_census(cap))
    else:
        payload["census"] = None
    return payload


def _map_payload(t) -> dict:
    return {
        "matrix": [Point(row, t.n).to_bits() for row in t.rows],
        "translation": Point(t.translation, t.n).to_bits(),
    }


def _table_payload(table: ClassTable) -> dict:
    sizes = {}
    for size in sorted(table.rows):
        entries = []
        for entry in table.entries(size):
            entries.append(
                {
                    "points": [Point(m, entry.cap.n).to_bits() for m in entry.cap.sorted_masks()],
                    "complete": entry.complete,
                    "census": sorted(str(t) for t in entry.census) if entry.census is not None else None,
                }
            )
        sizes[str(size)] = entries
    return {
        "schema": "classtable v1",
        "dim": table.dim,
        "counts": {str(size): count for size, count in sorted(table.counts().items())},
        "sizes": sizes,
    }


def _worker_count() -> int | None:
    raw = os.environ.get("CAPCLASS_THREADS")
    if raw is None:
        return os.cpu_count()
    try:
        count = int(raw)
    except ValueError:
        return os.cpu_count()
    return max(1, count)


def _cmd_template(args: argparse.Namespace) -> int:
    try:
        cap = instantiate(args.label)
    except UnknownLabelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render_capfile(cap.points))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    points = _read_points(args.file)
    print(json.dumps(_check_payload(points), indent=2, sort_keys=True))
    return 0


def _cmd_closure(args: argparse.Namespace) -> int:
    points = _read_points(args.file)
    sys.stdout.write(render_capfile(quad_closure_1(points)))
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    pa = _read_points(args.file_a)
    pb = _read_points(args.file_b)
    for path, pts in ((args.file_a, pa), (args.file_b, pb)):
        if not is_cap(pts):
            raise CapFileError(f"{path} does not describe a cap")
    ca, cb = Cap(pa), Cap(pb)
    payload: dict = {"equivalent": are_equivalent(ca, cb)}
    if payload["equivalent"] and ca.n == cb.n:
        t = find_isomorphism(ca, cb)
        if t is not None:
            payload["map"] = _map_payload(t)
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    table = classify(args.dim, args.max_size, threads=_worker_count())
    print(json.dumps(_table_payload(table), indent=2, sort_keys=True))
    if args.out is not None:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for size in sorted(table.rows):
            for i, entry in enumerate(table.entries(size)):
                name = f"dim{table.dim}_size{size}_class{i}.cap"
                (out / name).write_text(render_capfile(entry.cap.points), encoding="utf-8")
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    report = verify_paper(
        invariance_trials=args.fuzz_trials,
        exchange_trials=args.exchange_trials,
        threads=_worker_count(),
    )
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        for claim in report.claims:
            status = "pass" if claim.passed else "FAIL"
            print(f"{status}  {claim.claim_id}")
            print(f"      {claim.claim_id}: {claim.elapsed_s:.2f}s", file=sys.stderr)
        print("all claims passed" if report.all_passed else "some claims FAILED")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capclass",
        description="Classify quad-free sets (caps) in the binary affine geometry AG(n,2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("template", help="emit a named reference cap as a cap file")
    p.add_argument("label", metavar="LABEL", help=f"one of: {', '.join(LABELS)}")
    p.set_defaults(func=_cmd_template)

    p = sub.add_parser("check", help="report size, dimension, cap-ness, completeness, census")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("closure", help="emit the first quad closure of a point set")
    p.add_argument("file")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("equiv", help="test two caps for affine equivalence")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("classify", help="classify caps by size up to affine equivalence")
    p.add_argument("dim", type=int)
    p.add_argument("max_size", type=int)
    p.add_argument("--out", help="directory for one cap file per representative")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify-paper", help="re-derive and check the full classification")
    p.add_argument("--json", action="store_true", help="emit the machine-readable report")
    p.add_argument("--fuzz-trials", type=int, default=1000, help="random maps per template")
    p.add_argument("--exchange-trials", type=int, default=10000, help="random basis exchanges")
    p.set_defaults(func=_cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UnknownLabelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
