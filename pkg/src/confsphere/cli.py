"""Command-line front end: ``confsphere homology | compare | paper-check``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from .assemble import KINDS, compare, homology
from .free_algebra import UnsupportedError
from .nlie import BoundError
from .space_input import SpecError, ValidationError, check, parse_label

EXIT_OK, EXIT_DIFF, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2, 3
COLUMNS = ("kind", "char", "degree", "component", "dim", "basis")


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _component(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad component {text!r}; expected integers like 1,0") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--label", required=True, help="s<k>, cp<m>, wedge:a,b,..., susp:<spec>, or a JSON file")
    p.add_argument("-n", type=int, default=2, help="dimension of the sphere / Euclidean space")
    p.add_argument("--char", type=int, default=0, help="0 for Q, or a prime p")
    p.add_argument("--max-degree", type=_positive, default=8)
    p.add_argument("--max-weight", type=_positive, default=4, help="component box half-width / particle bound")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $CONFSPHERE_JOBS or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="confsphere", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", help="Betti table of one space")
    _common(h)
    h.add_argument("--kind", choices=KINDS, default="conf_sphere")
    h.add_argument("--weight", type=int, default=None, help="particle count (required for snaith)")
    h.add_argument("--component", type=_component, action="append", default=None)
    h.add_argument("--format", choices=("table", "csv", "json"), default="table")

    c = sub.add_parser("compare", help="dimension differences between two spaces")
    _common(c)
    c.add_argument("--kinds", required=True, help="two kinds, e.g. sections,maps")
    c.add_argument("--label-b", default=None, help="label space for the second kind (default: same)")
    c.add_argument("--offset", type=_component, default=None, help="component shift applied to the first table")

    sub.add_parser("paper-check", help="rerun the worked examples")
    return parser


def _visible_rows(table, explicit: bool) -> list[dict]:
    recs = table.records()
    if explicit:
        return recs
    keep = {r["component"] for r in recs if r["dim"]}
    return [r for r in recs if r["component"] in keep]


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=1, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in records:
            w.writerow([r[k] if k != "basis" else ";".join(r[k]) for k in COLUMNS])
        return buf.getvalue()
    lines = [f"{'degree':>6}  {'component':<12} {'dim':>4}  basis"]
    for r in records:
        lines.append(f"{r['degree']:>6}  {r['component']:<12} {r['dim']:>4}  {', '.join(r['basis'])}")
    return "\n".join(lines) + "\n"


def cmd_homology(args) -> int:
    spec = check(parse_label(args.label))
    table = homology(
        spec,
        args.n,
        args.char,
        args.kind,
        args.max_degree,
        args.max_weight,
        components=args.component,
        weight=args.weight,
        jobs=args.jobs,
    )
    sys.stdout.write(render(_visible_rows(table, args.component is not None), args.format))
    return EXIT_OK


def cmd_compare(args) -> int:
    kinds = [k.strip() for k in args.kinds.split(",")]
    if len(kinds) != 2:
        raise UnsupportedError("--kinds needs exactly two kinds")
    spec = check(parse_label(args.label))
    spec_b = check(parse_label(args.label_b)) if args.label_b else None
    diffs = compare(
        spec, args.n, args.char, kinds[0], kinds[1], args.max_degree, args.max_weight, args.offset, spec_b, args.jobs
    )
    if not diffs:
        print("identical")
        return EXIT_OK
    print(f"{'degree':>6}  {'component':<12} {kinds[0]:>12} {kinds[1]:>12}")
    for d in diffs:
        comp = ",".join(map(str, d.component)) or "*"
        print(f"{d.degree:>6}  {comp:<12} {d.dim_a:>12} {d.dim_b:>12}")
    return EXIT_DIFF


def cmd_paper_check(args) -> int:
    from .paper_check import run_all

    failed = 0
    for res in run_all():
        status = "PASS" if res.ok else "FAIL"
        print(f"{status}  {res.name}")
        if not res.ok:
            failed += 1
            print(f"      expected {res.expected!r}\n      got      {res.got!r}")
    return EXIT_OK if not failed else EXIT_DIFF


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    handlers = {"homology": cmd_homology, "compare": cmd_compare, "paper-check": cmd_paper_check}
    try:
        return handlers[args.command](args)
    except ValidationError as exc:
        for v in exc.violations:
            print(f"invalid label space: {v}", file=sys.stderr)
        return EXIT_INVALID
    except SpecError as exc:
        print(f"invalid label space: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UnsupportedError, BoundError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
