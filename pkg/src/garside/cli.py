"""Command-line front end: `garside <subcommand> ...` or `python -m garside ...`."""

from __future__ import annotations

import argparse
import csv
import io
import json
import subprocess
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__, bfqsym
from .cache import MatrixCache
from .coxeter import ResourceRefusal, make_group, parse_type
from .exact import Polynomial, format_polynomial, series_coeffs
from .fixtures import all_comparisons, b2_order, golden_comparisons, hopf_comparisons
from .normal_form import left_normal_form, parse_braid_word
from .signed import HyperoctahedralGroup, format_window
from .spectra import (CapExceeded, build_full_adjacency, charpoly_full, count_sequence,
                      generating_series)

SCHEMA = "garside-output/1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def build_id() -> str:
    here = Path(__file__).resolve().parent
    try:
        out = subprocess.run(["git", "describe", "--always", "--dirty", "--tags"], cwd=here,
                             capture_output=True, text=True, timeout=5)
        if out.returncode == 0 and out.stdout.strip():
            return f"{__version__}+{out.stdout.strip()}"
    except (OSError, subprocess.SubprocessError):
        pass
    return __version__


def split_type(tokens: list[str]) -> tuple[str, int, list[str]]:
    """Accept "B 2 ...", "B2 ...", "I7 ..." or "I2(7) ..."; return family, rank, rest."""
    if not tokens:
        raise UsageError("missing Coxeter type")
    head, rest = tokens[0], list(tokens[1:])
    try:
        if any(ch.isdigit() for ch in head):
            family, rank = parse_type(head)
        else:
            if not rest:
                raise UsageError(f"missing rank for type {head!r}")
            family, rank = parse_type(head, int(rest.pop(0)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return family, rank, rest


def _label(family: str, rank: int) -> str:
    return f"{family}{rank}"


def _element_label(group, w) -> str:
    if isinstance(group, HyperoctahedralGroup):
        return format_window(w)
    return " ".join(str(i) for i in group.reduced_word(w)) or "e"


def _group(family: str, rank: int, allow_huge: bool):
    if family == "B":
        return HyperoctahedralGroup(rank)
    return make_group(family, rank, allow_huge=allow_huge)


def _poly_doc(p: Polynomial) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs], "text": format_polynomial(p)}


# ---------------------------------------------------------------- commands

def cmd_adj(args, cache: MatrixCache) -> tuple[dict, int]:
    family, rank, rest = split_type(args.type)
    _no_extra(rest)
    if args.full:
        group = _group(family, rank, args.allow_huge)
        order = b2_order() if (family, rank) == ("B", 2) else None
        adj = build_full_adjacency(group, order, cap=args.cap)
        payload = {"kind": "full",
                   "order": [_element_label(group, w) for w in adj.elements],
                   "matrix": [[str(x) for x in row] for row in adj.matrix]}
    else:
        adjp = cache.get(family, rank)
        payload = {"kind": "reduced", "index": "subset I has index sum of 2^i over i in I",
                   "order": str(adjp.order),
                   "matrix": [[str(x) for x in row] for row in adjp.matrix]}
    return payload, EXIT_OK


def cmd_charpoly(args, cache):
    family, rank, rest = split_type(args.type)
    _no_extra(rest)
    adjp = cache.get(family, rank)
    chi = charpoly_full(adjp)
    return {"charpoly": _poly_doc(chi), "x_power": str(adjp.order - adjp.size)}, EXIT_OK


def cmd_series(args, cache):
    family, rank, rest = split_type(args.type)
    _no_extra(rest)
    f = generating_series(cache.get(family, rank))
    return {"series": {"num": _poly_doc(f.num)["coeffs"], "den": _poly_doc(f.den)["coeffs"],
                       "text": str(f)},
            "terms": [str(c) for c in series_coeffs(f, args.terms)]}, EXIT_OK


def cmd_count(args, cache):
    family, rank, rest = split_type(args.type)
    if len(rest) != 1:
        raise UsageError("count needs exactly one Garside length d")
    d = int(rest[0])
    if d < 0:
        raise UsageError("d must be >= 0")
    seq = count_sequence(cache.get(family, rank), d)
    return {"d": str(d), "count": str(seq[d]), "counts": [str(c) for c in seq]}, EXIT_OK


def cmd_divides(args, cache):
    from .exact import poly_divides, poly_divmod
    family, rank, rest = split_type(args.type)
    _no_extra(rest)
    other = args.to if args.to is not None else rank + 1
    small = charpoly_full(cache.get(family, rank))
    large = charpoly_full(cache.get(family, other))
    ok, quot = poly_divides(small, large)
    payload = {"small": _label(family, rank), "large": _label(family, other), "divides": ok}
    if ok:
        payload["quotient"] = _poly_doc(quot)
    else:
        payload["remainder"] = _poly_doc(poly_divmod(large, small)[1])
    return payload, EXIT_OK


def cmd_normalize(args, cache):
    family, rank, rest = split_type(args.type)
    group = _group(family, rank, args.allow_huge)
    try:
        word = parse_braid_word(" ".join(rest), rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    factors = left_normal_form(group, word)
    return {"word": [str(i) for i in word],
            "factors": [_element_label(group, f) for f in factors],
            "garside_length": str(len(factors))}, EXIT_OK


def cmd_hopf_verify(args, cache):
    checks = [c.strip() for c in args.checks.split(",")] if args.checks else None
    sign = bfqsym.faulty_sign if args.inject_fault else bfqsym.sign_at
    try:
        reports = bfqsym.run_suite(args.max_rank, checks, sign=sign, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = all(r.passed for r in reports)
    return ({"status": "pass" if ok else "fail", "reports": [r.to_json() for r in reports]},
            EXIT_OK if ok else EXIT_FAIL)


def cmd_reference_tables(args, cache):
    skip = set(args.skip.split(",")) if args.skip else set()
    items = golden_comparisons(args.corrected) + hopf_comparisons()
    items += all_comparisons(cache, skip, corrected=args.corrected)
    docs = [c.to_json() for c in items]
    ok = all(c.ok for c in items)
    return ({"status": "pass" if ok else "fail", "corrected": args.corrected,
             "passed": str(sum(c.ok for c in items)), "total": str(len(items)), "items": docs},
            EXIT_OK if ok else EXIT_FAIL)


def cmd_cache(args, cache):
    if args.action == "list":
        return {"dir": str(cache.root), "entries": [p.name for p in cache.entries()]}, EXIT_OK
    return {"dir": str(cache.root), "removed": str(cache.clear())}, EXIT_OK


def _no_extra(rest: list[str]) -> None:
    if rest:
        raise UsageError(f"unexpected arguments {rest}")


# ---------------------------------------------------------------- output

def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    payload = doc["payload"]
    if fmt == "csv":
        return _render_csv(doc["command"], payload)
    return _render_plain(doc["command"], payload)


def _render_csv(command: str, payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "matrix" in payload:
        w.writerows(payload["matrix"])
    elif command == "charpoly":
        w.writerow(["power", "coeff"])
        w.writerows(enumerate(payload["charpoly"]["coeffs"]))
    elif command in ("series", "count"):
        w.writerow(["d", "b"])
        w.writerows(enumerate(payload["terms" if command == "series" else "counts"]))
    elif command == "normalize":
        w.writerow(["index", "factor"])
        w.writerows(enumerate(payload["factors"]))
    elif "reports" in payload:
        w.writerow(["check", "rank", "status", "counterexample"])
        for r in payload["reports"]:
            w.writerow([r["check"], r["rank"], r["status"], " ".join(r.get("counterexample", []))])
    elif "items" in payload:
        w.writerow(["item", "status"])
        w.writerows((i["item"], i["status"]) for i in payload["items"])
    else:
        for k, v in payload.items():
            w.writerow([k, v if not isinstance(v, (list, dict)) else json.dumps(v)])
    return buf.getvalue()


def _render_plain(command: str, payload: dict) -> str:
    if "matrix" in payload:
        return "\n".join(" ".join(row) for row in payload["matrix"]) + "\n"
    if command == "charpoly":
        return payload["charpoly"]["text"] + "\n"
    if command == "series":
        return f"F(t) = {payload['series']['text']}\n" + " ".join(payload["terms"]) + "\n"
    if command == "count":
        return payload["count"] + "\n"
    if command == "divides":
        verdict = "divides" if payload["divides"] else "does not divide"
        return f"chi({payload['small']}) {verdict} chi({payload['large']})\n"
    if command == "normalize":
        return "; ".join(payload["factors"]) + f"\nGarside length {payload['garside_length']}\n"
    if "reports" in payload:
        lines = []
        for r in payload["reports"]:
            extra = " " + " ".join(r["counterexample"]) if r.get("counterexample") else ""
            lines.append(f"{r['status'].upper():4} {r['check']} rank {r['rank']}{extra}")
        return "\n".join(lines) + "\n"
    if "items" in payload:
        lines = [f"{i['status'].upper():4} {i['item']}" for i in payload["items"]]
        lines.append(f"{payload['passed']}/{payload['total']} items match")
        return "\n".join(lines) + "\n"
    return "\n".join(f"{k}: {v}" for k, v in payload.items()) + "\n"


# ---------------------------------------------------------------- parser

COMMANDS = {
    "adj": cmd_adj, "charpoly": cmd_charpoly, "series": cmd_series, "count": cmd_count,
    "divides": cmd_divides, "normalize": cmd_normalize, "hopf-verify": cmd_hopf_verify,
    "paper-tables": cmd_reference_tables, "cache": cmd_cache,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    common.add_argument("--cache-dir", help="cache directory (default: $GARSIDE_CACHE_DIR "
                                            "or ~/.cache/garside)")
    common.add_argument("--no-cache", action="store_true", help="recompute, never touch the cache")
    common.add_argument("--allow-huge", action="store_true",
                        help="allow enumerating groups with more than 10^6 elements")

    parser = argparse.ArgumentParser(prog="garside", description=__doc__)
    parser.add_argument("--version", action="version", version=f"garside {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("adj", parents=[common], help="adjacency matrix of normal pairs")
    p.add_argument("type", nargs="+", help='type and rank, e.g. "B 2" or "I7"')
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--reduced", action="store_true", help="descent-class matrix (default)")
    kind.add_argument("--full", action="store_true", help="full |W| x |W| matrix")
    p.add_argument("--cap", type=int, default=10 ** 4, help="maximum |W| for --full")

    for name, help_ in (("charpoly", "characteristic polynomial of the full matrix"),
                        ("series", "generating series of braid counts")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("type", nargs="+")
        if name == "series":
            p.add_argument("--terms", type=int, default=10)

    p = sub.add_parser("count", parents=[common], help="braids of Garside length d")
    p.add_argument("type", nargs="+", help='type, rank and d, e.g. "B 4 5"')

    p = sub.add_parser("divides", parents=[common], help="does chi(rank n) divide chi(rank m)?")
    p.add_argument("type", nargs="+")
    p.add_argument("--to", type=int, help="larger rank (default n + 1)")

    p = sub.add_parser("normalize", parents=[common], help="left Garside normal form")
    p.add_argument("type", nargs="+", help="type, rank, then generator indices")

    p = sub.add_parser("hopf-verify", parents=[common], help="verify the Hopf algebra identities")
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--checks", help="comma-separated subset of " + ",".join(bfqsym.CHECKS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("paper-tables", parents=[common], help="compare against the reference tables")
    p.add_argument("--skip", help="comma-separated type tags to skip, e.g. E6,H4")
    p.add_argument("--corrected", action="store_true",
                   help="use the corrected values for known misprints")

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the matrix cache")
    p.add_argument("action", choices=("list", "clear"))
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    cache = MatrixCache(args.cache_dir, enabled=not args.no_cache, allow_huge=args.allow_huge)
    try:
        payload, code = COMMANDS[args.command](args, cache)
    except UsageError as exc:
        print(f"garside: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceRefusal, CapExceeded) as exc:
        print(f"garside: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    family = rank = None
    if getattr(args, "type", None):
        family, rank, _ = split_type(args.type)
    doc = {
        "schema": SCHEMA,
        "command": args.command,
        "provenance": {"type": family, "rank": None if rank is None else str(rank),
                       "build": build_id(),
                       "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds")},
        "payload": payload,
    }
    sys.stdout.write(render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
