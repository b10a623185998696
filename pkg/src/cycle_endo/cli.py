"""Command line front end.

Every command prints deterministic output: JSON objects with a fixed key
order (leading "schema": 1), or plain line formats where documented.  Exit
codes: 0 success, 1 a requested check failed, 2 usage or input errors,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .core import (
    ContextError,
    CycleEndoError,
    DomainError,
    MIN_VERTICES,
    MonoidKind,
    ResourceCapError,
    Transformation,
    is_member,
)
from .enumeration import CAP_ENV_VAR, cardinality, enumerate_images
from .green import d_related, l_classes, l_related, r_classes, r_related, d_classes
from .ranks import monoid_rank, verify_generating_set
from .verify import KIND_ORDER, run_checks


@dataclass(frozen=True)
class CommandRequest:
    """A parsed invocation: the command word, target monoid, and flags."""

    command: str
    kind: MonoidKind | None = None
    n: int | None = None
    flags: dict = field(default_factory=dict)


def _kind_arg(text: str) -> MonoidKind:
    try:
        return MonoidKind.parse(text)
    except CycleEndoError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycle-endo",
        description="Endomorphism monoids of undirected cycle graphs: enumeration, "
                    "membership, regularity, Green's relations, and minimum generating sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_target(p, needs_kind=True):
        if needs_kind:
            p.add_argument("--kind", type=_kind_arg, required=True,
                           help="one of aut, send, end, swend, wend")
        p.add_argument("--n", type=int, required=True, help="number of cycle vertices (>= 3)")

    p = sub.add_parser("enumerate", help="stream every element, one map per line")
    add_target(p)
    p.add_argument("--out", help="write lines to this file instead of stdout")

    p = sub.add_parser("count", help="closed-form cardinality, optionally cross-checked")
    add_target(p)
    p.add_argument("--check", action="store_true",
                   help="also stream the enumeration and compare (exit 1 on mismatch)")

    p = sub.add_parser("member", help="test maps for membership")
    add_target(p)
    p.add_argument("--map", dest="map_text", help="inline map, e.g. \"1 2 1 2 1 2\"")
    p.add_argument("--in", dest="in_file", help="file with one map per line")

    p = sub.add_parser("regular", help="regularity of one map or of the whole monoid")
    add_target(p)
    p.add_argument("--map", dest="map_text", help="inline map to classify")
    p.add_argument("--in", dest="in_file", help="file with one map per line")
    p.add_argument("--list-nonregular", action="store_true",
                   help="print every non-regular element, one per line")

    p = sub.add_parser("green", help="Green's relation classes or a single pair test")
    add_target(p)
    p.add_argument("--relation", choices=("r", "l", "d"), required=True)
    p.add_argument("--summary", action="store_true",
                   help="class count and sizes (default when no pair is given)")
    p.add_argument("--a", dest="map_a", help="first map of a pair test")
    p.add_argument("--b", dest="map_b", help="second map of a pair test")

    p = sub.add_parser("rank", help="minimum generating set size and profile")
    add_target(p)
    p.add_argument("--seed", type=int, help="randomize which member represents each class")
    p.add_argument("--threads", type=int, default=1, help="worker processes for canonicalization")
    p.add_argument("--timing", action="store_true", help="include wall_time_ms in the output")
    p.add_argument("--emit-gens", dest="emit_gens", help="write the generators to this file")
    p.add_argument("--verify-closure", action="store_true",
                   help="close the generating set and compare sizes (exit 1 on mismatch)")
    p.add_argument("--cap", type=int, help=f"element cap (default 2^24, env {CAP_ENV_VAR})")

    p = sub.add_parser("gens", help="print a minimum generating set, one map per line")
    add_target(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="write lines to this file instead of stdout")

    p = sub.add_parser("table", help="sizes and ranks of all five monoids per n")
    p.add_argument("--max-n", dest="max_n", type=int, default=12)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--max-n", dest="max_n", type=int, default=12)
    p.add_argument("--check", action="append", dest="names",
                   help="run only the named check (repeatable)")
    return parser


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def _require_n(n: int) -> None:
    if n < MIN_VERTICES:
        raise ContextError(f"--n must be at least {MIN_VERTICES}, got {n}")


def _input_maps(flags, n: int) -> list[Transformation]:
    maps: list[Transformation] = []
    if flags.get("map_text"):
        maps.append(Transformation.parse(flags["map_text"]))
    if flags.get("in_file"):
        with open(flags["in_file"], "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if line:
                    maps.append(Transformation.parse(line))
    for t in maps:
        if t.n != n:
            raise ContextError(f"map {t.to_line()!r} has {t.n} points, expected {n}")
    return maps


def _write_lines(lines, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            for line in lines:
                handle.write(line + "\n")
    else:
        write = sys.stdout.write
        for line in lines:
            write(line + "\n")


def _cmd_enumerate(request: CommandRequest) -> int:
    _require_n(request.n)
    lines = (" ".join(map(str, images))
             for images in enumerate_images(request.kind, request.n))
    _write_lines(lines, request.flags.get("out"))
    return 0


def _cmd_count(request: CommandRequest) -> int:
    _require_n(request.n)
    size = cardinality(request.kind, request.n)
    payload = {"schema": 1, "command": "count", "kind": str(request.kind),
               "n": request.n, "cardinality": size}
    if request.flags.get("check"):
        streamed = sum(1 for _ in enumerate_images(request.kind, request.n))
        payload["enumerated"] = streamed
        payload["match"] = streamed == size
        _emit(payload)
        return 0 if payload["match"] else 1
    _emit(payload)
    return 0


def _cmd_member(request: CommandRequest) -> int:
    _require_n(request.n)
    maps = _input_maps(request.flags, request.n)
    if not maps:
        raise DomainError("member needs --map or --in")
    results = [{"map": t.to_line(), "member": is_member(t, request.kind)} for t in maps]
    _emit({"schema": 1, "command": "member", "kind": str(request.kind),
           "n": request.n, "results": results})
    return 0


def _cmd_regular(request: CommandRequest) -> int:
    from .green import is_regular

    _require_n(request.n)
    kind, n = request.kind, request.n
    if kind not in (MonoidKind.END, MonoidKind.WEND):
        raise DomainError("regularity analysis covers end and wend")
    maps = _input_maps(request.flags, n)
    if maps:
        results = []
        for t in maps:
            member = is_member(t, kind)
            results.append({"map": t.to_line(), "member": member,
                            "regular": bool(member and is_regular(t, kind))})
        _emit({"schema": 1, "command": "regular", "kind": str(kind), "n": n,
               "results": results})
        return 0
    if request.flags.get("list_nonregular"):
        lines = (" ".join(map(str, images))
                 for images in enumerate_images(kind, n)
                 if not is_regular(Transformation(images), kind))
        _write_lines(lines, None)
        return 0
    total = regular = 0
    for images in enumerate_images(kind, n):
        total += 1
        regular += is_regular(Transformation(images), kind)
    _emit({"schema": 1, "command": "regular", "kind": str(kind), "n": n,
           "total": total, "regular": regular, "nonregular": total - regular})
    return 0


def _cmd_green(request: CommandRequest) -> int:
    _require_n(request.n)
    kind, n = request.kind, request.n
    relation = request.flags["relation"]
    map_a, map_b = request.flags.get("map_a"), request.flags.get("map_b")
    if (map_a is None) != (map_b is None):
        raise DomainError("pair tests need both --a and --b")
    if map_a is not None:
        a, b = Transformation.parse(map_a), Transformation.parse(map_b)
        if a.n != n or b.n != n:
            raise ContextError(f"pair maps must have {n} points")
        payload = {"schema": 1, "command": "green", "kind": str(kind), "n": n,
                   "relation": relation}
        if relation == "r":
            payload["related"] = r_related(a, b)
        elif relation == "l":
            related, witness = l_related(a, b, kind)
            payload["related"] = related
            if witness is not None:
                payload["witness"] = {
                    "arc": str(witness.arc),
                    "sigma": str(witness.sigma),
                    "eps1": witness.eps1.to_line(),
                    "eps2": witness.eps2.to_line(),
                }
        else:
            payload["related"] = d_related(a, b, kind)
        _emit(payload)
        return 0
    if relation == "r":
        sizes = sorted((len(m) for m in r_classes(kind, n).values()), reverse=True)
    elif relation == "l":
        sizes = sorted((len(m) for m in l_classes(kind, n)), reverse=True)
    else:
        sizes = sorted((len(m) for m in d_classes(kind, n)), reverse=True)
    _emit({"schema": 1, "command": "green", "kind": str(kind), "n": n,
           "relation": relation, "class_count": len(sizes), "class_sizes": sizes})
    return 0


def _rank_payload(request: CommandRequest):
    result = monoid_rank(request.kind, request.n,
                         seed=request.flags.get("seed"),
                         threads=request.flags.get("threads") or 1)
    payload = {"schema": 1, "command": "rank", "kind": str(request.kind),
               "n": request.n, "rank": result.rank_value,
               "generator_count_by_rank": [list(item) for item in result.per_rank_counts]}
    return result, payload


def _cmd_rank(request: CommandRequest) -> int:
    _require_n(request.n)
    started = time.perf_counter()
    result, payload = _rank_payload(request)
    failed = False
    if request.flags.get("verify_closure"):
        ok = verify_generating_set(result, cap=request.flags.get("cap"))
        payload["verified_closure"] = ok
        failed = not ok
    if request.flags.get("timing"):
        payload["wall_time_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    if request.flags.get("emit_gens"):
        _write_lines((t.to_line() for t in result.generating_set),
                     request.flags["emit_gens"])
    _emit(payload)
    return 1 if failed else 0


def _cmd_gens(request: CommandRequest) -> int:
    _require_n(request.n)
    result, _ = _rank_payload(request)
    _write_lines((t.to_line() for t in result.generating_set), request.flags.get("out"))
    return 0


def _table_rows(max_n: int):
    rows = []
    for n in range(3, max_n + 1):
        row = {"n": n}
        for kind in KIND_ORDER:
            row[f"{kind.value}_size"] = cardinality(kind, n)
            row[f"{kind.value}_rank"] = monoid_rank(kind, n).rank_value
        rows.append(row)
    return rows


def _cmd_table(request: CommandRequest) -> int:
    max_n = request.flags.get("max_n", 12)
    if max_n < MIN_VERTICES:
        raise ContextError(f"--max-n must be at least {MIN_VERTICES}, got {max_n}")
    rows = _table_rows(max_n)
    fmt = request.flags.get("format", "json")
    if fmt == "json":
        _emit({"schema": 1, "command": "table", "max_n": max_n, "rows": rows})
        return 0
    headers = ["n"]
    for kind in KIND_ORDER:
        headers += [f"{kind.value}_size", f"{kind.value}_rank"]
    if fmt == "csv":
        lines = [",".join(headers)]
        lines += [",".join(str(row[h]) for h in headers) for row in rows]
        _write_lines(lines, None)
        return 0
    cells = [["n"] + [kind.value for kind in KIND_ORDER]]
    for row in rows:
        cells.append([str(row["n"])]
                     + [f"{row[f'{kind.value}_size']}/{row[f'{kind.value}_rank']}"
                        for kind in KIND_ORDER])
    widths = [max(len(line[col]) for line in cells) for col in range(len(cells[0]))]
    lines = ["  ".join(value.rjust(width) for value, width in zip(line, widths))
             for line in cells]
    _write_lines(lines, None)
    return 0


def _cmd_verify(request: CommandRequest) -> int:
    level = request.flags.get("level", "quick")
    max_n = request.flags.get("max_n", 12)
    names = request.flags.get("names")
    ok = run_checks(level=level, max_n=max_n, names=names)
    print("OK" if ok else "FAILED")
    return 0 if ok else 1


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "member": _cmd_member,
    "regular": _cmd_regular,
    "green": _cmd_green,
    "rank": _cmd_rank,
    "gens": _cmd_gens,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def run(request: CommandRequest) -> int:
    """Execute a parsed request; returns the process exit code."""
    return _HANDLERS[request.command](request)


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    flags = {k: v for k, v in vars(args).items() if k not in ("command", "kind", "n")}
    request = CommandRequest(
        command=args.command,
        kind=getattr(args, "kind", None),
        n=getattr(args, "n", None),
        flags=flags,
    )
    try:
        return run(request)
    except BrokenPipeError:
        return 0
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CycleEndoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
