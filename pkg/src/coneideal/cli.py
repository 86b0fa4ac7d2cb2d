"""Command-line surface: enumerate, defining-set, verify and render.

Exit codes: 0 success, 2 invalid parameters or unparseable input, 3 size cap
exceeded, 4 input set is not an invariant ideal, 5 verification failure.
All diagnostics go to stderr; machine output (JSONL, counts, listings,
drawings) goes to stdout or the --emit path.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, TextIO

from .codes import (
    DEFAULT_SCAN_CAP,
    agl_generators,
    build_code,
    in_sum_zero_space,
    is_invariant_ideal,
    preimage_count,
    preimage_list,
    verify_invariance,
    violated_condition,
)
from .errors import CapExceeded, ConeIdealError, NotInvariant, OutOfRange
from .fields import DEFAULT_FIELD_CAP
from .order import Params
from .render import ascii_layers, svg_cubes
from .slicing import enumerate_all_r3, layers_to_points
from .symmetric import assembled_points, enumerate_all_r1, SymLayerSequence

EXIT_BAD_PARAMS = 2
EXIT_CAP = 3
EXIT_NOT_IDEAL = 4
EXIT_VERIFY_FAILED = 5


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _params(args: argparse.Namespace) -> Params:
    try:
        return Params(p=args.p, m=args.m, r=args.r)
    except OutOfRange as exc:
        raise _CliError(EXIT_BAD_PARAMS, f"invalid parameters: {exc}")


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _open_emit(args: argparse.Namespace) -> TextIO:
    if args.emit:
        return open(args.emit, "w", encoding="utf-8")
    return sys.stdout


def _shards(args: argparse.Namespace) -> Optional[tuple[int, int]]:
    if args.shards <= 1:
        return None
    if not 0 <= args.shard < args.shards:
        raise _CliError(EXIT_BAD_PARAMS, "shard index out of range")
    return (args.shard, args.shards)


def cmd_enumerate(args: argparse.Namespace) -> int:
    params = _params(args)
    shards = _shards(args)
    if args.count_only:
        if params.r == 3:
            total = enumerate_all_r3(params, mode="count", shards=shards)
        else:
            total = enumerate_all_r1(params, mode="count", shards=shards)
        print(total)
        return 0
    out = _open_emit(args)
    try:
        if params.r == 3:
            for layers in enumerate_all_r3(params, mode="stream", shards=shards):
                rec = {
                    "p": params.p,
                    "m": params.m,
                    "r": 3,
                    "layers": [w.to_obj() for w in layers],
                }
                if args.format == "points":
                    rec["points"] = sorted(layers_to_points(layers))
                out.write(json.dumps(rec) + "\n")
        else:
            for walks in enumerate_all_r1(params, mode="stream", shards=shards):
                rec = {
                    "p": params.p,
                    "m": params.m,
                    "r": 1,
                    "sym_layers": [w.to_obj() for w in walks],
                }
                if args.format == "points":
                    pts = assembled_points(SymLayerSequence(params, list(walks)))
                    rec["points"] = sorted(pts)
                out.write(json.dumps(rec) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _load_ideal(path: str) -> frozenset[tuple[int, int, int]]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    pts = data["points"] if isinstance(data, dict) else data
    return frozenset((int(x), int(y), int(z)) for x, y, z in pts)


def cmd_defining_set(args: argparse.Namespace) -> int:
    params = _params(args)
    try:
        ideal = _load_ideal(args.ideal)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        return _fail(EXIT_BAD_PARAMS, f"cannot parse ideal file: {exc}")
    if not is_invariant_ideal(ideal, params):
        reason = violated_condition(ideal, params)
        return _fail(EXIT_NOT_IDEAL, f"input is not an invariant ideal: {reason}")
    count = preimage_count(ideal, params)
    out = _open_emit(args)
    try:
        out.write(f"{count}\n")
        try:
            for s in preimage_list(ideal, params, cap=args.cap_scan):
                out.write(f"{s}\n")
        except CapExceeded as exc:
            print(f"list suppressed: {exc}", file=sys.stderr)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    params = _params(args)
    try:
        if args.ideal:
            ideals = [_load_ideal(args.ideal)]
        elif params.r == 3:
            ideals = [
                layers_to_points(layers)
                for layers in enumerate_all_r3(params, mode="stream")
            ]
        else:
            ideals = [
                assembled_points(SymLayerSequence(params, list(walks)))
                for walks in enumerate_all_r1(params, mode="stream")
            ]
        gens = agl_generators(params, cap_field=args.cap_field)
    except CapExceeded as exc:
        return _fail(EXIT_CAP, str(exc))
    failures = 0
    for idx, ideal in enumerate(ideals):
        try:
            spec = build_code(ideal, params, cap_field=args.cap_field)
        except NotInvariant as exc:
            print(f"{idx}\tFAIL\tnot an invariant ideal: {exc}")
            failures += 1
            continue
        except CapExceeded as exc:
            return _fail(EXIT_CAP, str(exc))
        invariant = verify_invariance(spec, gens)
        proper = in_sum_zero_space(spec)
        dichotomy = proper == (len(ideal) > 0)
        ok = invariant and dichotomy
        failures += 0 if ok else 1
        print(
            f"{idx}\t{'PASS' if ok else 'FAIL'}\tdim={spec.dimension}"
            f"\tdefining={spec.defining_count}"
            f"\tinvariant={'yes' if invariant else 'NO'}"
            f"\tsum-zero-dichotomy={'yes' if dichotomy else 'NO'}"
        )
    print(f"{len(ideals) - failures}/{len(ideals)} PASS", file=sys.stderr)
    return 0 if failures == 0 else EXIT_VERIFY_FAILED


def cmd_render(args: argparse.Namespace) -> int:
    params = _params(args)
    try:
        ideal = _load_ideal(args.ideal)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        return _fail(EXIT_BAD_PARAMS, f"cannot parse ideal file: {exc}")
    out = _open_emit(args)
    try:
        if args.render == "svg":
            out.write(svg_cubes(ideal, params))
        else:
            out.write(ascii_layers(ideal, params))
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coneideal",
        description="Enumerate invariant cone ideals and the matching codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, ideal_arg: bool = False) -> None:
        sp.add_argument("--p", type=int, required=True, help="prime")
        sp.add_argument("--m", type=int, required=True, help="exponent, 3 | m")
        sp.add_argument("--r", type=int, default=3, choices=(1, 3))
        sp.add_argument("--emit", default=None, help="output path (default stdout)")
        sp.add_argument("--cap-field", type=int, default=DEFAULT_FIELD_CAP)
        sp.add_argument("--cap-scan", type=int, default=DEFAULT_SCAN_CAP)
        if ideal_arg:
            sp.add_argument("ideal", help="JSON file with a 3D point list")

    sp = sub.add_parser("enumerate", help="list or count all invariant ideals")
    common(sp)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--format", choices=("jsonl", "points"), default="jsonl")
    sp.add_argument("--shards", type=int, default=1)
    sp.add_argument("--shard", type=int, default=0)
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("defining-set", help="exponent set of an ideal's code")
    common(sp, ideal_arg=True)
    sp.set_defaults(fn=cmd_defining_set)

    sp = sub.add_parser("verify", help="build codes and check group invariance")
    common(sp)
    sp.add_argument("--ideal", default=None, help="verify one ideal file only")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("render", help="draw an ideal")
    common(sp, ideal_arg=True)
    sp.add_argument("--render", choices=("ascii", "svg"), default="ascii")
    sp.set_defaults(fn=cmd_render)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        return _fail(exc.code, str(exc))
    except CapExceeded as exc:
        return _fail(EXIT_CAP, str(exc))
    except ConeIdealError as exc:
        return _fail(EXIT_BAD_PARAMS, str(exc))


if __name__ == "__main__":
    sys.exit(main())
