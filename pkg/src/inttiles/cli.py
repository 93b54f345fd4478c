"""Command-line front end.

All reports are UTF-8 JSON on stdout (one envelope per invocation, or one
JSON line per set for `corpus`); diagnostics go to stderr. Exit codes:
0 computed result (including "does not tile"), 2 usage error,
3 inconclusive (budget exhausted), 4 internal-consistency fault.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .cmcheck import cm_report
from .constructions import (
    Theorem2Params,
    diameter_counterexample,
    standard_tile,
    theorem2_exponent_report,
    theorem2_generate,
)
from .faults import InternalFaultError
from .schemas import SCHEMA_VERSION
from .search import SearchConfig, minimal_tiling_period
from .tilingset import IntegerSet, is_tiling

CORPUS_SAFETY_LIMIT = 14
JOBS_ENV_VAR = "INTTILES_JOBS"


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw is None:
        return 1
    try:
        jobs = int(raw)
    except ValueError as exc:
        raise ValueError(f"{JOBS_ENV_VAR} must be an integer, got {raw!r}") from exc
    if jobs < 0:
        raise ValueError(f"{JOBS_ENV_VAR} must be nonnegative")
    return jobs


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}") from exc


def _parse_set(text: str) -> IntegerSet:
    return IntegerSet.from_iterable(_parse_int_list(text, "set"))


def _load_set(path: str) -> IntegerSet:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON array of integers")
    return IntegerSet.from_iterable(data)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _input_set(args) -> IntegerSet:
    return _load_set(args.input) if args.input else _parse_set(args.set)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inttiles",
        description="Analyze translational tilings of the integers.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_set_source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--set", help="inline set, comma-separated nonnegative integers")
        group.add_argument("--input", help="path to a JSON array of nonnegative integers")

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("analyze", help="spectrum, (T1)/(T2), and diameter bounds")
    add_set_source(p)
    add_format(p)

    p = sub.add_parser("check-tiling", help="verify tile + complement = Z_M")
    p.add_argument("--tile", help="inline tile set")
    p.add_argument("--complement", help="inline complement set")
    p.add_argument("--modulus", type=int, help="modulus M")
    p.add_argument("--input", help='path to JSON {"tile": [...], "complement": [...], "modulus": M}')
    add_format(p)

    p = sub.add_parser("min-period", help="minimal tiling period by exhaustive search")
    add_set_source(p)
    add_format(p)
    p.add_argument("--mode", choices=("restricted", "unrestricted"), default="restricted")
    p.add_argument("--cap", type=int, help="override the candidate-modulus cap")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (0 = auto)")
    p.add_argument("--node-budget", type=int, help="abort search beyond this many nodes")

    p = sub.add_parser("construct", help="generate explicit tilings")
    kinds = p.add_subparsers(dest="kind", required=True)
    t2 = kinds.add_parser("theorem2", help="long-period column-shift tiling")
    t2.add_argument("--p", required=True, help="three primes p1,p2,p3 with p1<p2<p3<2*p1")
    t2.add_argument("--n", required=True, type=int, help="exponent n >= 2")
    t2.add_argument("--beta", type=_parse_fraction, help="target exponent in (0, 3/2)")
    t2.add_argument("--epsilon", type=_parse_fraction, help="slack for the exponent report")
    add_format(t2)
    box = kinds.add_parser("box", help="complete-residue box tile")
    box.add_argument("--powers", required=True, help="prime powers like 2^2,3^1")
    add_format(box)

    p = sub.add_parser("counterexample", help="diameter counterexample at primes p < q < 2p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    add_format(p)

    p = sub.add_parser("corpus", help="enumerate sets up to a diameter, one JSON line each")
    p.add_argument("--max-diameter", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (0 = auto)")
    p.add_argument(
        "--force",
        action="store_true",
        help=f"allow max-diameter beyond the safety limit of {CORPUS_SAFETY_LIMIT}",
    )
    return parser


def _run_analyze(args):
    given = _input_set(args)
    tile = given.normalize()
    offset = given.elements[0]
    return cm_report(tile).to_json_dict(), 0, {"offset": offset}


def _run_check_tiling(args):
    if args.input:
        if args.tile or args.complement or args.modulus is not None:
            raise ValueError("--input excludes --tile/--complement/--modulus")
        data = json.loads(Path(args.input).read_text(encoding="utf-8"))
        tile = IntegerSet.from_iterable(data["tile"])
        complement = IntegerSet.from_iterable(data["complement"])
        modulus = int(data["modulus"])
    else:
        if not (args.tile and args.complement and args.modulus is not None):
            raise ValueError("need --tile, --complement and --modulus (or --input)")
        tile = _parse_set(args.tile)
        complement = _parse_set(args.complement)
        modulus = args.modulus
    verdict = is_tiling(tile, complement, modulus)
    payload = {
        "tiles": verdict.tiles,
        "direct_route": verdict.direct_route,
        "cyclotomic_route": verdict.cyclotomic_route,
    }
    if verdict.first_undercovered is not None:
        payload["first_undercovered"] = verdict.first_undercovered
    if verdict.first_overcovered is not None:
        payload["first_overcovered"] = verdict.first_overcovered
    if verdict.failing_divisor is not None:
        payload["failing_divisor"] = verdict.failing_divisor
    return payload, 0, None


def _run_min_period(args):
    given = _input_set(args)
    tile = given.normalize()
    offset = given.elements[0]
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    config = SearchConfig(
        candidate_mode=args.mode,
        max_modulus_override=args.cap,
        parallelism=jobs,
        node_budget=args.node_budget,
    )
    result = minimal_tiling_period(tile, config)
    code = 3 if result.status == "inconclusive" else 0
    return result.to_json_dict(), code, {"offset": offset}


def _run_construct(args):
    if args.kind == "theorem2":
        primes = _parse_int_list(args.p, "--p")
        if len(primes) != 3:
            raise ValueError("--p needs exactly three primes")
        params = Theorem2Params(
            p1=primes[0],
            p2=primes[1],
            p3=primes[2],
            n=args.n,
            target_beta=args.beta,
            epsilon=args.epsilon,
        )
        instance = theorem2_generate(params)
        payload = instance.to_json_dict()
        payload["exponent_report"] = theorem2_exponent_report(instance).to_json_dict()
        return payload, 0, None
    spec = []
    for part in args.powers.split(","):
        if "^" in part:
            base, _, exp = part.partition("^")
        else:
            base, exp = part, "1"
        spec.append((int(base), int(exp)))
    tile = standard_tile(spec)
    modulus = 1
    for p, a in spec:
        modulus *= p**a
    return {"set": list(tile.elements), "modulus": modulus}, 0, None


def _run_counterexample(args):
    tile, report = diameter_counterexample(args.p, args.q)
    payload = {"set": list(tile.elements)}
    payload.update(report.to_json_dict())
    return payload, 0, None


def _corpus_sets(max_diameter: int):
    for mask in range(1 << max_diameter):
        yield (0,) + tuple(
            i + 1 for i in range(max_diameter) if mask >> i & 1
        )


def _corpus_record(elements: tuple[int, ...]) -> str:
    tile = IntegerSet(elements)
    period = minimal_tiling_period(tile, SearchConfig())
    analysis = cm_report(tile)
    record = {
        "set": list(elements),
        "period": period.to_json_dict(),
        "analysis": analysis.to_json_dict(),
    }
    return json.dumps(record, separators=(",", ":"))


def _run_corpus(args, out) -> int:
    if args.max_diameter < 0:
        raise ValueError("--max-diameter must be nonnegative")
    if args.max_diameter > CORPUS_SAFETY_LIMIT and not args.force:
        raise ValueError(
            f"--max-diameter {args.max_diameter} exceeds the safety limit "
            f"{CORPUS_SAFETY_LIMIT}; pass --force to override"
        )
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs == 0:
        jobs = os.cpu_count() or 1
    sets = _corpus_sets(args.max_diameter)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for line in pool.map(_corpus_record, sets, chunksize=16):
                print(line, file=out)
    else:
        for elements in sets:
            print(_corpus_record(elements), file=out)
    return 0


def _render_text(payload: dict, out, prefix: str = "") -> None:
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{prefix}{key}:", file=out)
            _render_text(value, out, prefix + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], list):
            body = " ".join(f"{m}={o}" for m, o in value)
            print(f"{prefix}{key}: {body}", file=out)
        elif isinstance(value, list):
            print(f"{prefix}{key}: {','.join(str(v) for v in value)}", file=out)
        else:
            print(f"{prefix}{key}: {value}", file=out)


_HANDLERS = {
    "analyze": _run_analyze,
    "check-tiling": _run_check_tiling,
    "min-period": _run_min_period,
    "construct": _run_construct,
    "counterexample": _run_counterexample,
}


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    started = time.perf_counter()
    try:
        if args.subcommand == "corpus":
            return _run_corpus(args, out)
        payload, code, normalization = _HANDLERS[args.subcommand](args)
    except InternalFaultError as exc:
        print(f"internal-consistency fault: {exc}", file=err)
        return 4
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=err)
        return 2

    subcommand = args.subcommand
    if subcommand == "construct":
        subcommand = f"construct-{args.kind}"
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "subcommand": subcommand,
    }
    if normalization is not None:
        envelope["normalization"] = normalization
    envelope["payload"] = payload
    envelope["timing_ms"] = round((time.perf_counter() - started) * 1000, 3)
    if getattr(args, "format", "json") == "text":
        print(f"subcommand: {subcommand}", file=out)
        _render_text(payload, out)
        print(f"timing_ms: {envelope['timing_ms']}", file=out)
    else:
        print(json.dumps(envelope, separators=(",", ":")), file=out)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
