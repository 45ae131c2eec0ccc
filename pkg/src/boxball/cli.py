"""Command line front end: evolve states, print separation tables, and run
the verification suites.

State documents are either a bare ASCII path ('.'=empty, digits 2..9) or a
JSON object:

    {"n": 5, "mode": "basic", "state": "55432.....542....2"}
    {"n": 4, "mode": "inhom", "tail_capacity": 1,
     "sites": [{"capacity": 3, "counts": [1, 0, 2, 0]}, ...]}
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .crystals import DomainSizeError
from .dynamics import (
    BasicPath,
    InhomPath,
    InvalidWordError,
    carrier_evolution,
    decoding_pass,
    time_evolution,
)
from .separation import check_commutation, colour_word, separate


class CliError(Exception):
    pass


def _read_input(args) -> str:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def parse_state(text: str, n_override: int | None = None):
    text = text.strip()
    if not text:
        raise CliError("empty input state")
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliError(f"bad JSON state document: {exc}") from exc
        return _state_from_document(doc, n_override)
    if n_override is not None and n_override > 9:
        raise CliError("ASCII mode supports n <= 9; use the JSON document form")
    try:
        return BasicPath.from_string(text.splitlines()[0].strip(), n_override)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _state_from_document(doc: dict, n_override: int | None):
    try:
        n = int(n_override if n_override is not None else doc["n"])
        mode = doc.get("mode", "basic")
        if mode == "basic":
            state = doc["state"]
            if n <= 9:
                return BasicPath.from_string(state, n)
            raise CliError("ASCII payload needs n <= 9")
        if mode == "inhom":
            sites = []
            for k, site in enumerate(doc["sites"]):
                counts = tuple(int(v) for v in site["counts"])
                if sum(counts) != int(site["capacity"]):
                    raise CliError(
                        f"site {k + 1}: counts {list(counts)} do not sum to "
                        f"capacity {site['capacity']}"
                    )
                sites.append(counts)
            return InhomPath(tuple(sites), n, int(doc.get("tail_capacity", 1)))
        raise CliError(f"unknown mode {mode!r}")
    except KeyError as exc:
        raise CliError(f"state document is missing field {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise CliError(str(exc)) from exc


def render_state(p, width: int | None = None) -> str:
    if isinstance(p, BasicPath):
        return p.render(width)
    return p.render()


def state_to_json(p):
    if isinstance(p, BasicPath):
        return {"n": p.n, "mode": "basic", "state": p.render()}
    return {
        "n": p.n,
        "mode": "inhom",
        "tail_capacity": p.tail_capacity,
        "sites": [
            {"capacity": sum(c), "counts": list(c)} for c in p.sites
        ],
    }


def _operator(name: str):
    if name == "T":
        return lambda p: (
            time_evolution(p) if isinstance(p, BasicPath) else carrier_evolution(p, None)
        )
    if name == "Tnat":
        return lambda p: decoding_pass(p)[0]
    if name.startswith("Tl:"):
        try:
            ell = int(name[3:])
        except ValueError:
            raise CliError(f"bad operator {name!r}; want T, Tnat, or Tl:<capacity>")
        if ell < 1:
            raise CliError("carrier capacity must be >= 1")
        return lambda p: carrier_evolution(p, ell)
    raise CliError(f"bad operator {name!r}; want T, Tnat, or Tl:<capacity>")


def cmd_evolve(args) -> int:
    text = _read_input(args)
    state = parse_state(text, args.n)
    op = _operator(args.operator)
    rows = [state]
    for _ in range(args.steps):
        rows.append(op(rows[-1]))
    if isinstance(state, BasicPath):
        # pad every row to the original input width so columns align
        original = 0 if text.strip().startswith("{") else len(text.strip().splitlines()[0])
        width = max(original, *(len(r.render()) for r in rows))
    else:
        width = None
    if args.json:
        print(json.dumps({"steps": args.steps, "rows": [state_to_json(r) for r in rows]}))
        return 0
    for t, r in enumerate(rows):
        print(f"t={t:<4} {render_state(r, width)}")
    return 0


def cmd_separate(args) -> int:
    text = _read_input(args)
    state = parse_state(text, args.n)
    record = separate(state)
    if args.json:
        print(json.dumps(record.to_json_dict()))
        return 0
    if isinstance(state, BasicPath):
        original = 0 if text.strip().startswith("{") else len(text.strip().splitlines()[0])
        width = max([original] + [len(render_state(s.state)) for s in record.steps])
    else:
        width = None
    for step in record.steps:
        line = f"s={step.index:<4} {render_state(step.state, width)}"
        if step.removed is not None:
            line += f" {step.removed}"
        print(line)
    print("word  " + "".join(str(v) for v in record.word))
    if args.trace:
        cur = state
        for s in range(record.n_passes):
            _, carrier, trace = decoding_pass(cur, want_trace=True)
            tags = " ".join(f"{st.site}:{st.tag}" for st in trace.steps)
            print(f"trace s={s} ({carrier}) {tags}")
            cur = trace.after
    return 0


def _parse_shapes(text: str):
    shapes = []
    for part in text.split(","):
        part = part.strip()
        if part == "c":
            shapes.append((1, 1))
        else:
            try:
                shapes.append((int(part),))
            except ValueError:
                raise CliError(f"bad shape {part!r}; want integers or 'c'")
    return shapes


def _emit_reports(reports, as_json: bool) -> int:
    ok = True
    for rep in reports:
        if as_json:
            print(json.dumps(rep.to_json_dict()))
        else:
            status = "pass" if rep.passed else "fail"
            line = f"{status}  {rep.relation} (domain {rep.domain}, {rep.elapsed:.3f}s)"
            if rep.counterexample:
                line += f"\n      {rep.counterexample}"
            print(line)
        ok = ok and rep.passed
    return 0 if ok else 1


def cmd_verify(args) -> int:
    reports = []
    if args.check == "braid":
        shapes = _parse_shapes(args.shapes)
        mode = "random" if args.count else "exhaustive"
        reports.append(
            verify.check_symmetric_group(shapes, args.n, mode, args.seed, args.count)
        )
    elif args.check == "chains":
        reports.append(verify.check_highest_weight_chains())
    elif args.check == "composition":
        mode = "random" if args.count else "exhaustive"
        reports.append(
            verify.check_carrier_composition(
                args.l, args.carriers, args.boxes, args.n, mode, args.seed, args.count
            )
        )
    elif args.check == "decomposition":
        for fixture in verify.standard_decomposition_fixtures():
            reports.append(verify.check_decomposition(fixture))
    elif args.check in ("theorem", "conservation"):
        reports.append(_run_path_suite(args))
    else:
        raise CliError(f"unknown verify check {args.check!r}")
    return _emit_reports(reports, args.json)


def _parse_capacities(text: str):
    out = []
    for part in text.split(","):
        part = part.strip()
        if part in ("inf", "infinity"):
            out.append(None)
        else:
            out.append(int(part))
    return out


def _run_path_suite(args):
    import time as _time

    rng = __import__("random").Random(args.seed)
    capacities = _parse_capacities(args.capacities)
    t0 = _time.perf_counter()
    counterexample = None
    for k in range(args.count):
        if args.mode == "inhom":
            p = verify.random_inhom_path(rng, rng.randint(2, args.n))
        else:
            p = verify.random_basic_path(rng, rng.randint(2, args.n))
        record = separate(p)
        for cap in capacities:
            if args.check == "theorem":
                rep = check_commutation(p, cap, record)
                if not rep.passed:
                    counterexample = f"path #{k} {p}: {rep.mismatch}"
                    break
            else:
                evolved = carrier_evolution(p, cap)
                if colour_word(evolved) != record.word:
                    counterexample = f"path #{k} {p}: word changed under capacity {cap}"
                    break
        if counterexample:
            break
    return verify.RelationReport(
        f"{args.check}[mode={args.mode}, n<={args.n}, count={args.count}, seed={args.seed}]",
        args.count * len(capacities),
        counterexample,
        _time.perf_counter() - t0,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxball", description="Coloured box-ball evolutions and colour separation"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evolve", help="apply a time evolution repeatedly")
    ev.add_argument("input", nargs="?", help="state file (default: stdin)")
    ev.add_argument("--steps", type=int, default=1)
    ev.add_argument("--operator", default="T", help="T, Tnat, or Tl:<capacity>")
    ev.add_argument("--n", type=int, default=None)
    ev.add_argument("--json", action="store_true")
    ev.set_defaults(func=cmd_evolve)

    sep = sub.add_parser("separate", help="decode a path into monochrome part + word")
    sep.add_argument("input", nargs="?", help="state file (default: stdin)")
    sep.add_argument("--n", type=int, default=None)
    sep.add_argument("--json", action="store_true")
    sep.add_argument("--trace", action="store_true", help="print per-site case tags")
    sep.set_defaults(func=cmd_separate)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument(
        "check",
        choices=["braid", "chains", "composition", "decomposition", "theorem", "conservation"],
    )
    ver.add_argument("--n", type=int, default=3)
    ver.add_argument("--l", type=int, default=2, help="row capacity for composition")
    ver.add_argument("--shapes", default="3,1,c", help="e.g. 3,1,c (c = column)")
    ver.add_argument("--carriers", "--N", type=int, default=1, dest="carriers")
    ver.add_argument("--boxes", "--L", type=int, default=1, dest="boxes")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--count", type=int, default=None)
    ver.add_argument("--mode", choices=["basic", "inhom"], default="basic")
    ver.add_argument("--capacities", default="1,2,3,inf")
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.check in ("theorem", "conservation"):
        if args.count is None:
            args.count = 100
    try:
        return args.func(args)
    except (CliError, InvalidWordError, DomainSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
