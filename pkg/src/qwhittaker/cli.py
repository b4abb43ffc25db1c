"""Command-line entry point.

Exit codes: 0 success, 1 verification or oracle failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

from . import bijections, fillings, patterns, serialize
from .algebra import partition
from .bijections import InconsistentPOPError
from .oracles import lattice_character
from .patterns import area, wtq
from .polymodels import ModelTag, basic_character_partial, whittaker
from .render import lattice_diagram, to_ascii, to_svg
from .verify import SUITES, run_suite

CACHE_ENV = "QWHITTAKER_CACHE_DIR"


class InputError(Exception):
    pass


def _parse_shape(text: str) -> tuple[int, ...]:
    try:
        return partition(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise InputError(f"bad --shape {text!r}: {exc}") from exc


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _cached(key: dict, compute) -> str:
    """Look up ``key`` in the on-disk cache, computing and storing on a miss."""
    root = os.environ.get(CACHE_ENV)
    if not root:
        return compute()
    digest = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()
    path = Path(root) / f"{digest}.out"
    if path.exists():
        return path.read_text(encoding="utf-8")
    text = compute()
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)
    return text


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_compute(args) -> int:
    lam = _parse_shape(args.shape)
    if args.vars < 1 or len(lam) > args.vars:
        raise InputError(f"shape {lam} needs at most {args.vars} nonzero parts and --vars >= 1")

    def compute():
        P = whittaker(lam, args.vars, args.model)
        if args.format == "json":
            return serialize.dumps(serialize.sympoly_to_json(P))
        return str(P) + "\n"

    key = {"cmd": "compute", "shape": list(lam), "vars": args.vars,
           "model": args.model, "format": args.format}
    sys.stdout.write(_cached(key, compute))
    return 0


def cmd_verify(args) -> int:
    if args.max_size < 0 or args.vars < 1 or args.trials < 1:
        raise InputError("--max-size must be >= 0, --vars >= 1, --trials >= 1")
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(name, args.max_size, args.vars, seed=args.seed, trials=args.trials)
               for name in names]
    total = sum(len(r["failures"]) for r in reports)
    sys.stdout.write(serialize.dumps({"passed": total == 0, "reports": reports}))
    return 0 if total == 0 else 1


FILLING_MAPS = {
    "rsort": lambda F: serialize.gt_to_json(fillings.rsort(F)),
    "dsplice": lambda F: serialize.filling_to_json(fillings.dsplice(F)),
    "psi-inv": lambda F: serialize.pop_to_json(bijections.psi_inv(F)),
    "psi-quinv": lambda F: serialize.pop_to_json(bijections.psi_quinv(F)),
    "omega": lambda F: serialize.filling_to_json(bijections.omega(F)),
}

POP_MAPS = {
    "psi-inv-inverse": lambda p: serialize.filling_to_json(bijections.psi_inverse(p, "inv")),
    "psi-quinv-inverse": lambda p: serialize.filling_to_json(bijections.psi_inverse(p, "quinv")),
    "bcomp": lambda p: serialize.pop_to_json(patterns.bcomp(p)),
    "pr": lambda p: serialize.gt_to_json(patterns.pr(p)),
    "br": lambda p: serialize.pop_to_json(patterns.br(p)),
}


def cmd_map(args) -> int:
    data = _read_json(args.input)
    if args.name in FILLING_MAPS:
        out = FILLING_MAPS[args.name](serialize.filling_from_json(data))
    else:
        out = POP_MAPS[args.name](serialize.pop_from_json(data))
    sys.stdout.write(serialize.dumps(out))
    return 0


def cmd_fiber(args) -> int:
    T = serialize.gt_from_json(_read_json(args.input))
    members = list(fillings.enumerate_fiber(T))
    stats = [(fillings.inv(F), fillings.quinv(F)) for F in members]
    idx = 0 if args.stat == "inv" else 1
    degs = [s[idx] for s in stats]
    poly = [degs.count(d) for d in range(max(degs) + 1)]
    report = {
        "pattern": serialize.gt_to_json(T),
        "stat": args.stat,
        "size": len(members),
        "polynomial": serialize.qpoly_to_json(serialize.qpoly_from_json(poly)),
        "wtq": serialize.qpoly_to_json(wtq(T)),
        "area": area(T),
    }
    if not args.summary:
        report["fillings"] = [
            {"rows": [list(r) for r in F.rows], "inv": a, "quinv": b}
            for F, (a, b) in zip(members, stats)
        ]
    sys.stdout.write(serialize.dumps(report))
    return 0


def cmd_render(args) -> int:
    F = serialize.filling_from_json(_read_json(args.input))
    diagram = lattice_diagram(F)
    body = to_svg(diagram) if args.format == "svg" else to_ascii(diagram)
    summary = (f"crossings={diagram.crossing_count} non-crossings={diagram.non_crossing_count}"
               f" inv={fillings.inv(F)} quinv={fillings.quinv(F)}\n")
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
        sys.stdout.write(summary)
    else:
        sys.stdout.write(body)
        if args.format == "svg":
            sys.stderr.write(summary)
    return 0


def cmd_character(args) -> int:
    if args.vars < 2 or args.max_k < 0 or args.q_cap < 0:
        raise InputError("need --vars >= 2, --max-k >= 0, --q-cap >= 0")
    result = basic_character_partial(args.vars, args.max_k, args.q_cap)
    report = {
        "n": args.vars,
        "max_k": args.max_k,
        "q_cap": args.q_cap,
        "coefficients": [
            {"d": c.d, "stable_at_k": c.stable_at_k,
             "weights": [{"w": list(w), "mult": m} for w, m in c.weights.items()]}
            for c in result.coefficients
        ],
        "violations": result.violations,
    }
    ok = not result.violations
    if args.check_oracle:
        matches = result.as_counters() == lattice_character(args.vars, args.q_cap)
        report["oracle"] = {"match": matches, "stable": result.stable()}
        ok = ok and matches and result.stable()
    sys.stdout.write(serialize.dumps(report))
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwhittaker", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute W_lambda(x_1..x_n; q)")
    p.add_argument("--shape", required=True, help="comma separated parts, e.g. 10,6,4")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--model", choices=[m.value for m in ModelTag], default="fermionic")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run exhaustive identity checks")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--vars", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10, help="random splice orders per filling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("map", help="apply one of the combinatorial maps to a JSON file")
    p.add_argument("--name", required=True, choices=sorted(FILLING_MAPS) + sorted(POP_MAPS))
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("fiber", help="statistics over the rsort fiber of a GT pattern")
    p.add_argument("--input", required=True)
    p.add_argument("--stat", choices=["inv", "quinv"], default="inv")
    p.add_argument("--summary", action="store_true", help="omit the per-filling list")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("render", help="draw the lattice-path picture of a CSF")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("character", help="partial sums for the basic representation")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--q-cap", type=int, required=True)
    p.add_argument("--check-oracle", action="store_true")
    p.set_defaults(func=cmd_character)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, IndexError, InconsistentPOPError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
