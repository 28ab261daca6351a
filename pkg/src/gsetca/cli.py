"""Command-line front end.

Exit codes: 0 success / holds / consistent, 1 a violation was found (the
witness is printed), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis, hyperbolic
from .automaton import Window, run, step
from .errors import GSetCAError, RuleFileError
from .group import parse_isometry
from .io import (
    default_window,
    dump_config,
    dump_rule,
    dumps,
    load_config,
    load_rule,
    render_pgm,
    render_svg,
    render_text,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID = 0, 1, 2


def _window(text: str) -> Window:
    try:
        x0, y0, x1, y1 = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected x0,y0,x1,y1") from None
    return Window((x0, y0), (x1, y1))


def _write(path: Optional[str], text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _render(fmt, x, states, window):
    if fmt == "json":
        return dumps(dump_config(x))
    window = window or default_window(x)
    return {"text": render_text, "pgm": render_pgm, "svg": render_svg}[fmt](x, states, window)


def cmd_run(args) -> int:
    tr = load_rule(args.rule)
    x = load_config(args.config, tr.states)
    if x.default != tr.states.quiescent:
        raise RuleFileError("default", f"must be the quiescent state {tr.states.quiescent!r}")
    if args.steps < 0:
        raise RuleFileError("--steps", "must be >= 0")
    if args.frames:
        if args.out in (None, "-"):
            raise RuleFileError("--frames", "needs --out FILE")
        out = Path(args.out)
        for k in range(args.steps + 1):
            if k:
                x = step(tr, x)
            frame = out.with_name(f"{out.stem}.{k:04d}{out.suffix}")
            frame.write_text(_render(args.format, x, tr.states, args.window), encoding="utf-8")
        _write(args.out, _render(args.format, x, tr.states, args.window))
        return EXIT_OK
    x = run(tr, x, args.steps)
    _write(args.out, _render(args.format, x, tr.states, args.window))
    return EXIT_OK


def cmd_analyze(args) -> int:
    tr = load_rule(args.rule)
    if args.analysis == "min-memory":
        cells = analysis.useful_cells(tr)
        print(f"MINIMAL-MEMORY size={len(cells)}")
        for c in cells:
            print(f"{c[0]},{c[1]}")
        return EXIT_OK
    if args.analysis == "equivariance":
        report = analysis.equivariance_check(tr, args.radius)
        print(report.to_text())
        return EXIT_VIOLATION if report.obstruction else EXIT_OK
    try:
        elements = [parse_isometry(e) for e in args.elements.split(";") if e.strip()]
    except ValueError as exc:
        raise RuleFileError("--elements", str(exc)) from None
    reports = analysis.invariance_check(tr, elements)
    for r in reports:
        print(r.to_text())
    return EXIT_OK if all(r.holds for r in reports) else EXIT_VIOLATION


def cmd_compose(args) -> int:
    composed = analysis.compose_triples(load_rule(args.rule1), load_rule(args.rule2))
    _write(args.out, dumps(dump_rule(composed)))
    return EXIT_OK


def cmd_verify_compose(args) -> int:
    t1, t2 = load_rule(args.rule1), load_rule(args.rule2)
    composed = analysis.compose_triples(t1, t2)
    report = analysis.verify_composition(t1, t2, composed, args.trials, args.seed, args.radius)
    print(report.to_text())
    return EXIT_OK if report.consistent else EXIT_VIOLATION


def cmd_verify_inverse(args) -> int:
    ta, tb = load_rule(args.rule1), load_rule(args.rule2)
    report = analysis.verify_inverse(ta, tb, args.trials, args.seed, args.radius)
    print(report.to_text())
    return EXIT_OK if report.confirmed else EXIT_VIOLATION


def cmd_hyp(args) -> int:
    if not 0 <= args.layers <= hyperbolic.MAX_LAYERS:
        raise RuleFileError("--layers", f"must be in 0..{hyperbolic.MAX_LAYERS}")
    patch = hyperbolic.build_patch(args.layers)
    alive: frozenset = frozenset()
    if args.hyp_command == "run":
        try:
            ids = json.loads(Path(args.alive).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise RuleFileError("--alive", str(exc)) from None
        if not isinstance(ids, list) or not all(
            isinstance(i, int) and 0 <= i < len(patch) for i in ids
        ):
            raise RuleFileError("--alive", f"expected a list of cell ids in 0..{len(patch) - 1}")
        alive = frozenset(ids)
        for _ in range(args.steps):
            alive = hyperbolic.hyp_gol_step(patch, alive)
        print(f"alive {len(alive)}: {sorted(alive)}")
    print("layer counts " + " ".join(str(n) for n in patch.layer_counts()))
    print(f"cells {len(patch)}")
    if args.out:
        _write(args.out, hyperbolic.render_svg(patch, alive))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gsetca", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="iterate an automaton on a configuration")
    r.add_argument("--rule", required=True)
    r.add_argument("--config", required=True)
    r.add_argument("--steps", type=int, default=1)
    r.add_argument("--window", type=_window, help="x0,y0,x1,y1 (inclusive)")
    r.add_argument("--out", default="-")
    r.add_argument("--format", choices=("json", "text", "pgm", "svg"), default="text")
    r.add_argument("--frames", action="store_true", help="also write every intermediate step")
    r.set_defaults(func=cmd_run)

    a = sub.add_parser("analyze", help="minimal memory, equivariance or invariance")
    a.add_argument("analysis", choices=("min-memory", "equivariance", "invariance"))
    a.add_argument("--rule", required=True)
    a.add_argument("--radius", type=int, default=2)
    a.add_argument("--elements", default="R0:0,0", help="';'-separated, e.g. 'R90:1,0;MX:0,1'")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("compose", help="write the triple for rule1∘rule2")
    c.add_argument("--rule1", required=True)
    c.add_argument("--rule2", required=True)
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_compose)

    for name, func, helptext in (
        ("verify-compose", cmd_verify_compose, "check rule1∘rule2 against its composed triple"),
        ("verify-inverse", cmd_verify_inverse, "check that rule1 and rule2 undo each other"),
    ):
        v = sub.add_parser(name, help=helptext)
        v.add_argument("--rule1", required=True)
        v.add_argument("--rule2", required=True)
        v.add_argument("--trials", type=int, default=100)
        v.add_argument("--seed", type=int, required=True)
        v.add_argument("--radius", type=int, default=6)
        v.set_defaults(func=func)

    h = sub.add_parser("hyp", help="{8,3} octagon patches")
    hsub = h.add_subparsers(dest="hyp_command", required=True)
    hb = hsub.add_parser("build")
    hb.add_argument("--layers", type=int, required=True)
    hb.add_argument("--out")
    hr = hsub.add_parser("run")
    hr.add_argument("--layers", type=int, required=True)
    hr.add_argument("--alive", required=True, help="JSON list of cell ids")
    hr.add_argument("--steps", type=int, default=1)
    hr.add_argument("--out")
    h.set_defaults(func=cmd_hyp)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RuleFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (GSetCAError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
