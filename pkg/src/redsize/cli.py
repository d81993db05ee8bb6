"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails (a table row, or a
green-only ``apply`` hitting a red vertex), 2 on usage or input errors.

A quiver argument is a JSON file path, ``-`` for standard input, or a catalog
name (``markov``, ``x7``, ``a_path_4``, ...). A sequence argument is a
comma-separated list (``3,4,1``), a JSON list, or a path to a sequence JSON file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import jsonio
from .constructions import UnknownName, catalog, catalog_names
from .core import ExtendedQuiver, Quiver, QuiverError, frame, mutate
from .mutclass import enumerate_mutation_class
from .search import (
    DEFAULT_DEPTH,
    DEFAULT_NODE_BUDGET,
    exhaustive_red_search,
    last_green_achievability,
    random_green_walk,
    walk_ensemble,
)
from .sequences import Mode, MutationSequence, NotGreenAtStep, apply_sequence, classify_from, verify_paper_tables


class InputError(Exception):
    pass


def _load_json_arg(arg: str):
    if arg == "-":
        return json.load(sys.stdin)
    path = Path(arg)
    if path.is_file():
        return json.loads(path.read_text())
    return None


def load_quiver(arg: str) -> Quiver | ExtendedQuiver:
    try:
        data = _load_json_arg(arg)
    except json.JSONDecodeError as exc:
        raise InputError(f"{arg}: invalid JSON ({exc})") from exc
    if data is None:
        try:
            return catalog(arg).quiver
        except UnknownName:
            raise InputError(f"{arg!r} is neither a file nor a catalog name") from None
    try:
        return jsonio.quiver_from_json(data)
    except (QuiverError, TypeError, ValueError) as exc:
        raise InputError(f"{arg}: {exc}") from exc


def load_sequence(arg: str) -> MutationSequence:
    path = Path(arg)
    try:
        if path.is_file():
            return jsonio.sequence_from_json(json.loads(path.read_text()))
        text = arg.strip()
        if text.startswith("[") or text.startswith("{"):
            return jsonio.sequence_from_json(json.loads(text))
        return MutationSequence(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read sequence {arg!r}: {exc}") from exc


def _as_extended(q: Quiver | ExtendedQuiver) -> ExtendedQuiver:
    return q if isinstance(q, ExtendedQuiver) else frame(q)


def _as_quiver(q: Quiver | ExtendedQuiver) -> Quiver:
    return q.quiver if isinstance(q, ExtendedQuiver) else q


def _emit(obj) -> None:
    print(jsonio.dumps(obj))


def _fmt_seq(steps: Sequence[int] | None) -> str:
    return "(" + ",".join(map(str, steps)) + ")" if steps is not None else "-"


def _stderr_progress(level: int, states: int, frontier: int, best: int) -> None:
    print(f"depth {level}: {states} states, frontier {frontier}, best {best}", file=sys.stderr, flush=True)


# -- commands -------------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        names = catalog_names()
        if args.json:
            _emit(names)
        else:
            print("\n".join(names))
        return 0
    if not args.name:
        raise InputError("catalog show needs a name")
    try:
        entry = catalog(args.name)
    except UnknownName:
        raise InputError(f"unknown catalog entry {args.name!r}") from None
    if args.json:
        _emit({"name": entry.name, "quiver": jsonio.quiver_to_json(entry.quiver),
               "provenance": entry.provenance, "notes": entry.notes})
    else:
        print(f"{entry.name}: {entry.quiver}")
        print(f"  source: {entry.provenance}")
        for key, val in entry.notes.items():
            print(f"  {key}: {val}")
    return 0


def cmd_mutate(args) -> int:
    e = _as_extended(load_quiver(args.quiver))
    for k in args.k:
        e = mutate(e, k)
    _emit(jsonio.quiver_to_json(e))
    return 0


def cmd_apply(args) -> int:
    e = _as_extended(load_quiver(args.quiver))
    seq = load_sequence(args.sequence)
    mode = Mode.parse(args.mode) if args.mode else seq.mode
    try:
        e = apply_sequence(e, seq, mode)
    except NotGreenAtStep as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(jsonio.quiver_to_json(e))
    return 0


def cmd_classify(args) -> int:
    e = _as_extended(load_quiver(args.quiver))
    rep = classify_from(e, load_sequence(args.sequence).steps)
    if args.json:
        _emit(jsonio.report_to_json(rep))
        return 0
    print(f"sequence        {_fmt_seq(rep.steps)}")
    print(f"green sequence  {rep.is_green_sequence}"
          + ("" if rep.first_violation is None else f" (first red mutation at step {rep.first_violation})"))
    print(f"red count       {rep.final_red_count} of {rep.final_state.n}")
    print(f"green vertices  {sorted(rep.final_green_set)}")
    print(f"maximal green   {rep.is_maximal_green}")
    print(f"reddening       {rep.is_reddening}")
    return 0


def cmd_verify_tables(args) -> int:
    rows = verify_paper_tables()
    ok = all(r.passed for r in rows)
    if args.json:
        _emit({"passed": ok, "rows": [jsonio.table_row_to_json(r) for r in rows]})
    else:
        for r in rows:
            status = "PASS" if r.passed else "FAIL"
            extra = "" if r.first_violation is None else f" red mutation at step {r.first_violation}"
            print(f"{status} {r.table:22s} {_fmt_seq(r.steps):45s} expect {{{r.expected_green}}} "
                  f"got {sorted(r.final_green_set)}{extra}")
        print(f"{sum(r.passed for r in rows)}/{len(rows)} rows pass")
    return 0 if ok else 1


def cmd_search(args) -> int:
    q = _as_quiver(load_quiver(args.quiver))
    res = exhaustive_red_search(
        q, depth=args.depth, mode=args.mode, node_budget=args.node_budget,
        workers=args.workers, progress=None if args.quiet else _stderr_progress,
    )
    if args.json:
        _emit(jsonio.search_to_json(res))
    else:
        print(f"best red count {res.best_red_count} of {q.n} ({res.mode.value} mode, depth {res.depth})")
        print(f"witness {_fmt_seq(res.witness)}")
        print(f"states visited {res.states_visited}, exhausted {res.exhausted}")
        if res.budget_exceeded:
            print("node budget exceeded: result is partial")
    return 0


def cmd_last_green(args) -> int:
    q = _as_quiver(load_quiver(args.quiver))
    seeds = [load_sequence(s).steps for s in args.seed_sequence or []]
    res = last_green_achievability(
        q, depth=args.depth, mode=args.mode, node_budget=args.node_budget, seeds=seeds,
        workers=args.workers, progress=None if args.quiet else _stderr_progress,
    )
    if args.json:
        _emit(jsonio.last_green_to_json(res))
    else:
        for v, w in sorted(res.witnesses.items()):
            print(f"vertex {v}: {_fmt_seq(w) if w is not None else 'not found within depth'}")
    return 0


def cmd_walk(args) -> int:
    q = _as_quiver(load_quiver(args.quiver))
    stop = not args.no_stop_on_hit
    if args.trials is None:
        w = random_green_walk(q, args.seed, args.max_steps, stop_on_hit=stop)
        if args.json:
            _emit(jsonio.walk_to_json(w))
        else:
            print(f"seed {w.seed}: {w.steps_taken} steps, hit at {w.hit_step}, final red count {w.final_red_count}")
            print(f"steps {_fmt_seq(w.steps)}")
        return 0
    res = walk_ensemble(q, args.trials, args.seed, args.max_steps, stop_on_hit=stop, workers=args.workers)
    if args.json:
        _emit(jsonio.ensemble_to_json(res))
    else:
        print(f"{res.hits}/{res.trials} walks reached red count >= {q.n - 1} (fraction {res.hit_fraction:.3f})")
        if res.hit_step_quantiles:
            print("hit step " + ", ".join(f"{k} {v:g}" for k, v in res.hit_step_quantiles.items()))
        if res.missed_seeds:
            print("missed seeds: " + " ".join(map(str, res.missed_seeds)))
    return 0


def cmd_mutclass(args) -> int:
    q = _as_quiver(load_quiver(args.quiver))
    res = enumerate_mutation_class(q, limit=args.limit)
    if args.json:
        _emit(jsonio.mutclass_to_json(res, include_reps=True))
    else:
        print(f"mutation class size {res.size} ({res.status.value})")
        if args.show:
            for _, rep in res.representatives:
                print(f"  {rep}")
    return 0


# -- parser ---------------------------------------------------------------------


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


def _nonneg(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return val


def _mode(text: str) -> Mode:
    try:
        return Mode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="redsize", description="Quiver mutation, green sequences and red sizes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, description=help_,
                            formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    def search_opts(sp):
        sp.add_argument("--depth", type=_nonneg, default=DEFAULT_DEPTH, help="maximum sequence length")
        sp.add_argument("--mode", type=_mode, default=Mode.GREEN, help="green | any")
        sp.add_argument("--node-budget", type=_positive, default=DEFAULT_NODE_BUDGET, help="maximum stored states")
        sp.add_argument("--workers", type=_positive, default=1, help="worker processes (output does not depend on it)")
        sp.add_argument("--quiet", action="store_true", help="no progress on stderr")

    sp = add("catalog", cmd_catalog, "list or show named quivers")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?", help="entry name for 'show'")

    sp = add("mutate", cmd_mutate, "mutate a (framed) quiver; prints the extended quiver JSON")
    sp.add_argument("quiver")
    sp.add_argument("k", type=int, nargs="+")

    sp = add("apply", cmd_apply, "apply a sequence; prints the extended quiver JSON")
    sp.add_argument("quiver")
    sp.add_argument("sequence")
    sp.add_argument("--mode", type=_mode, default=None, help="green | any (default: from the sequence, else green)")

    sp = add("classify", cmd_classify, "classify a sequence (green / maximal green / reddening)")
    sp.add_argument("quiver")
    sp.add_argument("sequence")

    add("verify-tables", cmd_verify_tables, "replay every explicit sequence from the red-size tables")

    sp = add("search", cmd_search, "exhaustive bounded search for the largest red count")
    sp.add_argument("quiver")
    search_opts(sp)

    sp = add("last-green", cmd_last_green, "find sequences leaving exactly one given vertex green")
    sp.add_argument("quiver")
    search_opts(sp)
    sp.add_argument("--seed-sequence", action="append", help="candidate sequence checked before searching")

    sp = add("walk", cmd_walk, "random green walks (SplitMix64)")
    sp.add_argument("quiver")
    sp.add_argument("--seed", type=int, default=0, help="master seed")
    sp.add_argument("--max-steps", type=_nonneg, default=100, help="step cap per walk")
    sp.add_argument("--trials", type=_positive, default=None, help="run an ensemble of this many walks")
    sp.add_argument("--no-stop-on-hit", action="store_true", help="keep walking after red count reaches n-1")
    sp.add_argument("--workers", type=_positive, default=1, help="worker processes (output does not depend on it)")

    sp = add("mutclass", cmd_mutclass, "enumerate the mutation class up to isomorphism")
    sp.add_argument("quiver")
    sp.add_argument("--limit", type=_positive, default=10_000, help="maximum number of classes")
    sp.add_argument("--show", action="store_true", help="print every representative")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, QuiverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
