"""JSON wire formats.

Quiver:          {"n": 3, "arrows": [[1, 2, 2], ...]}
Extended quiver: the quiver object plus "c": [[1, 0, 0], ...] (row-major)
Sequence:        {"steps": [1, 2], "mode": "green" | "any"}
"""

from __future__ import annotations

import json
from typing import Any

from .core import ExtendedQuiver, Quiver, QuiverError, arrows_of, quiver_from_arrows
from .mutclass import MutationClassResult
from .search import EnsembleResult, LastGreenResult, SearchResult, WalkResult
from .sequences import MutationSequence, SequenceReport, TableRow


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


def quiver_to_json(q: Quiver | ExtendedQuiver) -> dict:
    out = {"n": q.n, "arrows": [list(a) for a in arrows_of(q)]}
    if isinstance(q, ExtendedQuiver):
        out["c"] = [list(row) for row in q.c]
    return out


def quiver_from_json(data: dict) -> Quiver | ExtendedQuiver:
    """Parse a quiver; the result is extended exactly when ``"c"`` is present."""
    try:
        n = int(data["n"])
        arrows = data.get("arrows", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"malformed quiver JSON: {exc}") from exc
    q = quiver_from_arrows(n, arrows)
    if "c" in data:
        return ExtendedQuiver(q.b, data["c"])
    return q


def sequence_to_json(seq: MutationSequence) -> dict:
    return {"steps": list(seq.steps), "mode": seq.mode.value}


def sequence_from_json(data: dict | list) -> MutationSequence:
    if isinstance(data, list):
        return MutationSequence(tuple(data))
    return MutationSequence(tuple(data["steps"]), data.get("mode", "green"))


def report_to_json(rep: SequenceReport) -> dict:
    return {
        "steps": list(rep.steps),
        "is_green_sequence": rep.is_green_sequence,
        "first_violation": rep.first_violation,
        "final_green_set": sorted(rep.final_green_set),
        "final_red_count": rep.final_red_count,
        "is_maximal_green": rep.is_maximal_green,
        "is_reddening": rep.is_reddening,
        "final_state": quiver_to_json(rep.final_state),
    }


def _witness_map(m: dict[int, tuple[int, ...] | None]) -> dict[str, list[int] | None]:
    return {str(v): (list(w) if w is not None else None) for v, w in sorted(m.items())}


def search_to_json(res: SearchResult) -> dict:
    return {
        "best_red_count": res.best_red_count,
        "witness": list(res.witness),
        "last_green_witnesses": _witness_map(res.last_green_witnesses),
        "depth": res.depth,
        "mode": res.mode.value,
        "exhausted": res.exhausted,
        "budget_exceeded": res.budget_exceeded,
        "states_visited": res.states_visited,
    }


def last_green_to_json(res: LastGreenResult) -> dict:
    return {
        "witnesses": _witness_map(res.witnesses),
        "achievable": sorted(res.achievable()),
        "depth": res.depth,
        "mode": res.mode.value,
        "exhausted": res.exhausted,
        "budget_exceeded": res.budget_exceeded,
        "states_visited": res.states_visited,
    }


def walk_to_json(w: WalkResult) -> dict:
    return {
        "seed": w.seed,
        "steps_taken": w.steps_taken,
        "hit_step": w.hit_step,
        "trajectory_summary": w.trajectory,
        "steps": w.steps,
        "final_green_set": w.final_green_set,
    }


def ensemble_to_json(res: EnsembleResult) -> dict:
    return {
        "seed": res.seed,
        "trials": res.trials,
        "max_steps": res.max_steps,
        "hits": res.hits,
        "hit_fraction": res.hit_fraction,
        "hit_step_quantiles": res.hit_step_quantiles,
        "missed_seeds": res.missed_seeds,
    }


def mutclass_to_json(res: MutationClassResult, include_reps: bool = True) -> dict:
    out: dict[str, Any] = {"size": res.size, "status": res.status.value}
    if include_reps:
        out["representatives"] = [quiver_to_json(q) for _, q in res.representatives]
    if res.witness is not None:
        out["infinite_witness"] = quiver_to_json(res.witness)
    return out


def table_row_to_json(row: TableRow) -> dict:
    return {
        "table": row.table,
        "steps": list(row.steps),
        "expected_green": row.expected_green,
        "passed": row.passed,
        "is_green_sequence": row.is_green_sequence,
        "final_green_set": sorted(row.final_green_set),
        "first_violation": row.first_violation,
    }
