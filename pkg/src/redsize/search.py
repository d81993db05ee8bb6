"""Bounded search for red-count lower bounds and random green walks.

The exhaustive search is breadth first. Children are generated in increasing
vertex order from a frontier kept in discovery order, so the first path that
reaches a state is the shortest one and, among those, the lexicographically
smallest. Revisits are pruned on the exact ``(b, c)`` pair: a state seen at a
shallower level has at least as much depth left, so nothing is lost.
"""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import Matrix, Quiver, frame, mutate_matrices
from .rng import SplitMix64, derive_seeds
from .sequences import Mode, classify_sequence

DEFAULT_DEPTH = 10
DEFAULT_NODE_BUDGET = 10_000_000

State = tuple[Matrix, Matrix]
# (level, states visited, frontier size, current best)
Progress = Callable[[int, int, int, int], None]


@dataclass
class SearchResult:
    best_red_count: int
    witness: tuple[int, ...]
    last_green_witnesses: dict[int, tuple[int, ...] | None]
    depth: int
    mode: Mode
    exhausted: bool
    states_visited: int = 0
    budget_exceeded: bool = False
    depth_reached: int = 0


def _greens(c: Matrix) -> list[int]:
    # sign coherence: a row with a positive entry is green
    return [i for i, row in enumerate(c) if max(row) > 0]


def _expand(frontier: Sequence[tuple[State, tuple[int, ...]]], green_only: bool) -> list[tuple[State, tuple[int, ...]]]:
    out = []
    for (b, c), path in frontier:
        ks = _greens(c) if green_only else range(len(b))
        for k in ks:
            out.append((mutate_matrices(b, c, k), path + (k + 1,)))
    return out


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _bfs(
    q: Quiver,
    depth: int,
    mode: Mode,
    visit: Callable[[State, tuple[int, ...]], bool],
    node_budget: int,
    workers: int = 1,
    progress: Callable[[int, int, int], None] | None = None,
) -> tuple[bool, bool, int, int]:
    """Walk states level by level, calling ``visit`` on each new one.

    ``visit`` returns True to stop early. Returns ``(stopped_early,
    budget_exceeded, states_visited, levels_completed)``.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    green_only = mode is Mode.GREEN
    e = frame(q)
    start = (e.b, e.c)
    seen = {start}
    if visit(start, ()):
        return True, False, 1, 0
    frontier = [(start, ())]
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for level in range(1, depth + 1):
            if pool is not None and len(frontier) >= 4 * workers:
                parts = pool.map(_expand, _chunks(frontier, workers), [green_only] * workers)
                children = [child for part in parts for child in part]
            else:
                children = _expand(frontier, green_only)
            nxt = []
            for state, path in children:
                if state in seen:
                    continue
                if len(seen) >= node_budget:
                    return False, True, len(seen), level - 1
                seen.add(state)
                if visit(state, path):
                    return True, False, len(seen), level
                nxt.append((state, path))
            if progress is not None:
                progress(level, len(seen), len(nxt))
            frontier = nxt
            if not frontier:
                return False, False, len(seen), depth
    finally:
        if pool is not None:
            pool.shutdown()
    return False, False, len(seen), depth


def exhaustive_red_search(
    q: Quiver,
    depth: int = DEFAULT_DEPTH,
    mode: Mode | str = Mode.GREEN,
    node_budget: int = DEFAULT_NODE_BUDGET,
    stop_at: int | None = None,
    workers: int = 1,
    progress: Progress | None = None,
) -> SearchResult:
    """Largest red count over all sequences of length <= ``depth``.

    In green mode only green vertices are branched on. The result is a lower
    bound for the red size (green mode) or the unrestricted red size. The
    search stops as soon as the best count reaches ``stop_at`` (default
    ``n``, which cannot be beaten, so stopping there keeps the result exact).
    """
    mode = Mode.parse(mode)
    n = q.n
    target = n if stop_at is None else min(stop_at, n)
    best = [0, ()]
    last_green: dict[int, tuple[int, ...] | None] = {v: None for v in range(1, n + 1)}

    def visit(state: State, path: tuple[int, ...]) -> bool:
        greens = _greens(state[1])
        reds = n - len(greens)
        if reds > best[0]:
            best[0], best[1] = reds, path
        if len(greens) == 1 and last_green[greens[0] + 1] is None:
            last_green[greens[0] + 1] = path
        return best[0] >= target

    report = None if progress is None else (lambda lv, st, fr: progress(lv, st, fr, best[0]))
    stopped, over, visited, levels = _bfs(q, depth, mode, visit, node_budget, workers, report)
    return SearchResult(
        best_red_count=best[0],
        witness=tuple(best[1]),
        last_green_witnesses=last_green,
        depth=depth,
        mode=mode,
        exhausted=not over and (not stopped or best[0] == n),
        states_visited=visited,
        budget_exceeded=over,
        depth_reached=levels,
    )


@dataclass
class LastGreenResult:
    witnesses: dict[int, tuple[int, ...] | None]
    depth: int
    mode: Mode
    exhausted: bool
    budget_exceeded: bool = False
    states_visited: int = 0
    seeded: frozenset[int] = frozenset()

    def achievable(self) -> set[int]:
        return {v for v, w in self.witnesses.items() if w is not None}


def last_green_achievability(
    q: Quiver,
    depth: int = DEFAULT_DEPTH,
    mode: Mode | str = Mode.GREEN,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seeds: Iterable[Sequence[int]] = (),
    workers: int = 1,
    progress: Progress | None = None,
) -> LastGreenResult:
    """For each vertex, a sequence of length <= ``depth`` leaving only it green.

    ``seeds`` are candidate sequences checked by replay first; vertices they
    settle are not searched for. A ``None`` entry means "not found within the
    bound", never "impossible".
    """
    mode = Mode.parse(mode)
    n = q.n
    found: dict[int, tuple[int, ...] | None] = {v: None for v in range(1, n + 1)}
    seeded = set()
    for steps in seeds:
        steps = tuple(steps)
        if len(steps) > depth:
            continue
        rep = classify_sequence(q, steps)
        if mode is Mode.GREEN and not rep.is_green_sequence:
            continue
        if len(rep.final_green_set) == 1:
            (v,) = rep.final_green_set
            if found[v] is None:
                found[v] = steps
                seeded.add(v)
    missing = {v for v, w in found.items() if w is None}
    if not missing:
        return LastGreenResult(found, depth, mode, True, seeded=frozenset(seeded))

    def visit(state: State, path: tuple[int, ...]) -> bool:
        greens = _greens(state[1])
        if len(greens) == 1 and greens[0] + 1 in missing:
            found[greens[0] + 1] = path
            missing.discard(greens[0] + 1)
        return not missing

    report = None if progress is None else (lambda lv, st, fr: progress(lv, st, fr, n - len(missing)))
    _, over, visited, _ = _bfs(q, depth, mode, visit, node_budget, workers, report)
    return LastGreenResult(
        found, depth, mode, exhausted=not over, budget_exceeded=over,
        states_visited=visited, seeded=frozenset(seeded),
    )


@dataclass
class WalkResult:
    seed: int
    steps_taken: int
    hit_step: int | None
    trajectory: list[int]
    steps: list[int] = field(default_factory=list)
    final_green_set: list[int] = field(default_factory=list)

    @property
    def final_red_count(self) -> int:
        return self.trajectory[-1]


def random_green_walk(q: Quiver, seed: int, max_steps: int, stop_on_hit: bool = True) -> WalkResult:
    """Mutate at uniformly random green vertices starting from the framed quiver.

    ``trajectory[t]`` is the red count after ``t`` steps. The walk ends after
    ``max_steps`` steps, when every vertex is red, or (with ``stop_on_hit``)
    as soon as at most one vertex is green.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    n = q.n
    e = frame(q)
    b, c = e.b, e.c
    gen = SplitMix64(seed)
    greens = _greens(c)
    trajectory = [n - len(greens)]
    hit = 0 if trajectory[0] >= n - 1 else None
    steps: list[int] = []
    while len(steps) < max_steps and greens and not (stop_on_hit and hit is not None):
        k = gen.choice(greens)
        b, c = mutate_matrices(b, c, k)
        steps.append(k + 1)
        greens = _greens(c)
        trajectory.append(n - len(greens))
        if hit is None and trajectory[-1] >= n - 1:
            hit = len(steps)
    return WalkResult(seed, len(steps), hit, trajectory, steps, [g + 1 for g in greens])


@dataclass
class EnsembleResult:
    seed: int
    trials: int
    max_steps: int
    hits: int
    hit_fraction: float
    hit_step_quantiles: dict[str, float] | None
    missed_seeds: list[int]
    walks: list[WalkResult] = field(repr=False, default_factory=list)


def _walk_args(args):
    return random_green_walk(*args)


def walk_ensemble(
    q: Quiver,
    trials: int,
    seed: int,
    max_steps: int,
    stop_on_hit: bool = True,
    workers: int = 1,
) -> EnsembleResult:
    """Run ``trials`` independent walks with seeds drawn from ``seed``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    jobs = [(q, s, max_steps, stop_on_hit) for s in derive_seeds(seed, trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            walks = list(pool.map(_walk_args, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        walks = [random_green_walk(*job) for job in jobs]
    hit_steps = sorted(w.hit_step for w in walks if w.hit_step is not None)
    quantiles = None
    if hit_steps:
        quantiles = {
            "min": float(hit_steps[0]),
            "median": float(statistics.median(hit_steps)),
            "p90": float(hit_steps[min(len(hit_steps) - 1, -(-9 * len(hit_steps) // 10) - 1)]),
            "max": float(hit_steps[-1]),
            "mean": statistics.fmean(hit_steps),
        }
    return EnsembleResult(
        seed=seed,
        trials=trials,
        max_steps=max_steps,
        hits=len(hit_steps),
        hit_fraction=len(hit_steps) / trials,
        hit_step_quantiles=quantiles,
        missed_seeds=[w.seed for w in walks if w.hit_step is None],
        walks=walks,
    )
