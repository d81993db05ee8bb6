"""Applying and classifying mutation sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .core import (
    BadIndex,
    Color,
    ExtendedQuiver,
    Quiver,
    frame,
    mutate,
    red_count,
    vertex_color,
)


class Mode(str, Enum):
    GREEN = "green"
    ANY = "any"

    @classmethod
    def parse(cls, value: "str | Mode") -> "Mode":
        if isinstance(value, Mode):
            return value
        aliases = {"green": cls.GREEN, "greenonly": cls.GREEN, "any": cls.ANY, "unrestricted": cls.ANY}
        try:
            return aliases[value.strip().lower().replace("_", "").replace("-", "")]
        except KeyError:
            raise ValueError(f"unknown mode {value!r}; expected 'green' or 'any'") from None


class NotGreenAtStep(Exception):
    """Green-only application hit a red vertex. ``step`` is 1-based."""

    def __init__(self, step: int, vertex: int) -> None:
        super().__init__(f"step {step} mutates vertex {vertex}, which is red")
        self.step = step
        self.vertex = vertex


@dataclass(frozen=True)
class MutationSequence:
    steps: tuple[int, ...]
    mode: Mode = Mode.GREEN

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(int(k) for k in self.steps))
        object.__setattr__(self, "mode", Mode.parse(self.mode))


@dataclass(frozen=True)
class SequenceReport:
    steps: tuple[int, ...]
    is_green_sequence: bool
    first_violation: int | None
    final_green_set: frozenset[int]
    final_red_count: int
    is_maximal_green: bool
    is_reddening: bool
    final_state: ExtendedQuiver = field(repr=False)


def _check_steps(n: int, steps: Iterable[int]) -> tuple[int, ...]:
    steps = tuple(steps)
    for pos, k in enumerate(steps, start=1):
        if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
            raise BadIndex(f"step {pos}: vertex {k!r} not in 1..{n}")
    return steps


def apply_sequence(e: ExtendedQuiver, seq: MutationSequence | Sequence[int], mode: Mode | str | None = None) -> ExtendedQuiver:
    """Mutate ``e`` along ``seq`` left to right.

    In green mode every step must hit a currently green vertex, otherwise
    :class:`NotGreenAtStep` is raised.
    """
    if isinstance(seq, MutationSequence):
        steps, seq_mode = seq.steps, seq.mode
    else:
        steps, seq_mode = tuple(seq), Mode.GREEN
    mode = Mode.parse(mode) if mode is not None else seq_mode
    steps = _check_steps(e.n, steps)
    for pos, k in enumerate(steps, start=1):
        if mode is Mode.GREEN and vertex_color(e, k) is not Color.GREEN:
            raise NotGreenAtStep(pos, k)
        e = mutate(e, k)
    return e


def classify_from(e: ExtendedQuiver, steps: Sequence[int]) -> SequenceReport:
    steps = _check_steps(e.n, steps)
    first_violation = None
    for pos, k in enumerate(steps, start=1):
        if first_violation is None and vertex_color(e, k) is not Color.GREEN:
            first_violation = pos
        e = mutate(e, k)
    greens = frozenset(i for i in range(1, e.n + 1) if vertex_color(e, i) is Color.GREEN)
    reds = red_count(e)
    is_green = first_violation is None
    return SequenceReport(
        steps=steps,
        is_green_sequence=is_green,
        first_violation=first_violation,
        final_green_set=greens,
        final_red_count=reds,
        is_maximal_green=is_green and reds == e.n,
        is_reddening=reds == e.n,
        final_state=e,
    )


def classify_sequence(q: Quiver, steps: Sequence[int]) -> SequenceReport:
    """Run ``steps`` on the framed quiver regardless of colors and report.

    A red-vertex mutation is recorded in ``first_violation`` and application
    continues.
    """
    return classify_from(frame(q), steps)


@dataclass(frozen=True)
class TableRow:
    table: str
    steps: tuple[int, ...]
    expected_green: int
    passed: bool
    is_green_sequence: bool
    final_green_set: frozenset[int]
    first_violation: int | None


# (table id, catalog name, [(sequence, remaining green vertex), ...])
PAPER_TABLES: list[tuple[str, str, list[tuple[tuple[int, ...], int]]]] = [
    (
        "triangular-extension",
        "triext_fig3",
        [
            ((3, 4, 1, 2, 4, 6, 5), 1),
            ((1, 4, 2, 3, 5, 4, 6, 5, 6, 2, 5), 2),
            ((3, 2, 1, 4, 5, 3, 6, 5, 6, 3, 5, 3, 5, 6), 3),
            ((3, 1, 4, 2, 6, 5), 4),
            ((3, 1, 4, 2, 6, 5, 4), 5),
            ((6, 5, 4, 2, 3, 1, 3, 4, 1, 6, 3, 4), 6),
        ],
    ),
    (
        "x7",
        "x7",
        [
            ((2, 4, 6, 3, 5, 7), 1),
            ((2, 4, 5, 3, 7, 1, 3, 5, 2, 1, 4, 3, 5, 1), 6),
            ((1, 3, 2, 3, 5, 2, 3, 6, 4, 2, 6, 4, 3, 1, 2, 4, 5), 7),
        ],
    ),
    (
        "mu1-x7",
        "x7_mutated",
        [
            ((3, 5, 7, 2, 4, 6, 3, 5, 7), 1),
            ((1, 2, 4, 5, 3, 7, 1, 3, 5, 2, 1, 4, 3, 5), 6),
            ((3, 2, 3, 5, 2, 3, 6, 4, 2, 6, 4, 3, 1, 2, 4, 5, 2), 7),
        ],
    ),
    (
        "mckay",
        "mckay",
        [((1, 4, 2, 5, 3), 2)],
    ),
]


def verify_paper_tables() -> list[TableRow]:
    from .constructions import catalog

    rows = []
    for table, name, entries in PAPER_TABLES:
        q = catalog(name).quiver
        for steps, vertex in entries:
            rep = classify_sequence(q, steps)
            rows.append(
                TableRow(
                    table=table,
                    steps=steps,
                    expected_green=vertex,
                    passed=rep.is_green_sequence and rep.final_green_set == {vertex},
                    is_green_sequence=rep.is_green_sequence,
                    final_green_set=rep.final_green_set,
                    first_violation=rep.first_violation,
                )
            )
    return rows
