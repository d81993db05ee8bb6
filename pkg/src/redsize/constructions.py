"""Quiver builders and the catalog of named quivers."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import BadIndex, Quiver, QuiverError, frame, mutate, quiver_from_arrows


class WrongDirection(QuiverError):
    pass


class EmptySubset(QuiverError):
    pass


class UnknownName(KeyError):
    pass


def triangular_extension(q1: Quiver, q2: Quiver, extra: Iterable[Sequence[int]] = ()) -> Quiver:
    """Glue ``q2`` after ``q1`` with arrows running only from ``q1`` into ``q2``.

    ``q2``'s vertices are renumbered ``n1 + 1 .. n1 + n2``; each connecting
    arrow ``(i, j, m)`` uses the global labels, so ``i <= n1 < j``.
    """
    n1, n2 = q1.n, q2.n
    n = n1 + n2
    b = [[0] * n for _ in range(n)]
    for i in range(n1):
        b[i][:n1] = q1.b[i]
    for i in range(n2):
        b[n1 + i][n1:] = q2.b[i]
    for arrow in extra:
        i, j, m = (int(x) for x in arrow)
        if not (1 <= i <= n and 1 <= j <= n):
            raise BadIndex(f"arrow {i}->{j} outside 1..{n}")
        if not (i <= n1 < j):
            raise WrongDirection(f"arrow {i}->{j} does not run from the first quiver into the second")
        if m < 1:
            raise QuiverError(f"multiplicity must be >= 1, got {m}")
        b[i - 1][j - 1] += m
        b[j - 1][i - 1] -= m
    return Quiver(b)


def disjoint_union(q1: Quiver, q2: Quiver) -> Quiver:
    return triangular_extension(q1, q2, ())


def induced_subquiver(q: Quiver, subset: Iterable[int]) -> Quiver:
    keep = sorted(set(int(v) for v in subset))
    if not keep:
        raise EmptySubset("induced subquiver needs at least one vertex")
    for v in keep:
        if not 1 <= v <= q.n:
            raise BadIndex(f"vertex {v} not in 1..{q.n}")
    return Quiver([[q.b[i - 1][j - 1] for j in keep] for i in keep])


def delete_vertex(q: Quiver, v: int) -> Quiver:
    return induced_subquiver(q, [u for u in range(1, q.n + 1) if u != v])


def is_connected(q: Quiver) -> bool:
    if q.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j, x in enumerate(q.b[i]):
            if x and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == q.n


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    quiver: Quiver
    provenance: str
    notes: dict = field(default_factory=dict)
    labels: tuple[str, ...] | None = None


MARKOV_ARROWS = [(1, 2, 2), (2, 3, 2), (3, 1, 2)]
X7_ARROWS = [
    (1, 2, 1), (2, 3, 2), (3, 1, 1),
    (1, 4, 1), (4, 5, 2), (5, 1, 1),
    (1, 6, 1), (6, 7, 2), (7, 1, 1),
]
MCKAY_ARROWS = [
    (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 1, 1),
    (1, 4, 2), (4, 2, 2), (3, 1, 2), (2, 5, 2), (5, 3, 2),
]


def _markov() -> Quiver:
    return quiver_from_arrows(3, MARKOV_ARROWS)


def _triext_fig3() -> Quiver:
    return triangular_extension(_markov(), _markov(), [(1, 4, 1)])


def _x7() -> Quiver:
    return quiver_from_arrows(7, X7_ARROWS)


def _universal3() -> tuple[Quiver, tuple[str, ...]]:
    # Three copies of one 6-vertex gadget (U, V, a, b, c, d), glued in a
    # triangle: copy k has U = hub k and V = hub k+1 (mod 3).
    # Gadget arrows: a->U, b->V, V->a, U->b, b=>a (x3), a=>d (x2), c=>b (x2),
    # a->c, d->c, d->b.
    hubs = [13, 14, 15]  # u, v, w
    arrows = []
    for k in range(3):
        c_, a, b_, d = 4 * k + 1, 4 * k + 2, 4 * k + 3, 4 * k + 4
        u_, v_ = hubs[k], hubs[(k + 1) % 3]
        arrows += [
            (a, u_, 1), (b_, v_, 1), (v_, a, 1), (u_, b_, 1),
            (b_, a, 3), (a, d, 2), (c_, b_, 2),
            (a, c_, 1), (d, c_, 1), (d, b_, 1),
        ]
    labels = tuple(str(i) for i in range(1, 13)) + ("u", "v", "w")
    return quiver_from_arrows(15, arrows), labels


def a_path(n: int) -> Quiver:
    """Linearly oriented path ``1 -> 2 -> ... -> n``."""
    if n < 1:
        raise BadIndex("path needs at least one vertex")
    return quiver_from_arrows(n, [(i, i + 1, 1) for i in range(1, n)])


def _build(name: str) -> CatalogEntry:
    if m := re.fullmatch(r"a_path_(\d+)", name):
        n = int(m.group(1))
        return CatalogEntry(
            name, a_path(n), "not from the paper: acyclic control family",
            {"admits_mgs": True, "red_size": n},
        )
    if name == "markov":
        return CatalogEntry(
            name, _markov(), "Figure: ideal triangulation of the once-punctured torus (right half)",
            {"admits_mgs": False, "admits_reddening": False, "red_size": 2, "unrestricted_red_size": 2},
        )
    if name == "triext_fig3":
        return CatalogEntry(
            name, _triext_fig3(), "Figure: a triangular extension (Markov by Markov, arrow 1->4)",
            {"admits_mgs": False, "red_size": 5, "unrestricted_red_size": 5, "components": [[1, 2, 3], [4, 5, 6]]},
        )
    if name == "x7":
        return CatalogEntry(
            name, _x7(), "Figure: the quiver X7",
            {"admits_mgs": False, "admits_reddening": False, "red_size": 6, "unrestricted_red_size": 6,
             "mutation_class_size": 2},
        )
    if name == "x7_mutated":
        return CatalogEntry(
            name, mutate(frame(_x7()), 1).quiver, "mutable part of X7 mutated at vertex 1",
            {"admits_mgs": False, "admits_reddening": False, "red_size": 6, "unrestricted_red_size": 6,
             "mutation_class_size": 2},
        )
    if name == "mckay":
        return CatalogEntry(
            name, quiver_from_arrows(5, MCKAY_ARROWS), "Figure: the McKay quiver",
            {"admits_mgs": False, "red_size": 4},
        )
    if name == "universal3":
        q, labels = _universal3()
        return CatalogEntry(
            name, q, "Figure: a 3-universal quiver (hubs u, v, w are vertices 13, 14, 15)",
            {"admits_reddening": False}, labels,
        )
    raise UnknownName(name)


CATALOG_NAMES = ("a_path_<n>", "markov", "triext_fig3", "x7", "x7_mutated", "mckay", "universal3")


def catalog(name: str) -> CatalogEntry:
    return _build(name.strip().lower())


def catalog_names() -> list[str]:
    return list(CATALOG_NAMES)
