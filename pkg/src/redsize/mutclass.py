"""Mutation classes up to isomorphism."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import Quiver, canonical_form, canonical_key, mutate_quiver


class ClassStatus(str, Enum):
    COMPLETE = "complete"
    LIMIT_EXCEEDED = "limit_exceeded"
    INFINITE_DETECTED = "infinite_detected"


class MutationType(str, Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


@dataclass
class MutationClassResult:
    representatives: list[tuple[bytes, Quiver]]
    status: ClassStatus
    witness: Quiver | None = None  # member that triggered INFINITE_DETECTED

    @property
    def size(self) -> int:
        return len(self.representatives)

    def keys(self) -> set[bytes]:
        return {k for k, _ in self.representatives}


def _components(q: Quiver) -> list[list[int]]:
    left = set(range(q.n))
    comps = []
    while left:
        stack = [left.pop()]
        comp = list(stack)
        while stack:
            i = stack.pop()
            for j in [j for j in left if q.b[i][j]]:
                left.discard(j)
                comp.append(j)
                stack.append(j)
        comps.append(comp)
    return comps


def _has_heavy_arrow(q: Quiver) -> bool:
    # A connected quiver on >= 3 vertices with a multiplicity >= 3 anywhere in
    # its class is of infinite type (Felikson-Shapiro-Tumarkin classification).
    for comp in _components(q):
        if len(comp) >= 3 and any(abs(q.b[i][j]) >= 3 for i in comp for j in comp):
            return True
    return False


def enumerate_mutation_class(q: Quiver, limit: int = 10_000) -> MutationClassResult:
    """Breadth-first closure under mutation, one representative per iso class.

    Representatives are stored in canonical labeling, in BFS discovery order.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    start = Quiver(canonical_form(q)[1])
    reps = [(canonical_key(start), start)]
    seen = {reps[0][0]}
    if _has_heavy_arrow(start):
        return MutationClassResult(reps, ClassStatus.INFINITE_DETECTED, start)
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for k in range(1, cur.n + 1):
            nxt = mutate_quiver(cur, k)
            key = canonical_key(nxt)
            if key in seen:
                continue
            canon = Quiver(canonical_form(nxt)[1])
            if _has_heavy_arrow(canon):
                return MutationClassResult(reps, ClassStatus.INFINITE_DETECTED, canon)
            if len(reps) >= limit:
                return MutationClassResult(reps, ClassStatus.LIMIT_EXCEEDED)
            seen.add(key)
            reps.append((key, canon))
            queue.append(canon)
    return MutationClassResult(reps, ClassStatus.COMPLETE)


def is_finite_mutation_type(q: Quiver, limit: int = 10_000) -> MutationType:
    status = enumerate_mutation_class(q, limit).status
    return {
        ClassStatus.COMPLETE: MutationType.FINITE,
        ClassStatus.INFINITE_DETECTED: MutationType.INFINITE,
        ClassStatus.LIMIT_EXCEEDED: MutationType.UNKNOWN,
    }[status]
