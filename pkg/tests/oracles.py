"""Reference implementations kept independent of the package internals."""

from __future__ import annotations

import itertools
from collections import Counter


def arrow_mutation(n: int, arrows: Counter, k: int) -> Counter:
    """Three-step arrow rule on a framed quiver.

    Vertices are ('m', i) for mutable and ('f', i) for frozen; ``arrows`` maps
    (source, target) to multiplicity.
    """
    kv = ("m", k)
    new = Counter(arrows)
    # 1. a new arrow i -> j for every 2-path i -> k -> j
    ins = [(s, m) for (s, t), m in arrows.items() if t == kv]
    outs = [(t, m) for (s, t), m in arrows.items() if s == kv]
    for s, m1 in ins:
        for t, m2 in outs:
            new[(s, t)] += m1 * m2
    # 2. reverse arrows at k
    rev = Counter()
    for (s, t), m in new.items():
        if s == kv:
            rev[(t, s)] += m
        elif t == kv:
            rev[(t, s)] += m
        else:
            rev[(s, t)] += m
    # 3. cancel 2-cycles and drop frozen-frozen arrows
    out = Counter()
    for (s, t), m in rev.items():
        if s[0] == "f" and t[0] == "f":
            continue
        net = m - rev.get((t, s), 0)
        if net > 0:
            out[(s, t)] = net
    return out


def framed_arrows(b) -> Counter:
    n = len(b)
    arrows = Counter()
    for i in range(n):
        for j in range(n):
            if b[i][j] > 0:
                arrows[(("m", i + 1), ("m", j + 1))] = b[i][j]
        arrows[(("m", i + 1), ("f", i + 1))] = 1
    return arrows


def arrows_to_matrices(n: int, arrows: Counter):
    b = [[0] * n for _ in range(n)]
    c = [[0] * n for _ in range(n)]
    for (s, t), m in arrows.items():
        if s[0] == "m" and t[0] == "m":
            b[s[1] - 1][t[1] - 1] += m
            b[t[1] - 1][s[1] - 1] -= m
        elif s[0] == "m":
            c[s[1] - 1][t[1] - 1] += m
        else:
            c[t[1] - 1][s[1] - 1] -= m
    return [tuple(r) for r in b], [tuple(r) for r in c]


def brute_isomorphic(b1, b2) -> bool:
    n = len(b1)
    if n != len(b2):
        return False
    for perm in itertools.permutations(range(n)):
        if all(b2[perm[i]][perm[j]] == b1[i][j] for i in range(n) for j in range(n)):
            return True
    return False


def plain_mutation(b, k):
    """Textbook matrix mutation on a bare exchange matrix, 0-indexed ``k``."""
    n = len(b)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2
    return out


def brute_mutation_class(b, cap: int = 500) -> list:
    """Closure under mutation, deduplicated by brute-force isomorphism."""
    reps = [b]
    queue = [b]
    while queue:
        cur = queue.pop(0)
        for k in range(len(cur)):
            nxt = plain_mutation(cur, k)
            if not any(brute_isomorphic(nxt, r) for r in reps):
                reps.append(nxt)
                queue.append(nxt)
                if len(reps) > cap:
                    raise RuntimeError("class too large for the oracle")
    return reps


def brute_best_red(b, depth: int, green_only: bool):
    """Unpruned enumeration of every sequence up to ``depth`` via the arrow rule."""
    n = len(b)
    best = 0
    stack = [(framed_arrows(b), 0)]
    while stack:
        arrows, d = stack.pop()
        reds = {t[1] for (s, t) in arrows if s[0] == "f"}
        best = max(best, len(reds))
        if d == depth:
            continue
        for k in range(1, n + 1):
            if green_only and k in reds:
                continue
            stack.append((arrow_mutation(n, arrows, k), d + 1))
    return best
