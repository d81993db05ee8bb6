"""Quivers as skew-symmetric exchange matrices, framing, mutation and coloring.

Vertices are 1-indexed in every public function. Internally the matrices are
stored as tuples of tuples indexed from 0, so ``b[i - 1][j - 1]`` is the signed
number of arrows ``i -> j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]
Arrow = tuple[int, int, int]


class QuiverError(ValueError):
    """Base class for invalid quiver input."""


class BadIndex(QuiverError):
    pass


class LoopArrow(QuiverError):
    pass


class TwoCycle(QuiverError):
    pass


class BadPermutation(QuiverError):
    pass


class SignCoherenceViolation(RuntimeError):
    """A c-vector that is zero or has mixed signs.

    Never happens for states reached from a framed quiver; seeing it means the
    state was built by hand or the mutation code is broken.
    """


class Color(str, Enum):
    GREEN = "green"
    RED = "red"


def _freeze(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _check_exchange_matrix(b: Matrix) -> None:
    n = len(b)
    for i, row in enumerate(b):
        if len(row) != n:
            raise QuiverError("exchange matrix must be square")
        if row[i] != 0:
            raise LoopArrow(f"nonzero diagonal entry at vertex {i + 1}")
        for j in range(i + 1, n):
            if row[j] != -b[j][i]:
                raise QuiverError(f"exchange matrix not skew-symmetric at ({i + 1}, {j + 1})")


@dataclass(frozen=True)
class Quiver:
    """A quiver on mutable vertices ``1..n`` with no loops and no 2-cycles."""

    b: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", _freeze(self.b))
        _check_exchange_matrix(self.b)

    @property
    def n(self) -> int:
        return len(self.b)

    def entry(self, i: int, j: int) -> int:
        """Signed multiplicity of ``i -> j`` (1-indexed)."""
        _check_vertex(self.n, i)
        _check_vertex(self.n, j)
        return self.b[i - 1][j - 1]

    def arrows(self) -> list[Arrow]:
        return arrows_of(self)

    def __str__(self) -> str:
        parts = [f"{s}->{t}" if m == 1 else f"{s}={m}=>{t}" for s, t, m in arrows_of(self)]
        return f"Quiver(n={self.n}; {', '.join(parts) or 'no arrows'})"


@dataclass(frozen=True)
class ExtendedQuiver:
    """Exchange matrix together with its c-vectors (one row per mutable vertex).

    ``c[i][j]`` counts arrows ``i -> j'`` minus arrows ``j' -> i``. Frozen vertex
    labels never move, so column ``j`` always refers to the frozen copy of the
    original vertex ``j``.
    """

    b: Matrix
    c: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", _freeze(self.b))
        object.__setattr__(self, "c", _freeze(self.c))
        _check_exchange_matrix(self.b)
        if len(self.c) != len(self.b) or any(len(row) != len(self.b) for row in self.c):
            raise QuiverError("c-matrix must be n x n")

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def quiver(self) -> Quiver:
        return Quiver(self.b)

    def c_vector(self, i: int) -> tuple[int, ...]:
        _check_vertex(self.n, i)
        return self.c[i - 1]


def _check_vertex(n: int, k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
        raise BadIndex(f"vertex {k!r} not in 1..{n}")


def quiver_from_arrows(n: int, arrows: Iterable[Sequence[int]]) -> Quiver:
    """Build a quiver from ``(source, target, multiplicity)`` triples.

    Repeated groups with the same orientation accumulate.
    """
    if n < 0:
        raise BadIndex("vertex count must be nonnegative")
    b = [[0] * n for _ in range(n)]
    for arrow in arrows:
        if len(arrow) != 3:
            raise QuiverError(f"arrow must be (source, target, multiplicity), got {arrow!r}")
        s, t, m = (int(x) for x in arrow)
        _check_vertex(n, s)
        _check_vertex(n, t)
        if s == t:
            raise LoopArrow(f"loop at vertex {s}")
        if m < 1:
            raise QuiverError(f"multiplicity must be >= 1, got {m}")
        if b[s - 1][t - 1] < 0:
            raise TwoCycle(f"arrows given in both directions between {s} and {t}")
        b[s - 1][t - 1] += m
        b[t - 1][s - 1] -= m
    return Quiver(_freeze(b))


def arrows_of(q: Quiver | ExtendedQuiver) -> list[Arrow]:
    n = q.n
    return [(i + 1, j + 1, q.b[i][j]) for i in range(n) for j in range(n) if q.b[i][j] > 0]


def frame(q: Quiver) -> ExtendedQuiver:
    return ExtendedQuiver(q.b, _identity(q.n))


def mutate_matrices(b: Matrix, c: Matrix, k: int) -> tuple[Matrix, Matrix]:
    """Matrix mutation of ``(b, c)`` at 0-indexed ``k``; no validation.

    Hot path of the search, kept free of dataclass overhead.
    """
    n = len(b)
    bk = b[k]
    ck = c[k]
    new_b = []
    new_c = []
    for i in range(n):
        bi = b[i]
        if i == k:
            new_b.append(tuple(-x for x in bi))
            new_c.append(tuple(-x for x in c[i]))
            continue
        bik = bi[k]
        if bik == 0:
            new_b.append(bi)
            new_c.append(c[i])
            continue
        s = 1 if bik > 0 else -1
        row = []
        for j in range(n):
            if j == k:
                row.append(-bik)
            else:
                p = bik * bk[j]
                row.append(bi[j] + s * p if p > 0 else bi[j])
        new_b.append(tuple(row))
        crow = []
        for j, x in enumerate(c[i]):
            p = bik * ck[j]
            crow.append(x + s * p if p > 0 else x)
        new_c.append(tuple(crow))
    return tuple(new_b), tuple(new_c)


def mutate(e: ExtendedQuiver, k: int) -> ExtendedQuiver:
    _check_vertex(e.n, k)
    b, c = mutate_matrices(e.b, e.c, k - 1)
    # skip re-validation; mutation preserves skew-symmetry
    out = object.__new__(ExtendedQuiver)
    object.__setattr__(out, "b", b)
    object.__setattr__(out, "c", c)
    return out


def mutate_quiver(q: Quiver, k: int) -> Quiver:
    """Mutation of the mutable part only."""
    return mutate(ExtendedQuiver(q.b, _identity(q.n)), k).quiver


def row_color(row: Sequence[int]) -> Color:
    if any(x > 0 for x in row):
        if any(x < 0 for x in row):
            raise SignCoherenceViolation(f"mixed-sign c-vector {tuple(row)}")
        return Color.GREEN
    if any(x < 0 for x in row):
        return Color.RED
    raise SignCoherenceViolation("zero c-vector")


def vertex_color(e: ExtendedQuiver, i: int) -> Color:
    return row_color(e.c_vector(i))


def colors(e: ExtendedQuiver) -> tuple[Color, ...]:
    return tuple(row_color(row) for row in e.c)


def green_vertices(e: ExtendedQuiver) -> list[int]:
    return [i + 1 for i, col in enumerate(colors(e)) if col is Color.GREEN]


def red_count(e: ExtendedQuiver) -> int:
    return sum(col is Color.RED for col in colors(e))


# -- permutations and isomorphism ------------------------------------------------

Permutation = tuple[int, ...]


def check_permutation(sigma: Sequence[int], n: int) -> Permutation:
    """Validate ``sigma`` as a bijection of ``1..n`` given by its images.

    ``sigma[i - 1]`` is the image of vertex ``i``.
    """
    sigma = tuple(int(x) for x in sigma)
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise BadPermutation(f"{sigma!r} is not a permutation of 1..{n}")
    return sigma


def permutation_from_cycles(n: int, *cycles: Sequence[int]) -> Permutation:
    images = list(range(1, n + 1))
    for cyc in cycles:
        for pos, v in enumerate(cyc):
            _check_vertex(n, v)
            images[v - 1] = cyc[(pos + 1) % len(cyc)]
    return check_permutation(images, n)


def _relabel_matrix(m: Matrix, sigma: Permutation) -> Matrix:
    n = len(m)
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s - 1] = i
    return tuple(tuple(m[inv[a]][inv[col]] for col in range(n)) for a in range(n))


def relabel(q: Quiver, sigma: Sequence[int]) -> Quiver:
    """Return the quiver with ``b'[sigma(i)][sigma(j)] = b[i][j]``."""
    sigma = check_permutation(sigma, q.n)
    return Quiver(_relabel_matrix(q.b, sigma))


def relabel_extended(e: ExtendedQuiver, sigma: Sequence[int]) -> ExtendedQuiver:
    """Relabel mutable and frozen vertices simultaneously."""
    sigma = check_permutation(sigma, e.n)
    return ExtendedQuiver(_relabel_matrix(e.b, sigma), _relabel_matrix(e.c, sigma))


def _invariant(row: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(row))


def canonical_form(q: Quiver) -> tuple[Permutation, Matrix]:
    """Lexicographically minimal relabeling of ``q`` among degree-respecting orders.

    Vertices are first sorted by the multiset of their row entries; only
    orderings consistent with that sort are tried, with branch-and-bound on the
    strictly-lower triangle read row by row. Returns the permutation (old label
    -> new label) and the canonical matrix.
    """
    n = q.n
    b = q.b
    inv = [_invariant(row) for row in b]
    cell_of = sorted(set(inv))
    slots = sorted(range(n), key=lambda v: cell_of.index(inv[v]))
    slot_inv = [inv[v] for v in slots]

    best: list[tuple[int, ...]] | None = None
    best_order: list[int] | None = None
    order: list[int] = []
    rows: list[tuple[int, ...]] = []
    used = [False] * n

    def dfs(depth: int) -> None:
        nonlocal best, best_order
        if depth == n:
            if best is None or rows < best:
                best = list(rows)
                best_order = list(order)
            return
        want = slot_inv[depth]
        candidates = sorted(
            (tuple(b[v][u] for u in order), v)
            for v in range(n)
            if not used[v] and inv[v] == want
        )
        for row, v in candidates:
            if best is not None and rows + [row] > best[: depth + 1]:
                break
            used[v] = True
            order.append(v)
            rows.append(row)
            dfs(depth + 1)
            rows.pop()
            order.pop()
            used[v] = False

    dfs(0)
    assert best_order is not None or n == 0
    new_label = [0] * n
    for pos, v in enumerate(best_order or []):
        new_label[v] = pos + 1
    sigma = tuple(new_label)
    return sigma, _relabel_matrix(b, sigma) if n else ()


def canonical_key(q: Quiver) -> bytes:
    _, m = canonical_form(q)
    return json.dumps([q.n, m], separators=(",", ":")).encode()


def are_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    if q1.n != q2.n:
        return False
    if sorted(map(_invariant, q1.b)) != sorted(map(_invariant, q2.b)):
        return False
    return canonical_key(q1) == canonical_key(q2)


def find_isomorphism(q1: Quiver, q2: Quiver) -> Permutation | None:
    """A permutation ``sigma`` with ``relabel(q1, sigma) == q2``, if one exists."""
    if not are_isomorphic(q1, q2):
        return None
    s1, _ = canonical_form(q1)
    s2, _ = canonical_form(q2)
    inv2 = {v: i + 1 for i, v in enumerate(s2)}
    return tuple(inv2[s1[i]] for i in range(q1.n))
