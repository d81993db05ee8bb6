"""Exit criteria. Each test prints one PASS/FAIL line (also listed in the
terminal summary) and asserts at the stated tolerance."""

import itertools
import random
import time

from redsize.constructions import catalog, induced_subquiver, is_connected
from redsize.core import frame, mutate, relabel, vertex_color
from redsize.mutclass import ClassStatus, enumerate_mutation_class
from redsize.search import exhaustive_red_search, walk_ensemble
from redsize.sequences import PAPER_TABLES, classify_sequence, verify_paper_tables

from .conftest import random_quiver
from .oracles import arrow_mutation, arrows_to_matrices, framed_arrows


def _rows(table):
    return [r for r in verify_paper_tables() if r.table == table]


def test_criterion_01_triangular_extension_table(record_criterion):
    t0 = time.perf_counter()
    rows = _rows("triangular-extension")
    elapsed = time.perf_counter() - t0
    ok = (
        len(rows) == 6
        and all(r.is_green_sequence and r.final_green_set == {r.expected_green} for r in rows)
        and [r.expected_green for r in rows] == [1, 2, 3, 4, 5, 6]
        and elapsed < 1.0
    )
    record_criterion(1, "Figure-3 table replay", ok, f"{sum(r.passed for r in rows)}/6 rows, {elapsed:.3f}s")
    assert ok


def test_criterion_02_x7_tables(record_criterion):
    t0 = time.perf_counter()
    x7 = _rows("x7")
    mu = _rows("mu1-x7")
    elapsed = time.perf_counter() - t0
    ok = (
        [r.final_green_set for r in x7] == [{1}, {6}, {7}]
        and [r.final_green_set for r in mu] == [{1}, {6}, {7}]
        and all(r.is_green_sequence for r in x7 + mu)
        and catalog("x7_mutated").quiver == mutate(frame(catalog("x7").quiver), 1).quiver
        and elapsed < 1.0
    )
    record_criterion(2, "X7 and mu1(X7) table replay", ok, f"{elapsed:.3f}s")
    assert ok


def test_criterion_03_x7_automorphism_closure(record_criterion):
    q = catalog("x7").quiver
    petals = [(2, 3), (4, 5), (6, 7)]
    autos = []
    for order in itertools.permutations(petals):
        images = [1] * 7
        for (src_a, src_b), (dst_a, dst_b) in zip(petals, order):
            images[src_a - 1], images[src_b - 1] = dst_a, dst_b
        autos.append(tuple(images))
    witnesses = {}
    for sigma in autos:
        assert relabel(q, sigma) == q
        for steps, vertex in next(e for _, name, e in PAPER_TABLES if name == "x7"):
            mapped = tuple(sigma[k - 1] for k in steps)
            rep = classify_sequence(q, mapped)
            if rep.is_green_sequence and rep.final_green_set == {sigma[vertex - 1]}:
                witnesses.setdefault(sigma[vertex - 1], mapped)
    ok = set(witnesses) == set(range(1, 8))
    record_criterion(3, "every X7 vertex is a last green vertex", ok, f"covered {sorted(witnesses)}")
    assert ok


def test_criterion_04_mckay(record_criterion):
    q = catalog("mckay").quiver
    rep = classify_sequence(q, (1, 4, 2, 5, 3))
    ok = rep.is_green_sequence and rep.final_green_set == {2} and rep.final_red_count == 4
    record_criterion(4, "McKay sequence leaves {2} green, red count 4", ok)
    assert ok


def test_criterion_05_mutation_classes(record_criterion):
    sizes = {}
    ok = True
    for name, expected in (("x7", 2), ("markov", 1)):
        t0 = time.perf_counter()
        res = enumerate_mutation_class(catalog(name).quiver)
        elapsed = time.perf_counter() - t0
        sizes[name] = (res.size, round(elapsed, 3))
        ok = ok and res.status is ClassStatus.COMPLETE and res.size == expected and elapsed < 10
    record_criterion(5, "mutation class sizes X7=2, Markov=1", ok, str(sizes))
    assert ok


def test_criterion_06_search_paper_values(record_criterion):
    t0 = time.perf_counter()
    got = {}
    for name, depth in (("markov", 8), ("triext_fig3", 7), ("x7", 6)):
        q = catalog(name).quiver
        res = exhaustive_red_search(q, depth, "green")
        rep = classify_sequence(q, res.witness)
        assert rep.is_green_sequence and rep.final_red_count == res.best_red_count
        got[name] = res.best_red_count
    elapsed = time.perf_counter() - t0
    ok = got == {"markov": 2, "triext_fig3": 5, "x7": 6} and elapsed < 60
    record_criterion(6, "search reproduces 2 / 5 / 6", ok, f"{got}, {elapsed:.2f}s")
    assert ok


def _random_connected(rng, n):
    while True:
        q = random_quiver(rng, n, max_mult=3, density=0.7)
        if is_connected(q):
            return q


def test_criterion_07_small_quivers(record_criterion):
    rng = random.Random(5101)
    t0 = time.perf_counter()
    failures = []
    for idx in range(200):
        n = rng.randint(1, 4)
        q = _random_connected(rng, n)
        res = exhaustive_red_search(q, 12, "green", stop_at=n - 1)
        if res.best_red_count < n - 1:
            failures.append((idx, q.b, res.best_red_count, res.budget_exceeded))
            continue
        assert classify_sequence(q, res.witness).final_red_count == res.best_red_count
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    record_criterion(7, "|V| <= 4 implies red count >= |V|-1 (200 quivers)", ok,
                     f"{len(failures)} failures, {elapsed:.2f}s")
    assert ok, failures


def test_criterion_08_invariant_fuzz(record_criterion):
    rng = random.Random(8080)
    steps = oracle_steps = 0
    while steps < 10_000:
        n = rng.randint(1, 6)
        q = random_quiver(rng, n)
        e = frame(q)
        use_oracle = n <= 5
        arrows = framed_arrows(q.b)
        for _ in range(rng.randint(1, 8)):
            k = rng.randint(1, n)
            nxt = mutate(e, k)
            assert all(nxt.b[i][j] == -nxt.b[j][i] for i in range(n) for j in range(n))
            assert mutate(nxt, k) == e
            for row in nxt.c:
                assert any(row) and (min(row) >= 0 or max(row) <= 0)
            for i in range(1, n + 1):
                vertex_color(nxt, i)
            if use_oracle:
                arrows = arrow_mutation(n, arrows, k)
                b, c = arrows_to_matrices(n, arrows)
                assert (tuple(b), tuple(c)) == (nxt.b, nxt.c)
                oracle_steps += 1
            e = nxt
            steps += 1
    ok = steps >= 10_000 and oracle_steps > 0
    record_criterion(8, "mutation invariants under fuzz", ok, f"{steps} steps, {oracle_steps} oracle-checked")
    assert ok


def test_criterion_09_markov_random_walks(record_criterion):
    t0 = time.perf_counter()
    res = walk_ensemble(catalog("markov").quiver, trials=100, seed=2021, max_steps=50)
    elapsed = time.perf_counter() - t0
    ok = res.hit_fraction == 1.0 and elapsed < 10
    record_criterion(9, "Markov green walks reach red count 2", ok,
                     f"hit fraction {res.hit_fraction}, missed seeds {res.missed_seeds}, {elapsed:.2f}s")
    assert ok


def test_criterion_10_strict_superadditivity(record_criterion):
    q = catalog("triext_fig3").quiver
    whole = exhaustive_red_search(q, 7, "green").best_red_count
    parts = [exhaustive_red_search(induced_subquiver(q, part), 7, "green").best_red_count
             for part in ([1, 2, 3], [4, 5, 6])]
    ok = whole == 5 and parts == [2, 2] and whole > sum(parts)
    record_criterion(10, "Red(Q) > Red(Q1) + Red(Q2) on the Figure-3 quiver", ok, f"{whole} > {parts[0]} + {parts[1]}")
    assert ok
