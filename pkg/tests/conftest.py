import random

import pytest
from hypothesis import strategies as st

from redsize.core import Quiver

ACCEPTANCE_LINES: list[str] = []


def random_quiver(rng: random.Random, n: int, max_mult: int = 3, density: float = 0.6) -> Quiver:
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                m = rng.randint(1, max_mult)
                if rng.random() < 0.5:
                    m = -m
                b[i][j], b[j][i] = m, -m
    return Quiver(b)


@st.composite
def quivers(draw, min_n: int = 1, max_n: int = 5, max_mult: int = 3):
    n = draw(st.integers(min_n, max_n))
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(st.integers(-max_mult, max_mult))
            b[i][j], b[j][i] = m, -m
    return Quiver(b)


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number:2d}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
