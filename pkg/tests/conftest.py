from itertools import combinations

import pytest

from friendstats import fixtures
from friendstats.graph import Graph


def all_graphs(n):
    """Every labelled simple graph on ``n`` nodes."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def is_connected(g):
    if g.n == 0:
        return True
    seen, stack = {0}, [0]
    while stack:
        for j in g.neighbors(stack.pop()):
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == g.n


@pytest.fixture
def network1():
    return fixtures.network1()


@pytest.fixture
def network2():
    return fixtures.network2()


@pytest.fixture
def network3():
    return fixtures.network3()


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {detail}")
