from __future__ import annotations

import random

import pytest

from homfilter.corpus import random_colored_graph
from homfilter.graph import ColoredGraph


@pytest.fixture
def triangle() -> ColoredGraph:
    return ColoredGraph.colorful(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3() -> ColoredGraph:
    return ColoredGraph.colorful(3, [(0, 1), (1, 2)])


def random_hosts(S: ColoredGraph, count: int, seed: int = 0, max_n: int = 7, p: float = 0.5):
    rng = random.Random(seed)
    return [
        random_colored_graph(rng, rng.randint(1, max_n), S.color_set, p, color_set=S.color_set)
        for _ in range(count)
    ]


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, title)(ok, detail)``."""
    store = request.config.stash.setdefault(_ACCEPTANCE, {})

    def start(number: int, title: str):
        store[number] = (title, False, "did not finish")

        def finish(ok: bool, detail: str = "") -> bool:
            store[number] = (title, bool(ok), detail)
            return ok

        return finish

    return start


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(_ACCEPTANCE, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(store):
        title, ok, detail = store[number]
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
