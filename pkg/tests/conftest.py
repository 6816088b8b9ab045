import functools
import itertools

import pytest

from dyckwreath.search import search_witness

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def found_witness(k, variant):
    result = search_witness(k, variant, deterministic=True)
    assert not result.exhausted, f"no {variant} witness found for k={k}"
    return result.witness


@pytest.fixture(scope="session")
def witness():
    return found_witness


def brute_ne_paths(origin, end, upper):
    """All N/E words from origin to end, by filtering every word of the right length."""
    (x1, y1), (x2, y2) = origin, end
    alpha, beta = y2 - y1, x2 - x1
    if alpha < 0 or beta < 0:
        return []
    out = []
    for word in itertools.product("NE", repeat=alpha + beta):
        if word.count("E") != beta:
            continue
        x, y, ok = x1, y1, x1 <= y1 or not upper
        for s in word:
            x, y = (x, y + 1) if s == "N" else (x + 1, y)
            ok = ok and (x <= y or not upper)
        if ok:
            out.append("".join(word))
    return out


@pytest.fixture
def ne_oracle():
    return brute_ne_paths


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
