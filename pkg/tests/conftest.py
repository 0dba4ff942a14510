import itertools

import numpy as np
import pytest

from modgray.codes import LinearCode


def brute_span(rows, m):
    """Additive closure of the rows in Z_m^n (independent of any elimination)."""
    rows = [tuple(int(x) % m for x in r) for r in rows]
    n = len(rows[0]) if rows else 0
    seen = {(0,) * n}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for r in rows:
                c = tuple((a + b) % m for a, b in zip(w, r))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def brute_kernel(words, m, n):
    """All x in Z_m^n orthogonal to every word."""
    words = list(words)
    out = set()
    for x in itertools.product(range(m), repeat=n):
        if all(sum(a * b for a, b in zip(x, w)) % m == 0 for w in words):
            out.add(x)
    return out


def as_set(arr):
    return {tuple(int(x) for x in row) for row in np.asarray(arr)}


def random_code(rng, p, s, n, max_rows=None):
    r = int(rng.integers(1, (max_rows or n + 1) + 1))
    return LinearCode.from_rows(rng.integers(0, p**s, (r, n)), p, s)


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


OCTOCODE = [
    [5, 7, 5, 6, 1, 0, 0, 0],
    [5, 0, 7, 5, 6, 1, 0, 0],
    [5, 0, 0, 7, 5, 6, 1, 0],
    [5, 0, 0, 0, 7, 5, 6, 1],
]

# the printed 4x16 image matrix, typed independently of the fixture file
OCTOCODE_IMAGE = [
    [3, 3, 3, 0, 1, 0, 0, 0, 1, 3, 1, 2, 1, 0, 0, 0],
    [3, 0, 3, 3, 0, 1, 0, 0, 1, 0, 3, 1, 2, 1, 0, 0],
    [3, 0, 0, 3, 3, 0, 1, 0, 1, 0, 0, 3, 1, 2, 1, 0],
    [3, 0, 0, 0, 3, 3, 0, 1, 1, 0, 0, 0, 3, 1, 2, 1],
]

# printed map tables, u -> two-digit image string
ETA_PRINTED = {
    2: ["00", "01", "11", "10"],
    3: ["00", "11", "02", "13", "22", "33", "20", "31"],
    4: ["00", "11", "22", "33", "04", "15", "26", "37",
        "44", "55", "66", "77", "40", "51", "62", "73"],
}
XI_PRINTED = {
    2: ["00", "10", "11", "01"],
    3: ["00", "11", "20", "13", "22", "31", "02", "33"],
    4: ["00", "11", "22", "13", "40", "15", "26", "17",
        "44", "71", "62", "73", "04", "75", "66", "77"],
}


def printed(table):
    return {u: (int(pair[0]), int(pair[1])) for u, pair in enumerate(table)}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, msg in sorted(RESULTS):
        line = f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}"
        terminalreporter.write_line(line + (f"  ({msg})" if msg else ""))
