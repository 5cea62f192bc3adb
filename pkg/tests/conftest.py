import random
from itertools import combinations, permutations

import numpy as np
import pytest

from hypothesis import strategies as st

from bidx.graph import Graph, build_graph


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random spanning tree plus up to ``extra`` further edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    possible = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(possible)
    edges.update(possible[:extra])
    return build_graph(n, edges)


@st.composite
def connected_graphs(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    extra = draw(st.integers(0, n * (n - 1) // 2 - (n - 1)))
    return random_connected_graph(random.Random(seed), n, extra)


@st.composite
def graphs_with_permutation(draw, max_n=9):
    g = draw(connected_graphs(max_n=max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


def brute_force_counts(n):
    """{m: classes} of connected n-vertex graphs, by minimum edge mask over all permutations."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    bits = (masks[:, None] >> np.arange(len(pairs))) & 1
    # connectivity by repeated neighbourhood expansion from vertex 0
    reach = np.zeros((len(masks), n), dtype=bool)
    reach[:, 0] = True
    for _ in range(n):
        new = reach.copy()
        for (u, v), i in index.items():
            e = bits[:, i].astype(bool)
            new[:, v] |= e & reach[:, u]
            new[:, u] |= e & reach[:, v]
        reach = new
    connected = reach.all(axis=1)
    best = masks.copy()
    for perm in permutations(range(n)):
        img = np.zeros_like(masks)
        for (u, v), i in index.items():
            a, b = sorted((perm[u], perm[v]))
            img |= bits[:, i] << index[(a, b)]
        best = np.minimum(best, img)
    out = {}
    for m in range(n - 1, len(pairs) + 1):
        sel = connected & (bits.sum(axis=1) == m)
        out[m] = len(np.unique(best[sel]))
    return out


# one summary line per acceptance criterion ---------------------------------

_criteria: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for name in getattr(report, "criteria", ()):
        _criteria.setdefault(name, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s[1:])):
        outcomes = _criteria[name]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{name}: {verdict} ({len(outcomes)} test(s))")
