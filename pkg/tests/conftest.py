import os
import random

import pytest
from hypothesis import settings

from halfroot.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def sun3() -> Graph:
    # clique 0,1,2; stable 3,4,5 with 3~0,1  4~1,2  5~2,0
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])


NAMED = {
    "K1": Graph.complete(1),
    "K3": Graph.complete(3),
    "K4": Graph.complete(4),
    "P4": Graph.path(4),
    "C4": Graph.cycle(4),
    "C5": Graph.cycle(5),
    "claw": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    "diamond": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "paw": Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "2K2": Graph.from_edges(4, [(0, 1), (2, 3)]),
    "3-sun": sun3(),
}


@pytest.fixture
def named():
    return NAMED


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_interval_graph(n: int, rng: random.Random, span: int = 20) -> Graph:
    ivs = []
    for _ in range(n):
        a = rng.randrange(span)
        ivs.append((a, a + rng.randrange(1, span // 3 + 2)))
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if ivs[u][0] <= ivs[v][1] and ivs[v][0] <= ivs[u][1]]
    )


def random_unit_interval_graph(n: int, rng: random.Random, density: float = 10.0) -> Graph:
    pts = sorted(rng.uniform(0, n / density) for _ in range(n))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(
        n, [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if pts[j] - pts[i] <= 1.0]
    )


def random_chordal_graph(n: int, rng: random.Random, kmax: int = 4) -> Graph:
    """Each new vertex attaches to a clique of earlier vertices."""
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        u = rng.randrange(v)
        clique = [u]
        nb = sorted(adj[u])
        rng.shuffle(nb)
        want = rng.randint(0, kmax)
        for w in nb:
            if len(clique) > want:
                break
            if all(w in adj[x] for x in clique):
                clique.append(w)
        for x in clique:
            adj[v].add(x)
            adj[x].add(v)
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in adj[a] if a < b])


def random_block_graph(n: int, rng: random.Random) -> Graph:
    """Glue cliques at cut vertices."""
    edges = []
    nxt = 1
    while nxt < n:
        at = rng.randrange(nxt)
        size = min(rng.randint(1, 3), n - nxt)
        block = [at] + list(range(nxt, nxt + size))
        edges += [(a, b) for i, a in enumerate(block) for b in block[i + 1 :]]
        nxt += size
    return Graph.from_edges(n, edges)


# acceptance results, printed in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
