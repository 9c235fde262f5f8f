"""Plain graph and instance generators for the CLI and the benchmark suites.

All randomness flows through an explicit random.Random, so identical seeds
give identical outputs.
"""

import random

from .graph import Graph, Instance, VertexSet


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    if n < 0 or not (0.0 <= p <= 1.0):
        raise ValueError("need n >= 0 and p in [0, 1]")
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return Graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(1, 2)])
    pruefer = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in pruefer:
        degree[v] += 1
    edges = []
    import heapq
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in pruefer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, edges)


def grid_graph(rows: int, cols: int) -> Graph:
    """Grid with row-major ids 1..rows*cols."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def random_independent_set(g: Graph, rng: random.Random,
                           size: int | None = None) -> VertexSet:
    """Greedy independent set over a shuffled vertex order, optionally
    stopping at a target size (may come up short on dense graphs)."""
    order = list(g.vertices())
    rng.shuffle(order)
    chosen: set[int] = set()
    for v in order:
        if size is not None and len(chosen) >= size:
            break
        if not (g.adj[v] & chosen):
            chosen.add(v)
    return frozenset(chosen)


def random_instance(n: int, p: float, rng: random.Random,
                    max_side: int | None = None) -> Instance:
    g = random_gnp(n, p, rng)
    cap = max_side if max_side is not None else n
    ini = random_independent_set(g, rng, size=rng.randint(0, cap))
    tar = random_independent_set(g, rng, size=rng.randint(0, cap))
    return Instance(g, ini, tar)
