"""Shared test utilities: an independent recomputation of the optimum from
the full state graph, and seeded random instance families."""

import random
from collections import deque

from mmisr.generators import random_instance
from mmisr.graph import Graph, Instance, VertexSet, all_independent_sets


class FullStateOpt:
    """Optimum for every endpoint pair, recomputed by a level sweep.

    Builds the complete state graph of independent sets once, then labels
    connected components of the subgraph of states of size >= gamma for each
    gamma.  The optimum of a pair is the largest gamma at which both
    endpoints share a component.  This takes a different route than the
    production oracle (no binary search, no early-exit search).
    """

    def __init__(self, g: Graph):
        self.g = g
        sets = all_independent_sets(g)
        masks = g.adjacency_masks()
        node_masks = [sum(1 << (v - 1) for v in s) for s in sets]
        index = {m: i for i, m in enumerate(node_masks)}
        neighbors: list[list[int]] = [[] for _ in sets]
        for i, m in enumerate(node_masks):
            for v in g.vertices():
                bit = 1 << (v - 1)
                if m & bit:
                    neighbors[i].append(index[m & ~bit])
                elif not (masks[v] & m):
                    neighbors[i].append(index[m | bit])
        sizes = [m.bit_count() for m in node_masks]
        self._index = index
        self._labels: list[list[int]] = []
        for gamma in range(0, g.n + 2):
            label = [-1] * len(sets)
            comp = 0
            for start in range(len(sets)):
                if sizes[start] < gamma or label[start] != -1:
                    continue
                label[start] = comp
                queue = deque([start])
                while queue:
                    cur = queue.popleft()
                    for nxt in neighbors[cur]:
                        if sizes[nxt] >= gamma and label[nxt] == -1:
                            label[nxt] = comp
                            queue.append(nxt)
                comp += 1
            self._labels.append(label)

    def opt(self, ini: VertexSet, tar: VertexSet) -> int:
        i = self._index[sum(1 << (v - 1) for v in ini)]
        j = self._index[sum(1 << (v - 1) for v in tar)]
        for gamma in range(min(len(ini), len(tar)), -1, -1):
            li = self._labels[gamma]
            if li[i] == li[j]:
                return gamma
        raise AssertionError("gamma = 0 connects everything")


def random_family(count: int, n_max: int, seed: int,
                  p_low: float = 0.15, p_high: float = 0.6,
                  n_min: int = 4) -> list[Instance]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(p_low, p_high)
        out.append(random_instance(n, p, rng))
    return out


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])
