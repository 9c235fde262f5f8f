"""Core data model: graphs, instances, reconfiguration sequences, validators.

Vertices are 1-indexed integers.  Vertex sets are frozensets; all serialized
output is sorted so runs are reproducible.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

VertexSet = frozenset[int]

EMPTY: VertexSet = frozenset()


class Graph:
    """Simple undirected graph on vertices 1..n.

    Duplicate edges are collapsed on ingestion.  Self-loops and out-of-range
    endpoints are rejected.  An optional bipartition (L, R) may be attached;
    it is checked against the edge set.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 bipartition: Optional[tuple[Iterable[int], Iterable[int]]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range [1,{n}]")
            canon.add((u, v) if u < v else (v, u))
        self.edges: frozenset[tuple[int, int]] = frozenset(canon)
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj: tuple[VertexSet, ...] = tuple(frozenset(s) for s in adj)
        self.bipartition: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
        if bipartition is not None:
            left = tuple(sorted(bipartition[0]))
            right = tuple(sorted(bipartition[1]))
            if sorted(left + right) != list(range(1, n + 1)):
                raise ValueError("bipartition must partition 1..n")
            lset = frozenset(left)
            for u, v in self.edges:
                if (u in lset) == (v in lset):
                    raise ValueError(f"edge ({u},{v}) does not cross the bipartition")
            self.bipartition = (left, right)
        self._masks: Optional[list[int]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (bit v-1 stands for vertex v); index 0 unused."""
        if self._masks is None:
            masks = [0] * (self.n + 1)
            for u, v in self.edges:
                masks[u] |= 1 << (v - 1)
                masks[v] |= 1 << (u - 1)
            self._masks = masks
        return self._masks

    def subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph with vertices relabeled 1..k.

        Returns (subgraph, old_ids) where old_ids[i] is the original id of the
        new vertex i (old_ids[0] unused).
        """
        old_ids = [0] + sorted(set(keep))
        if old_ids[1:] and not (1 <= old_ids[1] and old_ids[-1] <= self.n):
            raise ValueError("subgraph vertices out of range")
        new_of = {old: new for new, old in enumerate(old_ids) if new > 0}
        edges = [(new_of[u], new_of[v]) for u, v in self.edges
                 if u in new_of and v in new_of]
        return Graph(len(old_ids) - 1, edges), old_ids

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self.bipartition == other.bipartition)

    def __repr__(self):
        bip = f", bipartition={self.bipartition}" if self.bipartition else ""
        return f"Graph(n={self.n}, m={self.m}{bip})"


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; vertices of b are shifted above a's ids."""
    shift = a.n
    edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    return Graph(a.n + b.n, edges)


def check_vertex_set(g: Graph, s: VertexSet) -> None:
    for v in s:
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} out of range [1,{g.n}]")


def is_independent(g: Graph, s: VertexSet) -> bool:
    """True iff no edge of g has both endpoints in s."""
    check_vertex_set(g, s)
    return all(not (g.adj[v] & s) for v in s)


@dataclass(frozen=True)
class Instance:
    """An MMISR instance: a graph plus the two endpoint independent sets."""

    graph: Graph
    ini: VertexSet
    tar: VertexSet

    def __post_init__(self):
        if not is_independent(self.graph, self.ini):
            raise ValueError("ini is not an independent set")
        if not is_independent(self.graph, self.tar):
            raise ValueError("tar is not an independent set")


ReconfigSequence = list[VertexSet]


def sequence_value(seq: ReconfigSequence) -> int:
    """Minimum set size along the sequence."""
    if not seq:
        raise ValueError("empty sequence has no value")
    return min(len(s) for s in seq)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    first_violation: Optional[tuple[int, str]] = None

    def __post_init__(self):
        assert self.ok == (self.first_violation is None)


NOT_INDEPENDENT = "NotIndependent"
NOT_NESTED = "NotNested"
WRONG_ENDPOINTS = "WrongEndpoints"


def validate_sequence(inst: Instance, seq: ReconfigSequence) -> ValidationReport:
    """Check a sequence: endpoints, independence of every step, nesting of
    consecutive steps.  Reports the first violation in step order."""
    if not seq:
        return ValidationReport(False, (0, WRONG_ENDPOINTS))
    if seq[0] != inst.ini:
        return ValidationReport(False, (0, WRONG_ENDPOINTS))
    for i, step in enumerate(seq):
        if not is_independent(inst.graph, step):
            return ValidationReport(False, (i, NOT_INDEPENDENT))
        if i > 0 and not (seq[i - 1] <= step or step <= seq[i - 1]):
            return ValidationReport(False, (i, NOT_NESTED))
    if seq[-1] != inst.tar:
        return ValidationReport(False, (len(seq) - 1, WRONG_ENDPOINTS))
    return ValidationReport(True)


def dedup_consecutive(seq: ReconfigSequence) -> ReconfigSequence:
    out: ReconfigSequence = []
    for s in seq:
        if not out or out[-1] != s:
            out.append(s)
    return out


def strip_redundant(seq: ReconfigSequence) -> ReconfigSequence:
    """Collapse every (p, q) with seq[p] == seq[q] to the single set seq[p].

    Scans left to right, jumping to the last occurrence of each set, so the
    result has pairwise-distinct elements.
    """
    last = {}
    for i, s in enumerate(seq):
        last[s] = i
    out: ReconfigSequence = []
    i = 0
    while i < len(seq):
        out.append(seq[i])
        i = last[seq[i]] + 1
    return out


def degeneracy_ordering(g: Graph) -> tuple[list[int], int]:
    """Repeated minimum-degree removal (lowest id breaks ties).

    Returns the removal order and the largest degree seen at removal time,
    which equals the degeneracy.
    """
    remaining = set(g.vertices())
    deg = {v: g.degree(v) for v in remaining}
    order: list[int] = []
    d = 0
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        order.append(v)
        remaining.discard(v)
        for w in g.adj[v]:
            if w in remaining:
                deg[w] -= 1
    return order, d


def alpha_bruteforce(g: Graph, limit: int = 32) -> tuple[int, VertexSet]:
    """Exact independence number by branch and bound over vertex in/out choices.

    Refuses graphs larger than `limit` vertices.
    """
    if g.n > limit:
        raise ValueError(f"graph has {g.n} > {limit} vertices; refusing brute force")
    masks = g.adjacency_masks()
    full = (1 << g.n) - 1

    # Greedy min-degree start gives the initial bound.
    best_set = _greedy_independent(g)
    best = [len(best_set), sum(1 << (v - 1) for v in best_set)]

    def visit(candidates: int, chosen: int, size: int) -> None:
        if size + candidates.bit_count() <= best[0]:
            return
        if candidates == 0:
            if size > best[0]:
                best[0] = size
                best[1] = chosen
            return
        # Branch on the candidate with the most candidate neighbors.
        v_bit = 0
        v_deg = -1
        c = candidates
        while c:
            bit = c & -c
            c ^= bit
            d = (masks[bit.bit_length()] & candidates).bit_count()
            if d > v_deg:
                v_deg = d
                v_bit = bit
        v = v_bit.bit_length()
        visit(candidates & ~v_bit & ~masks[v], chosen | v_bit, size + 1)
        visit(candidates & ~v_bit, chosen, size)

    visit(full, 0, 0)
    witness = frozenset(v for v in g.vertices() if best[1] >> (v - 1) & 1)
    return best[0], witness


def _greedy_independent(g: Graph) -> VertexSet:
    remaining = set(g.vertices())
    deg = {v: g.degree(v) for v in remaining}
    chosen = set()
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        chosen.add(v)
        dead = {v} | (g.adj[v] & remaining)
        remaining -= dead
        for u in dead:
            for w in g.adj[u]:
                if w in remaining:
                    deg[w] -= 1
    return frozenset(chosen)


def balanced_biclique_bruteforce(g: Graph, limit: int = 16) -> int:
    """Largest s such that some S in L, T in R with |S| = |T| = s induce a
    complete bipartite subgraph; 0 if the graph has no edge."""
    from itertools import combinations

    if g.bipartition is None:
        raise ValueError("graph is not tagged bipartite")
    left, right = g.bipartition
    if len(left) > limit or len(right) > limit:
        raise ValueError(f"bipartition sides exceed brute-force limit {limit}")
    if not g.edges:
        return 0
    rset = frozenset(right)
    for s in range(min(len(left), len(right)), 0, -1):
        for combo in combinations(left, s):
            common = rset
            for v in combo:
                common = common & g.adj[v]
                if len(common) < s:
                    break
            if len(common) >= s:
                return s
    return 0


def bfs_layers(g: Graph) -> list[int]:
    """BFS depth per vertex, one BFS per component rooted at its lowest id.

    Returns a list of length n+1; index 0 is unused (-1).
    """
    from collections import deque

    layer = [-1] * (g.n + 1)
    for root in g.vertices():
        if layer[root] != -1:
            continue
        layer[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if layer[w] == -1:
                    layer[w] = layer[u] + 1
                    queue.append(w)
    return layer


def trim_to_size(s: VertexSet, k: int) -> VertexSet:
    """Keep the k lowest ids of s (drops highest first)."""
    if k >= len(s):
        return s
    return frozenset(sorted(s)[:k])


def all_independent_sets(g: Graph) -> list[VertexSet]:
    """Every independent set, sorted by (size, members).  Exponential; meant
    for desk-scale graphs."""
    masks = g.adjacency_masks()
    out: list[VertexSet] = []

    def grow(v: int, chosen: tuple, chosen_mask: int) -> None:
        if v > g.n:
            out.append(frozenset(chosen))
            return
        grow(v + 1, chosen, chosen_mask)
        if not (masks[v] & chosen_mask):
            grow(v + 1, chosen + (v,), chosen_mask | 1 << (v - 1))

    grow(1, (), 0)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out
