"""Hardness-style instance generators and their structural checks.

Each generator is paired with a brute-force check of the property that makes
it interesting: the union-with-biclique optimum identity, the biclique bounds
of the bipartite complement, the clique-padding independence count, and the
no-large-balanced-independent-pair property of regular bipartite expanders.
"""

import math
import random
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .graph import Graph, Instance, VertexSet, disjoint_union


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    edges = [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)]
    return Graph(a + b, edges,
                 bipartition=(range(1, a + 1), range(a + 1, a + b + 1)))


def gen_union_biclique(g: Graph, k: int) -> Instance:
    """Disjoint union with a complete balanced bipartite part; the endpoints
    are its two sides.  The optimum equals min(k, independence number of g)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    h = disjoint_union(g, complete_bipartite(k, k))
    left = frozenset(range(g.n + 1, g.n + k + 1))
    right = frozenset(range(g.n + k + 1, g.n + 2 * k + 1))
    return Instance(h, left, right)


def clique_copy_count(n: int, delta: float) -> int:
    return math.ceil(n ** (1 - 2 * delta) - 1e-9)


def gen_bandwidth_padding(g: Graph, delta: float) -> Graph:
    """Pad with ceil(n^(1-2*delta)) disjoint n-cliques."""
    if not (0 < delta < 0.5):
        raise ValueError("delta must lie in (0, 1/2)")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    h = g
    for _ in range(clique_copy_count(g.n, delta)):
        h = disjoint_union(h, complete_graph(g.n))
    return h


def gen_bipartite_complement(g: Graph) -> Instance:
    """Complement the cross edges of a balanced bipartite graph; the sides
    become the endpoints."""
    if g.bipartition is None:
        raise ValueError("graph is not tagged bipartite")
    left, right = g.bipartition
    if len(left) != len(right):
        raise ValueError("bipartition is not balanced")
    edges = [(u, v) for u in left for v in right if v not in g.adj[u]]
    h = Graph(g.n, edges, bipartition=(left, right))
    return Instance(h, frozenset(left), frozenset(right))


def gen_random_regular_bipartite(m: int, d: int, seed: int,
                                 max_attempts: int = 5000) -> Graph:
    """Configuration-model pairing of d*m half-edges per side, redrawn until
    the multigraph is simple.  Deterministic per seed."""
    if m < 1 or d < 0:
        raise ValueError("need m >= 1 and d >= 0")
    if d > m:
        raise ValueError(f"degree {d} impossible with side size {m}")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        stubs = [v for v in range(1, m + 1) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        simple = True
        for i, u in enumerate(stubs):
            v = m + 1 + i // d
            if (u, v) in edges:
                simple = False
                break
            edges.add((u, v))
        if simple:
            return Graph(2 * m, sorted(edges),
                         bipartition=(range(1, m + 1), range(m + 1, 2 * m + 1)))
    raise RuntimeError(f"no simple pairing found in {max_attempts} attempts")


def expander_independence_fraction(degree: int) -> float:
    """Side fraction above which a regular bipartite expander at the
    Ramanujan eigenvalue bound admits no balanced independent pair."""
    if degree < 3:
        raise ValueError("degree must be at least 3")
    return 2.01 * math.sqrt(degree - 1) / degree


def check_no_large_balanced_indep(x: Graph, threshold: int,
                                  limit: int = 14) -> bool:
    """True iff no S in L and T in R with both sizes >= threshold form an
    independent set.  Brute force over size-threshold subsets of the smaller
    side (larger witnesses contain size-threshold ones)."""
    if x.bipartition is None:
        raise ValueError("graph is not tagged bipartite")
    left, right = x.bipartition
    if len(left) > limit or len(right) > limit:
        raise ValueError(f"bipartition sides exceed brute-force limit {limit}")
    if threshold <= 0:
        return False
    if threshold > len(left) or threshold > len(right):
        return True
    rset = frozenset(right)
    for combo in combinations(left, threshold):
        non_neighbors = rset
        for v in combo:
            non_neighbors = non_neighbors - x.adj[v]
            if len(non_neighbors) < threshold:
                break
        if len(non_neighbors) >= threshold:
            return False
    return True


def estimate_second_eigenvalue(x: Graph, iterations: int = 500) -> float:
    """Power-iteration estimate of the largest nontrivial adjacency
    eigenvalue magnitude of a d-regular balanced bipartite graph.

    Iterates the squared adjacency operator, deflating the two trivial
    eigenvectors (all-ones and the side-signed vector) each round.
    """
    if x.bipartition is None:
        raise ValueError("graph is not tagged bipartite")
    left, right = x.bipartition
    if len(left) != len(right):
        raise ValueError("bipartition is not balanced")
    n = x.n
    if n < 2:
        return 0.0
    a = np.zeros((n, n))
    for u, v in x.edges:
        a[u - 1, v - 1] = 1.0
        a[v - 1, u - 1] = 1.0
    lset = frozenset(left)
    ones = np.ones(n) / math.sqrt(n)
    signed = np.array([1.0 if v in lset else -1.0
                       for v in x.vertices()]) / math.sqrt(n)
    rng = np.random.default_rng(0)
    vec = rng.standard_normal(n)
    squared = a @ a
    for _ in range(iterations):
        vec -= (vec @ ones) * ones
        vec -= (vec @ signed) * signed
        nxt = squared @ vec
        norm = np.linalg.norm(nxt)
        if norm < 1e-12:
            return 0.0
        vec = nxt / norm
    vec -= (vec @ ones) * ones
    vec -= (vec @ signed) * signed
    norm = np.linalg.norm(vec)
    if norm < 1e-12:
        return 0.0
    vec /= norm
    return float(math.sqrt(max(0.0, vec @ squared @ vec)))


@dataclass(frozen=True)
class MixingReport:
    holds: bool
    lambda_used: float
    pairs_checked: int
    violations: tuple = field(default_factory=tuple)


def mixing_bound_check(x: Graph, lam: float, limit: int = 10,
                       max_recorded: int = 20) -> MixingReport:
    """Check |e(S,T) - d|S||T|/m| <= lam*sqrt(|S||T|) over all side subsets.

    A diagnostic, not a proof: lam is typically an estimate.  The default
    side limit is 10 because the check enumerates all subset pairs.
    """
    if x.bipartition is None:
        raise ValueError("graph is not tagged bipartite")
    left, right = x.bipartition
    if len(left) > limit or len(right) > limit:
        raise ValueError(f"bipartition sides exceed enumeration limit {limit}")
    degrees = {x.degree(v) for v in x.vertices()}
    if len(degrees) > 1:
        raise ValueError("graph is not regular")
    d = degrees.pop() if degrees else 0
    m = len(left)
    right_list = list(right)
    pos = {v: i for i, v in enumerate(right_list)}
    nbr_masks = {u: sum(1 << pos[w] for w in x.adj[u]) for u in left}

    violations = []
    pairs = 0
    total = 0
    left_list = list(left)
    for smask in range(1 << len(left_list)):
        members = [left_list[i] for i in range(len(left_list)) if smask >> i & 1]
        s_size = len(members)
        # Cross-edge counts into every T via per-right-vertex tallies.
        tally = [0] * len(right_list)
        for u in members:
            nm = nbr_masks[u]
            while nm:
                bit = nm & -nm
                nm ^= bit
                tally[bit.bit_length() - 1] += 1
        for tmask in range(1 << len(right_list)):
            t_size = tmask.bit_count()
            e = 0
            tm = tmask
            while tm:
                bit = tm & -tm
                tm ^= bit
                e += tally[bit.bit_length() - 1]
            pairs += 1
            bound = lam * math.sqrt(s_size * t_size)
            gap = abs(e - d * s_size * t_size / m) if m else 0.0
            if gap > bound + 1e-9:
                total += 1
                if len(violations) < max_recorded:
                    t_members = [right_list[i] for i in range(len(right_list))
                                 if tmask >> i & 1]
                    violations.append((tuple(sorted(members)),
                                       tuple(sorted(t_members)), e, bound))
    return MixingReport(total == 0, lam, pairs, tuple(violations))


def degree_gadget_side_size(n: int, degree: int) -> int:
    return max(degree, math.ceil(math.log2(degree) / math.sqrt(degree) * n))


def gen_degree_gadget(g: Graph, degree: int, seed: int) -> Instance:
    """Disjoint union with a random regular bipartite expander stand-in; the
    expander's sides are the endpoints.  Keeps the maximum degree at
    max(maxdeg(g), degree)."""
    if degree < 3:
        raise ValueError("degree must be at least 3")
    m = degree_gadget_side_size(g.n, degree)
    x = gen_random_regular_bipartite(m, degree, seed)
    h = disjoint_union(g, x)
    left = frozenset(range(g.n + 1, g.n + m + 1))
    right = frozenset(range(g.n + m + 1, g.n + 2 * m + 1))
    return Instance(h, left, right)
