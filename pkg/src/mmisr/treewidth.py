"""Tree decompositions and the separator-based solvers.

Decompositions are validated against the three standard conditions.  When no
decomposition is supplied, a min-fill elimination builds one (exact width via
a subset DP for tiny graphs).  The recursive solver repeatedly splits along a
weight-balanced bag separator; a dispatcher routes to it or to the exact
solver depending on the achievable ratio.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .degeneracy import solve_degeneracy
from .graph import (Graph, Instance, ReconfigSequence, VertexSet,
                    dedup_consecutive, is_independent, sequence_value)
from .oracle import DEFAULT_LIMITS, CapacityError, OracleLimits
from .tj_exact import solve_exact_via_tj


class TreeDecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[VertexSet, ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def vertex_set(self) -> VertexSet:
        return frozenset().union(*self.bags) if self.bags else frozenset()


@dataclass(frozen=True)
class Separation:
    """A pair covering the vertex set with no edges across the two open sides."""

    a: VertexSet
    b: VertexSet

    @property
    def separator(self) -> VertexSet:
        return self.a & self.b


def validate_td(g: Graph, td: TreeDecomposition) -> None:
    """Raise TreeDecompositionError naming the violated condition."""
    k = len(td.bags)
    if k == 0:
        raise TreeDecompositionError("decomposition has no bags")
    for i, j in td.tree_edges:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            raise TreeDecompositionError(f"decomposition is not a tree: bad edge ({i},{j})")
    if len(td.tree_edges) != k - 1 or not _tree_connected(k, td.tree_edges):
        raise TreeDecompositionError("decomposition is not a tree")
    covered = td.vertex_set()
    for v in covered:
        if not (1 <= v <= g.n):
            raise TreeDecompositionError(f"bag vertex out of range: {v}")
    for v in g.vertices():
        if v not in covered:
            raise TreeDecompositionError(f"vertex not covered: {v}")
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in td.bags):
            raise TreeDecompositionError(f"edge not covered: ({u},{v})")
    adj = _bag_adjacency(k, td.tree_edges)
    for v in g.vertices():
        holding = [i for i, bag in enumerate(td.bags) if v in bag]
        seen = {holding[0]}
        queue = deque([holding[0]])
        members = set(holding)
        while queue:
            cur = queue.popleft()
            for nxt in adj[cur]:
                if nxt in members and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        if seen != members:
            raise TreeDecompositionError(f"vertex bags not connected: {v}")


def _tree_connected(k: int, edges) -> bool:
    if k == 0:
        return False
    adj = _bag_adjacency(k, edges)
    seen = {0}
    queue = deque([0])
    while queue:
        cur = queue.popleft()
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == k


def _bag_adjacency(k: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(k)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for lst in adj:
        lst.sort()
    return adj


def _absorb_subset_bags(bags: list[VertexSet], edges: list[tuple[int, int]]
                        ) -> tuple[list[VertexSet], list[tuple[int, int]]]:
    """Contract tree edges whose one endpoint bag is contained in the other."""
    changed = True
    while changed:
        changed = False
        for i, j in sorted(edges):
            if bags[i] <= bags[j] or bags[j] <= bags[i]:
                lose, keep = (i, j) if bags[i] <= bags[j] else (j, i)
                new_edges = []
                for a, b in edges:
                    if {a, b} == {lose, keep}:
                        continue
                    a2 = keep if a == lose else a
                    b2 = keep if b == lose else b
                    new_edges.append((a2, b2))
                bags.pop(lose)
                remap = lambda x: x - 1 if x > lose else x
                edges = sorted(set((min(remap(a), remap(b)), max(remap(a), remap(b)))
                                   for a, b in new_edges))
                changed = True
                break
    return bags, edges


def _min_fill_order(g: Graph) -> list[int]:
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    alive = set(g.vertices())
    order = []

    def fill(v: int) -> int:
        nbrs = sorted(adj[v] & alive)
        return sum(1 for i, a in enumerate(nbrs) for b in nbrs[i + 1:]
                   if b not in adj[a])

    while alive:
        v = min(alive, key=lambda u: (fill(u), u))
        order.append(v)
        nbrs = sorted(adj[v] & alive)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                adj[a].add(b)
                adj[b].add(a)
        alive.discard(v)
    return order


def _elimination_q(masks: list[int], through: int, v: int, n: int) -> int:
    # Count vertices outside `through` seen from v via paths inside `through`.
    visited = 1 << (v - 1)
    frontier = [v]
    boundary = 0
    while frontier:
        u = frontier.pop()
        rest = masks[u] & ~visited
        while rest:
            bit = rest & -rest
            rest ^= bit
            visited |= bit
            w = bit.bit_length()
            if bit & through:
                frontier.append(w)
            else:
                boundary += 1
    return boundary


def _exact_elimination_order(g: Graph) -> list[int]:
    """Optimal-width elimination order by DP over eliminated-prefix subsets."""
    n = g.n
    masks = g.adjacency_masks()
    f = [0] * (1 << n)
    choice = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = None
        best_v = 0
        rest = s
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length()
            prev = s ^ bit
            cand = max(f[prev], _elimination_q(masks, prev, v, n))
            if best is None or cand < best or (cand == best and v < best_v):
                best = cand
                best_v = v
        f[s] = best
        choice[s] = best_v
    order = []
    s = (1 << n) - 1
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << (v - 1)
    order.reverse()
    return order


def _bags_from_order(g: Graph, order: list[int]
                     ) -> tuple[list[VertexSet], list[tuple[int, int]]]:
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    alive = set(g.vertices())
    pos = {v: i for i, v in enumerate(order)}
    bags: list[VertexSet] = []
    bag_of: dict[int, int] = {}
    parent_vertex: dict[int, int] = {}
    for v in order:
        nbrs = (adj[v] & alive) - {v}
        bags.append(frozenset({v} | nbrs))
        bag_of[v] = len(bags) - 1
        if nbrs:
            parent_vertex[v] = min(nbrs, key=lambda u: pos[u])
            lst = sorted(nbrs)
            for i, a in enumerate(lst):
                for b in lst[i + 1:]:
                    adj[a].add(b)
                    adj[b].add(a)
        alive.discard(v)
    edges = [(bag_of[v], bag_of[u]) for v, u in parent_vertex.items()]
    roots = [bag_of[v] for v in order if v not in parent_vertex]
    edges.extend((roots[i], roots[i + 1]) for i in range(len(roots) - 1))
    return bags, edges


def obtain_td(g: Graph, given: Optional[TreeDecomposition] = None,
              exact_threshold: int = 10) -> TreeDecomposition:
    """Validate a supplied decomposition, or build one.

    Tiny graphs get an exact-width decomposition; otherwise min-fill.  The
    heuristic may overshoot the true width, which only loosens value bounds.
    """
    if given is not None:
        validate_td(g, given)
        return given
    if g.n == 0:
        return TreeDecomposition((frozenset(),), ())
    order = (_exact_elimination_order(g) if g.n <= exact_threshold
             else _min_fill_order(g))
    bags, edges = _bags_from_order(g, order)
    bags, edges = _absorb_subset_bags(bags, edges)
    return TreeDecomposition(tuple(bags), tuple(edges))


def restrict_td(td: TreeDecomposition, keep: VertexSet) -> TreeDecomposition:
    """Decomposition of the induced subgraph: intersect bags with `keep`,
    splice out empty bags.  Width never increases."""
    bags = [bag & keep for bag in td.bags]
    adj = {i: set() for i in range(len(bags))}
    for i, j in td.tree_edges:
        adj[i].add(j)
        adj[j].add(i)
    for e in [i for i, b in enumerate(bags) if not b]:
        nbrs = sorted(adj.pop(e))
        for x in nbrs:
            adj[x].discard(e)
        if nbrs:
            rep = nbrs[0]
            for x in nbrs[1:]:
                adj[rep].add(x)
                adj[x].add(rep)
    if not adj:
        return TreeDecomposition((frozenset(),), ())
    index = {old: new for new, old in enumerate(sorted(adj))}
    new_bags = [bags[old] for old in sorted(adj)]
    new_edges = sorted(set((min(index[a], index[b]), max(index[a], index[b]))
                           for a in adj for b in adj[a]))
    new_bags, new_edges = _absorb_subset_bags(new_bags, new_edges)
    return TreeDecomposition(tuple(new_bags), tuple(new_edges))


def balanced_separation(g: Graph, td: TreeDecomposition,
                        weight: dict[int, float]) -> Separation:
    """Separation with both open sides at most 2/3 of the total weight and a
    single bag as separator.

    Picks the bag minimizing the heaviest weight among the tree components
    left by its removal (such a bag has every component at most half the
    total), then packs components into the two sides, heaviest first into the
    lighter side.
    """
    vertices = td.vertex_set()
    for v in vertices:
        if not (1 <= v <= g.n):
            raise ValueError(f"decomposition vertex {v} not in graph")
    k = len(td.bags)
    if k == 1:
        return Separation(td.bags[0], td.bags[0])
    adj = _bag_adjacency(k, td.tree_edges)

    anchor: dict[int, int] = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            anchor.setdefault(v, i)
    anchored = [0.0] * k
    for v, i in anchor.items():
        anchored[i] += weight.get(v, 0.0)
    total = sum(anchored)

    parent, topo, tin, tout = _root_tree(k, adj)
    subtree = anchored[:]
    for i in reversed(topo):
        if parent[i] != -1:
            subtree[parent[i]] += subtree[i]

    def in_subtree(node: int, root: int) -> bool:
        return tin[root] <= tin[node] <= tout[root]

    best_bag = 0
    best_max = None
    for b in range(k):
        children = [c for c in adj[b] if parent[c] == b]
        comp = {c: subtree[c] for c in children}
        if parent[b] != -1:
            comp[-1] = total - subtree[b]
        for v in td.bags[b]:
            a = anchor[v]
            if a == b:
                continue
            w = weight.get(v, 0.0)
            if not w:
                continue
            for c in children:
                if in_subtree(a, c):
                    comp[c] -= w
                    break
            else:
                comp[-1] -= w
        worst = max(comp.values(), default=0.0)
        if best_max is None or worst < best_max:
            best_max = worst
            best_bag = b

    sep = td.bags[best_bag]
    comps = _tree_components(k, adj, best_bag)
    pieces = []
    for comp_bags in comps:
        members = frozenset().union(*(td.bags[i] for i in comp_bags)) - sep
        pieces.append((sum(weight.get(v, 0.0) for v in members), members))
    pieces.sort(key=lambda p: (-p[0], sorted(p[1])))
    side_a: set[int] = set()
    side_b: set[int] = set()
    wa = wb = 0.0
    for w, members in pieces:
        if wa <= wb:
            side_a |= members
            wa += w
        else:
            side_b |= members
            wb += w
    return Separation(frozenset(side_a) | sep, frozenset(side_b) | sep)


def _root_tree(k: int, adj: list[list[int]]):
    parent = [-1] * k
    topo = [0]
    seen = {0}
    for cur in topo:
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = cur
                topo.append(nxt)
    tin = [0] * k
    tout = [0] * k
    clock = 0
    stack: list[tuple[int, bool]] = [(0, False)]
    while stack:
        node, done = stack.pop()
        if done:
            tout[node] = clock
            continue
        tin[node] = clock
        clock += 1
        stack.append((node, True))
        for nxt in adj[node]:
            if parent[nxt] == node:
                stack.append((nxt, False))
    return parent, topo, tin, tout


def _tree_components(k: int, adj: list[list[int]], removed: int) -> list[list[int]]:
    seen = {removed}
    comps = []
    for start in range(k):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    comp.append(nxt)
                    queue.append(nxt)
        comps.append(comp)
    return comps


def solve_balanced_separator(g: Graph, td: TreeDecomposition,
                             ini: VertexSet, tar: VertexSet) -> ReconfigSequence:
    seq, _ = balanced_separator_stats(g, td, ini, tar)
    return seq


def balanced_separator_stats(g: Graph, td: TreeDecomposition, ini: VertexSet,
                             tar: VertexSet) -> tuple[ReconfigSequence, int]:
    """Run the recursive solver and also report the recursion depth."""
    if not is_independent(g, ini) or not is_independent(g, tar):
        raise ValueError("endpoints must be independent sets")
    validate_td(g, td)
    seq, depth = _separator_recurse(g, td, frozenset(ini), frozenset(tar), 1)
    return dedup_consecutive(seq), depth


def _separator_recurse(g: Graph, td: TreeDecomposition, ini: VertexSet,
                       tar: VertexSet, depth: int
                       ) -> tuple[ReconfigSequence, int]:
    if ini == tar:
        return [ini], depth
    if len(ini) > len(tar):
        seq, d = _separator_recurse(g, td, tar, ini, depth)
        return seq[::-1], d
    if not ini:
        return [ini, tar], depth

    weight = {v: 1.0 for v in ini}
    sep = balanced_separation(g, td, weight)
    s = sep.separator
    x = sep.a - s
    y = sep.b - s
    if (len(tar & x) - len(ini & x)) >= (len(tar & y) - len(ini & y)):
        p, q = x, y
    else:
        p, q = y, x

    steps: ReconfigSequence = [ini]
    cur = ini - s
    steps.append(cur)

    sub_p, dp = _separator_recurse(g, restrict_td(td, p), ini & p, tar & p,
                                   depth + 1)
    rest = cur - p
    steps.extend(piece | rest for piece in sub_p)
    cur = (tar & p) | rest

    sub_q, dq = _separator_recurse(g, restrict_td(td, q), ini & q, tar & q,
                                   depth + 1)
    rest = cur - q
    steps.extend(piece | rest for piece in sub_q)
    cur = (tar & p) | (tar & q)

    steps.append(cur | (tar & s))
    return steps, max(dp, dq)


def separator_value_guarantee(phi: int, t: int) -> float:
    """A-priori lower bound on the recursive solver's value; 0 when the
    formula does not apply (small endpoint sets or width too large)."""
    if phi <= 0 or t <= 0 or phi < t:
        return 0.0
    return max(0.0, phi - t * (math.log(phi / t, 1.5) + 1))


def solve_fptas(g: Graph, td: TreeDecomposition, ini: VertexSet,
                tar: VertexSet, eps: float,
                limits: OracleLimits = DEFAULT_LIMITS) -> ReconfigSequence:
    """Ratio-driven dispatcher: the recursive solver when its guarantee
    already implies a (1+eps)-approximation, the exact solver otherwise."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    ini = frozenset(ini)
    tar = frozenset(tar)
    if ini == tar:
        if not is_independent(g, ini):
            raise ValueError("endpoints must be independent sets")
        return [ini]
    phi = min(len(ini), len(tar))
    t = td.width + 1
    guarantee = separator_value_guarantee(phi, t)
    if guarantee > 0 and phi / guarantee <= 1 + eps:
        return solve_balanced_separator(g, td, ini, tar)
    try:
        _, seq = solve_exact_via_tj(Instance(g, ini, tar), limits)
    except CapacityError as exc:
        raise CapacityError(
            f"{exc}; the exact branch was required, a larger eps may avoid it"
        ) from exc
    return seq


def solve_treewidth_combined(g: Graph, td: TreeDecomposition, ini: VertexSet,
                             tar: VertexSet) -> ReconfigSequence:
    """Best of the separator-based and the peeling sequences."""
    by_separator = solve_balanced_separator(g, td, ini, tar)
    by_peeling = solve_degeneracy(Instance(g, frozenset(ini), frozenset(tar)))
    if sequence_value(by_separator) >= sequence_value(by_peeling):
        return by_separator
    return by_peeling
