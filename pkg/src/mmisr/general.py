"""Partition-based solver for general graphs.

Splits the vertices into about n/log2(n) contiguous blocks, enumerates the
independent subsets of each block, and links two subsets when their union is
independent.  A path in that link graph from inside ini to inside tar is a
chain certificate; walking it with union steps yields a sequence whose every
set is at least as large as the chain's floor.
"""

import math
from collections import deque
from dataclasses import dataclass

from .graph import (Graph, Instance, ReconfigSequence, VertexSet,
                    dedup_consecutive, is_independent, strip_redundant)


@dataclass(frozen=True)
class Partition:
    parts: tuple[VertexSet, ...]

    @property
    def ell(self) -> int:
        return len(self.parts)

    @property
    def max_part_size(self) -> int:
        return max(len(p) for p in self.parts)


@dataclass(frozen=True)
class SetChain:
    """Certificate: independent sets of size >= threshold whose consecutive
    unions are independent, starting inside ini and ending inside tar."""

    threshold: int
    sets: tuple[VertexSet, ...]


@dataclass(frozen=True)
class LinkGraph:
    """Independent block subsets of size >= threshold; adjacency means the
    union is independent."""

    nodes: tuple[tuple[int, VertexSet], ...]
    adjacency: tuple[tuple[int, ...], ...]


def partition_vertices(g: Graph) -> Partition:
    """Contiguous id blocks: floor(n / log2 n) of them, sizes between
    floor(log2 n) and 2*ceil(log2 n)."""
    n = g.n
    if n < 2:
        return Partition((frozenset(g.vertices()),))
    ell = max(1, math.floor(n / math.log2(n)))
    base = n // ell
    remainder = n % ell
    parts = []
    start = 1
    for i in range(ell):
        size = base + (1 if i < remainder else 0)
        parts.append(frozenset(range(start, start + size)))
        start += size
    low = math.floor(math.log2(n))
    high = 2 * math.ceil(math.log2(n))
    assert all(low <= len(p) <= high for p in parts)
    return Partition(tuple(parts))


_PART_SIZE_SLACK = 2


def build_link_graph(g: Graph, partition: Partition, threshold: int) -> LinkGraph:
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    if g.n >= 2:
        guard = 2 * math.ceil(math.log2(g.n)) + _PART_SIZE_SLACK
        if partition.max_part_size > guard:
            raise ValueError(
                f"part of size {partition.max_part_size} exceeds the "
                f"enumeration guard {guard}")
    nodes: list[tuple[int, VertexSet]] = []
    seen: set[VertexSet] = set()
    for idx, part in enumerate(partition.parts):
        for subset in _independent_subsets(g, part, threshold):
            if subset not in seen:  # the empty set occurs in every part
                seen.add(subset)
                nodes.append((idx, subset))
    nodes.sort(key=lambda node: (len(node[1]), sorted(node[1]), node[0]))

    masks = g.adjacency_masks()
    set_masks = []
    nbr_masks = []
    for _, subset in nodes:
        sm = 0
        nm = 0
        for v in subset:
            sm |= 1 << (v - 1)
            nm |= masks[v]
        set_masks.append(sm)
        nbr_masks.append(nm)
    adjacency: list[tuple[int, ...]] = []
    for i in range(len(nodes)):
        row = tuple(j for j in range(len(nodes))
                    if j != i and not (nbr_masks[i] & set_masks[j]))
        adjacency.append(row)
    return LinkGraph(tuple(nodes), tuple(adjacency))


def _independent_subsets(g: Graph, part: VertexSet, threshold: int):
    members = sorted(part)
    out: list[VertexSet] = []

    def grow(idx: int, chosen: list[int]) -> None:
        if len(chosen) + (len(members) - idx) < threshold:
            return
        if idx == len(members):
            if len(chosen) >= threshold:
                out.append(frozenset(chosen))
            return
        v = members[idx]
        if not (g.adj[v] & frozenset(chosen)):
            chosen.append(v)
            grow(idx + 1, chosen)
            chosen.pop()
        grow(idx + 1, chosen)

    grow(0, [])
    return out


def chain_to_sequence(inst: Instance, chain: SetChain) -> ReconfigSequence:
    """Walk the chain: drop down from ini to the first set, then move between
    consecutive sets through their union, then grow into tar."""
    _validate_chain(inst, chain)
    sets = chain.sets
    seq: ReconfigSequence = [inst.ini, sets[0]]
    for prev, cur in zip(sets, sets[1:]):
        seq.append(prev | cur)
        seq.append(cur)
    seq.append(inst.tar)
    return dedup_consecutive(seq)


def _validate_chain(inst: Instance, chain: SetChain) -> None:
    sets = chain.sets
    if not sets:
        raise ValueError("chain has no sets")
    if not (sets[0] <= inst.ini and sets[-1] <= inst.tar):
        raise ValueError("chain endpoints are not inside ini and tar")
    if any(len(s) < chain.threshold for s in sets):
        raise ValueError("chain set below the size floor")
    for prev, cur in zip(sets, sets[1:]):
        if not is_independent(inst.graph, prev | cur):
            raise ValueError("consecutive chain union is not independent")


def solve_general(inst: Instance) -> tuple[ReconfigSequence, int]:
    """Largest floor whose link graph connects ini to tar, plus the walked
    sequence.  Floor zero always succeeds through the empty set."""
    g = inst.graph
    partition = partition_vertices(g)
    start = min(partition.max_part_size, len(inst.ini), len(inst.tar))
    for threshold in range(start, -1, -1):
        link = build_link_graph(g, partition, threshold)
        path = _link_path(link, inst.ini, inst.tar)
        if path is None:
            continue
        walked = strip_redundant([link.nodes[i][1] for i in path])
        chain = SetChain(threshold, tuple(walked))
        return chain_to_sequence(inst, chain), threshold
    raise AssertionError("floor 0 must always admit a chain")


def _link_path(link: LinkGraph, ini: VertexSet, tar: VertexSet):
    sources = [i for i, (_, s) in enumerate(link.nodes) if s <= ini]
    sinks = {i for i, (_, s) in enumerate(link.nodes) if s <= tar}
    if not sources or not sinks:
        return None
    parent = {i: -1 for i in sources}
    queue = deque(sources)
    while queue:
        cur = queue.popleft()
        if cur in sinks:
            path = [cur]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            path.reverse()
            return path
        for nxt in link.adjacency[cur]:
            if nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    return None
