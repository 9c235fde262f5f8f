"""Exact ground truth at desk scale.

Reachability over the space of independent sets, with two move rules:
add/remove one vertex subject to a size floor (the threshold oracle), and
single-token swaps at fixed set size (the token-jumping decision).  States
are vertex bitmasks; witnesses come from predecessor maps.
"""

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import (Graph, Instance, ReconfigSequence, VertexSet,
                    is_independent)


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 20
    max_states: int = 1 << 22

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_states <= 0:
            raise ValueError("oracle limits must be positive")


DEFAULT_LIMITS = OracleLimits()


class CapacityError(RuntimeError):
    """Raised when an exact search would exceed the configured limits."""


def _check_capacity(g: Graph, limits: OracleLimits) -> None:
    if g.n > limits.max_vertices:
        raise CapacityError(
            f"graph has {g.n} vertices, oracle limit is {limits.max_vertices}")


def _mask_of(s: VertexSet) -> int:
    m = 0
    for v in s:
        m |= 1 << (v - 1)
    return m


def _set_of(mask: int) -> VertexSet:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _walk_back(parent: dict[int, int], state: int) -> list[int]:
    path = [state]
    while parent[state] != -1:
        state = parent[state]
        path.append(state)
    path.reverse()
    return path


def reachable_at_threshold(inst: Instance, gamma: int,
                           limits: OracleLimits = DEFAULT_LIMITS
                           ) -> Optional[ReconfigSequence]:
    """Single-step sequence from ini to tar through independent sets of size
    >= gamma, or None if tar is unreachable at that floor."""
    g = inst.graph
    if not (0 <= gamma <= min(len(inst.ini), len(inst.tar))):
        raise ValueError("gamma must lie in [0, min(|ini|, |tar|)]")
    _check_capacity(g, limits)
    masks = g.adjacency_masks()
    start = _mask_of(inst.ini)
    goal = _mask_of(inst.tar)
    parent = {start: -1}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            return [_set_of(m) for m in _walk_back(parent, state)]
        size = state.bit_count()
        for v in g.vertices():
            bit = 1 << (v - 1)
            if state & bit:
                if size - 1 < gamma:
                    continue
                nxt = state & ~bit
            else:
                if masks[v] & state:
                    continue
                nxt = state | bit
            if nxt not in parent:
                if len(parent) >= limits.max_states:
                    raise CapacityError(
                        f"state space exceeds {limits.max_states} states")
                parent[nxt] = state
                queue.append(nxt)
    return None


def opt_exact(inst: Instance, limits: OracleLimits = DEFAULT_LIMITS
              ) -> tuple[int, ReconfigSequence]:
    """Optimal value and a witness sequence.

    Binary search on the threshold: a sequence feasible at gamma is feasible
    at any smaller gamma, and gamma = 0 always succeeds via the empty set.
    """
    if inst.ini == inst.tar:
        return len(inst.ini), [inst.ini]
    lo, hi = 0, min(len(inst.ini), len(inst.tar))
    witness = reachable_at_threshold(inst, 0, limits)
    assert witness is not None
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = reachable_at_threshold(inst, mid, limits)
        if found is not None:
            lo = mid
            witness = found
        else:
            hi = mid - 1
    return lo, witness


def isr_tj_decide(g: Graph, ini: VertexSet, tar: VertexSet,
                  limits: OracleLimits = DEFAULT_LIMITS
                  ) -> Optional[ReconfigSequence]:
    """Token-jumping reachability between equal-size independent sets.

    Moves swap one vertex for another, keeping size and independence.
    Returns the swap sequence or None.
    """
    if len(ini) != len(tar):
        raise ValueError("token jumping requires equal-size sets")
    if not is_independent(g, ini) or not is_independent(g, tar):
        raise ValueError("endpoints must be independent sets")
    _check_capacity(g, limits)
    masks = g.adjacency_masks()
    start = _mask_of(ini)
    goal = _mask_of(tar)
    parent = {start: -1}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            return [_set_of(m) for m in _walk_back(parent, state)]
        for u in g.vertices():
            u_bit = 1 << (u - 1)
            if not state & u_bit:
                continue
            rest = state & ~u_bit
            for w in g.vertices():
                w_bit = 1 << (w - 1)
                if (state & w_bit) or (masks[w] & rest):
                    continue
                nxt = rest | w_bit
                if nxt not in parent:
                    if len(parent) >= limits.max_states:
                        raise CapacityError(
                            f"state space exceeds {limits.max_states} states")
                    parent[nxt] = state
                    queue.append(nxt)
    return None
