"""Peeling solver for degenerate graphs.

Maintains the two endpoint sets minus their intersection as sides X and Y,
repeatedly settles a minimum-degree vertex of the cross bipartite graph into
the common part Z, and assembles a forward and a backward sequence that meet
in the middle.
"""

from dataclasses import dataclass

from .graph import (Graph, Instance, ReconfigSequence, VertexSet,
                    strip_redundant)


@dataclass(frozen=True)
class PeelTrace:
    """Aligned snapshots of the three working sets, one per iteration plus
    the initial state; the last X and Y snapshots are empty."""

    xs: tuple[VertexSet, ...]
    ys: tuple[VertexSet, ...]
    zs: tuple[VertexSet, ...]

    @property
    def steps(self) -> int:
        return len(self.xs)


def peel_trace(inst: Instance) -> PeelTrace:
    g = inst.graph
    z = set(inst.ini & inst.tar)
    x = set(inst.ini) - z
    y = set(inst.tar) - z
    xs = [frozenset(x)]
    ys = [frozenset(y)]
    zs = [frozenset(z)]
    while x or y:
        # Degree counts only cross edges; X and Y are independent sets, so
        # the induced graph on X | Y is exactly the cross bipartite graph.
        v = min(x | y, key=lambda u: (_cross_degree(g, u, x, y), u))
        if v in x:
            x.discard(v)
            y -= g.adj[v]
        else:
            y.discard(v)
            x -= g.adj[v]
        z.add(v)
        xs.append(frozenset(x))
        ys.append(frozenset(y))
        zs.append(frozenset(z))
    return PeelTrace(tuple(xs), tuple(ys), tuple(zs))


def _cross_degree(g: Graph, v: int, x: set[int], y: set[int]) -> int:
    other = y if v in x else x
    return len(g.adj[v] & other)


def assemble_sequence(trace: PeelTrace, collapse: bool = True) -> ReconfigSequence:
    """Interleave side snapshots with the growing common part.

    The raw assembly dips by the removal count of each step; with collapse
    enabled, any stretch between two equal sets is replaced by the single
    set, which removes the no-op dips.
    """
    t = trace.steps
    forward: ReconfigSequence = []
    backward: ReconfigSequence = []
    for i in range(t - 1):
        forward.append(trace.xs[i] | trace.zs[i])
        forward.append(trace.xs[i + 1] | trace.zs[i])
        backward.append(trace.ys[i] | trace.zs[i])
        backward.append(trace.ys[i + 1] | trace.zs[i])
    middle = trace.xs[t - 1] | trace.zs[t - 1]
    seq = forward + [middle] + backward[::-1]
    if collapse:
        seq = strip_redundant(seq)
    return seq


def solve_degeneracy(inst: Instance, collapse: bool = True) -> ReconfigSequence:
    return assemble_sequence(peel_trace(inst), collapse=collapse)
