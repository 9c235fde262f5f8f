"""Layered approximation scheme for planar inputs.

Classes of BFS layers taken modulo k+1 play the role of the deletable parts:
dropping the class that meets the endpoint sets least leaves a graph whose
layers span bounded stretches, which the treewidth dispatcher then handles.
Planarity is the caller's contract; any input still yields a valid sequence,
only the ratio claim needs it.
"""

import math
from dataclasses import dataclass

from .graph import (Graph, Instance, ReconfigSequence, VertexSet, bfs_layers,
                    dedup_consecutive, is_independent)
from .oracle import DEFAULT_LIMITS, OracleLimits
from .tj_exact import equalize
from .treewidth import obtain_td, solve_fptas


@dataclass(frozen=True)
class LayerPartition:
    """k+1 disjoint classes covering the vertex set, by BFS layer mod k+1."""

    classes: tuple[VertexSet, ...]
    k: int


def layer_partition(g: Graph, k: int) -> LayerPartition:
    if k < 1:
        raise ValueError("k must be at least 1")
    layer = bfs_layers(g)
    buckets: list[set[int]] = [set() for _ in range(k + 1)]
    for v in g.vertices():
        buckets[layer[v] % (k + 1)].add(v)
    return LayerPartition(tuple(frozenset(b) for b in buckets), k)


@dataclass(frozen=True)
class LayerPlan:
    k: int
    eps_inner: float
    partition: LayerPartition
    chosen: int


def plan_layers(g: Graph, ini: VertexSet, tar: VertexSet, eps: float) -> LayerPlan:
    """Pick k from eps and the class meeting ini | tar least (lowest index on
    ties); that class intersects at most 2*eta/(k+1) endpoint vertices."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    eps_inner = eps / 2
    k = 2 * math.ceil((1 + eps) / (eps - eps_inner)) - 1
    part = layer_partition(g, k)
    touched = ini | tar
    chosen = min(range(k + 1), key=lambda j: (len(touched & part.classes[j]), j))
    return LayerPlan(k, eps_inner, part, chosen)


def solve_baker(g: Graph, ini: VertexSet, tar: VertexSet, eps: float,
                limits: OracleLimits = DEFAULT_LIMITS) -> ReconfigSequence:
    if eps <= 0:
        raise ValueError("eps must be positive")
    ini = frozenset(ini)
    tar = frozenset(tar)
    if not is_independent(g, ini) or not is_independent(g, tar):
        raise ValueError("endpoints must be independent sets")
    ini_eq, tar_eq = equalize(ini, tar)
    if ini_eq == tar_eq:
        return dedup_consecutive([ini, ini_eq, tar])
    plan = plan_layers(g, ini_eq, tar_eq, eps)
    dropped = plan.partition.classes[plan.chosen]

    keep = frozenset(g.vertices()) - dropped
    sub, old_ids = g.subgraph(keep)
    new_of = {old: new for new, old in enumerate(old_ids) if new > 0}
    ini_sub = frozenset(new_of[v] for v in ini_eq - dropped)
    tar_sub = frozenset(new_of[v] for v in tar_eq - dropped)

    td = obtain_td(sub)
    middle = solve_fptas(sub, td, ini_sub, tar_sub, plan.eps_inner, limits)
    mapped = [frozenset(old_ids[v] for v in step) for step in middle]
    return dedup_consecutive([ini, ini_eq] + mapped + [tar_eq, tar])
