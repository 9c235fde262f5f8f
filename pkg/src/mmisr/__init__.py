"""MaxMin independent set reconfiguration: exact oracles, approximation
algorithms, hardness-gadget generators, and a CLI."""

from .baker import LayerPartition, layer_partition, plan_layers, solve_baker
from .degeneracy import PeelTrace, assemble_sequence, peel_trace, solve_degeneracy
from .general import (LinkGraph, Partition, SetChain, build_link_graph,
                      chain_to_sequence, partition_vertices, solve_general)
from .graph import (EMPTY, Graph, Instance, ReconfigSequence, ValidationReport,
                    VertexSet, alpha_bruteforce, balanced_biclique_bruteforce,
                    bfs_layers, degeneracy_ordering, disjoint_union,
                    is_independent, sequence_value, validate_sequence)
from .oracle import (CapacityError, OracleLimits, isr_tj_decide, opt_exact,
                     reachable_at_threshold)
from .tj_exact import equalize, is_tj_sequence, solve_exact_via_tj, tj_to_tar
from .treewidth import (Separation, TreeDecomposition, TreeDecompositionError,
                        balanced_separation, balanced_separator_stats,
                        obtain_td, restrict_td, solve_balanced_separator,
                        solve_fptas, solve_treewidth_combined)

__version__ = "0.1.0"
