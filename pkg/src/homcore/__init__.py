"""Graph homomorphism complexes Hom(G, K_m), k-cores and sparse random graphs."""
from .graph import (Graph, GraphFormatError, PreconditionError, chromatic_number, complete_graph,
                    contains_subgraph, cycle_graph, degeneracy, find_fold, fold_reduce, folds_to_edge,
                    is_bipartite, k_core, k_core_vertices, load_edge_list, named_graph, parse_edge_list)
from .hom import (BudgetExceeded, HomComplex, enumerate_0cells, enumerate_cells, hom_components,
                  hom_I_subcomplex)
from .topology import betti_mod2, hom_betti, homological_connectivity, order_complex, verify_degeneracy_bound
from .cycles import (CycleHom, DisconnectionWitness, InvariantViolation, bipartite_witness,
                     interchange, ladder_witness, odd_cycle_witness, return_number, tau_pattern)
from .random_graphs import (GnpConfig, classify_m3, limit_probability_m3, run_core_experiment,
                            run_m3_experiment, sample_gnp)

__version__ = "0.1.0"
