"""Decompose-query-reduce preprocessing for long path and cycle detection
in restricted graph classes, with a budgeted oracle abstraction, explicit
certificate construction, and a set-cover hardness transformation."""

from .classes import ValidationReport, validate_class
from .construct import (Certificate, certificate_is_valid,
                        complete_xy_path_to_cycle, construct_cycle,
                        construct_path)
from .decompose import (TreeDec, TutteDec, biconnected_components,
                        is_triconnected, separation_from_children,
                        separation_from_tree_edge, torso, tutte_decompose)
from .graph import (Graph, GraphClass, GraphError, Separation,
                    is_minimal_separator, xy_extension)
from .kernel_common import KernelResult
from .kernel_cycle import (CycleKernelConfig, kernelize_cycle_node,
                           make_cycle_session, reduce_c, turing_kernel_cycle)
from .kernel_path import (PathKernelConfig, WitnessSet, compute_witnesses,
                          kernelize_path_node, make_path_session, reduce_p,
                          turing_kernel_path)
from .oracle import (BUILTIN_PROPERTIES, BudgetExceeded, OracleSession,
                     OracleTimeout, SelfReduceOutcome, SolverConfig,
                     StableEdgeProperty, TWO_DISJOINT_END_PATHS, X_PATH,
                     XY_PATH, exact_k_cycle, exact_k_path, find_cycle_atleast,
                     find_path_atleast, selfreduce_longest_xy_path,
                     selfreduce_max_stable_set, two_end_paths_atleast,
                     x_path_atleast, xy_path_atleast)
from .planarity import PlanarityReport, is_planar, kuratowski_witness, planarity_test
from .setcover import (ColoredGraphInstance, SetCoverInstance, SolvedDirectly,
                       exact_set_cover_dp, multicolored_path_exact,
                       reduce_setcover_to_multicolored_path)
from .thresholds import (circumference_lower_bound, default_query_budget,
                         planar_cycle_query_budget, width_threshold)

__version__ = "0.1.0"
