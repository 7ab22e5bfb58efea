"""Proper-path edge colourings: exact proper connection numbers, dominating-set
constructions and graph-class generators."""

from .classes import (
    ArcRepresentation,
    ChainSpec,
    IntervalRepresentation,
    ThresholdSpec,
    dominating_cycle_circular_arc,
    dominating_path_interval,
    hamiltonian_path,
    is_at_free,
    is_chain_graph,
    max_weight_dominating_vertex,
    realize,
    sharpness_family_interval,
    threshold_spec,
)
from .coloring import (
    EdgeColoring,
    WitnessPath,
    find_proper_path,
    is_proper_path,
    is_proper_path_coloring,
)
from .constructions import (
    ConstructionOutcome,
    color_circular_arc,
    color_from_dominating,
    color_from_two_step_dominating,
    color_interval,
    color_traceable,
    color_tree,
)
from .domination import (
    DominationCertificate,
    classify,
    greedy_two_step_dominating,
    min_connected_two_way_dominating,
    min_connected_two_way_two_step_dominating,
)
from .errors import DisconnectedGraphError, GraphError, ParseError, SearchBudgetExceeded
from .exact import PcResult, pc_decision, pc_exact
from .graph import Graph, diameter, distance, induced_subgraph, k_step_neighborhood
from .io import emit_dot, enumerate_connected_graphs, from_graph6, parse_graph, to_graph6

__version__ = "0.1.0"
