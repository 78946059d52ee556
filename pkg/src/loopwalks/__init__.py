"""Closed-walk counts, subgraph census, spectral moments and energy bounds
for graphs with self-loops."""

from .census import (SubgraphCensus, first_zagreb, four_cycle_census,
                     four_cycle_census_per_vertex, loop_boundary,
                     subgraph_census, triangle_census,
                     triangle_census_per_vertex)
from .errors import (ConstraintViolation, DisconnectedInput, DuplicateEdge,
                     GraphBuildError, HypothesisNotMet, IndexOutOfRange,
                     InvalidLoopPlacement, InvalidSpec, LoopwalksError,
                     NegativeExponentUnsupported, NoConvergence,
                     NotAPathOrCycle, ParseError, SelfPairInEdgeList,
                     SizeLimitExceeded, UnsupportedFamily)
from .families import FamilySpec, enumerate_all_graphs, generate
from .graph_core import (AdjacencyMatrix, SelfLoopGraph, adjacency, build,
                         is_connected)
from .graphio import load_graph, parse_graph, save_graph, serialize_graph
from .oracle import WalkEnumeration, enumerate_closed_walks, trace_power
from .spectral import (BoundRecord, MomentReport, Spectrum, eigenvalues,
                       energy, energy_lower_bounds, m3_closed_form,
                       m4_closed_form, mcclelland_bound, moment_report,
                       spectral_moment, twisted_moment, verify_cauchy_schwarz,
                       verify_ratio_chain)
from .walks import (PathLoopProfile, WalkCounts, closed_form_w3,
                    closed_form_w4, path_loop_profile, w2_formula, w3_formula,
                    w4_formula, walk_counts)

__version__ = "0.1.0"
