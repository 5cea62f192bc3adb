"""Bond-incident-degree graph indices and their extremal graphs."""

from .canon import canonical_form, canonical_graph, is_isomorphic
from .conditions import ConditionReport, check_conditions
from .enumeration import (
    ExtremalResult,
    enumerate_connected,
    enumerate_dominating,
    extremal_search,
)
from .families import FamilyId, make_family
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    build_graph,
    decode_graph6,
    degree_sequence,
    encode_graph6,
    graph6_codec,
    line_graph,
)
from .indices import IndexSpec, IndexValue, closed_form, evaluate_bid, line_graph_size_check
from .theorems import (
    SeriesExpansion,
    TheoremReport,
    binomial_general,
    compare_families,
    series_expansion,
    verify_theorem,
)
from .transform import ShiftMove, dominate, edge_shift

__version__ = "0.1.0"
