"""tracescreen: Hamiltonian-path screening for graph datasets.

Fast necessary-condition checks rule out Hamiltonian paths on arbitrary
graphs in linear time; for cactus graphs the decision is exact and comes
with a constructive witness. A small exact oracle, seeded generators, a
streaming dataset format, and a CLI round the toolkit out.
"""

from .blocks import (
    BiconnectedComponent,
    BlockCutDecomposition,
    NotConnectedError,
    TooSmallError,
    articulation_count_per_block,
    criticality,
    decompose,
)
from .cactus import (
    CactusDecision,
    ConditionsViolatedError,
    NotCactusError,
    cactus_traceable,
    construct_path,
    decide_cactus,
    is_cactus,
)
from .conditions import (
    ArticulationGraph,
    ScreenVerdict,
    articulation_graph,
    check_block_articulations,
    check_criticality,
    is_path_graph,
    leaf_component_count,
    screen,
)
from .gdbio import GraphRecord, ParseError, format_record, parse_stream, write_records
from .generate import (
    GenSpec,
    InvalidParamError,
    SplitMix64,
    all_labeled_graphs,
    gen_cactus,
    gen_connected,
    generate,
)
from .graph import (
    Graph,
    GraphError,
    OutOfRangeError,
    SelfLoopError,
    build_graph,
    connected_component_count,
    is_connected,
    remove_vertex,
)
from .oracle import (
    MAX_ORACLE_VERTICES,
    EmptyGraphError,
    OracleResult,
    TooLargeError,
    exact_traceable,
    validate_path,
)
from .stats import DatasetStats, classify_record, run_stats, run_stats_parallel

__version__ = "0.1.0"

__all__ = [
    "ArticulationGraph",
    "BiconnectedComponent",
    "BlockCutDecomposition",
    "CactusDecision",
    "ConditionsViolatedError",
    "DatasetStats",
    "EmptyGraphError",
    "GenSpec",
    "Graph",
    "GraphError",
    "GraphRecord",
    "InvalidParamError",
    "MAX_ORACLE_VERTICES",
    "NotCactusError",
    "NotConnectedError",
    "OracleResult",
    "OutOfRangeError",
    "ParseError",
    "ScreenVerdict",
    "SelfLoopError",
    "SplitMix64",
    "TooLargeError",
    "TooSmallError",
    "all_labeled_graphs",
    "articulation_count_per_block",
    "articulation_graph",
    "build_graph",
    "cactus_traceable",
    "check_block_articulations",
    "check_criticality",
    "classify_record",
    "connected_component_count",
    "construct_path",
    "criticality",
    "decide_cactus",
    "decompose",
    "exact_traceable",
    "format_record",
    "gen_cactus",
    "gen_connected",
    "generate",
    "is_cactus",
    "is_connected",
    "is_path_graph",
    "leaf_component_count",
    "parse_stream",
    "remove_vertex",
    "run_stats",
    "run_stats_parallel",
    "screen",
    "validate_path",
    "write_records",
]
