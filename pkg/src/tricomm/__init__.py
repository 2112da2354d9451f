"""Triangle-seeded community detection for weighted graphs."""

from .attributed import (
    AttributedDataset,
    EDGE_TYPES,
    NodeAttributes,
    TweetRecord,
    TypedEdge,
    build_graph,
    filter_records,
    load_attributed_json,
)
from .benchmark import GenSpec, GenSpecError, PRESETS, generate_planted, read_lfr
from .detection import (
    DetectionConfig,
    MergeState,
    SortChoice,
    detect,
    detect_full,
    init_state,
    inter_compare,
    intra_compare,
    sort_initial,
    sorted_adjacent,
)
from .graph import (
    GraphFormatError,
    WeightedGraph,
    connected_components,
    distance,
    dump_edge_list,
    filter_by_degree,
    filter_by_degree_nodes,
    load_edge_list,
    subgraph,
)
from .metrics import (
    CountSummary,
    PairCounts,
    community_count_summary,
    modularity,
    pair_counts,
    rand_index,
)
from .partition import Partition, parse_partition, partition_to_json, partition_to_text
from .stats import CommunityStats, community_stats
from .triangles import (
    PackingBudgetError,
    PackingResult,
    Triangle,
    enumerate_triangles,
    eval_score,
    overlap_degree,
    overlap_degrees,
    pack_exact,
    pack_greedy_eval,
    pack_greedy_weight,
    validate_packing,
)

__version__ = "0.1.0"

__all__ = [
    "AttributedDataset",
    "CommunityStats",
    "CountSummary",
    "DetectionConfig",
    "EDGE_TYPES",
    "GenSpec",
    "GenSpecError",
    "GraphFormatError",
    "MergeState",
    "NodeAttributes",
    "PRESETS",
    "PackingBudgetError",
    "PackingResult",
    "PairCounts",
    "Partition",
    "SortChoice",
    "Triangle",
    "TweetRecord",
    "TypedEdge",
    "WeightedGraph",
    "build_graph",
    "community_count_summary",
    "community_stats",
    "connected_components",
    "detect",
    "detect_full",
    "distance",
    "dump_edge_list",
    "enumerate_triangles",
    "eval_score",
    "filter_by_degree",
    "filter_by_degree_nodes",
    "filter_records",
    "generate_planted",
    "init_state",
    "inter_compare",
    "intra_compare",
    "load_attributed_json",
    "load_edge_list",
    "modularity",
    "overlap_degree",
    "overlap_degrees",
    "pack_exact",
    "pack_greedy_eval",
    "pack_greedy_weight",
    "pair_counts",
    "parse_partition",
    "partition_to_json",
    "partition_to_text",
    "rand_index",
    "read_lfr",
    "sort_initial",
    "sorted_adjacent",
    "subgraph",
    "validate_packing",
]
