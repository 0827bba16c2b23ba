"""Internet-like topology growth models and topology metrics.

Thin Python face of the C++ core: grow graphs with the positive-feedback
preference model (or the baseline models), measure degree distribution,
rich-club structure, mixing, path lengths and triangles.
"""

from ._pfptopo import (
    EdgeKind,
    Graph,
    GrowthKind,
    ModelConfig,
    PreferenceScheme,
    assortativity,
    degree_distribution,
    edge_list_string,
    expected_link_ratio,
    fit_power_law,
    generate,
    knn_by_degree,
    path_stats,
    preference_ratio,
    preference_weight,
    read_edge_list,
    report,
    rich_club,
    seed_graph,
    track_trajectory,
    triangle_stats,
    write_edge_list,
)

__all__ = [
    "EdgeKind",
    "Graph",
    "GrowthKind",
    "ModelConfig",
    "PreferenceScheme",
    "assortativity",
    "degree_distribution",
    "edge_list_string",
    "expected_link_ratio",
    "fit_power_law",
    "generate",
    "knn_by_degree",
    "path_stats",
    "preference_ratio",
    "preference_weight",
    "read_edge_list",
    "report",
    "rich_club",
    "seed_graph",
    "track_trajectory",
    "triangle_stats",
    "write_edge_list",
]
