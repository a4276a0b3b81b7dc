from ._core import (
    Graph,
    RegulabError,
    __version__,
    betti_table,
    catalog_graph,
    catalog_names,
    classify,
    colon_graph,
    ideal_betti_table,
    ideal_regularity,
    regularity,
    run_suite,
    suite_names,
)

__all__ = [
    "Graph",
    "RegulabError",
    "betti_table",
    "catalog_graph",
    "catalog_names",
    "classify",
    "colon_graph",
    "ideal_betti_table",
    "ideal_regularity",
    "regularity",
    "run_suite",
    "suite_names",
]
