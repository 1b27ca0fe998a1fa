"""Spectral conditions for (fractional) matchings in 3-uniform hypergraphs.

Library layout:

- :mod:`linkspec.graphs` -- immutable 2-graph / 3-graph types and operations
- :mod:`linkspec.spectral` -- power-iteration spectral radius and closed-form bounds
- :mod:`linkspec.matching` -- exact matching numbers (blossom, branch-and-bound)
- :mod:`linkspec.lp` -- exact rational fractional matching/cover with certificates
- :mod:`linkspec.constructions` -- extremal families and random instances
- :mod:`linkspec.harness` -- condition checks, shifting, absorbing sets, search
- :mod:`linkspec.fileio` / :mod:`linkspec.cli` -- file formats and the CLI
"""

__version__ = "0.1.0"

from .graphs import (  # noqa: F401
    Graph2,
    Hypergraph3,
    complement,
    degree,
    graph_remove_vertices,
    induced,
    join,
    link_graph,
    max_codegree,
    min_l_degree,
    remove_vertices,
)
from .spectral import (  # noqa: F401
    SpectralReport,
    hong_bound,
    lemma24_common_edges_check,
    spectral_radius,
    stanley_bound,
    terpai_gap,
    threshold_fyz,
    threshold_match,
)
from .matching import (  # noqa: F401
    Matching3,
    Matching3Result,
    greedy_extend,
    high_degree_set,
    hitting_set_bound,
    max_matching_3graph,
    max_matching_graph,
)
from .lp import (  # noqa: F401
    DualityCertificate,
    FractionalAssignment,
    fractional_matching,
    has_perfect_fractional_matching,
)
from .constructions import (  # noqa: F401
    LabeledInstance,
    complete_3graph,
    enumerate_3graphs,
    h1,
    h2,
    random_3graph,
    split_graph,
)
from .harness import (  # noqa: F401
    CheckReport,
    ShiftedPair,
    absorbing_sets,
    check_condition,
    lemma25_check,
    lift_link_matching,
    search_exhaustive,
    search_random,
    shift,
    shift_closure_holds,
    verify_theorem,
)
