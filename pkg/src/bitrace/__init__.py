"""Longest-path intersection toolkit for small graphs.

Exact longest-path machinery, intersection-permutation configuration
classes, two-colored representations of path unions with their building
blocks and swap units, connection-status classification, and exhaustive
verification sweeps over the connected-graph census.
"""

from .graphs import (
    Graph,
    MultiGraph,
    emit_dot,
    emit_graph6,
    graph_from_json,
    graph_to_json,
    is_connected,
    is_separator,
    parse_graph6,
    vertex_connectivity,
)
from .longest_paths import (
    CapExceeded,
    Path,
    PathPair,
    all_longest_paths,
    longest_path_length,
    longest_path_pairs,
    min_triple_intersection,
)
from .profiles import (
    ConfigClass,
    IntersectionProfile,
    canonical_form,
    enumerate_classes,
    intersection_profile,
)
from .btrep import BtRep, GenericLengths, InvalidBtRep, bt_from_paths, bt_generic
from .blocks import Block, BlockTree, Esu, block_decomposition, swap_block
from .classify import (
    Attachment,
    BtVerdict,
    LncWitness,
    PairVerdict,
    ThirdPathAnalysis,
    classify_bt,
    find_lnc_witness,
    is_td,
    is_wd,
    nc_check,
    ndc_oracle,
    third_path_touch_filter,
    wd_check,
)
from .census import enumerate_connected_graphs
from .fixtures import Fixture, intro_fixture, load_fixture
from .harness import (
    SweepReport,
    search_counterexample,
    verify_hippchen,
    verify_separator_theorem,
    verify_tables,
    verify_three_paths,
)

__version__ = "0.1.0"
