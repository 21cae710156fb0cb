"""Threshold covers of size 2: decision, construction, and certificates.

The main entry point is cover2, which either returns two threshold
subgraphs covering the input or an odd cycle in the conflict graph on
edges proving that no such cover exists.  chain_cover2 is the bipartite
counterpart producing two chain subgraphs.
"""

from .auxiliary import (
    AuxiliaryGraph,
    OddCycleCertificate,
    build_auxiliary,
    serialize_auxiliary,
    two_color,
)
from .backend import backend_name
from .cover import (
    CoverResult,
    PentagonWitness,
    SwitchingWitness,
    apply_recolor,
    assemble_cover,
    cover2,
    detect_hexagon,
    detect_pentagon,
    detect_switching,
    pentagon_recolor_sets,
    verify_cover,
)
from .errors import InvariantError, ParseError, PreconditionError, ThcoverError
from .graph import (
    Graph,
    PatternWitness,
    VertexOrdering,
    find_induced,
    pair_lex_compare,
    parse_graph,
    parse_ordering,
    serialize_graph,
    serialize_ordering,
)
from .lexbfs import LexBfsViolation, lexbfs, verify_lexbfs
from .oracle import (
    GenSpec,
    SweepFailure,
    SweepReport,
    brute_chain_cover2,
    brute_thd_le2,
    equivalence_sweep,
    generate,
)
from .partition import TriPartition
from .recognition import (
    ThresholdCertificate,
    is_chain,
    is_paraglider_free,
    is_threshold,
    split_partition,
)
from .reductions import (
    ChainCoverResult,
    HatGraph,
    bipartition,
    chain_cover2,
    cover2_paraglider_free,
    cover2_split,
    hat_graph,
    verify_chain_cover,
)

__version__ = "0.1.0"

__all__ = [
    "AuxiliaryGraph",
    "ChainCoverResult",
    "CoverResult",
    "GenSpec",
    "Graph",
    "HatGraph",
    "InvariantError",
    "LexBfsViolation",
    "OddCycleCertificate",
    "ParseError",
    "PatternWitness",
    "PentagonWitness",
    "PreconditionError",
    "SweepFailure",
    "SweepReport",
    "SwitchingWitness",
    "ThcoverError",
    "ThresholdCertificate",
    "TriPartition",
    "VertexOrdering",
    "apply_recolor",
    "assemble_cover",
    "backend_name",
    "bipartition",
    "brute_chain_cover2",
    "brute_thd_le2",
    "build_auxiliary",
    "chain_cover2",
    "cover2",
    "cover2_paraglider_free",
    "cover2_split",
    "detect_hexagon",
    "detect_pentagon",
    "detect_switching",
    "equivalence_sweep",
    "find_induced",
    "generate",
    "hat_graph",
    "is_chain",
    "is_paraglider_free",
    "is_threshold",
    "lexbfs",
    "pair_lex_compare",
    "parse_graph",
    "parse_ordering",
    "pentagon_recolor_sets",
    "serialize_auxiliary",
    "serialize_graph",
    "serialize_ordering",
    "split_partition",
    "two_color",
    "verify_chain_cover",
    "verify_cover",
    "verify_lexbfs",
]
