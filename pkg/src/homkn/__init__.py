"""homkn: graph-coloring complexes Hom(G, K_n) with verifiable topology.

Builds the polyhedral complex of proper-coloring multihomomorphisms,
computes its exact integer homology via Smith normal form, and runs the
constructive loop-contraction / cycle-reduction algorithms whose
certificates witness the connectivity bound

    conn Hom(G, K_n) >= n - maxval(G) - 2.
"""

from .errors import (
    HomknError,
    InputError,
    InternalInvariantError,
    PreconditionError,
    ResourceLimitError,
)
from .graphs import (
    Graph,
    complete,
    cycle,
    disjoint_union,
    make_graph,
    maximal_independent_prefix,
    maxval,
    path,
    remove_independent_prefix,
    star,
    vgap,
)
from .homcx import (
    DEFAULT_CELL_CAP,
    MAX_COLORS,
    Chain,
    ComplexSkeleton,
    boundary,
    boundary_chain,
    cell_dim,
    cell_of,
    cell_to_lists,
    chain_in_filtration,
    colors_of,
    count_proper_colorings,
    enumerate_skeleton,
    f_vector,
    in_filtration,
    is_cell,
    is_hom_cell,
    mask_of,
)
from .homology import (
    BoundaryMatrix,
    ConnectivityReport,
    HomologySummary,
    SNFResult,
    boundary_matrix,
    component_count,
    connectivity_report,
    homology_summary,
    pi1_free_rank,
    smith_normal_form,
)
from .deform import (
    EdgePath,
    HomotopyMove,
    VerifyResult,
    advance_path_filtration,
    contract_loop,
    normalize_path,
    random_loop,
    validate_path,
    verify_moves,
)
from .reduce import (
    CertVerifyResult,
    ChainCertificate,
    nullify_cycle,
    reduce_cycle,
    simplex_boundary,
    simplex_fill,
    verify_certificate,
)

__version__ = "0.1.0"
