"""Two-distance spherical sets from strongly regular graphs, and Borsuk partition bounds."""
from .borsuk import (
    BorsukCertificate,
    LiftSpec,
    apex_extend,
    block_construction,
    family_bound,
    lift_witness,
    partition_lower_bound,
    slice_bound,
)
from .cliques import (
    CliqueCertificate,
    chain_clique_bound,
    clique_sum_norm,
    fi23_clique_bound,
    max_clique,
    ratio_independence_bound,
)
from .graph import (
    Graph,
    common_neighbor_count,
    common_nonneighbor_set,
    complement,
    is_triangle_free,
    lattice,
    load_g2_4,
    local_subgraph,
    paley,
    parse_graph6,
    petersen,
    triangular,
    verify_srg,
    write_graph6,
)
from .params import SrgParams, check_feasible, complement_params, slice_counts, spectrum
from .representation import (
    TwoDistanceRep,
    diameter_class,
    gram_matrix,
    gram_rank,
    realize_coordinates,
    rep_parameters,
    spectral_identity_check,
)

__version__ = "0.1.0"
