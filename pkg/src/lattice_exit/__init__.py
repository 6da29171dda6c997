"""Lattice exit models: labels on finite downward graphs in N^k, order types,
regressive regularity, and the subset-sum instances built from regular
bi-arrays."""

from .committee import (
    RhoFunction,
    SeededSelection,
    SelectionFunction,
    TableSelection,
    TotalMinSelection,
    h_rho,
    phi_set,
    s_hat,
    total_min_selection,
)
from .labelers import LabelMap, p_hat, p_total, significant, t_hat, t_hat_oracle
from .lattice import (
    EdgeRule,
    ExplicitRule,
    LatticeDigraph,
    OrderTypeRule,
    RandomRule,
    Vertex,
    complete_rule,
    cube,
    edgeless_rule,
    induce,
    make_graph,
    random_downward,
    reachable,
    terminal_targets,
    trim_to_cap,
)
from .ordertypes import (
    apply,
    canonical_array,
    enumerate_OT,
    instantiate,
    ot_equal,
    rank_tuple,
)
from .regularity import (
    Family,
    RegularityReport,
    check_decreasing,
    check_jump_free,
    is_regressively_regular,
    regressive_values,
    search_regular_E,
)
from .subsetsum import (
    CappedBiArray,
    SubsetSumInstance,
    assign_rho_diag,
    build_instance,
    capped_biarray,
    run_pipeline,
    solve_subset_sum,
    verify_first_column,
)

__version__ = "0.1.0"
