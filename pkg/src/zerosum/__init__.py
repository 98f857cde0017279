"""Constructive lower bounds for the Davenport constant of finite abelian
groups, with an independent brute-force verification engine."""

from .bounds import (
    BoundReport,
    admissible_pk1,
    all_bounds,
    best_bound,
    bound_disc,
    bound_est,
    bound_gene,
    bound_lzfs,
    bound_zhihe,
    cnr_ckn_shape,
    epsilon_for,
)
from .certificates import (
    Certificate,
    make_certificate,
    parse_certificate,
    read_certificate,
    serialize,
    write_certificate,
)
from .constructions import (
    ConstructionParams,
    LiftComponent,
    LiftSpec,
    MTable,
    build_lzfs_certificate,
    build_M,
    build_M_recursive,
    build_nondispersive,
    build_W,
    check_prop_M,
    choose_u,
    lift_zero_sum_free,
    omega,
    theta,
)
from .engine import (
    ExactResult,
    LengthSpectrum,
    SearchLimits,
    VerifyReport,
    basis_witness,
    davenport_exact,
    disc_exact,
    is_non_dispersive,
    is_zero_sum_free,
    length_spectrum,
    verify_certificate,
)
from .errors import (
    BadOrder,
    BadParams,
    BadPartition,
    BudgetExceeded,
    EmptyGroup,
    NoAdmissibleEll,
    ParseError,
    PGroup,
    PreconditionFailed,
    PrimePower,
    RankMismatch,
    ZeroSumError,
)
from .groups import (
    GroupElement,
    GroupSpec,
    GSequence,
    d_star,
    elem_add,
    elem_neg,
    elem_scale,
    element,
    make_group,
    parse_element_literal,
    parse_group_literal,
    seq_sum,
    sequence,
)

__version__ = "0.1.0"
