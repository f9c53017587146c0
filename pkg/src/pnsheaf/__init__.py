"""Exact sheaf cohomology, degeneracy loci, and twisted 1-forms on P^n.

Everything is computed over exact arithmetic: cohomology tables of
homogeneous bundle expressions through the weight calculus on irreducible
summands, Chern/Todd/Riemann-Roch data in the Chow ring, Eagon-Northcott
vanishing certificates, named hypothesis checkers, and a polynomial lab for
twisted 1-forms and their singular schemes.
"""

from .bundles import (
    BundleExpr,
    Cotangent,
    Decomposition,
    DirectSum,
    Dual,
    IrreducibleBundle,
    LineBundle,
    Sym,
    Tangent,
    Tensor,
    Wedge,
    det_bundle,
    direct_sum,
    dual,
    normalize,
    o,
    omega,
    rank,
    split_bundle,
    sym,
    tangent,
    tensor,
    twist,
    wedge,
)
from .checkers import (
    CHECK_IDS,
    FAIL,
    HOLD,
    TheoremReport,
    check_codim1_generic,
    check_endomorphism_space,
    check_map_recovery,
    check_split_distribution,
    check_split_vanishing,
    endomorphism_space_dim,
)
from .chow import (
    ChowClass,
    PorteousResult,
    chern_character,
    chern_difference,
    chow_unit,
    chow_zero,
    hrr_chi,
    hyperplane_power,
    porteous_class,
    todd_class,
    total_chern,
)
from .cohomology import (
    CohomologyTable,
    bott_closed_form,
    bwb_cohomology,
    cohomology_table,
    serre_dual_check,
)
from .complexes import (
    ENCertificate,
    ENResolutionReport,
    en_resolution,
    euler_les_chase,
    vanishing_certificate,
)
from .errors import (
    ConsistencyError,
    EulerViolation,
    InputError,
    ParseError,
    PnsheafError,
    ScaleExceeded,
    UnsupportedPlethysm,
)
from .grammar import parse_expression, render_expression, split_ambient
from .linalg import in_row_span, kernel_basis, row_rank, rref
from .pfaff import (
    SATURATION_NOTE,
    AnnihilatorSlice,
    SectionSpace,
    SingularScheme,
    TwistedOneForm,
    UniquenessReport,
    annihilator_distribution,
    form_coefficient_vector,
    log_form,
    parse_form_file,
    pencil_form,
    random_pencil_form,
    render_form_file,
    section_space_contains,
    singular_scheme,
    uniqueness_report,
    vanishing_section_space,
)
from .polyideal import (
    IdealPresentation,
    Poly,
    buchberger,
    ideal_presentation,
    membership_on_charts,
    normal_form,
    parse_poly,
    projective_dimension,
    s_polynomial,
    staircase_dimension,
    unit_ideal,
)
from .weights import (
    Degenerate,
    LRExpansion,
    Weight,
    dotted_weyl_reduce,
    lr_product,
    weyl_dim,
)

__version__ = "0.1.0"

__all__ = [
    "AnnihilatorSlice",
    "BundleExpr",
    "CHECK_IDS",
    "ChowClass",
    "CohomologyTable",
    "ConsistencyError",
    "Cotangent",
    "Decomposition",
    "Degenerate",
    "DirectSum",
    "Dual",
    "ENCertificate",
    "ENResolutionReport",
    "EulerViolation",
    "FAIL",
    "HOLD",
    "IdealPresentation",
    "InputError",
    "IrreducibleBundle",
    "LRExpansion",
    "LineBundle",
    "ParseError",
    "PnsheafError",
    "Poly",
    "PorteousResult",
    "SATURATION_NOTE",
    "ScaleExceeded",
    "SectionSpace",
    "SingularScheme",
    "Sym",
    "Tangent",
    "Tensor",
    "TheoremReport",
    "TwistedOneForm",
    "UniquenessReport",
    "UnsupportedPlethysm",
    "Wedge",
    "Weight",
    "annihilator_distribution",
    "bott_closed_form",
    "buchberger",
    "bwb_cohomology",
    "check_codim1_generic",
    "check_endomorphism_space",
    "check_map_recovery",
    "check_split_distribution",
    "check_split_vanishing",
    "chern_character",
    "chern_difference",
    "chow_unit",
    "chow_zero",
    "cohomology_table",
    "det_bundle",
    "direct_sum",
    "dotted_weyl_reduce",
    "dual",
    "en_resolution",
    "endomorphism_space_dim",
    "euler_les_chase",
    "form_coefficient_vector",
    "hrr_chi",
    "hyperplane_power",
    "ideal_presentation",
    "in_row_span",
    "kernel_basis",
    "log_form",
    "lr_product",
    "membership_on_charts",
    "normal_form",
    "normalize",
    "o",
    "omega",
    "parse_expression",
    "parse_form_file",
    "parse_poly",
    "pencil_form",
    "porteous_class",
    "projective_dimension",
    "random_pencil_form",
    "rank",
    "render_expression",
    "render_form_file",
    "row_rank",
    "rref",
    "s_polynomial",
    "section_space_contains",
    "serre_dual_check",
    "singular_scheme",
    "split_ambient",
    "split_bundle",
    "staircase_dimension",
    "sym",
    "tangent",
    "tensor",
    "todd_class",
    "total_chern",
    "twist",
    "uniqueness_report",
    "unit_ideal",
    "vanishing_certificate",
    "vanishing_section_space",
    "wedge",
    "weyl_dim",
]
