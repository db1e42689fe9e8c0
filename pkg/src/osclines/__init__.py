"""Exact intersection theory for lines on hypersurfaces and their osculating
loci, plus a finite linear-algebra verification lab.

All ring arithmetic is exact: arbitrary-precision integers (Python int) and
normalized rationals (fractions.Fraction).
"""

from fractions import Fraction

from .chern import (
    FormalBundle,
    RankError,
    dual_bundle,
    sym_power_rank2,
    sym_power_rank2_via_roots,
    tautological_sub_dual,
    tensor_line,
    top_chern,
    trivial_bundle,
    whitney_quotient,
)
from .grassmann import (
    ContextMismatchError,
    Grassmannian,
    SchubertClass,
    integrate,
    lines_in_projective_space,
    poincare_dual,
    sigma,
)
from .incidence import (
    IncidenceClass,
    IncidenceVariety,
    RangeError as IncidenceRangeError,
    canonical_class,
    canonical_class_via_bundles,
    divisor,
    divisor_coefficients,
    from_grassmannian,
    h_class,
    inc_integrate,
    jet_bundle,
    l_class,
    line_forms_bundle,
    osculating_bundle,
    osculating_canonical_class,
    osculating_class,
    osculating_degree,
    vanishing_subbundle,
)
from .lab import (
    BracketCheckReport,
    ContactSystem,
    GeometryError,
    GlobalGenReport,
    GrassGenReport,
    Wedge2Report,
    bracket_pairing_check,
    check_gg_grassmann,
    check_gg_pn,
    contact_rank,
    random_contact_system,
    wedge2_image_report,
)
from .lr import lr_coefficient, schur_polynomial, semistandard_tableaux
from .modp import BACKEND_NAME, DEFAULT_PRIME
from .multipoly import MultiPoly, decompose_symmetric_pair
from .partitions import (
    Partition,
    ShapeError,
    as_partition,
    box_complement,
    conjugate,
    partitions_in_box,
)
from .pipeline import (
    DegenerateWeightsError,
    FanoRegimeReport,
    NumerologyReport,
    WeightVector,
    bott_count_lines,
    count_lines,
    count_lines_checked,
    numerology,
    swept_locus_degree,
    torus_weights,
)

ExactInt = int
ExactRational = Fraction

__all__ = [
    "BACKEND_NAME",
    "BracketCheckReport",
    "ContactSystem",
    "ContextMismatchError",
    "DEFAULT_PRIME",
    "DegenerateWeightsError",
    "ExactInt",
    "ExactRational",
    "FanoRegimeReport",
    "FormalBundle",
    "GeometryError",
    "GlobalGenReport",
    "GrassGenReport",
    "Grassmannian",
    "IncidenceClass",
    "IncidenceRangeError",
    "IncidenceVariety",
    "MultiPoly",
    "NumerologyReport",
    "Partition",
    "RankError",
    "SchubertClass",
    "ShapeError",
    "Wedge2Report",
    "WeightVector",
    "as_partition",
    "bott_count_lines",
    "box_complement",
    "bracket_pairing_check",
    "canonical_class",
    "canonical_class_via_bundles",
    "check_gg_grassmann",
    "check_gg_pn",
    "conjugate",
    "contact_rank",
    "count_lines",
    "count_lines_checked",
    "decompose_symmetric_pair",
    "divisor",
    "divisor_coefficients",
    "dual_bundle",
    "from_grassmannian",
    "h_class",
    "inc_integrate",
    "integrate",
    "jet_bundle",
    "l_class",
    "line_forms_bundle",
    "lines_in_projective_space",
    "lr_coefficient",
    "numerology",
    "osculating_bundle",
    "osculating_canonical_class",
    "osculating_class",
    "osculating_degree",
    "partitions_in_box",
    "poincare_dual",
    "random_contact_system",
    "schur_polynomial",
    "semistandard_tableaux",
    "sigma",
    "swept_locus_degree",
    "sym_power_rank2",
    "sym_power_rank2_via_roots",
    "tautological_sub_dual",
    "tensor_line",
    "top_chern",
    "torus_weights",
    "trivial_bundle",
    "vanishing_subbundle",
    "wedge2_image_report",
    "whitney_quotient",
]
