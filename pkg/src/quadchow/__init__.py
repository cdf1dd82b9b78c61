"""quadchow: exact Chow-ring arithmetic for split quadrics.

Integral and mod-2 cycle computations on split quadrics and their products
with a twisting variety, mod-2 Steenrod operations, Chern classes of the
negative tangent bundle, and a harness that mechanically verifies a family
of mod-4 congruences over swept parameters.
"""

from .arith import (
    TruncatedSeries,
    binom_exact,
    binom_mod2,
    series_inverse,
    series_mul,
    set_mutation,
)
from .checks import (
    CHECK_NAMES,
    SweepConfig,
    check_chern,
    check_coeffsum,
    check_degree,
    check_lemma13,
    check_lemma22,
    check_prop21,
    check_thm1,
    check_thm24,
    check_wu,
    run_sweep,
    thm1_admissible,
    thm1_tuples,
)
from .formal import LiftPolicy, Poly, Symbol, gamma, lift, residual_mod, steenrod, y, yint, z, zint
from .quadric import (
    BasisClass,
    Cycle,
    H,
    L,
    QuadricRing,
    chern_neg_tangent,
    chern_series,
    pushforward,
    steenrod_sq,
    subquadric_dim,
)
from .report import ParamTuple, Report, render_json, render_markdown, sort_reports
from .twisted import (
    TCycle,
    cartan_sq,
    external,
    generic_unknown,
    generic_xbar,
    integral_xbar,
    lift_cycle,
    pr_star,
    z_part,
)

__all__ = [
    "BasisClass",
    "CHECK_NAMES",
    "Cycle",
    "H",
    "L",
    "LiftPolicy",
    "ParamTuple",
    "Poly",
    "QuadricRing",
    "Report",
    "SweepConfig",
    "Symbol",
    "TCycle",
    "TruncatedSeries",
    "binom_exact",
    "binom_mod2",
    "cartan_sq",
    "chern_neg_tangent",
    "chern_series",
    "check_chern",
    "check_coeffsum",
    "check_degree",
    "check_lemma13",
    "check_lemma22",
    "check_prop21",
    "check_thm1",
    "check_thm24",
    "check_wu",
    "external",
    "gamma",
    "generic_unknown",
    "generic_xbar",
    "integral_xbar",
    "lift",
    "lift_cycle",
    "pr_star",
    "pushforward",
    "render_json",
    "render_markdown",
    "residual_mod",
    "run_sweep",
    "series_inverse",
    "series_mul",
    "set_mutation",
    "sort_reports",
    "steenrod",
    "steenrod_sq",
    "subquadric_dim",
    "thm1_admissible",
    "thm1_tuples",
    "y",
    "yint",
    "z",
    "zint",
]
