"""Extended-precision evaluation of the Riemann zeta function in the
critical strip: an exact contour representation, five asymptotic
expansions, partial-sum relations, and the verification-table harness."""

from ._zeta_asym import (
    RegimeViolation,
    TooCloseToLatticePoint,
    NearSingularU,
    chi,
    gamma,
    phi_quadrature,
    phi_rational,
    polylog_unit,
    run_table,
    siegel_psi,
    sum_direct,
    sum_th51,
    sum_th52,
    sum_th53,
    table_ids,
    zeta_confluent,
    zeta_exact,
    zeta_large_eta_mirror,
    zeta_reference,
    zeta_region1,
    zeta_small_eta,
    zeta_sqrt_mirror,
    zeta_sqrt_region,
)

__all__ = [
    "RegimeViolation",
    "TooCloseToLatticePoint",
    "NearSingularU",
    "chi",
    "gamma",
    "phi_quadrature",
    "phi_rational",
    "polylog_unit",
    "run_table",
    "siegel_psi",
    "sum_direct",
    "sum_th51",
    "sum_th52",
    "sum_th53",
    "table_ids",
    "zeta_confluent",
    "zeta_exact",
    "zeta_large_eta_mirror",
    "zeta_reference",
    "zeta_region1",
    "zeta_small_eta",
    "zeta_sqrt_mirror",
    "zeta_sqrt_region",
]
