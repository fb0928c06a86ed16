"""Weighted Riesz equilibrium measures on the hyperdisk."""

from ._core import (  # noqa: F401
    CriticalHeight,
    EquilibriumResult,
    MonomialField,
    PointChargeField,
    RieszParams,
    RingSolution,
    VerificationReport,
    beta_fn,
    coulomb3d_density,
    coulomb3d_p,
    critical_height,
    critical_radius,
    digamma,
    disk_capacity,
    disk_robin_constant,
    equilibrium_density,
    gamma_fn,
    gauss_2f1,
    h_minus,
    incomplete_beta,
    monomial_density,
    monomial_support_radius,
    ms_functional,
    newtonian_density,
    newtonian_p,
    p_of_h,
    pochhammer,
    point_charge_density,
    ring_solve,
    solve_on_disk,
    verify_disk,
    verify_ring,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
