"""p-parity of elliptic curves in dihedral extensions."""

from ._core import (
    CliResult,
    certify,
    closeness_check,
    crt,
    enumerate_settings,
    generate_table,
    inner_product_irreducibles,
    invariants,
    irreducibles,
    local_reduction,
    make_semistable,
    printed_table,
    regulator_constant,
    run_cli,
    sweep,
    t_theta_member,
    verify_local,
    verify_reduction_identity,
)

__all__ = [
    "CliResult",
    "certify",
    "closeness_check",
    "crt",
    "enumerate_settings",
    "generate_table",
    "inner_product_irreducibles",
    "invariants",
    "irreducibles",
    "local_reduction",
    "make_semistable",
    "printed_table",
    "regulator_constant",
    "run_cli",
    "sweep",
    "t_theta_member",
    "verify_local",
    "verify_reduction_identity",
]
