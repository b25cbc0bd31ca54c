"""Exact torsion invariants of real biquadratic fields.

Reports are plain dicts following the JSON schema of ``tq compute --json``
(rationals as "num/den" strings). Functions returning individual values use
``fractions.Fraction``.
"""

from ._core import (
    ContractViolation,
    DomainError,
    InputError,
    field_data,
    induce_from_subgroup,
    l_ratio_numeric_check,
    local_galois,
    odd_part_mod4,
    omega_loc_torsion,
    resolvent_factor_check,
    sweep,
    tame_determinants,
    verify_residue_resolution,
)

__all__ = [
    "ContractViolation",
    "DomainError",
    "InputError",
    "field_data",
    "induce_from_subgroup",
    "l_ratio_numeric_check",
    "local_galois",
    "odd_part_mod4",
    "omega_loc_torsion",
    "resolvent_factor_check",
    "sweep",
    "tame_determinants",
    "verify_residue_resolution",
]
