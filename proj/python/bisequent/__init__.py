"""Bisequent calculus prover, countermodel finder and interpolant builder for
three-valued logics."""

from ._core import (
    BscError,
    check,
    countermodel,
    interpolate,
    list_logics,
    prove,
    run_cli,
    synthesize,
    value,
    verify_interpolant,
    verify_rules,
)

__all__ = [
    "BscError",
    "check",
    "countermodel",
    "interpolate",
    "list_logics",
    "prove",
    "run_cli",
    "synthesize",
    "value",
    "verify_interpolant",
    "verify_rules",
]
