"""Minimum-cost many-to-many matching with demands and capacities."""

from ._mmdc import (
    BudgetExceeded,
    InfeasibleInstance,
    Instance,
    ParseError,
    RejectedInstance,
    Solution,
    generate_instance,
    oracle_declared,
    oracle_expanded,
    parse_instance,
    solve,
    solve_assignment_basic,
    solve_certified,
    validate_instance,
    verify_solution,
    write_instance,
    write_solution,
)

__all__ = [
    "BudgetExceeded",
    "InfeasibleInstance",
    "Instance",
    "ParseError",
    "RejectedInstance",
    "Solution",
    "generate_instance",
    "oracle_declared",
    "oracle_expanded",
    "parse_instance",
    "solve",
    "solve_assignment_basic",
    "solve_certified",
    "validate_instance",
    "verify_solution",
    "write_instance",
    "write_solution",
]
