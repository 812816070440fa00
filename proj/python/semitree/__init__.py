"""Spanning-tree vectors over commutative semirings.

Thin wrapper around the compiled core. Matrices and scalars use the same
JSON-style shapes as the CLI's input files: an algebra dict plus nested lists,
with "+inf"/"-inf" strings for the infinities, element-name lists for sets,
and [lo, hi] pairs for intervals.
"""

from ._semitree import (
    ORACLE_CAP_LIMIT,
    AlgebraMismatch,
    CapExceeded,
    DimensionMismatch,
    Error,
    IndexOutOfRange,
    InvalidScalar,
    NotASemifield,
    ParseError,
    PreconditionViolated,
    ZeroInverse,
    cayley,
    check_balance,
    check_scaling,
    count_ops,
    is_stochastic,
    oracle_cap,
    rst,
    reduce,
    unicyclic_total,
)

__all__ = [
    "ORACLE_CAP_LIMIT",
    "AlgebraMismatch",
    "CapExceeded",
    "DimensionMismatch",
    "Error",
    "IndexOutOfRange",
    "InvalidScalar",
    "NotASemifield",
    "ParseError",
    "PreconditionViolated",
    "ZeroInverse",
    "cayley",
    "check_balance",
    "check_scaling",
    "count_ops",
    "is_stochastic",
    "oracle_cap",
    "rst",
    "reduce",
    "unicyclic_total",
]
