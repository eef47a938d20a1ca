"""Longest common subsequence-and-substring solver for multiple strings.

Finds the longest string that is a subsequence of every sequence in ``xs``
and a contiguous substring of every sequence in ``ys``. Strings are treated
as sequences of Unicode code points.
"""

from ._mlcss import (
    BudgetExceeded,
    OracleGuardExceeded,
    gen_planted,
    gen_random,
    is_subsequence,
    occurs_as_substring,
    oracle_solve,
    solve,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "OracleGuardExceeded",
    "gen_planted",
    "gen_random",
    "is_subsequence",
    "occurs_as_substring",
    "oracle_solve",
    "solve",
    "verify",
]
