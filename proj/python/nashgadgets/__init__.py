"""Exact three-player game gadgets, reductions and equilibrium checks.

Numbers are passed as literal strings: rationals like ``"-3/4"`` and
quadratic irrationals as ``"alg a b d"`` meaning ``a + b*sqrt(d)``.
"""

from ._core import (
    Game,
    NashGadgetsError,
    bilinearize,
    build_H1,
    build_H2,
    build_H3,
    build_H4,
    build_H5,
    check_coalition,
    check_ne,
    check_pareto,
    check_strong,
    eval_payoff,
    find_equilibria,
    is_symmetric,
    is_zero_sum,
    reduce,
    value,
)

__all__ = [
    "Game",
    "NashGadgetsError",
    "bilinearize",
    "build_H1",
    "build_H2",
    "build_H3",
    "build_H4",
    "build_H5",
    "check_coalition",
    "check_ne",
    "check_pareto",
    "check_strong",
    "eval_payoff",
    "find_equilibria",
    "is_symmetric",
    "is_zero_sum",
    "reduce",
    "value",
]
