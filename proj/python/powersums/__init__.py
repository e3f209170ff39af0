"""Exact power-sum polynomials.

Closed forms of S_k(n) = 1^k + ... + n^k, their representations as
polynomials in S_1(n) and S_2(n), Faulhaber decompositions, relation
polynomials, and a brute-force verification oracle.  All arithmetic is
exact rational arithmetic.
"""

from fractions import Fraction

from ._powersums import (
    BiPoly,
    DecompResult,
    PowerSumTable,
    Rational,
    SweepReport,
    UniPoly,
    __version__,
    brute_force_sum,
    decompose_greedy,
    decompose_pure_a,
    term_counts,
)

__all__ = [
    "BiPoly",
    "DecompResult",
    "PowerSumTable",
    "Rational",
    "SweepReport",
    "UniPoly",
    "__version__",
    "brute_force_sum",
    "decompose_greedy",
    "decompose_pure_a",
    "term_counts",
    "to_fraction",
]


def to_fraction(r: Rational) -> Fraction:
    """Convert a Rational to the standard-library Fraction."""
    return Fraction(r.num, r.den)
