"""Symbolic censuses of irreducible character degrees for the radicals.

The irreducible characters of a radical group R_u(x, n, d) come in
layers indexed by the rank r of one coefficient block of a linear
functional: symmetric d-by-d for type C, skew-symmetric for D,
skew-Hermitian for U.  A block of rank r contributes characters of
degree |k|^e with e = (n - d) * r, where k is the entry field (F_q for
C and D, F_{q^2} for U).  The number of characters in layer e is the
rank census polynomial of the block scaled by a power of q counting
the remaining free dual coordinates:

    C:  q^(2 d (n-d) - 2 e) * sym_rank_census(d, r)
    D:  q^(2 d (n-d) - 2 e) * skew_rank_census(d, r)
    U:  q^(4 d (n-d) - 4 e) * skewherm_rank_census(d, r, variant)

For d = n the radical is abelian and the whole census is one row of
linear characters.  Everything here is an exact polynomial identity in
q; the numeric oracles live in orbitmethod.

The type U rows inherit the printed/corrected variant switch of
skewherm_rank_census.  Only the corrected variant can satisfy the sum
of squared degrees identity (the printed one carries a spurious q - 1
factor), which is exactly what sum_of_squares_check is for.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import VARIANTS, skew_rank_census, skewherm_rank_census, sym_rank_census
from .orbitmethod import RadicalParams, radical_order
from .qpoly import QPoly

__all__ = [
    "DegreeCensusRow",
    "DegreeCensus",
    "degree_exponents",
    "degree_poly",
    "char_count_poly",
    "census_table",
    "sum_of_squares_check",
    "qminus1_report",
]


def degree_exponents(params: RadicalParams) -> list[tuple[int, int]]:
    """Attainable pairs (r, e): block rank r and degree exponent e.

    Type D only sees even ranks.  For d = n there is a single layer of
    linear characters, reported as (0, 0).
    """
    n, d = params.n, params.d
    if d == n:
        return [(0, 0)]
    step = 2 if params.x == "D" else 1
    return [(r, (n - d) * r) for r in range(0, d + 1, step)]


def _rank_for_exponent(params: RadicalParams, e: int):
    # invert e = (n - d) r; None marks an unattainable exponent
    n, d = params.n, params.d
    if e % (n - d):
        return None
    r = e // (n - d)
    if r > d or (params.x == "D" and r % 2):
        return None
    return r


def degree_poly(params: RadicalParams, e: int) -> QPoly:
    """Character degree |k|^e as a polynomial in q (q^e, or q^2e for U)."""
    if e < 0:
        raise ValueError("degree exponent out of range")
    return QPoly.q_power(params.k_exponent * e)


def char_count_poly(params: RadicalParams, e: int, variant: str = "corrected") -> QPoly:
    """Number of irreducible characters of degree |k|^e, exact in q.

    Exponents no character degree attains give the zero polynomial.
    """
    if variant not in VARIANTS:
        raise ValueError("unknown variant")
    if e < 0:
        raise ValueError("degree exponent out of range")
    n, d = params.n, params.d
    if d == n:
        return radical_order(params) if e == 0 else QPoly.zero()
    r = _rank_for_exponent(params, e)
    if r is None:
        return QPoly.zero()
    if params.x == "C":
        return QPoly.q_power(2 * d * (n - d) - 2 * e) * sym_rank_census(d, r)
    if params.x == "D":
        return QPoly.q_power(2 * d * (n - d) - 2 * e) * skew_rank_census(d, r)
    return QPoly.q_power(4 * d * (n - d) - 4 * e) * skewherm_rank_census(d, r, variant)


@dataclass(frozen=True)
class DegreeCensusRow:
    """One degree layer: block rank r, exponent e, degree and count in q."""

    r: int
    e: int
    degree: QPoly
    count: QPoly

    def count_at(self, q: int) -> int:
        return self.count.eval_at(q)

    def degree_at(self, q: int) -> int:
        return self.degree.eval_at(q)


@dataclass(frozen=True)
class DegreeCensus:
    """The full character degree census of one radical, rows by rank."""

    params: RadicalParams
    variant: str
    rows: tuple[DegreeCensusRow, ...]

    def by_e(self) -> dict[int, DegreeCensusRow]:
        return {row.e: row for row in self.rows}

    def total_poly(self) -> QPoly:
        """Number of irreducible characters, hence of conjugacy classes."""
        total = QPoly.zero()
        for row in self.rows:
            total = total + row.count
        return total

    def sum_of_squares(self) -> QPoly:
        """Sum of count * degree^2 over all rows; should be the group order."""
        total = QPoly.zero()
        for row in self.rows:
            total = total + row.count * row.degree * row.degree
        return total

    def order_poly(self) -> QPoly:
        return radical_order(self.params)

    def counts_at(self, q: int) -> dict[int, tuple[int, int]]:
        """Map e -> (degree, count) with everything evaluated at q."""
        return {row.e: (row.degree_at(q), row.count_at(q)) for row in self.rows}


def census_table(params: RadicalParams, variant: str = "corrected") -> DegreeCensus:
    """Symbolic census of character degrees for R_u(x, n, d)."""
    rows = tuple(
        DegreeCensusRow(r, e, degree_poly(params, e), char_count_poly(params, e, variant))
        for r, e in degree_exponents(params)
    )
    return DegreeCensus(params, variant, rows)


def sum_of_squares_check(params: RadicalParams, variant: str = "corrected") -> bool:
    """Exact identity sum count * degree^2 == |R_u| as polynomials in q."""
    census = census_table(params, variant)
    return census.sum_of_squares() == radical_order(params)


def qminus1_report(params: RadicalParams, variant: str = "corrected") -> list[tuple[int, int, list[int]]]:
    """Rows (r, e, coeffs) with each count rewritten in powers of q - 1.

    All coefficients are nonnegative for the corrected variant; that is
    the positivity phenomenon the report is meant to expose.
    """
    return [
        (row.r, row.e, row.count.to_qminus1_basis())
        for row in census_table(params, variant).rows
    ]
