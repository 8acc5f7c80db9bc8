"""Coadjoint orbits end to end: type C, n = 3, d = 2, at q = 3.

Builds one linear functional on the normal abelian part, watches the
acting group move it, reads the degree off the rank of the coefficient
matrix, and then does the same for all 243 functionals at once to
reproduce the full character degree census.
"""

from radchar.charcensus import census_table
from radchar.falinalg import rank
from radchar.orbitmethod import (
    RadicalContext,
    RadicalParams,
    coadjoint_act,
    coefficient_matrix,
    orbit_census,
    orbit_of,
)


def main():
    params = RadicalParams("C", 3, 2)
    ctx = RadicalContext(params, 3)
    print(f"radical of type C, n=3, d=2 over F_3: order 3^{params.order_exponent}")
    print(f"dual space of the normal part: {ctx.dual_count()} functionals")

    alpha = ctx.dual_from_free([[1, 0], [0, 0]], [[0, 0]])
    print("\none functional, as the lower-left block pattern it represents:")
    print(alpha.ambient().codes)

    g = ctx.h_element([[1], [0]])
    moved = coadjoint_act(g, alpha)
    print("\nthe same functional after one acting element:")
    print(moved.ambient().codes)

    P = coefficient_matrix(alpha)
    print("\ncoefficient matrix of its stabilizer system, one block per column group:")
    print(P.codes)
    print(f"rank {rank(P)} -> orbit size 3^{rank(P)}, character degree 3^{rank(P)}")

    record = orbit_of(alpha)
    print(
        f"orbit size {record.size}, stabilizer order {record.stabilizer_order},"
        f" degree {record.degree}"
    )
    assert record.size == 3 ** rank(P)
    assert record.size * record.stabilizer_order == 3 ** params.h_exponent

    print("\nnow the whole dual space, bucketed by rank:")
    census = orbit_census(params, 3)
    for row in census.rows:
        print(
            f"  e={row.e}: {row.dual_count:4d} functionals, {row.orbit_count:3d} orbits,"
            f" {row.char_count:3d} characters of degree {row.degree}"
        )
    assert census.sum_of_squares() == 3 ** params.order_exponent

    print("\nthe symbolic table predicts the same numbers:")
    table = census_table(params)
    for row in table.rows:
        print(f"  e={row.e}: count {str(row.count):>12} -> {row.count_at(3):4d}")
    assert table.counts_at(3) == {r.e: (r.degree, r.char_count) for r in census.rows}
    print("\nexact agreement between enumeration and the closed forms.")


if __name__ == "__main__":
    main()
