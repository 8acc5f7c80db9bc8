"""Tests for the matrix model of the radical groups and the orbit method.

The frozen numbers come from independent hand computations: class
counts of the extraspecial group of order 27, element counts, and the
small coadjoint orbit structures that can be checked by hand.
"""

import random

import numpy as np
import pytest

from radchar.falinalg import FfMatrix, conj_transpose, reversal_matrix
from radchar.qpoly import QPoly
from radchar.orbitmethod import (
    DualElement,
    RadicalContext,
    RadicalParams,
    class_count_brute,
    coadjoint_act,
    coadjoint_permutation,
    coefficient_matrix,
    dual_index,
    group_inv,
    group_mul,
    orbit_census,
    orbit_of,
    orbit_partition,
    pairing_nondegeneracy_check,
    radical_order,
)


def ctx_for(x, n, d, q):
    return RadicalContext(RadicalParams(x, n, d), q)


def rand_element(ctx, rng):
    f = ctx.field
    d, n = ctx.d, ctx.n

    def rnd(shape):
        flat = [rng.randrange(f.q) for _ in range(shape[0] * shape[1])]
        return np.array(flat, dtype=np.int16).reshape(shape)

    a = rnd((d, n - d))
    if ctx.params.x == "C":
        u = rnd((d, d))
        b1 = f._add[u, u.T]
        b2 = rnd((d, n - d))
    elif ctx.params.x == "D":
        u = rnd((d, d))
        b1 = f._sub[u, u.T]
        b2 = rnd((d, n - d))
    else:
        b1 = rnd((d, n - d))
        w = rnd((d, d))
        S = f._sub[w, f._frob[w.T]]
        b2 = S[:, ::-1]
    return ctx.element(b1, b2, a)


def test_params_validation():
    with pytest.raises(ValueError, match="one of C, D, U"):
        RadicalParams("B", 3, 1)
    with pytest.raises(ValueError, match="d out of range"):
        RadicalParams("C", 3, 0)
    with pytest.raises(ValueError, match="d out of range"):
        RadicalParams("C", 3, 4)
    with pytest.raises(ValueError, match="d out of range"):
        RadicalParams("U", 3, 3)
    with pytest.raises(ValueError, match="n out of range"):
        RadicalParams("C", 0, 0)
    # type U allows d = 0 (the trivial group)
    assert RadicalParams("U", 3, 0).order_exponent == 0


def test_params_dynkin_warnings():
    with pytest.warns(UserWarning, match="Dynkin"):
        RadicalParams("C", 2, 1)
    with pytest.warns(UserWarning, match="Dynkin"):
        RadicalParams("D", 3, 2)


def test_radical_order_examples():
    assert radical_order(RadicalParams("C", 2, 1)) == QPoly.q_power(3)
    assert radical_order(RadicalParams("D", 4, 2)) == QPoly.q_power(9)
    assert radical_order(RadicalParams("U", 2, 1)) == QPoly.q_power(5)
    assert radical_order(RadicalParams("C", 3, 3)) == QPoly.q_power(6)
    assert radical_order(RadicalParams("D", 4, 1)) == QPoly.q_power(6)
    assert radical_order(RadicalParams("C", 2, 1)).eval_at(3) == 27


def test_element_counts_exhaustive():
    for (x, n, d, q), expected in [
        (("C", 2, 1, 3), 27),
        (("U", 2, 1, 3), 243),
        (("D", 3, 1, 3), 81),
    ]:
        ctx = ctx_for(x, n, d, q)
        keys = {g._ambient_codes().tobytes() for g in ctx.elements()}
        assert len(keys) == expected == q ** ctx.params.order_exponent


def test_group_law_closure_exhaustive():
    ctx = ctx_for("C", 2, 1, 3)
    els = list(ctx.elements())
    ident = ctx.identity()
    for g in els:
        assert group_mul(g, ident) == g
        assert group_mul(ident, g) == g
    # closure: every one of the 729 products must decompose cleanly
    for g in els:
        for h in els:
            group_mul(g, h)
    # associativity on a spread of triples
    rng = random.Random(5)
    for _ in range(60):
        g, h, k = (rng.choice(els) for _ in range(3))
        assert group_mul(group_mul(g, h), k) == group_mul(g, group_mul(h, k))


def test_h_and_a_are_subgroups():
    for ctx in [ctx_for("C", 3, 2, 3), ctx_for("U", 2, 1, 3)]:
        f = ctx.field
        hs = list(ctx.h_elements())
        for g in hs[:6]:
            for h in hs[:6]:
                prod = group_mul(g, h)
                assert np.array_equal(prod._a, f._add[g._a, h._a])
                assert not prod._b1.any() and not prod._b2.any()
        rng = random.Random(3)
        for _ in range(10):
            g, h = rand_element(ctx, rng), rand_element(ctx, rng)
            ga = ctx.a_element(g._b1, g._b2)
            ha = ctx.a_element(h._b1, h._b2)
            prod = group_mul(ga, ha)
            assert not prod._a.any()
            assert np.array_equal(prod._b1, f._add[ga._b1, ha._b1])
            assert np.array_equal(prod._b2, f._add[ga._b2, ha._b2])


def test_inverse_round_trip():
    rng = random.Random(11)
    for ctx in [ctx_for("C", 3, 2, 3), ctx_for("D", 4, 2, 3), ctx_for("U", 3, 1, 3)]:
        ident = ctx.identity()
        for _ in range(25):
            g = rand_element(ctx, rng)
            assert group_mul(g, group_inv(g)) == ident
            assert group_mul(group_inv(g), g) == ident


def test_group_mul_random_closure_u():
    # every product must decompose back into valid constrained blocks
    rng = random.Random(17)
    ctx = ctx_for("U", 3, 2, 3)
    for _ in range(40):
        g, h = rand_element(ctx, rng), rand_element(ctx, rng)
        prod = group_mul(g, h)
        recon = group_mul(prod, ctx.identity())
        assert recon == prod


def test_element_validation_errors():
    ctx = ctx_for("C", 3, 2, 3)
    with pytest.raises(ValueError, match="symmetric"):
        ctx.element([[0, 1], [2, 0]], [[0], [0]], [[0], [0]])
    with pytest.raises(ValueError, match="shape"):
        ctx.element([[0]], [[0], [0]], [[0], [0]])
    ctxd = ctx_for("D", 4, 2, 3)
    with pytest.raises(ValueError, match="skew"):
        ctxd.element([[1, 0], [0, 0]], [[0, 0], [0, 0]], [[0, 0], [0, 0]])
    ctxu = ctx_for("U", 2, 1, 3)
    with pytest.raises(ValueError, match="skew-Hermitian"):
        ctxu.element([[0]], [[1]], [[0]])
    with pytest.raises(ValueError, match="wrong field"):
        other = FfMatrix(ctx_for("C", 3, 2, 5).field, [[0, 0], [0, 0]])
        ctx.element(other, [[0], [0]], [[0], [0]])


def test_dual_validation_errors():
    ctx = ctx_for("C", 3, 2, 3)
    with pytest.raises(ValueError, match="symmetric"):
        ctx.dual([[0, 1], [2, 0]], [[0], [0]], [[0, 0]])
    with pytest.raises(ValueError, match="b2 transposed"):
        ctx.dual([[0, 0], [0, 0]], [[1], [0]], [[0, 0]])
    ctxu = ctx_for("U", 2, 1, 3)
    with pytest.raises(ValueError, match="twisted transpose"):
        ctxu.dual([[1]], [[0]], [[3]])


def test_coadjoint_frozen_example():
    # smallest type C instance: A = 1 sends (b1, b3, b2) = (1, 0, 0)
    # to (1, -1, -1), which is (1, 2, 2) in codes
    ctx = ctx_for("C", 2, 1, 3)
    g = ctx.h_element([[1]])
    alpha = ctx.dual_from_free([[1]], [[0]])
    beta = coadjoint_act(g, alpha)
    assert beta._b1.tolist() == [[1]]
    assert beta._b3.tolist() == [[2]]
    assert beta._b2.tolist() == [[2]]


def _cd_closed_form(alpha, A: FfMatrix) -> DualElement:
    ctx = alpha.ctx
    b1, b3, b2 = alpha.b1, alpha.b3, alpha.b2
    return ctx.dual(b1, b3 - b1 @ A, b2 - A.T @ b1)


def _u_closed_form(alpha, A1: FfMatrix) -> DualElement:
    ctx = alpha.ctx
    f = ctx.field
    d, n = ctx.d, ctx.n
    A2 = -(reversal_matrix(f, n - d) @ conj_transpose(A1) @ reversal_matrix(f, d))
    b1, b3, b2 = alpha.b1, alpha.b3, alpha.b2
    return ctx.dual(b1 + A2 @ b2, b3 - b2 @ A1, b2)


def test_coadjoint_matches_closed_form_cd():
    for ctx in [ctx_for("C", 2, 1, 3), ctx_for("D", 3, 2, 3)]:
        for g in ctx.h_elements():
            for alpha in ctx.duals():
                assert coadjoint_act(g, alpha) == _cd_closed_form(alpha, g.h_a)


def test_coadjoint_matches_closed_form_u():
    ctx = ctx_for("U", 2, 1, 3)
    for g in ctx.h_elements():
        for alpha in ctx.duals():
            assert coadjoint_act(g, alpha) == _u_closed_form(alpha, g.h_a)


def test_a_part_acts_trivially():
    ctx = ctx_for("C", 2, 1, 3)
    duals = list(ctx.duals())
    for g in ctx.elements():
        hpart = ctx.h_element(g._a)
        for alpha in duals:
            assert coadjoint_act(g, alpha) == coadjoint_act(hpart, alpha)
    rng = random.Random(23)
    ctxu = ctx_for("U", 2, 1, 3)
    dualsu = list(ctxu.duals())
    for _ in range(15):
        g = rand_element(ctxu, rng)
        hpart = ctxu.h_element(g._a)
        for alpha in rng.sample(dualsu, 6):
            assert coadjoint_act(g, alpha) == coadjoint_act(hpart, alpha)


def test_fixed_points_iff_coefficient_block_vanishes():
    for ctx in [ctx_for("C", 2, 1, 3), ctx_for("D", 3, 2, 3), ctx_for("U", 2, 1, 3)]:
        for alpha in ctx.duals():
            block = alpha._b2 if ctx.params.x == "U" else alpha._b1
            rec = orbit_of(alpha)
            assert (rec.size == 1) == (not block.any())


def test_coefficient_matrix_block_diagonal():
    ctx = ctx_for("C", 3, 1, 3)
    alpha = ctx.dual_from_free([[2]], [[0], [0]])
    P = coefficient_matrix(alpha)
    assert P.codes.tolist() == [[2, 0], [0, 2]]
    ctxu = ctx_for("U", 2, 1, 3)
    t = ctxu.field.gen()
    beta = ctxu.dual_from_free([[t.code]], [[0]])
    assert coefficient_matrix(beta).codes.tolist() == [[t.code]]


def test_orbit_examples():
    ctx = ctx_for("C", 2, 1, 3)
    rec = orbit_of(ctx.dual_from_free([[1]], [[0]]))
    assert (rec.size, rec.stabilizer_order, rec.e, rec.degree) == (3, 1, 1, 3)
    ctxu = ctx_for("U", 2, 1, 3)
    t = ctxu.field.gen()
    recu = orbit_of(ctxu.dual_from_free([[t.code]], [[0]]))
    assert (recu.size, recu.stabilizer_order, recu.e, recu.degree) == (9, 1, 1, 9)


def test_orbit_census_frozen_values():
    expected = {
        ("C", 2, 1, 3): {0: (3, 3, 9, 1), 1: (6, 2, 2, 3)},
        ("C", 3, 1, 3): {0: (9, 9, 81, 1), 2: (18, 2, 2, 9)},
        ("C", 3, 2, 3): {0: (9, 9, 81, 1), 1: (72, 24, 72, 3), 2: (162, 18, 18, 9)},
        ("D", 3, 2, 3): {0: (9, 9, 81, 1), 2: (18, 2, 2, 9)},
        ("U", 2, 1, 3): {0: (9, 9, 81, 1), 1: (18, 2, 2, 9)},
    }
    for (x, n, d, q), rows in expected.items():
        census = orbit_census(RadicalParams(x, n, d), q)
        got = {r.e: (r.dual_count, r.orbit_count, r.char_count, r.degree) for r in census.rows}
        assert got == rows, (x, n, d, q)


def test_orbit_census_against_class_count():
    # sum of character counts must equal the number of conjugacy classes
    for x, n, d, q in [("C", 2, 1, 3), ("C", 3, 1, 3), ("U", 2, 1, 3), ("D", 3, 2, 3), ("C", 2, 1, 5)]:
        params = RadicalParams(x, n, d)
        census = orbit_census(params, q)
        assert census.total_chars() == class_count_brute(params, q)
        assert census.sum_of_squares() == q ** params.order_exponent


def test_extraspecial_class_count():
    # R_u for (C, 2, 1) at q = 3 is the extraspecial group of order 27
    # and exponent 3: 11 classes, 9 linear characters, 2 of degree 3
    params = RadicalParams("C", 2, 1)
    assert class_count_brute(params, 3) == 11
    census = orbit_census(params, 3)
    assert census.by_e[0].char_count == 9
    assert census.by_e[1].char_count == 2
    assert census.by_e[1].degree == 3


def test_abelian_full_flag_case():
    # d = n gives an abelian group: every element is its own class
    params = RadicalParams("C", 3, 3)
    assert class_count_brute(params, 3) == 3 ** params.order_exponent == 729
    census = orbit_census(params, 3)
    assert census.rows == (census.by_e[0],)
    assert census.by_e[0].char_count == 729


def test_nonabelian_type_d_edge():
    # the matrix model for (D, n, n-1) is not abelian for n >= 3: its
    # class count falls short of the group order
    params = RadicalParams("D", 3, 2)
    order = 3 ** params.order_exponent
    assert order == 243
    assert class_count_brute(params, 3) == 83 < order


def test_orbit_partition_consistency():
    ctx = ctx_for("C", 3, 2, 3)
    records = orbit_partition(ctx)
    assert sum(r.size for r in records) == ctx.dual_count() == 243
    census = orbit_census(ctx.params, ctx)
    by_e_duals = {}
    by_e_orbits = {}
    for r in records:
        by_e_duals[r.e] = by_e_duals.get(r.e, 0) + r.size
        by_e_orbits[r.e] = by_e_orbits.get(r.e, 0) + 1
        assert r.size * r.stabilizer_order == ctx.q ** ctx.params.h_exponent
    assert by_e_duals == {r.e: r.dual_count for r in census.rows}
    assert by_e_orbits == {r.e: r.orbit_count for r in census.rows}


def test_action_law_permutations():
    ctx = ctx_for("C", 2, 1, 3)
    duals, index = dual_index(ctx)
    els = list(ctx.elements())
    perms = {g.key(): coadjoint_permutation(ctx, g, duals, index) for g in els}
    for g in els:
        for h in els:
            gh = group_mul(g, h)
            assert np.array_equal(perms[gh.key()], perms[g.key()][perms[h.key()]])


def test_action_law_permutations_u_sampled():
    ctx = ctx_for("U", 2, 1, 3)
    duals, index = dual_index(ctx)
    rng = random.Random(29)
    cache = {}

    def perm_of(g):
        if g.key() not in cache:
            cache[g.key()] = coadjoint_permutation(ctx, g, duals, index)
        return cache[g.key()]

    for _ in range(40):
        g, h = rand_element(ctx, rng), rand_element(ctx, rng)
        gh = group_mul(g, h)
        assert np.array_equal(perm_of(gh), perm_of(g)[perm_of(h)])


def test_pairing_nondegeneracy():
    cases = [
        ("C", 2, 1, 3),
        ("C", 3, 2, 3),
        ("C", 3, 3, 3),
        ("C", 2, 1, 9),
        ("D", 4, 2, 3),
        ("D", 3, 1, 5),
        ("U", 2, 1, 3),
        ("U", 3, 2, 3),
        ("U", 2, 1, 9),
    ]
    for x, n, d, q in cases:
        assert pairing_nondegeneracy_check(RadicalParams(x, n, d), q), (x, n, d, q)


def test_budget_errors():
    with pytest.raises(ValueError, match="enumeration too large"):
        class_count_brute(RadicalParams("C", 4, 2), 3, budget=100)
    with pytest.raises(ValueError, match="enumeration too large"):
        orbit_census(RadicalParams("C", 4, 2), 3, budget=10)
    ctx = ctx_for("C", 2, 1, 3)
    with pytest.raises(ValueError, match="enumeration too large"):
        orbit_of(ctx.dual_from_free([[1]], [[0]]), budget=1)


def test_trivial_group_u_d0():
    params = RadicalParams("U", 2, 0)
    ctx = RadicalContext(params, 3)
    els = list(ctx.elements())
    assert len(els) == 1
    census = orbit_census(params, 3)
    assert census.total_chars() == 1
    assert class_count_brute(params, 3) == 1
