"""Reduction chain: polar fold, circle chart, shell sums, words, predictor.

Every identity is checked against a literal scalar-arithmetic oracle built
in the test itself, never against the vectorized implementation under test.
"""

import numpy as np
import pytest

from permbent import (
    chord_set,
    circle_point,
    ctx_new,
    cubic_coeff,
    fold_walsh,
    inverse_cube_table,
    linear_coeff,
    outer_frame,
    predict_inner_walsh,
    shell_hadamard,
    shell_sum,
    shell_sums_all,
    shell_walsh_outer,
    shell_word,
    trace_one_hadamard,
    trace_one_map,
    trace_one_set,
    trace_zero_space,
    walsh_naive,
)
from permbent.reduction import fold_walsh_pool, shell_hadamard_all, verify_shell_branch


def _outer_codes(ctx):
    return range(ctx.q, ctx.order2)


# -- frames -------------------------------------------------------------------


def test_outer_frame_reconstruction():
    for e in (2, 4):
        ctx = ctx_new(e)
        for alpha in (1, 2):
            for code in _outer_codes(ctx):
                beta = ctx.dec2(code)
                fr = outer_frame(ctx, alpha, beta)
                assert fr.b == beta[1] != 0
                assert ctx.scale2(fr.b, (fr.c, 1)) == beta
                assert fr.kappa == ctx.div(alpha, ctx.pow(fr.b, 3))
                assert ctx.is_cube(fr.kappa) == ctx.is_cube(alpha)


def test_outer_frame_rejects_base_field_point():
    ctx = ctx_new(2)
    with pytest.raises(ValueError):
        outer_frame(ctx, 1, (3, 0))
    with pytest.raises(ValueError):
        outer_frame(ctx, 0, (0, 1))


# -- fold coefficients --------------------------------------------------------


def test_cubic_coeff_against_definition():
    for e in (2, 4):
        ctx = ctx_new(e)
        for z in ctx.mu_elements():
            w = ctx.add2(ctx.pow2(z, 9), ctx.pow2(z, -9))
            assert w[1] == 0  # fixed by Frobenius, lands in the base field
            for alpha in (1, ctx.g):
                assert cubic_coeff(ctx, alpha, z) == ctx.mul(alpha, w[0])
        assert cubic_coeff(ctx, 1, (1, 0)) == 0


def test_linear_coeff_against_definition():
    for e in (2, 4):
        ctx = ctx_new(e)
        betas = [ctx.dec2(c) for c in (1, ctx.q + 1, 2 * ctx.q + 3, ctx.order2 - 1)]
        for z in ctx.mu_elements():
            zinv = ctx.inv2(z)
            chord = ctx.add2(z, zinv)
            for beta in betas:
                lhs = ctx.add2(
                    ctx.mul2(beta, ctx.pow2(z, 3)),
                    ctx.mul2(ctx.conj(beta), ctx.pow2(zinv, 3)),
                )
                lhs = ctx.add2(lhs, ctx.mul2(ctx.add2(beta, ctx.conj(beta)), chord))
                assert lhs[1] == 0
                assert linear_coeff(ctx, beta, z) == lhs[0]


def test_linear_coeff_at_one():
    ctx = ctx_new(4)
    one = (1, 0)
    for a in ctx.elements():
        assert linear_coeff(ctx, (a, 0), one) == 0
    for code in _outer_codes(ctx):
        beta = ctx.dec2(code)
        assert linear_coeff(ctx, beta, one) == beta[1]  # = beta + conj(beta)


def test_coefficients_reject_off_circle_points():
    ctx = ctx_new(2)
    with pytest.raises(ValueError):
        cubic_coeff(ctx, 1, (0, 1))
    with pytest.raises(ValueError):
        linear_coeff(ctx, (0, 1), (2, 0))


# -- polar fold ---------------------------------------------------------------


def test_fold_matches_naive_exhaustively():
    ctx = ctx_new(2)
    for alpha in ctx.nonzero():
        tt = inverse_cube_table(ctx, alpha)
        for code in range(ctx.order2):
            beta = ctx.dec2(code)
            assert fold_walsh(ctx, alpha, beta) == walsh_naive(ctx, tt, beta)


def test_fold_pool_matches_scalar_fold():
    ctx = ctx_new(4)
    rng = np.random.default_rng(17)
    betas = [ctx.dec2(int(c)) for c in rng.integers(0, ctx.order2, size=32)]
    for alpha in (1, 5, 11):
        pool = fold_walsh_pool(ctx, alpha, betas)
        for k, beta in enumerate(betas):
            assert int(pool[k]) == fold_walsh(ctx, alpha, beta)


# -- circle chart -------------------------------------------------------------


def test_chord_set_dual_construction():
    for e in (2, 4):
        ctx = ctx_new(e)
        chords = chord_set(ctx)
        assert chords == {t for t in ctx.nonzero() if ctx.tr(ctx.inv(t)) == 1}
        assert len(chords) == ctx.q // 2
        # each chord comes from exactly two circle points
        mu = ctx.mu_elements()
        for t in chords:
            assert sum(1 for z in mu if ctx.add2(z, ctx.inv2(z)) == (t, 0)) == 2


def test_circle_chart_identities():
    for e in (2, 4):
        ctx = ctx_new(e)
        images = set()
        for x in ctx.elements():
            pt = circle_point(ctx, x)
            assert pt.a == ctx.mul(x, x) ^ x ^ ctx.lam
            assert ctx.tr(pt.a) == 1 and pt.a != 0 and pt.a != 1
            assert ctx.norm2(pt.z) == 1 and pt.z != (1, 0)
            # the chord of z_x is (A+1)^(-1/2)
            assert ctx.add2(pt.z, ctx.inv2(pt.z)) == (pt.t, 0)
            assert ctx.mul(pt.t, pt.t) == ctx.inv(pt.a ^ 1)
            # cubic weight and its reciprocal-square link to phi
            assert pt.s == ctx.mul(pt.a, ctx.inv(ctx.sqrt(ctx.pow(pt.a ^ 1, 3))))
            assert pt.s != 0
            assert pt.phi == 1 ^ ctx.pow(ctx.inv(pt.s), 2)
            assert pt.phi == pt.a ^ ctx.inv(pt.a) ^ ctx.pow(ctx.inv(pt.a), 2)
            # x and x+1 chart inverse points
            assert circle_point(ctx, x ^ 1).z == ctx.inv2(pt.z)
            images.add(pt.z)
        assert len(images) == ctx.q and (1, 0) not in images


def test_chart_folds_the_coefficients():
    for e in (2, 4):
        ctx = ctx_new(e)
        for x in ctx.elements():
            pt = circle_point(ctx, x)
            s3 = ctx.pow(pt.s, 3)
            for alpha in (1, ctx.g):
                assert cubic_coeff(ctx, alpha, pt.z) == ctx.mul(alpha, s3 ^ pt.s)
            for code in (ctx.q + 2, 3 * ctx.q - 1):
                beta = ctx.dec2(code)
                fr = outer_frame(ctx, 1, beta)
                want = ctx.mul(fr.b, ctx.mul(fr.c ^ x ^ 1, pt.s))
                assert linear_coeff(ctx, beta, pt.z) == want


def test_trace_one_map_permutes():
    for e in (2, 4):
        ctx = ctx_new(e)
        tset = trace_one_set(ctx)
        assert tset == [a for a in ctx.elements() if ctx.tr(a) == 1]
        image = [trace_one_map(ctx, a) for a in tset]
        assert sorted(image) == tset
    ctx = ctx_new(2)
    w = ctx.omega
    w2 = ctx.mul(w, w)
    assert trace_one_set(ctx) == sorted([w, w2])
    assert trace_one_map(ctx, w) == w2 and trace_one_map(ctx, w2) == w


# -- shell sums ---------------------------------------------------------------


def test_shell_sum_against_definition():
    for e, deltas in ((2, (1, 2)), (4, (1, 3))):
        ctx = ctx_new(e)
        for delta in deltas:
            for u in ctx.elements():
                acc = 0
                for x in ctx.elements():
                    phi = circle_point(ctx, x).phi
                    arg = ctx.mul(ctx.mul(delta, phi), ctx.pow(u, 3)) ^ ctx.mul(x ^ 1, u)
                    acc += 1 - 2 * ctx.tr(arg)
                assert shell_sum(ctx, delta, u) == acc


def test_shell_sum_column_properties():
    for e in (2, 4, 6):
        ctx = ctx_new(e)
        for delta in (1, ctx.g):
            tvals = shell_sums_all(ctx, delta)
            assert int(tvals[0]) == ctx.q
            for u in ctx.elements():
                assert int(tvals[u]) == shell_sum(ctx, delta, u)
                assert int(tvals[u]) % 2 == 0
                if ctx.tr(u) == 1:
                    assert int(tvals[u]) == 0


def test_factorization_into_half_space_transform():
    ctx = ctx_new(4)
    tzs = trace_zero_space(ctx)
    for delta in (1, 3):
        for u in tzs.h0:
            v = tzs.rep(u)
            for lift in (v, v ^ 1):  # both preimages give the same product
                sign = 1 - 2 * ctx.tr(ctx.mul(ctx.lam, lift))
                had = trace_one_hadamard(ctx, ctx.mul(delta, ctx.pow(u, 3)), lift)
                assert shell_sum(ctx, delta, u) == 2 * sign * had


# -- trace-zero space ---------------------------------------------------------


def test_trace_zero_space_structure():
    for e in (2, 4):
        ctx = ctx_new(e)
        tzs = trace_zero_space(ctx)
        assert len(tzs.h0) == ctx.q // 2
        assert all(ctx.tr(u) == 0 for u in tzs.h0)
        for v in ctx.elements():
            u = tzs.lift(v)
            assert u == ctx.sqrt(v) ^ v
            assert ctx.tr(u) == 0
            assert tzs.lift(v ^ 1) == u  # constant on cosets v + GF(2)
        assert sorted(tzs.lift(v) for v in tzs.reps) == tzs.h0
        for u in tzs.h0:
            r = tzs.rep(u)
            assert r % 2 == 0 and tzs.lift(r) == u


def test_lift_is_adjoint_to_artin_schreier():
    ctx = ctx_new(4)
    tzs = trace_zero_space(ctx)
    for x in ctx.elements():
        ax = ctx.mul(x, x) ^ x
        for v in ctx.elements():
            assert ctx.tr(ctx.mul(ax, v)) == ctx.tr(ctx.mul(x, tzs.lift(v)))


# -- shell words and the outer route ------------------------------------------


def test_shell_word_shape():
    for e in (2, 4):
        ctx = ctx_new(e)
        tzs = trace_zero_space(ctx)
        for delta in ctx.nonzero():
            word = shell_word(ctx, delta)
            assert sorted(word.values) == tzs.h0
            assert word.values[0] == 0
            assert word.branch == ("cube" if ctx.is_cube(delta) else "noncube")
            for u, val in word.values.items():
                assert 2 * val == shell_sum(ctx, delta, u) - (ctx.q if u == 0 else 0)


def test_degenerate_word_vanishes_at_smallest_degree():
    ctx = ctx_new(2)
    word = shell_word(ctx, 1)  # the only cube class
    assert word.branch == "cube"
    assert all(v == 0 for v in word.values.values())
    assert trace_one_hadamard(ctx, 1, ctx.omega) == 0


def test_hadamard_row_matches_scalar_readout():
    ctx = ctx_new(4)
    for delta in (1, 2):
        word = shell_word(ctx, delta)
        row = shell_hadamard_all(ctx, word)
        for c in ctx.elements():
            assert int(row[c]) == shell_hadamard(ctx, word, c)


def test_outer_route_matches_naive():
    ctx = ctx_new(2)
    for alpha in ctx.nonzero():
        tt = inverse_cube_table(ctx, alpha)
        for code in _outer_codes(ctx):
            beta = ctx.dec2(code)
            assert shell_walsh_outer(ctx, alpha, beta) == walsh_naive(ctx, tt, beta)


def test_branch_law_records():
    for e in (2, 4):
        ctx = ctx_new(e)
        width = max(1, (e + 3) // 4)
        for delta in ctx.nonzero():
            rec = verify_shell_branch(ctx, delta)
            assert rec["status"] == "pass"
            assert rec["counterexample"] is None
            assert rec["checked"] == ctx.q
            assert rec["lemma_id"] == f"shell-branch:{delta:0{width}x}"


def test_branch_value_sets():
    for e in (2, 4):
        ctx = ctx_new(e)
        for delta in ctx.nonzero():
            row = shell_hadamard_all(ctx, shell_word(ctx, delta))
            vals = {int(v) for v in row}
            if not ctx.is_cube(delta):
                assert vals <= {ctx.q, -ctx.q}
            elif e == 2:
                assert vals == {0}
            else:
                assert vals <= {0, 2 * ctx.q, -2 * ctx.q}


# -- inner predictor ------------------------------------------------------------


def test_inner_predictor_matches_naive():
    for e in (2, 4):
        ctx = ctx_new(e)
        for alpha in ctx.nonzero():
            if not ctx.is_cube(alpha):
                continue
            tt = inverse_cube_table(ctx, alpha)
            minus = 0
            for beta in ctx.elements():
                got = predict_inner_walsh(ctx, alpha, beta)
                assert got == walsh_naive(ctx, tt, (beta, 0))
                minus += got == -2 * ctx.q
            assert minus == ctx.q // 4


def test_inner_predictor_rejections():
    ctx = ctx_new(4)
    noncube = next(a for a in ctx.nonzero() if not ctx.is_cube(a))
    with pytest.raises(ValueError):
        predict_inner_walsh(ctx, noncube, 0)
    with pytest.raises(ValueError):
        predict_inner_walsh(ctx, 1, ctx.q)
    with pytest.raises(ValueError):
        shell_word(ctx, 0)
    with pytest.raises(ValueError):
        shell_sum(ctx, 0, 1)
