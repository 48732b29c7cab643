"""Permutation map, closed-form inverse, and truth-table construction."""

import numpy as np
import pytest

from permbent import (
    coset_cube_table,
    coset_index,
    ctx_new,
    inverse_cube_table,
    perm_eval,
    perm_inverse,
    perm_tables,
)


def test_fixes_base_field_pointwise():
    for e in (2, 4):
        ctx = ctx_new(e)
        for a in ctx.elements():
            assert perm_eval(ctx, (a, 0)) == (a, 0)


def test_forward_is_a_permutation():
    for e in (2, 4, 6):
        ctx = ctx_new(e)
        tabs = perm_tables(ctx)
        assert sorted(tabs.forward.tolist()) == list(range(ctx.order2))
        assert np.array_equal(tabs.backward[tabs.forward], np.arange(ctx.order2))


def test_tables_match_pointwise_evaluation():
    for e in (2, 4):
        ctx = ctx_new(e)
        tabs = perm_tables(ctx)
        for code in range(ctx.order2):
            x = ctx.dec2(code)
            assert int(tabs.forward[code]) == ctx.enc2(perm_eval(ctx, x))


def test_definition_via_relative_trace_of_power():
    # forward map = x + t + t^q with t = x^d, spelled out in scalar arithmetic
    ctx = ctx_new(2)
    for code in range(ctx.order2):
        x = ctx.dec2(code)
        t = ctx.pow2(x, ctx.d)
        expect = ctx.add2(x, ctx.add2(t, ctx.conj(t)))
        assert perm_eval(ctx, x) == expect


def test_closed_inverse_equals_table_inverse():
    for e in (2, 4, 6):
        ctx = ctx_new(e)
        tabs = perm_tables(ctx)
        for code in range(ctx.order2):
            x = ctx.dec2(code)
            assert ctx.enc2(perm_inverse(ctx, x)) == int(tabs.backward[code])


def test_inverse_round_trips():
    ctx = ctx_new(4)
    rng = np.random.default_rng(11)
    for code in rng.integers(0, ctx.order2, size=256):
        x = ctx.dec2(int(code))
        assert perm_eval(ctx, perm_inverse(ctx, x)) == x
        assert perm_inverse(ctx, perm_eval(ctx, x)) == x


def test_coset_index_decomposition():
    for e in (2, 4):
        ctx = ctx_new(e)
        for code in range(1, ctx.order2):
            x = ctx.dec2(code)
            i = coset_index(ctx, x)
            assert 0 <= i <= ctx.q
            ratio = ctx.div2(x, ctx.pow2(ctx.u, i))
            assert ratio[1] == 0 and ratio[0] != 0  # x in u^i * F_q^*
        with pytest.raises(ValueError):
            coset_index(ctx, (0, 0))


def test_truth_table_matches_scalar_definition():
    ctx = ctx_new(2)
    for alpha in ctx.nonzero():
        tt = inverse_cube_table(ctx, alpha)
        for code in range(ctx.order2):
            y = perm_inverse(ctx, ctx.dec2(code))
            y3 = ctx.pow2(y, 3)
            bit = ctx.tr2(ctx.mul2((alpha, 0), y3))
            assert int(tt.bits[code]) == bit


def test_truth_table_sampled_at_larger_degree():
    ctx = ctx_new(4)
    rng = np.random.default_rng(5)
    for alpha in (1, int(rng.integers(2, ctx.q))):
        tt = inverse_cube_table(ctx, alpha)
        for code in rng.integers(0, ctx.order2, size=128):
            y = perm_inverse(ctx, ctx.dec2(int(code)))
            bit = ctx.tr2(ctx.mul2((alpha, 0), ctx.pow2(y, 3)))
            assert int(tt.bits[int(code)]) == bit


def test_coset_form_agrees_bit_for_bit():
    for e in (2, 4):
        ctx = ctx_new(e)
        for alpha in ctx.nonzero():
            f = inverse_cube_table(ctx, alpha)
            g = coset_cube_table(ctx, alpha)
            assert np.array_equal(f.bits, g.bits)


def test_alpha_validation():
    ctx = ctx_new(2)
    for bad in (0, ctx.q, -1):
        with pytest.raises(ValueError):
            inverse_cube_table(ctx, bad)
        with pytest.raises(ValueError):
            coset_cube_table(ctx, bad)


def test_truth_table_packing():
    ctx = ctx_new(2)
    tt = inverse_cube_table(ctx, 1)
    assert tt.weight() == int(tt.bits.sum())
    packed = sum(int(b) << i for i, b in enumerate(tt.bits))
    assert tt.to_hex() == f"{packed:0{tt.bits.size // 4}x}"
