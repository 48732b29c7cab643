"""Verification-suite driver: record shape, determinism, and full passes."""

import pytest

from permbent import ctx_new, run_suite
from permbent.suites import (
    SUITES,
    predicted_distribution,
    predicted_inner_support,
    predicted_outer_support,
)


def test_all_records_pass_at_small_degrees():
    for e in (2, 4):
        ctx = ctx_new(e)
        records = run_suite(ctx, "all", seed=0)
        assert records, "suite produced no records"
        for rec in records:
            assert rec["status"] == "pass", rec
            assert rec["counterexample"] is None
            assert rec["checked"] > 0


def test_record_shape_and_ordering():
    ctx = ctx_new(2)
    records = run_suite(ctx, "all", seed=0)
    ids = [r["lemma_id"] for r in records]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    for rec in records:
        assert set(rec) == {"lemma_id", "status", "checked", "counterexample"}


def test_suite_partition():
    ctx = ctx_new(2)
    names = {s: {r["lemma_id"] for r in run_suite(ctx, s, seed=0)} for s in SUITES}
    assert names["all"] == names["theorems"] | names["lemmas"] | names["shells"]
    assert names["theorems"].isdisjoint(names["lemmas"])
    assert any(i.startswith("theorem:") for i in names["theorems"])
    assert any(i.startswith("lemma:") for i in names["lemmas"])
    assert any(i.startswith("shell-branch:") for i in names["shells"])


def test_sampled_runs_are_seed_deterministic():
    ctx = ctx_new(6)
    a = run_suite(ctx, "lemmas", seed=7)
    b = run_suite(ctx, "lemmas", seed=7)
    assert a == b
    c = run_suite(ctx, "lemmas", seed=8)
    assert [r["lemma_id"] for r in c] == [r["lemma_id"] for r in a]
    assert all(r["status"] == "pass" for r in c)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite(ctx_new(2), "everything")


def test_predicted_shapes():
    for e in (2, 4, 6, 8):
        q = 1 << e
        n = q * q
        for cube in (True, False):
            hist = predicted_distribution(e, cube)
            assert sum(hist.values()) == n
            assert sum(k * v for k, v in hist.items()) == n
            assert sum(k * k * v for k, v in hist.items()) == n * n
            assert set(hist) == predicted_inner_support(e, cube) | predicted_outer_support(e, cube)
        assert predicted_inner_support(e, True) == {2 * q, -2 * q}
        assert predicted_inner_support(e, False) == {q}
        assert predicted_outer_support(e, False) == {q, -q}
        assert predicted_outer_support(e, True) == ({0} if e == 2 else {0, 2 * q, -2 * q})
