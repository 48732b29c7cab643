"""Shared fixtures: per-degree spectrum summaries and visible pass/fail lines."""

import numpy as np
import pytest

from permbent import ctx_new, inverse_cube_table, is_bent, walsh_full

DEGREES = (2, 4, 6, 8)


@pytest.fixture(scope="session")
def family_stats():
    """One summary per (degree, alpha): branch, bentness, histograms, moments.

    Computed once and shared by the acceptance criteria so the e=8 sweep
    (255 full transforms over 2^16 points) runs a single time.
    """
    stats = {}
    for e in DEGREES:
        ctx = ctx_new(e)
        rows = []
        for alpha in ctx.nonzero():
            spec = walsh_full(ctx, inverse_cube_table(ctx, alpha))
            coeffs = spec.coeffs
            rows.append({
                "alpha": alpha,
                "cube": ctx.is_cube(alpha),
                "bent": is_bent(spec),
                "histogram": spec.histogram,
                "inner": spec.inner,
                "outer": spec.outer,
                "sum": int(coeffs.sum(dtype=np.int64)),
                "sum_sq": int(np.dot(coeffs, coeffs)),
            })
        stats[e] = rows
    return stats


@pytest.fixture
def announce(capsys):
    """Print one pass/fail line straight to the terminal, bypassing capture."""

    def _announce(name: str, ok: bool, detail: str = "") -> None:
        line = f"{name}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        with capsys.disabled():
            print(line, flush=True)

    return _announce
