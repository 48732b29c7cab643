"""Exact Walsh transforms over GF(2^(2e)), naive and fast.

The Walsh coefficient of a Boolean f at beta is

    W_f(beta) = sum_x (-1)^(f(x) + Tr(beta * x)),

an integer.  The fast path runs a standard +-/ butterfly over the pair
encoding and then reindexes: Tr(beta * x) is a GF(2) bilinear form in the
encodings, so W_f(beta) is the plain Hadamard coefficient at G * enc(beta),
where G is the Gram matrix G[i][j] = Tr(b_i * b_j) of the encoding basis.
G is invertible (the trace form is nondegenerate), hence the reindexing is
a permutation and the two transforms agree coefficient for coefficient.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx, Elem2
from .perm import TruthTable

_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


@dataclass(eq=False)
class Spectrum:
    """Complete Walsh spectrum; coeffs is indexed by enc(beta)."""

    e: int
    coeffs: np.ndarray
    histogram: dict[int, int]
    inner: dict[int, int]
    outer: dict[int, int]

    @property
    def q(self) -> int:
        return 1 << self.e


def _counts(values: np.ndarray) -> dict[int, int]:
    vals, cnts = np.unique(values, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, cnts)}


def _trace_bits(ctx: FieldCtx, beta: Elem2) -> np.ndarray:
    """Tr(beta * x) for every x, as a uint8 array indexed by enc(x)."""
    n = ctx.order2
    codes = np.arange(n, dtype=np.int64)
    x0 = codes & (ctx.q - 1)
    x1 = codes >> ctx.e
    b0, b1 = beta
    # theta component of beta*x, then the base-field trace
    theta = ctx.mulv(b0, x1) ^ ctx.mulv(b1, x0 ^ x1)
    return ctx.tr_table[theta]


def walsh_naive(ctx: FieldCtx, tt: TruthTable, beta: Elem2) -> int:
    """Direct character sum; one honest field multiplication per x."""
    mism = int(np.count_nonzero(tt.bits ^ _trace_bits(ctx, beta)))
    return ctx.order2 - 2 * mism


def trace_bit_rows(ctx: FieldCtx, betas: list[Elem2]) -> tuple[np.ndarray, np.ndarray]:
    """Packed Tr(beta * x) rows for a batch of betas, plus their weights."""
    rows = np.empty((len(betas), ctx.order2 // 8), dtype=np.uint8) if ctx.order2 >= 8 else None
    if rows is None:
        raise ValueError("packed rows want at least 8 points")
    sums = np.empty(len(betas), dtype=np.int64)
    for k, beta in enumerate(betas):
        bits = _trace_bits(ctx, beta)
        rows[k] = np.packbits(bits)
        sums[k] = int(bits.sum())
    return rows, sums


def walsh_naive_batch(ctx: FieldCtx, tt: TruthTable,
                      rows: np.ndarray, row_sums: np.ndarray) -> np.ndarray:
    """Naive coefficients for many betas at once.

    Uses W = N - 2*wt(f) - 2*wt(t) + 4*wt(f AND t), which is the direct sum
    rewritten through mismatch counting; the trace rows come packed from
    trace_bit_rows.
    """
    fp = np.packbits(tt.bits)
    inter = _POP8[rows & fp[None, :]].sum(axis=1)
    wf = int(tt.bits.sum())
    return ctx.order2 - 2 * wf - 2 * row_sums + 4 * inter


def _fwht(signs: np.ndarray) -> np.ndarray:
    """Sylvester-ordered Hadamard transform of an int vector."""
    w = signs.astype(np.int64)
    h = 1
    n = w.size
    while h < n:
        w = w.reshape(-1, 2, h)
        s = w[:, 0, :] + w[:, 1, :]
        d = w[:, 0, :] - w[:, 1, :]
        w = np.stack((s, d), axis=1)
        h *= 2
    return w.reshape(n)


def _gram_map(ctx: FieldCtx) -> np.ndarray:
    """enc(beta) -> butterfly index, via the Gram matrix of the pair basis."""
    n = ctx.order2
    dim = 2 * ctx.e
    rows = []
    basis = [ctx.dec2(1 << i) for i in range(dim)]
    for bi in basis:
        r = 0
        for j, bj in enumerate(basis):
            r |= ctx.tr2(ctx.mul2(bi, bj)) << j
        rows.append(r)
    codes = np.arange(n, dtype=np.int64)
    out = np.zeros(n, dtype=np.int64)
    for i in range(dim):
        out ^= np.where((codes >> i) & 1, rows[i], 0)
    if np.any(np.bincount(out, minlength=n) != 1):
        raise RuntimeError("trace Gram matrix is singular")
    return out


_gram_cache: "weakref.WeakKeyDictionary[FieldCtx, np.ndarray]" = weakref.WeakKeyDictionary()


def _gram(ctx: FieldCtx) -> np.ndarray:
    m = _gram_cache.get(ctx)
    if m is None:
        m = _gram_map(ctx)
        _gram_cache[ctx] = m
    return m


def walsh_full(ctx: FieldCtx, tt: TruthTable) -> Spectrum:
    """Complete spectrum by fast butterfly plus Gram reindexing."""
    signs = 1 - 2 * tt.bits.astype(np.int64)
    coeffs = _fwht(signs)[_gram(ctx)]
    q = ctx.q
    return Spectrum(
        e=ctx.e,
        coeffs=coeffs,
        histogram=_counts(coeffs),
        inner=_counts(coeffs[:q]),
        outer=_counts(coeffs[q:]),
    )


def is_bent(spec: Spectrum) -> bool:
    """Bent means the spectrum is flat: every coefficient is +-q."""
    return set(spec.histogram) <= {spec.q, -spec.q}


def split_inner_outer(ctx: FieldCtx, spec: Spectrum) -> tuple[dict[int, int], dict[int, int]]:
    """Histograms over beta in GF(q) versus beta outside it."""
    q = ctx.q
    return _counts(spec.coeffs[:q]), _counts(spec.coeffs[q:])
