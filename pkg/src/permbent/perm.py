"""The fixing permutation s(x) = x + x^d + x^(dq) and truth tables built on it.

With d = (q^2+q+1)/3 and d' = q^2-q+1 one has d*d' = 1 mod q^2-1, so s is
x + (relative trace of x^d) and permutes GF(q^2) while fixing GF(q)
pointwise.  The module provides s, its inverse both by table and in closed
form along circle cosets, and the two truth-table constructions

    f_alpha(x) = Tr(alpha * (s^{-1}(x))^3)
    g_alpha(x) = Tr(alpha * u^{6i} * (1 + u^{2i} + u^{-2i})^{-3} * x^3),

where x lies in the coset u^i * GF(q)^* of the norm-one circle generated
by u.  The two tables are computed by genuinely different routes (inverse
lookup versus coset dissection), which is what makes comparing them a
meaningful check.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx, Elem2, ZERO2

# truth tables and permutation tables need 2^(2e) entries; past this the
# arrays stop being desk-sized
_TABLE_DEGREE_LIMIT = 12


@dataclass(eq=False)
class PermTables:
    """Forward and backward tables of s, indexed by pair encoding."""

    e: int
    forward: np.ndarray
    backward: np.ndarray


@dataclass(eq=False)
class TruthTable:
    """Boolean function on GF(2^(2e)) as a 0/1 array indexed by encoding."""

    e: int
    alpha: int
    bits: np.ndarray

    def weight(self) -> int:
        return int(self.bits.sum())

    def to_hex(self) -> str:
        """Little-endian hex packing: bit at encoding i is bit i."""
        val = int.from_bytes(np.packbits(self.bits, bitorder="little").tobytes(), "little")
        return format(val, f"0{self.bits.size // 4}x")


class _PermData:
    """Everything derived from one context that is worth caching."""

    def __init__(self, ctx: FieldCtx):
        if ctx.e > _TABLE_DEGREE_LIMIT:
            raise ValueError(f"tables above e={_TABLE_DEGREE_LIMIT} exceed desk scale")
        q, e, n = ctx.q, ctx.e, ctx.order2
        qm1 = q - 1
        codes = np.arange(n, dtype=np.int64)
        x0 = codes & qm1
        x1 = codes >> e
        lam1 = ctx.lam ^ 1
        sq = ctx.sq_table

        def mul2v(a0, a1, b0, b1):
            m0 = ctx.mulv(a0, b0)
            m1 = ctx.mulv(a1, b1)
            m2 = ctx.mulv(a0 ^ a1, b0 ^ b1)
            return m0 ^ ctx.mulv(lam1, m1), m0 ^ m2

        def sq2v(a0, a1):
            s1 = sq[a1]
            return sq[a0] ^ ctx.mulv(lam1, s1), s1

        # x^d by square-and-multiply over the whole table at once
        t0 = np.ones(n, dtype=np.int64)
        t1 = np.zeros(n, dtype=np.int64)
        for bit in range(ctx.d.bit_length() - 1, -1, -1):
            t0, t1 = sq2v(t0, t1)
            if (ctx.d >> bit) & 1:
                t0, t1 = mul2v(t0, t1, x0, x1)

        c0, c1 = t0 ^ t1, t1
        f0 = x0 ^ t0 ^ c0
        f1 = x1 ^ t1 ^ c1
        forward = f0 | (f1 << e)
        if np.any(np.bincount(forward, minlength=n) != 1):
            raise RuntimeError("s(x) = x + x^d + x^(dq) failed the permutation check")
        backward = np.empty(n, dtype=np.int64)
        backward[forward] = codes
        self.forward = forward
        self.backward = backward

        # discrete log along the circle: x^(q-1) = u^(i(q-1)) marks the
        # coset u^i GF(q)^*; x^(q-1) = conj(x)^2 / norm(x)
        dlog = np.full(n, -1, dtype=np.int64)
        for i in range(q + 1):
            w = ctx.pow2(ctx.u, (i * qm1) % (q + 1))
            dlog[ctx.enc2(w)] = i
        g0, g1 = x0 ^ x1, x1
        h0, h1 = sq2v(g0, g1)
        nrm = ctx.mulv(x0, x0 ^ x1) ^ ctx.mulv(lam1, sq[x1])
        ninv = ctx.inv_table[nrm]
        w0 = ctx.mulv(ninv, h0)
        w1 = ctx.mulv(ninv, h1)
        coset_idx = dlog[w0 | (w1 << e)]
        coset_idx[0] = -1
        if np.any(coset_idx[1:] < 0):
            raise RuntimeError("circle coset indexing is incomplete")
        self.dlog = dlog
        self.coset_idx = coset_idx

        # closed-form inverse multiplier per coset: z^2 / (1 + z^2 + z^-2)
        # with z = u^i; the denominator is the base-field scalar 1 + a1(z^2)
        mults: list[Elem2] = []
        fac0 = np.empty(q + 1, dtype=np.int64)
        fac1 = np.empty(q + 1, dtype=np.int64)
        for i in range(q + 1):
            z2 = ctx.pow2(ctx.u, (2 * i) % (q + 1))
            lz = 1 ^ z2[1]
            if lz == 0:
                raise RuntimeError("degenerate circle coset: 1 + z^2 + z^-2 = 0")
            mults.append(ctx.scale2(ctx.inv(lz), z2))
            z6 = ctx.pow2(ctx.u, (6 * i) % (q + 1))
            den = ctx.inv(ctx.pow(lz, 3))
            f = ctx.scale2(den, z6)
            fac0[i] = f[0]
            fac1[i] = f[1]
        self.mults = mults
        self.fac0 = fac0
        self.fac1 = fac1

        # cubes of every x and the theta component of (s^{-1}(x))^3
        u0, u1 = sq2v(x0, x1)
        self.cube0, self.cube1 = mul2v(u0, u1, x0, x1)
        b0 = backward & qm1
        b1 = backward >> e
        v0, v1 = sq2v(b0, b1)
        self.inv_cube_theta = ctx.mulv(v0, b0) ^ ctx.mulv(v0 ^ v1, b0 ^ b1)


_cache: "weakref.WeakKeyDictionary[FieldCtx, _PermData]" = weakref.WeakKeyDictionary()


def _data(ctx: FieldCtx) -> _PermData:
    data = _cache.get(ctx)
    if data is None:
        data = _PermData(ctx)
        _cache[ctx] = data
    return data


def perm_eval(ctx: FieldCtx, x: Elem2) -> Elem2:
    """Evaluate s(x) = x + x^d + conj(x^d) directly."""
    t = ctx.pow2(x, ctx.d)
    return ctx.add2(ctx.add2(x, t), ctx.conj(t))


def perm_tables(ctx: FieldCtx) -> PermTables:
    data = _data(ctx)
    return PermTables(ctx.e, data.forward, data.backward)


def coset_index(ctx: FieldCtx, x: Elem2) -> int:
    """Index i with x in u^i * GF(q)^*."""
    if x == ZERO2:
        raise ValueError("zero lies on no circle coset")
    i = int(_data(ctx).dlog[ctx.enc2(ctx.pow2(x, ctx.q - 1))])
    if i < 0:
        raise RuntimeError("coset log table is incomplete")
    return i


def perm_inverse(ctx: FieldCtx, x: Elem2) -> Elem2:
    """Closed-form s^{-1}: scale by z^2/(1+z^2+z^-2) on the coset of z."""
    if x == ZERO2:
        return ZERO2
    return ctx.mul2(_data(ctx).mults[coset_index(ctx, x)], x)


def _check_alpha(ctx: FieldCtx, alpha: int) -> None:
    if not 1 <= alpha < ctx.q:
        raise ValueError(f"alpha must be a nonzero base-field element, got {alpha}")


def inverse_cube_table(ctx: FieldCtx, alpha: int) -> TruthTable:
    """Truth table of f_alpha(x) = Tr(alpha * (s^{-1}(x))^3)."""
    _check_alpha(ctx, alpha)
    data = _data(ctx)
    bits = ctx.tr_table[ctx.mulv(alpha, data.inv_cube_theta)]
    return TruthTable(ctx.e, alpha, bits)


def coset_cube_table(ctx: FieldCtx, alpha: int) -> TruthTable:
    """Truth table of g_alpha from the coset dissection, no inverse lookups."""
    _check_alpha(ctx, alpha)
    data = _data(ctx)
    ii = np.maximum(data.coset_idx, 0)
    a0 = data.fac0[ii]
    a1 = data.fac1[ii]
    m0 = ctx.mulv(a0, data.cube0)
    m2 = ctx.mulv(a0 ^ a1, data.cube0 ^ data.cube1)
    bits = ctx.tr_table[ctx.mulv(alpha, m0 ^ m2)]
    return TruthTable(ctx.e, alpha, bits)
