"""Reduction of the full-plane Walsh sum to exact half-size shell words.

The chain, for alpha in GF(q)^* and beta = b(c + theta) outside GF(q):

  1. fold the sum over GF(q^2) through the polar split x = y*z
     (y in GF(q)^*, z on the norm-one circle), leaving cubic and linear
     coefficient maps P(z), Q(z) with values in the base field;
  2. chart the circle minus {1} by x in GF(q) via z_x = (x + theta) /
     sqrt(A_x + 1) with A_x = x^2 + x + lam, turning the z-sum into an
     x-sum with weights s_x and Phi(x) = A + A^{-1} + A^{-2};
  3. collapse to the shell sum T_delta(u) = sum_x chi(delta*Phi(x)*u^3 +
     (x+1)*u), which vanishes on trace-one u and factors through a
     Hadamard sum over the trace-one set;
  4. read the Walsh coefficient off the shell word U(u) = (T(u) - q[u=0])/2
     supported on the trace-zero hyperplane H0:
         W(beta) = 2 * sum_{u in H0} chi(c*u) * U_kappa(u),
     with kappa = alpha / b^3.

Everything is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx, Elem2, ZERO2, ONE2


@dataclass(frozen=True)
class OuterFrame:
    """Coordinates (b, c, kappa) of a Walsh point beta outside GF(q)."""

    beta: Elem2
    b: int
    c: int
    kappa: int


@dataclass(frozen=True)
class CirclePoint:
    """Chart data of the circle point z_x attached to x in GF(q)."""

    x: int
    a: int      # A = x^2 + x + lam, always trace one
    t: int      # (A+1)^(-1/2), the chord z_x + z_x^(-1)
    z: Elem2    # (x + theta) * t, on the circle, never 1
    s: int      # A * (A+1)^(-3/2), the cubic weight
    phi: int    # A + A^(-1) + A^(-2) = 1 + s^(-2)


@dataclass(eq=False)
class TraceZeroSpace:
    """The hyperplane H0 = {tr = 0} reached from GF(q)/GF(2) by v -> sqrt(v)+v."""

    e: int
    h0: list[int]
    reps: list[int]
    lift_arr: np.ndarray
    _rep_of: dict[int, int]

    def lift(self, v: int) -> int:
        return int(self.lift_arr[v])

    def rep(self, u: int) -> int:
        """Canonical preimage of u: the even member of {v, v+1}."""
        return self._rep_of[u]


@dataclass(eq=False)
class ShellWord:
    """Integer word U(u) on H0 determining one outer Walsh coefficient class."""

    e: int
    delta: int
    branch: str
    values: dict[int, int]


class _RData:
    """Per-context caches for the reduction maps."""

    def __init__(self, ctx: FieldCtx):
        q = ctx.q
        mu = ctx.mu_elements()
        self.mu = mu
        z3 = [ctx.pow2(z, 3) for z in mu]
        z9 = [ctx.pow2(z, 9) for z in mu]
        self.z30 = np.array([w[0] for w in z3], dtype=np.int64)
        self.z31 = np.array([w[1] for w in z3], dtype=np.int64)
        self.z9t = np.array([w[1] for w in z9], dtype=np.int64)
        self.zt = np.array([z[1] for z in mu], dtype=np.int64)

        xs = np.arange(q, dtype=np.int64)
        self.ys = xs
        self.y3 = ctx.powv(xs, 3)
        self.x_plus_1 = xs ^ 1
        a_arr = ctx.sq_table[xs] ^ xs ^ ctx.lam
        ainv = ctx.inv_table[a_arr]
        self.a_arr = a_arr
        self.phi_arr = a_arr ^ ainv ^ ctx.sq_table[ainv]

        tset = np.array([a for a in range(q) if ctx.tr(a) == 1], dtype=np.int64)
        tinv = ctx.inv_table[tset]
        self.tset = tset
        self.pmap = tset ^ tinv ^ ctx.sq_table[tinv]

        h0 = sorted(a for a in range(q) if ctx.tr(a) == 0)
        lift_arr = ctx.sqrt_table ^ np.arange(q, dtype=np.int64)
        reps = list(range(0, q, 2))
        rep_of = {}
        for v in reps:
            u = int(lift_arr[v])
            if ctx.tr(u) != 0 or u in rep_of:
                raise RuntimeError("trace-zero lift is not the expected bijection")
            rep_of[u] = v
        if sorted(rep_of) != h0:
            raise RuntimeError("trace-zero lift misses part of the hyperplane")
        self.tzs = TraceZeroSpace(ctx.e, h0, reps, lift_arr, rep_of)
        self.h0_arr = np.array(h0, dtype=np.int64)

        self.words: dict[int, ShellWord] = {}
        self.hadamard_rows: dict[int, np.ndarray] = {}
        self.h0_signs: np.ndarray | None = None
        self.schar: np.ndarray | None = None


def _cubic_char_table(ctx: FieldCtx) -> np.ndarray:
    """S[p, l] = sum_y chi(p*y^3 + l*y), tabulated once per context."""
    red = _data(ctx)
    if red.schar is None:
        q = ctx.q
        lin = ctx.mulv(red.ys[:, None], red.ys[None, :])
        table = np.empty((q, q), dtype=np.int64)
        for p in range(q):
            bits = ctx.tr_table[ctx.mulv(p, red.y3)[None, :] ^ lin]
            table[p] = q - 2 * bits.sum(axis=1, dtype=np.int64)
        red.schar = table
    return red.schar


_cache: "weakref.WeakKeyDictionary[FieldCtx, _RData]" = weakref.WeakKeyDictionary()


def _data(ctx: FieldCtx) -> _RData:
    data = _cache.get(ctx)
    if data is None:
        data = _RData(ctx)
        _cache[ctx] = data
    return data


def _check_alpha(ctx: FieldCtx, alpha: int) -> None:
    if not 1 <= alpha < ctx.q:
        raise ValueError(f"alpha must be a nonzero base-field element, got {alpha}")


def _check_mu(ctx: FieldCtx, z: Elem2) -> None:
    if ctx.pow2(z, ctx.q + 1) != ONE2:
        raise ValueError("z must lie on the norm-one circle")


# -- step 1: polar fold ------------------------------------------------


def outer_frame(ctx: FieldCtx, alpha: int, beta: Elem2) -> OuterFrame:
    """Split beta = b(c + theta) and set kappa = alpha / b^3."""
    _check_alpha(ctx, alpha)
    b = beta[1]
    if b == 0:
        raise ValueError("outer frame needs beta outside the base field")
    c = ctx.div(beta[0], b)
    kappa = ctx.div(alpha, ctx.pow(b, 3))
    return OuterFrame(beta, b, c, kappa)


def cubic_coeff(ctx: FieldCtx, alpha: int, z: Elem2) -> int:
    """P(z) = alpha * (z^9 + z^-9), a base-field value on the circle."""
    _check_mu(ctx, z)
    # on the circle z^-9 = conj(z^9), so the sum is the relative trace
    return ctx.mul(alpha, ctx.pow2(z, 9)[1])


def linear_coeff(ctx: FieldCtx, beta: Elem2, z: Elem2) -> int:
    """Q(z) = beta*z^3 + conj(beta*z^3) + (beta+conj(beta))(z+z^-1)."""
    _check_mu(ctx, z)
    bz3 = ctx.mul2(beta, ctx.pow2(z, 3))
    return bz3[1] ^ ctx.mul(beta[1], z[1])


def fold_walsh(ctx: FieldCtx, alpha: int, beta: Elem2) -> int:
    """Walsh coefficient through the polar fold:

    W = sum_{z in mu} sum_{y in GF(q)} chi(P_alpha(z) y^3 + Q_beta(z) y) - q.
    """
    _check_alpha(ctx, alpha)
    red = _data(ctx)
    q = ctx.q
    pv = ctx.mulv(alpha, red.z9t)
    qv = ctx.mulv(beta[0], red.z31) ^ ctx.mulv(beta[1], red.z30 ^ red.z31)
    qv ^= ctx.mulv(beta[1], red.zt)
    bits = ctx.tr_table[
        ctx.mulv(pv[:, None], red.y3[None, :]) ^ ctx.mulv(qv[:, None], red.ys[None, :])
    ]
    return (q + 1) * q - 2 * int(bits.sum()) - q


def fold_walsh_pool(ctx: FieldCtx, alpha: int, betas: list[Elem2]) -> np.ndarray:
    """fold_walsh over a batch of betas, sharing the tabulated inner sums."""
    _check_alpha(ctx, alpha)
    red = _data(ctx)
    schar = _cubic_char_table(ctx)
    pv = ctx.mulv(alpha, red.z9t)
    b0 = np.array([b[0] for b in betas], dtype=np.int64)
    b1 = np.array([b[1] for b in betas], dtype=np.int64)
    qm = ctx.mulv(b0[:, None], red.z31[None, :])
    qm ^= ctx.mulv(b1[:, None], (red.z30 ^ red.z31)[None, :])
    qm ^= ctx.mulv(b1[:, None], red.zt[None, :])
    return schar[pv[None, :], qm].sum(axis=1) - ctx.q


# -- step 2: circle chart ----------------------------------------------


def chord_set(ctx: FieldCtx) -> frozenset[int]:
    """Chords {z + z^-1 : z on the circle, z != 1}; q/2 base elements."""
    red = _data(ctx)
    # z + z^-1 = z + conj(z) drops to the theta component; z = 1 gives 0
    return frozenset(int(t) for t in red.zt if t != 0)


def circle_point(ctx: FieldCtx, x: int) -> CirclePoint:
    """Chart z_x = (x + theta) / sqrt(A_x + 1) with its weights."""
    if not 0 <= x < ctx.q:
        raise ValueError(f"x must be a base-field element, got {x}")
    a = ctx.mul(x, x) ^ x ^ ctx.lam
    t = ctx.inv(ctx.sqrt(a ^ 1))
    z = ctx.scale2(t, (x, 1))
    s = ctx.mul(a, ctx.inv(ctx.sqrt(ctx.pow(a ^ 1, 3))))
    ainv = ctx.inv(a)
    phi = a ^ ainv ^ ctx.mul(ainv, ainv)
    return CirclePoint(x=x, a=a, t=t, z=z, s=s, phi=phi)


def trace_one_set(ctx: FieldCtx) -> list[int]:
    """All trace-one base elements, ascending; A_x lands here."""
    return [int(a) for a in _data(ctx).tset]


def trace_one_map(ctx: FieldCtx, a: int) -> int:
    """P(A) = A + A^-1 + A^-2; permutes the trace-one set."""
    ainv = ctx.inv(a)
    return a ^ ainv ^ ctx.mul(ainv, ainv)


# -- step 3: shell sums -------------------------------------------------


def shell_sum(ctx: FieldCtx, delta: int, u: int) -> int:
    """T_delta(u) = sum_x chi(delta*Phi(x)*u^3 + (x+1)*u), exact."""
    _check_alpha(ctx, delta)
    red = _data(ctx)
    coef = ctx.mul(delta, ctx.pow(u, 3))
    bits = ctx.tr_table[ctx.mulv(coef, red.phi_arr) ^ ctx.mulv(u, red.x_plus_1)]
    return ctx.q - 2 * int(bits.sum())


def shell_sums_all(ctx: FieldCtx, delta: int) -> np.ndarray:
    """T_delta(u) for every u in GF(q) at once; row index is u."""
    _check_alpha(ctx, delta)
    red = _data(ctx)
    u = red.ys
    coef = ctx.mulv(delta, red.y3)
    bits = ctx.tr_table[
        ctx.mulv(coef[:, None], red.phi_arr[None, :])
        ^ ctx.mulv(u[:, None], red.x_plus_1[None, :])
    ]
    return ctx.q - 2 * bits.sum(axis=1, dtype=np.int64)


def trace_one_hadamard(ctx: FieldCtx, delta: int, v: int) -> int:
    """h-hat_delta(v) = sum over trace-one A of (-1)^(tr(delta*P(A)) + tr(v*A))."""
    red = _data(ctx)
    bits = ctx.tr_table[ctx.mulv(delta, red.pmap)] ^ ctx.tr_table[ctx.mulv(v, red.tset)]
    return int(red.tset.size) - 2 * int(bits.sum())


def trace_zero_space(ctx: FieldCtx) -> TraceZeroSpace:
    """H0 with the lift v -> sqrt(v) + v from GF(q)/GF(2) and canonical reps."""
    return _data(ctx).tzs


# -- step 4: shell words and the outer route ----------------------------


def shell_word(ctx: FieldCtx, delta: int) -> ShellWord:
    """The word U(u) = (T_delta(u) - q[u=0]) / 2 on the trace-zero hyperplane."""
    _check_alpha(ctx, delta)
    red = _data(ctx)
    word = red.words.get(delta)
    if word is not None:
        return word
    tvals = shell_sums_all(ctx, delta)
    values: dict[int, int] = {}
    for u in red.tzs.h0:
        t = int(tvals[u])
        base = t - ctx.q if u == 0 else t
        if base % 2 != 0:
            raise RuntimeError("shell sum parity violated")
        values[u] = base // 2
    branch = "cube" if ctx.is_cube(delta) else "noncube"
    word = ShellWord(ctx.e, delta, branch, values)
    red.words[delta] = word
    return word


def shell_hadamard(ctx: FieldCtx, word: ShellWord, c: int) -> int:
    """One outer Walsh value off the word: 2 * sum_{u in H0} chi(c*u) U(u)."""
    acc = 0
    for u, val in word.values.items():
        acc += -val if ctx.tr(ctx.mul(c, u)) else val
    return 2 * acc


def shell_hadamard_all(ctx: FieldCtx, word: ShellWord) -> np.ndarray:
    """Exact-scale Hadamard readout of a word at every c in GF(q) at once."""
    red = _data(ctx)
    row = red.hadamard_rows.get(word.delta)
    if row is None:
        if red.h0_signs is None:
            red.h0_signs = 1 - 2 * ctx.tr_table[
                ctx.mulv(red.ys[:, None], red.h0_arr[None, :])
            ].astype(np.int64)
        vals = np.array([word.values[u] for u in red.tzs.h0], dtype=np.int64)
        row = 2 * (red.h0_signs @ vals)
        red.hadamard_rows[word.delta] = row
    return row


def shell_walsh_outer(ctx: FieldCtx, alpha: int, beta: Elem2) -> int:
    """Outer Walsh coefficient via frame -> shell word -> Hadamard readout."""
    frame = outer_frame(ctx, alpha, beta)
    return shell_hadamard(ctx, shell_word(ctx, frame.kappa), frame.c)


def verify_shell_branch(ctx: FieldCtx, delta: int) -> dict:
    """Branch-law record for one delta: every exact-scale Hadamard value of
    the word must lie in {+-q} (noncube), {0, +-2q} (cube, e >= 4), or {0}
    (cube, e = 2, where the word itself must vanish identically)."""
    q = ctx.q
    word = shell_word(ctx, delta)
    row = shell_hadamard_all(ctx, word)
    if word.branch == "noncube":
        allowed = {q, -q}
    elif ctx.e == 2:
        allowed = {0}
    else:
        allowed = {0, 2 * q, -2 * q}
    width = max(1, (ctx.e + 3) // 4)
    rec = {
        "lemma_id": f"shell-branch:{delta:0{width}x}",
        "status": "pass",
        "checked": q,
        "counterexample": None,
    }
    for c in range(q):
        if int(row[c]) not in allowed:
            rec["status"] = "fail"
            rec["counterexample"] = {
                "delta": ctx.fmt(delta),
                "branch": word.branch,
                "c": ctx.fmt(c),
                "value": int(row[c]),
                "allowed": sorted(allowed),
            }
            return rec
    if ctx.e == 2 and word.branch == "cube":
        for u, val in word.values.items():
            if val != 0:
                rec["status"] = "fail"
                rec["counterexample"] = {
                    "delta": ctx.fmt(delta),
                    "branch": word.branch,
                    "u": ctx.fmt(u),
                    "word_value": val,
                    "allowed": [0],
                }
                return rec
    return rec


# -- inner predictor -----------------------------------------------------


def predict_inner_walsh(ctx: FieldCtx, alpha: int, beta: int) -> int:
    """Inner Walsh value for cube alpha: -2q if tr(beta*y) = 0 for all three
    roots y of alpha*y^3 = 1, else +2q."""
    _check_alpha(ctx, alpha)
    if not ctx.is_cube(alpha):
        raise ValueError("inner predictor covers the cube branch only")
    if not 0 <= beta < ctx.q:
        raise ValueError(f"beta must be a base-field element, got {beta}")
    y1 = ctx.cube_root(ctx.inv(alpha))
    om = ctx.omega
    trs = [
        ctx.tr(ctx.mul(beta, y1)),
        ctx.tr(ctx.mul(beta, ctx.mul(om, y1))),
        ctx.tr(ctx.mul(beta, ctx.mul(ctx.mul(om, om), y1))),
    ]
    if sum(trs) % 2 != 0:
        raise RuntimeError("trace parity across the three roots must be even")
    return -2 * ctx.q if not any(trs) else 2 * ctx.q
