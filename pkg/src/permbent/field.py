"""Exact arithmetic in GF(2^e) and its quadratic extension GF(2^(2e)).

Base-field elements are plain ints in [0, 2^e): bit i holds the coefficient
of x^i in the power basis of a fixed irreducible modulus.  Extension
elements are pairs (a0, a1) standing for a0 + a1*theta, where theta
satisfies theta^2 = theta + lam + 1 for a fixed trace-one lam in the base
field.  With that choice theta^q = theta + 1, so conjugation, relative
trace and norm come out as one-line bit formulas instead of generic
polynomial arithmetic.

All derived structure (modulus, generators, lam) is selected by fixed
deterministic rules, so two contexts built for the same e are identical.
"""

from __future__ import annotations

import numpy as np

Elem2 = tuple[int, int]

ZERO2: Elem2 = (0, 0)
ONE2: Elem2 = (1, 0)


def _poly_mod(a: int, m: int) -> int:
    # carry-less remainder of a by m over GF(2)
    mb = m.bit_length()
    while a.bit_length() >= mb:
        a ^= m << (a.bit_length() - mb)
    return a


def _is_irreducible(m: int) -> bool:
    # trial division by every nonconstant polynomial of degree <= deg(m)/2
    deg = m.bit_length() - 1
    return all(_poly_mod(m, f) != 0 for f in range(2, 1 << (deg // 2 + 1)))


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


class FieldCtx:
    """Immutable tower GF(2^e) inside GF(2^(2e)) with fixed generators.

    Attributes of interest:
        e, q            extension degree and base-field size q = 2^e
        order2          size of the quadratic extension, q^2
        modulus         lexicographically smallest irreducible degree-e poly
        g               smallest multiplicative generator of GF(q)^*
        lam             smallest trace-one element; theta^2 = theta + lam + 1
        omega           primitive cube root of unity, g^((q-1)/3)
        g2              smallest generator of GF(q^2)^* by pair encoding
        u               generator of the norm-one circle mu = {z : z^(q+1)=1}
        d, d_prime      (q^2+q+1)/3 and q^2-q+1, inverse exponents mod q^2-1
    """

    def __init__(self, e: int):
        if e % 2 != 0:
            raise ValueError(f"extension degree must be even, got e={e}")
        if not 2 <= e <= 16:
            raise ValueError(f"extension degree out of supported range [2, 16]: e={e}")
        self.e = e
        self.q = 1 << e
        self.order2 = 1 << (2 * e)
        self.d = (self.q * self.q + self.q + 1) // 3
        self.d_prime = self.q * self.q - self.q + 1
        self._qm1 = self.q - 1

        self.modulus = next(m for m in range(1 << e, 1 << (e + 1)) if _is_irreducible(m))

        def mul_raw(a: int, b: int) -> int:
            acc = 0
            while b:
                if b & 1:
                    acc ^= a
                b >>= 1
                a <<= 1
                if a & self.q:
                    a ^= self.modulus
            return acc

        def pow_raw(a: int, k: int) -> int:
            r = 1
            while k:
                if k & 1:
                    r = mul_raw(r, a)
                a = mul_raw(a, a)
                k >>= 1
            return r

        base_factors = _prime_factors(self._qm1)
        g = 2
        while not all(pow_raw(g, self._qm1 // p) != 1 for p in base_factors):
            g += 1
        self.g = g

        exp = [0] * self._qm1
        log = [0] * self.q
        v = 1
        for i in range(self._qm1):
            exp[i] = v
            log[v] = i
            v = mul_raw(v, g)
        if v != 1:
            raise RuntimeError("generator order check failed")
        self._exp = exp
        self._log = log

        inv = [0] * self.q
        for a in range(1, self.q):
            inv[a] = exp[(self._qm1 - log[a]) % self._qm1]
        self._inv = inv

        tr = [0] * self.q
        for a in range(1, self.q):
            t = a
            acc = a
            for _ in range(e - 1):
                t = self.mul(t, t)
                acc ^= t
            if acc > 1:
                raise RuntimeError("trace did not land in GF(2)")
            tr[a] = acc
        self._tr = tr
        if tr[1] != 0:
            raise RuntimeError("tr(1) must vanish for even e")
        self.lam = next(a for a in range(self.q) if tr[a] == 1)
        self._lam1 = self.lam ^ 1

        self.omega = self.pow(g, self._qm1 // 3)
        if self.mul(self.omega, self.omega) ^ self.omega ^ 1 != 0:
            raise RuntimeError("omega is not a primitive cube root of unity")

        ext_factors = _prime_factors(self.q * self.q - 1)
        ext_ord = self.q * self.q - 1
        code = 2
        while True:
            cand = self.dec2(code)
            if all(self.pow2(cand, ext_ord // p) != ONE2 for p in ext_factors):
                break
            code += 1
        self.g2 = cand
        self.u = self.pow2(self.g2, self._qm1)

        # numpy companions for the vector paths; log 0 maps to a sentinel
        # whose exp slot (and every slot past it) is zero, so zero operands
        # fall out of gathered products for free
        logz = 2 * self._qm1
        la = np.full(self.q, logz, dtype=np.int64)
        for a in range(1, self.q):
            la[a] = log[a]
        ee = np.zeros(4 * self._qm1 + 1, dtype=np.int64)
        for i in range(2 * self._qm1 - 1):
            ee[i] = exp[i % self._qm1]
        self._log_np = la
        self._exp_np = ee
        self.tr_table = np.array(tr, dtype=np.uint8)
        self.sq_table = np.array([self.mul(a, a) for a in range(self.q)], dtype=np.int64)
        self.inv_table = np.array(inv, dtype=np.int64)
        sqrt = np.zeros(self.q, dtype=np.int64)
        sqrt[self.sq_table] = np.arange(self.q)
        self.sqrt_table = sqrt

        self._mu: list[Elem2] | None = None

    def __repr__(self):
        return f"FieldCtx(e={self.e}, q={self.q})"

    # -- base field ---------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._qm1]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in the base field")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * k) % self._qm1]

    def sqrt(self, a: int) -> int:
        return int(self.sqrt_table[a])

    def tr(self, a: int) -> int:
        return self._tr[a]

    def is_cube(self, a: int) -> bool:
        if a == 0:
            raise ValueError("cubic class of zero is undefined")
        return self._log[a] % 3 == 0

    def cube_root(self, a: int) -> int:
        """One cube root of a cube; the other two differ by omega factors."""
        if not self.is_cube(a):
            raise ValueError(f"{a:#x} is not a cube")
        return self._exp[self._log[a] // 3]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("discrete log of zero")
        return self._log[a]

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    # -- quadratic extension ------------------------------------------

    @staticmethod
    def embed(a: int) -> Elem2:
        return (a, 0)

    @staticmethod
    def add2(x: Elem2, y: Elem2) -> Elem2:
        return (x[0] ^ y[0], x[1] ^ y[1])

    def mul2(self, x: Elem2, y: Elem2) -> Elem2:
        # Karatsuba split; theta^2 = theta + lam + 1 folds the cross term
        m0 = self.mul(x[0], y[0])
        m1 = self.mul(x[1], y[1])
        m2 = self.mul(x[0] ^ x[1], y[0] ^ y[1])
        return (m0 ^ self.mul(self._lam1, m1), m0 ^ m2)

    def sq2(self, x: Elem2) -> Elem2:
        s1 = self.mul(x[1], x[1])
        return (self.mul(x[0], x[0]) ^ self.mul(self._lam1, s1), s1)

    def conj(self, x: Elem2) -> Elem2:
        # Frobenius x -> x^q; theta^q = theta + 1
        return (x[0] ^ x[1], x[1])

    def norm2(self, x: Elem2) -> int:
        # x * x^q lands in the base field
        return self.mul(x[0], x[0] ^ x[1]) ^ self.mul(self._lam1, self.mul(x[1], x[1]))

    def inv2(self, x: Elem2) -> Elem2:
        if x == ZERO2:
            raise ZeroDivisionError("inverse of zero in the extension")
        s = self.inv(self.norm2(x))
        return (self.mul(s, x[0] ^ x[1]), self.mul(s, x[1]))

    def div2(self, x: Elem2, y: Elem2) -> Elem2:
        return self.mul2(x, self.inv2(y))

    def pow2(self, x: Elem2, k: int) -> Elem2:
        if x == ZERO2:
            if k == 0:
                return ONE2
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return ZERO2
        if k < 0:
            x = self.inv2(x)
            k = -k
        k %= self.q * self.q - 1
        r = ONE2
        for bit in range(k.bit_length() - 1, -1, -1):
            r = self.sq2(r)
            if (k >> bit) & 1:
                r = self.mul2(r, x)
        return r

    def scale2(self, a: int, x: Elem2) -> Elem2:
        """Multiply an extension element by a base-field scalar."""
        return (self.mul(a, x[0]), self.mul(a, x[1]))

    def tr2(self, x: Elem2) -> int:
        # x + x^q = (a1, 0) since theta + theta^q = 1, so the absolute
        # trace collapses through the base field to tr(a1)
        return self._tr[x[1]]

    def tr_rel(self, x: Elem2) -> int:
        """Relative trace x + x^q, an element of the base field."""
        return x[1]

    def enc2(self, x: Elem2) -> int:
        return x[0] | (x[1] << self.e)

    def dec2(self, code: int) -> Elem2:
        if not 0 <= code < self.order2:
            raise ValueError(f"element code out of range: {code}")
        return (code & self._qm1, code >> self.e)

    def mu_elements(self) -> list[Elem2]:
        """The norm-one circle {z : z^(q+1) = 1} as successive powers of u."""
        if self._mu is None:
            out = [ONE2]
            z = self.u
            while z != ONE2:
                out.append(z)
                z = self.mul2(z, self.u)
            if len(out) != self.q + 1:
                raise RuntimeError("circle generator has wrong order")
            self._mu = out
        return self._mu

    # -- vector helpers ------------------------------------------------

    def mulv(self, a, b):
        """Elementwise base-field product of int arrays (broadcasts)."""
        return self._exp_np[self._log_np[a] + self._log_np[b]]

    def powv(self, a, k: int):
        """Elementwise k-th power of an int array, k >= 1."""
        if k < 1:
            raise ValueError("vector power wants k >= 1")
        idx = self._log_np[a] * k % self._qm1
        out = self._exp_np[idx]
        return np.where(np.asarray(a) == 0, 0, out)

    # -- serialization --------------------------------------------------

    @staticmethod
    def fmt(a: int) -> str:
        return format(a, "x")

    def fmt2(self, x: Elem2) -> str:
        return f"{x[0]:x}+{x[1]:x}*t"

    def summary(self) -> dict:
        return {
            "e": self.e,
            "q": self.q,
            "modulus": self.fmt(self.modulus),
            "lambda": self.fmt(self.lam),
            "g": self.fmt(self.g),
            "omega": self.fmt(self.omega),
            "g2": self.fmt2(self.g2),
            "u": self.fmt2(self.u),
            "d": self.d,
            "d_prime": self.d_prime,
        }


def ctx_new(e: int) -> FieldCtx:
    """Build the arithmetic context for GF(2^e) inside GF(2^(2e))."""
    return FieldCtx(e)
