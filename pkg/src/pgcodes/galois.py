"""Arithmetic over GF(2^m) and polynomials with coefficients in the field.

Field elements are plain ints in [0, 2^m - 1]: bit i is the coefficient of
x^i in the polynomial basis. Polynomials over the field are lists of ints,
lowest-degree coefficient first; the zero polynomial is the empty list.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

# Primitive reduction polynomials (x^m term included), one per supported m.
# The element 2 (the polynomial x) is a primitive root for each of these;
# construction validates that and rejects non-primitive choices.
DEFAULT_REDUCTION_POLY = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
}


class GF:
    """GF(2^m) with log/antilog multiplication tables, generated by alpha = 2.

    Tables are built once by repeated doubling under the reduction polynomial
    and validated at construction: the powers of alpha must enumerate every
    nonzero element exactly once. Instances are immutable after construction
    and safe for unrestricted concurrent reads.
    """

    def __init__(self, m: int = 8, reduction_poly: int | None = None):
        if m < 2:
            raise ValueError(f"field degree must be >= 2, got {m}")
        if reduction_poly is None:
            try:
                reduction_poly = DEFAULT_REDUCTION_POLY[m]
            except KeyError:
                raise ValueError(
                    f"no built-in reduction polynomial for m={m}; pass one explicitly"
                ) from None
        if reduction_poly >> m != 1:
            raise ValueError(
                f"reduction polynomial 0x{reduction_poly:X} does not have degree {m}"
            )
        self.m = m
        self.q = 1 << m
        self.order = self.q - 1
        self.reduction_poly = reduction_poly
        self.alpha = 2

        exp = [0] * (2 * self.order)
        log = [0] * self.q
        x = 1
        for i in range(self.order):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.q:
                x ^= reduction_poly
        if x != 1 or sorted(exp[: self.order]) != list(range(1, self.q)):
            raise ValueError(
                f"alpha=2 is not primitive for reduction polynomial 0x{reduction_poly:X}"
            )
        # Doubled antilog table avoids a modulo in the mul() hot path.
        exp[self.order :] = exp[: self.order]
        self._exp = exp
        self._log = log
        self._mul_table: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"GF(2^{self.m}, poly=0x{self.reduction_poly:X})"

    # ------------------------------------------------------------------
    # element arithmetic

    @staticmethod
    def add(a: int, b: int) -> int:
        """Characteristic-2 addition (bitwise XOR); every element is its own negative."""
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(2^m)")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[self.order - self._log[a]]

    def pow(self, a: int, e: int) -> int:
        """a**e with exponents reduced mod the group order; negative e inverts."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero has no negative powers")
            return 0
        return self._exp[(self._log[a] * e) % self.order]

    def exp_alpha(self, i: int) -> int:
        """alpha**i for any integer i."""
        return self._exp[i % self.order]

    def log_alpha(self, a: int) -> int:
        """Discrete log base alpha; a must be nonzero."""
        if a == 0:
            raise ValueError("zero has no discrete logarithm")
        return self._log[a]

    @property
    def mul_table(self) -> np.ndarray:
        """Dense (q, q) product lookup table for vectorized row operations.

        Only materialized for m <= 8 (64 KiB at m=8); larger fields should use
        the scalar routines.
        """
        if self._mul_table is None:
            if self.q > 256:
                raise ValueError("dense multiplication table limited to m <= 8")
            logs = np.array(self._log, dtype=np.int64)
            exps = np.array(self._exp[: self.order], dtype=np.uint8)
            table = np.zeros((self.q, self.q), dtype=np.uint8)
            idx = (logs[1:, None] + logs[None, 1:]) % self.order
            table[1:, 1:] = exps[idx]
            self._mul_table = table
        return self._mul_table

    # ------------------------------------------------------------------
    # polynomial arithmetic (lowest-degree coefficient first)

    @staticmethod
    def poly_norm(p: Sequence[int]) -> list[int]:
        """Strip high-order zero coefficients; the zero polynomial becomes []."""
        out = list(p)
        while out and out[-1] == 0:
            out.pop()
        return out

    @staticmethod
    def poly_add(p: Sequence[int], q: Sequence[int]) -> list[int]:
        if len(p) < len(q):
            p, q = q, p
        out = list(p)
        for i, c in enumerate(q):
            out[i] ^= c
        return out

    def poly_scale(self, p: Sequence[int], c: int) -> list[int]:
        return [self.mul(coef, c) for coef in p]

    def poly_mul(self, p: Sequence[int], q: Sequence[int]) -> list[int]:
        if not p or not q:
            return []
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a == 0:
                continue
            la = self._log[a]
            for j, b in enumerate(q):
                if b:
                    out[i + j] ^= self._exp[la + self._log[b]]
        return out

    def poly_eval(self, p: Sequence[int], x: int) -> int:
        """Evaluate at x by Horner's rule."""
        y = 0
        for c in reversed(p):
            y = self.mul(y, x) ^ c
        return y

    def poly_divmod(
        self, p: Sequence[int], d: Sequence[int]
    ) -> tuple[list[int], list[int]]:
        """Quotient and remainder with deg(remainder) < deg(divisor)."""
        d = self.poly_norm(d)
        if not d:
            raise ZeroDivisionError("polynomial division by zero polynomial")
        r = self.poly_norm(p)
        dn = len(d) - 1
        lead_inv = self.inv(d[-1])
        quot = [0] * max(0, len(r) - dn)
        while r and len(r) - 1 >= dn:
            shift = len(r) - 1 - dn
            c = self.mul(r[-1], lead_inv)
            quot[shift] = c
            for i, dc in enumerate(d):
                if dc:
                    r[shift + i] ^= self.mul(dc, c)
            r = self.poly_norm(r)
        return quot, r
