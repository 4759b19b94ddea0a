"""Shortened Reed-Solomon codecs over GF(2^m) with explicit failure detection.

The component code of the graph code is the (255, 255-(epsilon-1)) parent
code over GF(256) shortened to its first n symbols: word position j carries
the coefficient of x^j, positions n..254 are virtual zeros, and a word is a
codeword iff its syndromes S_i = sum_j c_j * alpha^(i*j) vanish for
i = 1..epsilon-1 (consecutive roots starting at alpha^1).

The decoder never hides trouble: any detected inconsistency (locator degree
over budget, root count mismatch, a root in the shortened virtual region, or
nonzero syndromes after correction) returns the input verbatim with a FAILED
status. That skip semantics is what the outer iterative decoder relies on to
leave hopeless component blocks untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from pgcodes.galois import GF


class RsStatus(Enum):
    CORRECTED = "corrected"
    FAILED = "failed"


@dataclass
class RsOutcome:
    """Result of one component decode.

    status CORRECTED guarantees the word is a valid codeword (its syndromes
    were re-verified); status FAILED guarantees the word equals the decoder
    input bit for bit.
    """

    status: RsStatus
    word: list[int]
    errors_corrected: int
    erasures_used: int

    @property
    def ok(self) -> bool:
        return self.status is RsStatus.CORRECTED


class RsParams:
    """Parameters and precomputed tables of one shortened RS code.

    Immutable after construction; decoding touches no shared mutable state,
    so any number of decodes may run concurrently against one instance.
    """

    def __init__(self, n: int = 31, epsilon: int = 7, field: GF | None = None):
        if epsilon < 3 or epsilon % 2 == 0:
            raise ValueError(f"design distance must be odd and >= 3, got {epsilon}")
        self.field = field if field is not None else GF(8)
        self.parent_n = self.field.order
        if not 1 <= n <= self.parent_n:
            raise ValueError(f"block length must be in [1, {self.parent_n}], got {n}")
        if n - (epsilon - 1) < 1:
            raise ValueError(f"no message symbols left: n={n}, epsilon={epsilon}")
        self.n = n
        self.epsilon = epsilon
        self.k = n - (epsilon - 1)
        self.t = epsilon // 2
        self.two_t = epsilon - 1

        f = self.field
        # g(x) = prod_{i=1..2t} (x - alpha^i), monic, lowest-first.
        g = [1]
        for i in range(1, self.two_t + 1):
            g = f.poly_mul(g, [f.exp_alpha(i), 1])
        self.generator_poly = g

        # power_matrix[i-1, j] = alpha^(i*j): the syndrome functionals.
        self._power_matrix = np.array(
            [[f.exp_alpha(i * j) for j in range(n)] for i in range(1, self.two_t + 1)],
            dtype=np.uint8,
        )
        # chien_matrix[j, t] = alpha^(-j*t): locator evaluation at alpha^(-j).
        self._chien_matrix = np.array(
            [[f.exp_alpha(-j * t) for t in range(self.two_t + 1)] for j in range(self.parent_n)],
            dtype=np.uint8,
        )

    def __repr__(self) -> str:
        return f"RsParams(n={self.n}, k={self.k}, epsilon={self.epsilon})"

    def syndromes(self, word: Sequence[int]) -> list[int]:
        """S_i = sum_j word[j] * alpha^(i*j) for i = 1..epsilon-1."""
        f = self.field
        out = []
        for i in range(1, self.two_t + 1):
            acc = 0
            for j, c in enumerate(word):
                if c:
                    acc ^= f.mul(c, self._power_matrix[i - 1, j])
            out.append(acc)
        return out

    def batch_syndromes(self, words: np.ndarray) -> np.ndarray:
        """Syndromes of many words at once: (v, n) uint8 -> (v, 2t) uint8."""
        mt = self.field.mul_table
        prod = mt[self._power_matrix[None, :, :], words[:, None, :]]
        return np.bitwise_xor.reduce(prod, axis=2)

    def locator_roots(self, locator: Sequence[int]) -> list[int]:
        """Positions j in [0, parent_n) with locator(alpha^(-j)) = 0."""
        mt = self.field.mul_table
        coeffs = np.asarray(locator, dtype=np.uint8)
        vals = np.bitwise_xor.reduce(
            mt[self._chien_matrix[:, : len(coeffs)], coeffs[None, :]], axis=1
        )
        return np.nonzero(vals == 0)[0].tolist()


def rs_encode(params: RsParams, message: Sequence[int]) -> list[int]:
    """Systematic encoding: parity in positions 0..epsilon-2, message above.

    The codeword polynomial is m(x)*x^(2t) + (m(x)*x^(2t) mod g(x)), computed
    with the usual feedback shift register form of synthetic division.
    """
    message = _check_symbols(params, message, params.k, "message")
    f = params.field
    g = params.generator_poly
    two_t = params.two_t
    parity = [0] * two_t
    for sym in reversed(message):
        feedback = sym ^ parity[-1]
        if feedback:
            parity = [f.mul(feedback, g[0])] + [
                parity[i - 1] ^ f.mul(feedback, g[i]) for i in range(1, two_t)
            ]
        else:
            parity = [0] + parity[:-1]
    return parity + list(message)


def rs_decode(
    params: RsParams,
    received: Sequence[int],
    erasures: Iterable[int] = (),
    syndromes: Sequence[int] | None = None,
) -> RsOutcome:
    """Bounded-distance errors-and-erasures decoding via Berlekamp-Massey.

    Corrects any pattern of e symbol errors and f declared erasures with
    2e + f <= epsilon - 1. Precomputed syndromes of the received word may be
    passed when there are no erasures to avoid recomputation.

    Calling with more than epsilon - 1 erasures is a domain error; every
    detected failure returns the input unchanged.
    """
    f_ = params.field
    n = params.n
    two_t = params.two_t
    received = _check_symbols(params, received, n, "received word")
    erasures = sorted(set(erasures))
    if erasures and not (0 <= erasures[0] and erasures[-1] < n):
        raise ValueError("erasure positions out of range")
    n_erased = len(erasures)
    if n_erased > two_t:
        raise ValueError(f"at most {two_t} erasures are usable, got {n_erased}")

    work = list(received)
    for j in erasures:
        work[j] = 0
    if syndromes is not None and not erasures:
        synd = [int(s) for s in syndromes]
    else:
        synd = params.syndromes(work)
    if not any(synd):
        return RsOutcome(RsStatus.CORRECTED, work, 0, n_erased)

    # Erasure locator gamma(x) = prod (1 - alpha^j x) seeds the key equation.
    gamma = [1]
    for j in erasures:
        gamma = f_.poly_mul(gamma, [1, f_.exp_alpha(j)])
    locator = _berlekamp_massey(f_, synd, two_t, gamma, n_erased)

    deg = len(locator) - 1
    n_errors = deg - n_erased
    if locator[0] != 1 or n_errors < 0 or 2 * n_errors + n_erased > two_t:
        return _failed(received, n_erased)
    roots = params.locator_roots(locator)
    if len(roots) != deg:
        return _failed(received, n_erased)
    if roots and roots[-1] >= n:
        # A locator root in the shortened virtual region is a sure failure.
        return _failed(received, n_erased)

    # Forney: error value at position j is omega(X^-1) / locator'(X^-1) with
    # X = alpha^j and omega = synd(x) * locator(x) mod x^(2t).
    omega = f_.poly_mul(synd, locator)[:two_t]
    deriv = [0] * max(1, deg)
    for i in range(1, deg + 1, 2):
        deriv[i - 1] = locator[i]
    candidate = list(work)
    for j in roots:
        x_inv = f_.exp_alpha(-j)
        denom = f_.poly_eval(deriv, x_inv)
        if denom == 0:
            return _failed(received, n_erased)
        candidate[j] ^= f_.div(f_.poly_eval(omega, x_inv), denom)

    if any(params.syndromes(candidate)):
        return _failed(received, n_erased)
    erased = set(erasures)
    n_corrected = sum(
        1 for j in range(n) if j not in erased and candidate[j] != received[j]
    )
    return RsOutcome(RsStatus.CORRECTED, candidate, n_corrected, n_erased)


def _failed(received: Sequence[int], n_erased: int) -> RsOutcome:
    return RsOutcome(RsStatus.FAILED, list(received), 0, n_erased)


def _berlekamp_massey(
    field: GF, synd: Sequence[int], two_t: int, gamma: Sequence[int], n_erased: int
) -> list[int]:
    """Errata locator from syndromes, seeded with the erasure locator.

    Massey's LFSR synthesis in its structural form: the shift register and
    the correction register both start at gamma, and the first n_erased
    syndromes are skipped because the erasures already explain them.
    """
    cur = list(gamma)
    prev = list(gamma)
    for i in range(two_t - n_erased):
        k = i + n_erased
        delta = synd[k]
        for j in range(1, len(cur)):
            if j > k:
                break
            if cur[j] and synd[k - j]:
                delta ^= field.mul(cur[j], synd[k - j])
        prev = [0] + prev
        if delta:
            if len(prev) > len(cur):
                swapped = field.poly_scale(prev, delta)
                prev = field.poly_scale(cur, field.inv(delta))
                cur = swapped
            cur = field.poly_add(cur, field.poly_scale(prev, delta))
    cur = field.poly_norm(cur)
    return cur if cur else [0]


def _check_symbols(
    params: RsParams, word: Sequence[int], expected_len: int, what: str
) -> list[int]:
    word = [int(c) for c in word]
    if len(word) != expected_len:
        raise ValueError(f"{what} must have {expected_len} symbols, got {len(word)}")
    for c in word:
        if not 0 <= c < params.field.q:
            raise ValueError(f"{what} symbol {c} outside GF(2^{params.field.m})")
    return word
