"""Truncated power series with exact integer coefficients.

Coefficients are Python ints; products and Pochhammer factors are run
through numpy object arrays so the inner loops stay in C while the
arithmetic stays arbitrary precision.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _obj(values, length: int | None = None) -> np.ndarray:
    arr = np.empty(len(values) if length is None else length, dtype=object)
    arr[:] = 0
    arr[: len(values)] = list(values)
    return arr


def _combine_moduli(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return math.gcd(a, b)


class TruncatedSeries:
    """``c[0] + c[1] q + ... + c[N] q^N + O(q^(N+1))``.

    With ``modulus`` set the coefficients are kept as residues in ``[0, m)``.
    Binary operations truncate to the smaller order and, when both sides
    carry a modulus, reduce modulo their gcd.
    """

    __slots__ = ("coeffs", "trunc", "modulus")

    def __init__(self, coeffs: Iterable[int] = (), trunc: int | None = None, modulus: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if trunc is None:
            trunc = max(len(coeffs) - 1, 0)
        if trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        if modulus is not None and modulus < 1:
            raise ValueError("modulus must be positive")
        coeffs = coeffs[: trunc + 1] + [0] * (trunc + 1 - len(coeffs))
        if modulus is not None:
            coeffs = [c % modulus for c in coeffs]
        self.coeffs = tuple(coeffs)
        self.trunc = trunc
        self.modulus = modulus

    @classmethod
    def from_terms(cls, terms, trunc: int, modulus: int | None = None) -> "TruncatedSeries":
        """Build from ``(exponent, coefficient)`` pairs; exponents past ``trunc`` are dropped."""
        if isinstance(terms, dict):
            terms = terms.items()
        coeffs = [0] * (trunc + 1)
        for e, c in terms:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e <= trunc:
                coeffs[e] += c
        return cls(coeffs, trunc, modulus)

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls([1], trunc)

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coeff: int = 1) -> "TruncatedSeries":
        return cls.from_terms([(exponent, coeff)], trunc)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.trunc + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.trunc, self.modulus, self.coeffs) == (other.trunc, other.modulus, other.coeffs)

    def __hash__(self):
        return hash((self.trunc, self.modulus, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for n, c in self.terms():
            if n == 0:
                terms.append(str(c))
            else:
                mono = "q" if n == 1 else f"q^{n}"
                terms.append(mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}"))
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        mod = f" (mod {self.modulus})" if self.modulus else ""
        return f"{body} + O(q^{self.trunc + 1}){mod}"

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs."""
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient, ``-1`` for the zero series."""
        for n in range(self.trunc, -1, -1):
            if self.coeffs[n]:
                return n
        return -1

    # arithmetic

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries([other], self.trunc)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.trunc, other.trunc)
        return TruncatedSeries(
            (a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])),
            n,
            _combine_moduli(self.modulus, other.modulus),
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-c for c in self.coeffs), self.trunc, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries((other * c for c in self.coeffs), self.trunc, self.modulus)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        modulus = _combine_moduli(self.modulus, other.modulus)
        a, b = self.coeffs[: n + 1], other.coeffs[: n + 1]
        a_terms = [(i, c) for i, c in enumerate(a) if c]
        b_terms = [(i, c) for i, c in enumerate(b) if c]
        if len(b_terms) < len(a_terms):
            a_terms, b = b_terms, a
        dense = _obj(b)
        out = _obj([], n + 1)
        for i, c in a_terms:
            out[i:] += c * dense[: n + 1 - i]
            if modulus is not None:
                out[i:] %= modulus
        return TruncatedSeries(out, n, modulus)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.coeffs[0]
        m = self.modulus
        if m is None:
            if c0 not in (1, -1):
                raise ZeroDivisionError("constant term is not a unit in the integers")
            u = c0
        else:
            if math.gcd(c0, m) != 1:
                raise ZeroDivisionError(f"constant term {c0} is not a unit mod {m}")
            u = pow(c0, -1, m)
        n = self.trunc
        a = _obj(self.coeffs)
        b = _obj([], n + 1)
        b[0] = u
        for k in range(1, n + 1):
            b[k] = -u * np.dot(a[1 : k + 1], b[k - 1 :: -1])
            if m is not None:
                b[k] %= m
        return TruncatedSeries(b, n, m)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = TruncatedSeries([1], self.trunc, self.modulus)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # structural operations

    def reduce(self, m: int) -> "TruncatedSeries":
        """Canonical residues modulo ``m``."""
        return TruncatedSeries(self.coeffs, self.trunc, _combine_moduli(self.modulus, m))

    def truncate(self, n: int) -> "TruncatedSeries":
        if n > self.trunc:
            raise ValueError(f"cannot extend truncation from {self.trunc} to {n}")
        return TruncatedSeries(self.coeffs[: n + 1], n, self.modulus)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q^k``; the known range grows by ``k``."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries((0,) * k + self.coeffs, self.trunc + k, self.modulus)

    def dissect(self, m: int, r: int) -> "TruncatedSeries":
        """Series whose n-th coefficient is the (m n + r)-th coefficient of ``self``."""
        if m < 1 or not 0 <= r < m:
            raise ValueError("need m >= 1 and 0 <= r < m")
        if r > self.trunc:
            raise ValueError(f"residue {r} lies beyond truncation {self.trunc}")
        return TruncatedSeries(self.coeffs[r::m], (self.trunc - r) // m, self.modulus)

    def substitute_power(self, k: int, cap: int | None = None) -> "TruncatedSeries":
        """Substitute ``q -> q^k``.

        Exponents between ``k*N`` and ``k*(N+1)`` are not multiples of ``k``
        and therefore known to vanish, so the result is exact through
        ``k*N + k - 1`` (or ``cap`` if smaller).
        """
        if k < 1:
            raise ValueError("k must be positive")
        trunc = k * self.trunc + k - 1
        if cap is not None:
            trunc = min(trunc, cap)
        coeffs = [0] * (trunc + 1)
        for n, c in enumerate(self.coeffs):
            if k * n > trunc:
                break
            coeffs[k * n] = c
        return TruncatedSeries(coeffs, trunc, self.modulus)

    def congruent(self, other: "TruncatedSeries", m: int | None = None) -> bool:
        """Coefficientwise equality (mod ``m`` when given) up to the smaller order."""
        n = min(self.trunc, other.trunc)
        pairs = zip(self.coeffs[: n + 1], other.coeffs[: n + 1])
        if m is None:
            return all(a == b for a, b in pairs)
        return all((a - b) % m == 0 for a, b in pairs)


def pochhammer(a: int, e: int, N: int) -> TruncatedSeries:
    """``(q^a; q^a)_inf ** e`` to order ``N``, built factor by factor."""
    if a < 1:
        raise ValueError("a must be positive")
    c = _obj([1], N + 1)
    for step in range(a, N + 1, a):
        for _ in range(abs(e)):
            if e > 0:
                c[step:] = c[step:] - c[: N + 1 - step]
            else:
                for start in range(step, N + 1, step):
                    end = min(start + step, N + 1)
                    c[start:end] += c[start - step : end - step]
    return TruncatedSeries(c, N)


def pentagonal_series(N: int) -> TruncatedSeries:
    """Sum over all integers n of (-1)^n q^(n(3n-1)/2)."""
    terms = []
    n = 0
    while n * (3 * n - 1) // 2 <= N:
        for k in {n, -n}:
            terms.append((k * (3 * k - 1) // 2, (-1) ** n))
        n += 1
    return TruncatedSeries.from_terms(terms, N)


def jacobi_cube(N: int) -> TruncatedSeries:
    """Sum over n >= 0 of (-1)^n (2n+1) q^(n(n+1)/2)."""
    terms = []
    n = 0
    while n * (n + 1) // 2 <= N:
        terms.append((n * (n + 1) // 2, (-1) ** n * (2 * n + 1)))
        n += 1
    return TruncatedSeries.from_terms(terms, N)


def octagonal_series(N: int) -> TruncatedSeries:
    """Sum over all integers n of q^(n(3n-2))."""
    exps = set()
    n = 0
    while n * (3 * n - 2) <= N or n * (3 * n + 2) <= N:
        for k in (n, -n):
            if k * (3 * k - 2) <= N:
                exps.add(k * (3 * k - 2))
        n += 1
    return TruncatedSeries.from_terms([(e, 1) for e in exps], N)


def verify_dream_cong(p: int, k: int, l: int, N: int) -> bool:
    """``(q^l;q^l)^(p^k) == (q^(lp);q^(lp))^(p^(k-1))`` coefficientwise mod ``p^k``."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    lhs = pochhammer(l, p**k, N)
    rhs = pochhammer(l * p, p ** (k - 1), N)
    return lhs.congruent(rhs, p**k)


def _eta_quotient(factors: dict[int, int], N: int) -> TruncatedSeries:
    out = TruncatedSeries.one(N)
    for a, e in factors.items():
        out = out * pochhammer(a, e, N)
    return out


def xia_yao_identity(N: int) -> bool:
    """Exact 2-dissection of ``(q^9;q^9)/(q;q)``."""
    lhs = _eta_quotient({9: 1, 1: -1}, N)
    even = _eta_quotient({12: 3, 18: 1, 2: -2, 6: -1, 36: -1}, N)
    odd = _eta_quotient({4: 2, 6: 1, 36: 1, 2: -3, 12: -1}, N)
    return lhs.congruent(even + odd.shift(1))


def xia_yao_corollary(N: int) -> bool:
    """``(q^9;q^9)/(q;q) = (q^2;q^2)^4 + q (q^36;q^36)/(q^4;q^4)`` mod 3."""
    lhs = _eta_quotient({9: 1, 1: -1}, N)
    rhs = pochhammer(2, 4, N) + _eta_quotient({36: 1, 4: -1}, N).shift(1)
    return lhs.congruent(rhs, 3)


def verify_xia_yao(N: int) -> bool:
    return xia_yao_identity(N) and xia_yao_corollary(N)


def robbins_2core3_check(N: int) -> bool:
    """3-core generating function against the octagonal theta series, mod 2."""
    return _eta_quotient({3: 3, 1: -1}, N).congruent(octagonal_series(N), 2)
