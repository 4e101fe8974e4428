"""Generating functions ``C_{s(t)}(q)`` of s (mod t)-cores.

Coprime pairs give polynomials.  Closed forms cover s = 1, 2, 3; any
other coprime pair falls back to pruned enumeration up to the size of the
largest (s, s+t)-core.  Pairs with d = gcd(s, t) > 1 reduce to the coprime
pair (s/d, t/d) via

    C_{s(t)}(q) = (q^d; q^d)^d / (q; q) * C_{s/d (t/d)}(q^d)^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from simulcores.partitions import HookProgression, enumerate_cores, olsson_stanton_bound
from simulcores.qseries import TruncatedSeries, pochhammer

VARIANTS = ("3m+1", "3m+2")


def _polynomial(terms, trunc: int | None = None) -> TruncatedSeries:
    terms = list(terms)
    series = TruncatedSeries.from_terms(terms, max((e for e, _ in terms), default=0))
    if trunc is None:
        # cancellation may lower the degree
        return series.truncate(max(series.degree, 0))
    return _fit(series, trunc)


def gf_two_mod_odd(m: int, trunc: int | None = None) -> TruncatedSeries:
    """2 (mod 2m+1)-cores: the staircases with at most m+1 rows."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _polynomial(((k * (k + 1) // 2, 1) for k in range(m + 2)), trunc)


def gf_four_mod(m: int, N: int) -> TruncatedSeries:
    """4 (mod 4m+2)-cores to order N."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    theta = TruncatedSeries.from_terms(((k * k + k, 1) for k in range(m + 2)), N)
    return pochhammer(2, 2, N) * pochhammer(1, -1, N) * theta * theta


def gf_three_mod(m: int, variant: str, trunc: int | None = None) -> TruncatedSeries:
    """3 (mod 3m+1)-cores or 3 (mod 3m+2)-cores as an exact polynomial.

    Evaluates the double sum over ``0 <= j <= m+1`` and ``-j <= l <= top``
    and removes the single excluded monomial.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if variant == "3m+1":
        top, excluded = m + 1, 3 * (m + 1) ** 2 + 2 * (m + 1)

        def exponent(j, l):
            return j * j + j + l * j + l * l + l

    elif variant == "3m+2":
        top, excluded = m + 2, (3 * m + 4) * (m + 2)

        def exponent(j, l):
            return j * j + j + l * j + l * l

    else:
        raise ValueError(f"unknown variant {variant!r}")
    terms = [(exponent(j, l), 1) for j in range(m + 2) for l in range(-j, top + 1)]
    terms.append((excluded, -1))
    return _polynomial(terms, trunc)


def _fit(poly: TruncatedSeries, N: int) -> TruncatedSeries:
    """Pad or cut a polynomial to truncation order N."""
    return TruncatedSeries(poly.coeffs[: N + 1], N)


@dataclass
class GenFunRequest:
    s: int
    t: int
    N: int
    d: int = field(init=False)
    route: str = field(init=False, default="")

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise ValueError("s and t must be positive")
        if self.N < 0:
            raise ValueError("truncation order must be nonnegative")
        self.d = math.gcd(self.s, self.t)


def coprime_route(s: int, t: int) -> str:
    if s == 1:
        return "trivial"
    if s == 2:
        return "closed-form 2 (mod 2m+1)"
    if s == 3:
        return f"closed-form 3 (mod {'3m+1' if t % 3 == 1 else '3m+2'})"
    return "brute-force"


def coprime_polynomial(s: int, t: int) -> TruncatedSeries:
    """The full polynomial ``C_{s(t)}`` for coprime s, t."""
    if math.gcd(s, t) != 1:
        raise ValueError(f"gcd({s}, {t}) > 1: not a polynomial")
    if s == 1:
        # every nonempty partition has a hook of length 1
        return TruncatedSeries([1], 0)
    if s == 2:
        return gf_two_mod_odd((t - 1) // 2)
    if s == 3:
        if t % 3 == 1:
            return gf_three_mod((t - 1) // 3, "3m+1")
        return gf_three_mod((t - 2) // 3, "3m+2")
    counts = enumerate_cores(HookProgression(s, t), olsson_stanton_bound(s, s + t))
    return _polynomial(enumerate(counts))


def gf_composite(s: int, t: int, N: int, request: GenFunRequest | None = None) -> TruncatedSeries:
    """``C_{s(t)}(q)`` to order N for any positive s, t."""
    req = request or GenFunRequest(s, t, N)
    d = req.d
    if d == 1:
        req.route = coprime_route(s, t)
        return _fit(coprime_polynomial(s, t), N)
    inner = gf_composite(s // d, t // d, -(-N // d))
    req.route = f"composite d={d} over {coprime_route(s // d, t // d)}"
    lifted = inner.substitute_power(d, cap=N)
    return pochhammer(d, d, N) * pochhammer(1, -1, N) * lifted**d
