"""Exact counting formulas for s (mod t)-cores and the Fayers polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0`` or ``k > n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


def _require_coprime(s: int, t: int):
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if math.gcd(s, t) != 1:
        raise ValueError(f"gcd({s}, {t}) = {math.gcd(s, t)} > 1")


class IntPolynomial:
    """Polynomial in one variable with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def format(self, var: str = "s") -> str:
        """``s^2 + 9s + 14`` style, highest degree first."""
        if not self.coeffs:
            return "0"
        out = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            out.append(body if not out and c > 0 else (f"-{body}" if not out else f"{sign} {body}"))
        return " ".join(out)

    __str__ = format


def rising_factorial(base: IntPolynomial, m: int) -> IntPolynomial:
    """``base (base + 1) ... (base + m - 1)``, equal to 1 for ``m == 0``."""
    out = IntPolynomial([1])
    for i in range(m):
        out = out * (base + i)
    return out


def anderson_count(s: int, t: int) -> int:
    """Number of (s, t)-cores, ``C(s+t, t) / (s+t)``."""
    _require_coprime(s, t)
    return _as_int(Fraction(binom(s + t, t), s + t), f"anderson_count({s}, {t})")


def chs_large_p(s: int, t: int) -> int:
    """Number of s (mod t)-cores from the absorbed binomial sum."""
    _require_coprime(s, t)
    return _as_int(g_sum(s, t), f"g_{t}({s})")


def g_sum(s: int, t: int) -> Fraction:
    """``sum_k (1/t) C(k+t-1, t-1) C(s+t-1, 2k+t-1)`` over ``0 <= k <= s/2``, for any s, t >= 1."""
    return sum(
        (Fraction(binom(k + t - 1, t - 1) * binom(s + t - 1, 2 * k + t - 1), t) for k in range(s // 2 + 1)),
        Fraction(0),
    )


def chs_two_term(s: int, t: int) -> Fraction:
    """The large-p limit before the k = 0 term is folded into the sum."""
    head = Fraction(binom(s + t, t), s + t)
    tail = sum(
        (Fraction(binom(k + t, k) * binom(s + t - 1, 2 * k + t - 1), k + t) for k in range(1, s // 2 + 1)),
        Fraction(0),
    )
    return head + tail


def lah(t: int, m: int) -> int:
    """Unsigned Lah number ``t!/m! * C(t-1, m-1)``."""
    if not t >= m >= 1:
        raise ValueError(f"Lah number needs t >= m >= 1, got L({t}, {m})")
    return math.factorial(t) // math.factorial(m) * binom(t - 1, m - 1)


def fayers_poly(t: int) -> IntPolynomial:
    """``f_t(s) = sum_m L(t, m) (s+1)^(rising m-1)``."""
    if t < 1:
        raise ValueError("t must be positive")
    s_plus_1 = IntPolynomial([1, 1])
    out = IntPolynomial()
    for m in range(1, t + 1):
        out = out + rising_factorial(s_plus_1, m - 1) * lah(t, m)
    return out


def fayers_count(s: int, t: int) -> int:
    """``2^(s-t) f_t(s) / t!``; the factor ``2^(s-t)`` may itself be fractional."""
    _require_coprime(s, t)
    value = Fraction(2) ** (s - t) * fayers_poly(t)(s) / math.factorial(t)
    return _as_int(value, f"2^({s}-{t}) f_{t}({s}) / {t}!")


@dataclass
class CheckReport:
    """Outcome of a family of exact checks, one row per instance."""

    name: str
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.rows)

    def add(self, ok: bool, **params):
        self.rows.append({**params, "ok": bool(ok)})

    def failures(self) -> list[dict]:
        return [r for r in self.rows if not r["ok"]]

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({len(self.rows) - len(self.failures())}/{len(self.rows)})"


def check_g_recurrence(t_max: int, s_max: int) -> CheckReport:
    """``2t g_t(s) = (s + 3(t-1)) g_{t-1}(s) - (t-2) g_{t-2}(s)`` for 3 <= t <= t_max."""
    report = CheckReport("g-recurrence")
    for t in range(3, t_max + 1):
        for s in range(1, s_max + 1):
            lhs = 2 * t * g_sum(s, t)
            rhs = (s + 3 * (t - 1)) * g_sum(s, t - 1) - (t - 2) * g_sum(s, t - 2)
            report.add(lhs == rhs, t=t, s=s)
    return report


def check_f_recurrence(t_max: int) -> CheckReport:
    """``f_t = (s + 3(t-1)) f_{t-1} - 2(t-1)(t-2) f_{t-2}`` as polynomials, from f_1 = 1, f_2 = s + 3."""
    report = CheckReport("f-recurrence")
    s = IntPolynomial.x()
    report.add(fayers_poly(1) == IntPolynomial([1]), t=1)
    if t_max >= 2:
        report.add(fayers_poly(2) == s + 3, t=2)
    for t in range(3, t_max + 1):
        rhs = (s + 3 * (t - 1)) * fayers_poly(t - 1) - fayers_poly(t - 2) * (2 * (t - 1) * (t - 2))
        report.add(fayers_poly(t) == rhs, t=t)
    return report


def check_constant_term(t_max: int) -> CheckReport:
    report = CheckReport("constant-term")
    for t in range(1, t_max + 1):
        report.add(fayers_poly(t)(0) == (2**t - 1) * math.factorial(t - 1), t=t)
    return report


def check_shape(t_max: int) -> CheckReport:
    """Monic, degree t-1, nonnegative coefficients."""
    report = CheckReport("monic-degree-nonneg")
    for t in range(1, t_max + 1):
        f = fayers_poly(t)
        report.add(f.leading == 1 and f.degree == t - 1 and min(f.coeffs) >= 0, t=t)
    return report


def check_conjecture2(t_max: int) -> CheckReport:
    """Evaluate f_t at the root -(t + (-1)^t) that divisibility by s + t + (-1)^t would force.

    The conjecture is open, so callers report this rather than assert it.
    """
    report = CheckReport("conjecture2")
    for t in range(2, t_max + 1):
        root = -(t + (-1) ** t)
        value = fayers_poly(t)(root)
        report.add(value == 0, t=t, root=root, value=value)
    return report
