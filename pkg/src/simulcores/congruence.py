"""Arithmetic-progression congruences for core counting functions.

All checks here run to a finite order N: "verified" always means
verified through index N, never proved.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from simulcores.enumeration import CheckReport
from simulcores.genfun import gf_composite, gf_four_mod
from simulcores.qseries import TruncatedSeries, _is_prime


@dataclass(frozen=True)
class APCongruence:
    """Claim ``c(A n + b) == 0 (mod m)`` for every ``b`` in ``B``; ``m == 0`` means exactly zero."""

    A: int
    B: tuple[int, ...]
    m: int
    status: str = "unchecked"
    checked_to: int | None = None
    witness: int | None = None

    def __post_init__(self):
        if self.A < 1:
            raise ValueError("period must be positive")
        if self.m < 0:
            raise ValueError("modulus must be nonnegative")
        B = tuple(sorted(set(self.B)))
        if any(not 0 <= b < self.A for b in B):
            raise ValueError(f"residues must lie in [0, {self.A})")
        object.__setattr__(self, "B", B)

    def holds_at(self, c: int) -> bool:
        return c == 0 if self.m == 0 else c % self.m == 0

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def __str__(self) -> str:
        rel = "= 0" if self.m == 0 else f"== 0 (mod {self.m})"
        residues = ",".join(map(str, self.B))
        tail = {
            "verified": f"verified to order {self.checked_to}",
            "refuted": f"refuted at n = {self.witness}",
        }.get(self.status, self.status)
        return f"c({self.A}n+{residues}) {rel}: {tail}"


def verify_ap(series: TruncatedSeries, cong: APCongruence, N: int | None = None) -> APCongruence:
    """Check every index ``A n + b <= N``; return the claim with its status filled in."""
    N = series.trunc if N is None else N
    if series.trunc < N:
        raise ValueError(f"series known to order {series.trunc} < {N}")
    for b in cong.B:
        for idx in range(b, N + 1, cong.A):
            if not cong.holds_at(series[idx]):
                return replace(cong, status="refuted", checked_to=N, witness=idx)
    return replace(cong, status="verified", checked_to=N, witness=None)


def residues_4t(p: int) -> tuple[int, list[int]]:
    """``r = -2^-1 - 2^-3 mod p^2`` and the classes ``k p + r`` with ``p`` not dividing ``k``."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 4 != 3:
        raise ValueError(f"{p} is not 3 mod 4")
    mod = p * p
    r = (-pow(2, -1, mod) - pow(8, -1, mod)) % mod
    return r, sorted((k * p + r) % mod for k in range(1, p))


def triangular_residues(mod: int) -> set[int]:
    if mod < 1:
        raise ValueError("modulus must be positive")
    return {n * (n + 1) // 2 % mod for n in range(2 * mod)}


def octagonal_residues(mod: int) -> set[int]:
    """Residues of ``n(3n-2)`` over all integers n."""
    if mod < 1:
        raise ValueError("modulus must be positive")
    return {n * (3 * n - 2) % mod for n in range(mod)}


def is_quadratic_residue(a: int, p: int) -> bool:
    return any((x * x - a) % p == 0 for x in range(p))


def zero_residues(series: TruncatedSeries, A: int, m: int, N: int | None = None) -> list[int]:
    """All b in [0, A) with ``c(A n + b) == 0 (mod m)`` through order N."""
    N = series.trunc if N is None else N
    return [b for b in range(A) if verify_ap(series, APCongruence(A, (b,), m), N).verified]


def four_t_series(t: int, N: int) -> TruncatedSeries:
    if t % 4 != 2:
        raise ValueError(f"t = {t} is not 2 mod 4")
    return gf_four_mod((t - 2) // 4, N)


def catalogue() -> list[tuple[str, str, APCongruence]]:
    """The proved congruences, as (series label, description, claim)."""
    items = [
        ("4(2)", "c_4(2)(11j+9) = 0", APCongruence(11, (9,), 0)),
        ("4(2)", "c_4(2)(11j+2) even", APCongruence(11, (2,), 2)),
    ]
    for p in (3, 7):
        _, res = residues_4t(p)
        for t in (2, 6, 10):
            items.append((f"4({t})", f"c_4({t})({p * p}n + r) even, p = {p}", APCongruence(p * p, tuple(res), 2)))
    items += [
        ("6(9)", "c_6(9)(16n+12) even", APCongruence(16, (12,), 2)),
        (
            "6(9)",
            "c_6(9)(400n+k) == 0 mod 3",
            APCongruence(400, (38, 88, 118, 168, 198, 248, 278, 328), 3),
        ),
        ("6(9)", "c_6(9)(113n+89) even", APCongruence(113, (89,), 2)),
        ("9(12)", "c_9(12)(56n+k) even", APCongruence(56, (13, 28, 47), 2)),
    ]
    return items


def extra_congruences() -> list[tuple[str, str, APCongruence]]:
    """Claims found by the residue argument but outside the stated catalogue.

    Octagonal exponents take residues {0, 1, 5, 8} mod 16 and the mod-2
    polynomial factor of C_6(9) has exponent residues {0, 2, 3, 5, 6, 11, 15};
    their sumset misses only 9.
    """
    return [("6(9)", "c_6(9)(16n+9) even", APCongruence(16, (9,), 2))]


def _series_for(label: str, N: int) -> TruncatedSeries:
    s, t = label.rstrip(")").split("(")
    s, t = int(s), int(t)
    if s == 4:
        return four_t_series(t, N)
    return gf_composite(s, t, N)


def verify_paper_congruences(N: int, items=None) -> tuple[CheckReport, list[APCongruence]]:
    """Run the whole catalogue (or ``items``) through order N."""
    report = CheckReport(f"congruence catalogue (order {N})")
    results = []
    cache: dict[str, TruncatedSeries] = {}
    for label, desc, cong in catalogue() if items is None else items:
        if label not in cache:
            cache[label] = _series_for(label, N)
        res = verify_ap(cache[label], cong, N)
        results.append(res)
        report.add(res.verified, claim=desc, series=label, result=str(res))
    return report, results


def scan_ap_zero(series: TruncatedSeries, m: int, A_max: int, N: int) -> list[APCongruence]:
    """Search periods ``A <= A_max`` for residues where the coefficients vanish (mod m).

    A residue already implied by a hit with a smaller period dividing A is
    not reported again.  Hits are evidence through order N only.
    """
    if N < 10 * A_max:
        raise ValueError(f"need N >= 10 * A_max = {10 * A_max} for a meaningful scan")
    if series.trunc < N:
        raise ValueError(f"series known to order {series.trunc} < {N}")
    found: list[APCongruence] = []
    for A in range(1, A_max + 1):
        hits = []
        for b in range(A):
            if any(A % g.A == 0 and b % g.A in g.B for g in found):
                continue
            if verify_ap(series, APCongruence(A, (b,), m), N).verified:
                hits.append(b)
        if hits:
            found.append(APCongruence(A, tuple(hits), m, status="verified", checked_to=N))
    return found
