"""Partitions, hook lengths and the brute-force core enumerator.

Every closed form elsewhere in the package is checked against
:func:`enumerate_cores`, so this module deliberately stays simple:
hooks are computed cell by cell from arm and leg lengths, and the
enumerator only relies on the bead picture of a partition.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

THREADS_ENV = "SIMULCORES_THREADS"


@dataclass(frozen=True, order=True)
class Partition:
    """A nonincreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()
    weight: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,3,3"``; an empty string, ``"()"`` or ``"0"`` is the empty partition."""
        text = text.strip().strip("()[]")
        if text in ("", "0", "-"):
            return cls(())
        return cls(tuple(int(x) for x in text.split(",") if x.strip()))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0]))
        )

    def first_column_hooks(self) -> tuple[int, ...]:
        k = len(self.parts)
        return tuple(x + k - 1 - i for i, x in enumerate(self.parts))


@dataclass(frozen=True)
class HookProgression:
    """The avoided hook lengths ``s, s+t, s+2t, ...``.

    ``t == 0`` means the single hook ``s``.  With ``p`` set, the
    progression stops at ``s + p*t``.
    """

    s: int
    t: int
    p: int | None = None

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("s must be positive")
        if self.t < 0:
            raise ValueError("t must be nonnegative")
        if self.p is not None and self.p < 0:
            raise ValueError("p must be nonnegative")

    def __contains__(self, y: int) -> bool:
        return self.member(y)

    def member(self, y: int) -> bool:
        if y < self.s:
            return False
        if self.t == 0:
            return y == self.s
        q, r = divmod(y - self.s, self.t)
        return r == 0 and (self.p is None or q <= self.p)

    @property
    def finite(self) -> bool:
        return self.t == 0 or self.p is not None

    def terms(self, limit: int) -> list[int]:
        """Members of the progression that are ``<= limit``."""
        return [y for y in range(self.s, limit + 1) if self.member(y)]

    def __str__(self) -> str:
        if self.t == 0:
            return f"{{{self.s}}}"
        if self.p is None:
            return f"{self.s} (mod {self.t})"
        return "(" + ",".join(str(self.s + j * self.t) for j in range(self.p + 1)) + ")"


def hook_multiset(lam: Partition) -> Counter:
    """Multiset of hook lengths, computed as arm + leg + 1 for every cell."""
    parts = lam.parts
    conj = lam.conjugate().parts
    hooks: Counter = Counter()
    for i, row in enumerate(parts):
        for j in range(row):
            hooks[(row - j - 1) + (conj[j] - i - 1) + 1] += 1
    return hooks


def is_core(lam: Partition, H: HookProgression) -> bool:
    return not any(H.member(y) for y in hook_multiset(lam))


def _gen(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


def generate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _gen(n, n):
        yield Partition(parts)


# The enumerator grows a partition one largest part at a time.  In bead
# language (position 0 is the first spacer, beads are the first-column
# hooks) a new largest part is a new topmost bead b, and the hooks it
# creates are exactly b - x for the spacers x below it.  Hooks of the
# smaller parts never change, so a forbidden hook prunes the whole subtree.


def _forbidden_table(H: HookProgression, limit: int) -> list[bool]:
    return [H.member(y) for y in range(limit + 1)]


def _walk(forbidden, max_weight, beads, spacers, weight) -> Iterator[tuple[tuple[int, ...], int]]:
    stack = [(beads, spacers, weight)]
    while stack:
        beads, spacers, weight = stack.pop()
        yield beads, weight
        nb = len(beads)
        last = beads[-1] if beads else 0
        room = max_weight - weight
        cand_spacers = list(spacers)
        children = []
        for b in range(last + 1, nb + room + 1):
            if all(not forbidden[b - x] for x in cand_spacers):
                children.append((beads + (b,), tuple(cand_spacers), weight + b - nb))
            cand_spacers.append(b)
        stack.extend(reversed(children))


def _beads_to_partition(beads: tuple[int, ...]) -> Partition:
    return Partition(tuple(b - i for i, b in reversed(list(enumerate(beads)))))


def iter_cores(H: HookProgression, max_weight: int) -> Iterator[Partition]:
    """Every partition of weight ``<= max_weight`` with no hook in ``H``."""
    forbidden = _forbidden_table(H, max_weight)
    for beads, _ in _walk(forbidden, max_weight, (), (0,), 0):
        yield _beads_to_partition(beads)


def _count_subtree(args) -> list[int]:
    forbidden, max_weight, beads, spacers, weight = args
    counts = [0] * (max_weight + 1)
    for _, w in _walk(forbidden, max_weight, beads, spacers, weight):
        counts[w] += 1
    return counts


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def enumerate_cores(H: HookProgression, max_weight: int, workers: int | None = None) -> list[int]:
    """Counts ``c(0), ..., c(max_weight)`` of partitions avoiding every hook in ``H``.

    With ``workers > 1`` the subtrees below each choice of smallest part
    are counted in separate processes; the result does not depend on it.
    """
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    workers = _default_workers() if workers is None else workers
    forbidden = _forbidden_table(H, max_weight)
    if workers <= 1:
        return _count_subtree((forbidden, max_weight, (), (0,), 0))

    counts = [0] * (max_weight + 1)
    counts[0] = 1
    jobs = []
    spacers = [0]
    for b in range(1, max_weight + 1):
        if all(not forbidden[b - x] for x in spacers):
            jobs.append((forbidden, max_weight, (b,), tuple(spacers), b))
        spacers.append(b)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for sub in pool.map(_count_subtree, jobs):
            counts = [a + c for a, c in zip(counts, sub)]
    return counts


def olsson_stanton_bound(a: int, b: int) -> int:
    """Size of the largest (a, b)-core for coprime a and b."""
    return (a * a - 1) * (b * b - 1) // 24


def total_core_count(H: HookProgression, workers: int | None = None) -> int:
    """Number of partitions avoiding ``H``, for progressions with finitely many.

    Every such partition is an (s, s+t)-core, so enumeration stops at the
    size of the largest (s, s+t)-core.
    """
    s, t = H.s, H.t
    if s == 1:
        return 1
    if t == 0 or H.p == 0:
        raise ValueError(f"infinitely many partitions avoid {H}")
    if math.gcd(s, t) != 1:
        raise ValueError(f"gcd({s}, {t}) > 1: infinitely many partitions avoid {H}")
    return sum(enumerate_cores(H, olsson_stanton_bound(s, s + t), workers))
