"""Bead sequences and d-runner abaci.

Positions are normalized so that 0 is the first spacer; the beads are then
exactly the first-column hook lengths.  Negative positions are implicit
beads and positions past the last bead are implicit spacers.
"""

from __future__ import annotations

from dataclasses import dataclass

from simulcores.partitions import Partition

BEAD = "o"
SPACER = "."


@dataclass(frozen=True)
class BeadSequence:
    beads: frozenset[int] = frozenset()

    def __post_init__(self):
        beads = frozenset(int(b) for b in self.beads)
        if any(b < 0 for b in beads):
            raise ValueError("negative positions are implicit beads; store only positions >= 1")
        if 0 in beads:
            raise ValueError("position 0 must be a spacer")
        object.__setattr__(self, "beads", beads)

    def is_bead(self, x: int) -> bool:
        return x < 0 or x in self.beads

    @property
    def top(self) -> int:
        return max(self.beads, default=0)

    def sorted(self) -> list[int]:
        return sorted(self.beads)


def from_partition(lam: Partition) -> BeadSequence:
    return BeadSequence(frozenset(lam.first_column_hooks()))


def to_partition(b: BeadSequence) -> Partition:
    """Each bead contributes a part equal to the number of spacers below it."""
    if 0 in b.beads:
        raise ValueError("position 0 must be a spacer")
    beads = b.sorted()
    return Partition(tuple(x - i for i, x in reversed(list(enumerate(beads)))))


def has_hook(b: BeadSequence, y: int) -> bool:
    """A hook of length ``y`` is a spacer at ``x`` with a bead at ``x + y``."""
    if y < 1:
        raise ValueError("hook length must be positive")
    return any(x - y >= 0 and x - y not in b.beads for x in b.beads)


@dataclass(frozen=True)
class RunnerView:
    """The bead sequence folded onto ``d`` runners.

    ``runners[i][j]`` is True when position ``j*d + i`` holds a bead, for
    columns ``j = 0 .. width-1``; every column to the left is all beads and
    every column to the right all spacers.
    """

    d: int
    runners: tuple[tuple[bool, ...], ...]

    @property
    def width(self) -> int:
        return len(self.runners[0]) if self.runners else 0

    def to_beads(self) -> BeadSequence:
        return BeadSequence(
            frozenset(
                j * self.d + i
                for i, row in enumerate(self.runners)
                for j, bead in enumerate(row)
                if bead
            )
        )

    def render(self) -> str:
        """One row per runner, a column of implicit beads first, then columns 0, 1, ..."""
        label = len(str(self.d - 1))
        lines = []
        for i, row in enumerate(self.runners):
            cells = [BEAD] + [BEAD if x else SPACER for x in row]
            lines.append(f"{i:>{label}} | " + " ".join(cells))
        return "\n".join(lines)


def runner_view(b: BeadSequence, d: int, width: int | None = None) -> RunnerView:
    if d < 1:
        raise ValueError("d must be positive")
    need = b.top // d + 2
    width = need if width is None else max(width, need)
    return RunnerView(
        d, tuple(tuple(j * d + i in b.beads for j in range(width)) for i in range(d))
    )


def parse_runner_view(text: str) -> RunnerView:
    """Inverse of :meth:`RunnerView.render`."""
    rows = []
    for line in text.strip().splitlines():
        _, _, cells = line.partition("|")
        marks = cells.split()
        if not marks or marks[0] != BEAD:
            raise ValueError(f"malformed runner row: {line!r}")
        rows.append(tuple(m == BEAD for m in marks[1:]))
    if not rows:
        raise ValueError("empty abacus")
    return RunnerView(len(rows), tuple(rows))


def is_t_core_by_runners(b: BeadSequence, t: int) -> bool:
    """No runner of the t-abacus has a spacer followed by a bead."""
    view = runner_view(b, t)
    for row in view.runners:
        seen_spacer = False
        for bead in row:
            if not bead:
                seen_spacer = True
            elif seen_spacer:
                return False
    return True


def parametrized_3mod_cores(m: int, variant: str) -> list[Partition]:
    """Every 3 (mod 3m+1)-core or 3 (mod 3m+2)-core, built on the 3-abacus.

    A 3-core has, on each runner, a solid block of beads followed by
    spacers, and runner 0 has no positive beads since 0 is a spacer.  The
    core is fixed by the bead counts on runners 1 and 2.  Writing ``j`` for
    one count and ``j + l`` for the other:

    * ``3m+1``: runner 1 holds ``j`` beads and runner 2 holds ``j + l``,
      with ``0 <= j <= m+1``, ``-j <= l <= m+1``, minus ``(m+1, m+1)``.
    * ``3m+2``: runner 2 holds ``j`` beads and runner 1 holds ``j + l``,
      with ``0 <= j <= m+1``, ``-j <= l <= m+2``, minus ``(m+1, m+2)``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if variant == "3m+1":
        top, excluded = m + 1, (m + 1, m + 1)
    elif variant == "3m+2":
        top, excluded = m + 2, (m + 1, m + 2)
    else:
        raise ValueError(f"unknown variant {variant!r}")

    cores = []
    for j in range(m + 2):
        for l in range(-j, top + 1):
            if (j, l) == excluded:
                continue
            on_1, on_2 = (j, j + l) if variant == "3m+1" else (j + l, j)
            beads = {3 * k + 1 for k in range(on_1)} | {3 * k + 2 for k in range(on_2)}
            cores.append(to_partition(BeadSequence(frozenset(beads))))
    return cores
