import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from simulcores.partitions import Partition

DATA = Path(__file__).parent / "data"


def naive_hooks(parts):
    """Hook lengths from the set of cells, without using conjugates."""
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    out = []
    for i, j in cells:
        arm = sum(1 for (a, b) in cells if a == i and b > j)
        leg = sum(1 for (a, b) in cells if b == j and a > i)
        out.append(arm + leg + 1)
    return sorted(out)


def count_partitions(n, largest=None):
    """p(n) by the recursion on the largest part."""
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


@st.composite
def partitions(draw, max_weight=20):
    parts = []
    budget = draw(st.integers(0, max_weight))
    while budget > 0:
        x = draw(st.integers(1, budget))
        parts.append(x)
        budget -= x
    return Partition(tuple(sorted(parts, reverse=True)))


@pytest.fixture(scope="session")
def a079638_row11():
    return json.loads((DATA / "a079638_row11.json").read_text())["coefficients"]
