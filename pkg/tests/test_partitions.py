import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import count_partitions, naive_hooks, partitions
from simulcores.partitions import (
    HookProgression,
    Partition,
    enumerate_cores,
    generate_partitions,
    hook_multiset,
    is_core,
    iter_cores,
    total_core_count,
)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition(()).weight == 0
    assert Partition.parse("5,3,3") == Partition((5, 3, 3))
    assert Partition.parse("") == Partition(())


def test_hook_multiset_empty():
    assert hook_multiset(Partition(())) == Counter()


def test_hook_multiset_displayed_diagram():
    hooks = hook_multiset(Partition((5, 3, 2, 2, 1, 1)))
    assert sorted(hooks.elements()) == sorted([10, 7, 4, 2, 1, 7, 4, 1, 5, 2, 4, 1, 2, 1])
    assert not {3, 6, 8, 9} & set(hooks)
    assert max(hooks) == 10


def test_hook_multiset_553():
    lam = Partition((5, 3, 3))
    assert sum(hook_multiset(lam).values()) == 11
    assert lam.first_column_hooks() == (7, 4, 3)


def test_progression_membership():
    H = HookProgression(3, 4)
    assert [y for y in range(20) if y in H] == [3, 7, 11, 15, 19]
    assert [y for y in range(20) if y in HookProgression(4, 0)] == [4]
    assert [y for y in range(30) if y in HookProgression(2, 3, 2)] == [2, 5, 8]


def test_is_core_examples():
    assert is_core(Partition(()), HookProgression(1, 1))
    assert is_core(Partition((5, 3, 2, 2, 1, 1)), HookProgression(3, 3))
    assert not is_core(Partition((3, 2, 1)), HookProgression(2, 3))


@pytest.mark.parametrize("n, expected", [(0, 1), (4, 5), (10, 42)])
def test_generate_partitions_counts(n, expected):
    assert sum(1 for _ in generate_partitions(n)) == expected


def test_generate_partitions_order():
    assert [p.parts for p in generate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(generate_partitions(0)) == [Partition(())]


@pytest.mark.parametrize("n", range(0, 16))
def test_generate_partitions_against_recursion(n):
    got = list(generate_partitions(n))
    assert len(got) == len(set(got)) == count_partitions(n)
    assert all(p.weight == n for p in got)


def test_enumerate_cores_examples():
    assert enumerate_cores(HookProgression(2, 3), 5) == [1, 1, 0, 1, 0, 0]
    assert enumerate_cores(HookProgression(3, 4), 10) == [1, 1, 2, 0, 2, 1, 2, 0, 0, 0, 2]
    for t in range(1, 5):
        assert enumerate_cores(HookProgression(1, t), 5) == [1, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("s, t", [(2, 3), (3, 3), (4, 2), (3, 5), (2, 0), (5, 2)])
def test_enumerate_cores_matches_filtering(s, t):
    H = HookProgression(s, t)
    expected = [sum(1 for lam in generate_partitions(n) if is_core(lam, H)) for n in range(19)]
    assert enumerate_cores(H, 18) == expected


def test_enumerate_cores_parallel_identical():
    H = HookProgression(4, 2)
    assert enumerate_cores(H, 40, workers=3) == enumerate_cores(H, 40, workers=1)


def test_iter_cores_yields_cores():
    H = HookProgression(3, 4)
    cores = list(iter_cores(H, 10))
    assert len(cores) == 11
    assert all(is_core(lam, H) for lam in cores)


@pytest.mark.parametrize("s, t, expected", [(2, 3, 3), (1, 2, 1), (3, 4, 11)])
def test_total_core_count(s, t, expected):
    assert total_core_count(HookProgression(s, t)) == expected


def test_total_core_count_rejects_infinite():
    with pytest.raises(ValueError):
        total_core_count(HookProgression(4, 2))
    with pytest.raises(ValueError):
        total_core_count(HookProgression(3, 0))


def test_finite_progression_anderson():
    # (2, 5)-cores: C(7, 2) / 7
    assert total_core_count(HookProgression(2, 3, 1)) == 3


def test_is_core_agrees_with_naive_hooks_exhaustively():
    progressions = [HookProgression(s, t) for s in range(1, 7) for t in range(0, 7)]
    for n in range(0, 15):
        for lam in generate_partitions(n):
            hooks = naive_hooks(lam.parts)
            assert sorted(hook_multiset(lam).elements()) == hooks
            for H in progressions:
                assert is_core(lam, H) == (not any(y in H for y in hooks))


@settings(max_examples=150, deadline=None)
@given(partitions(25), st.integers(1, 6), st.integers(0, 6))
def test_is_core_definition(lam, s, t):
    H = HookProgression(s, t)
    assert is_core(lam, H) == (not any(y in H for y in naive_hooks(lam.parts)))


@settings(max_examples=150, deadline=None)
@given(partitions(25), st.integers(1, 6), st.integers(0, 6))
def test_conjugation_symmetry(lam, s, t):
    H = HookProgression(s, t)
    assert lam.conjugate().conjugate() == lam
    assert is_core(lam, H) == is_core(lam.conjugate(), H)


def test_containment_multiples_of_period():
    for s in range(1, 5):
        for t in range(1, 5):
            if math.gcd(s, t) != 1:
                continue
            for j in range(1, 5):
                if math.gcd(s, j) != 1:
                    continue
                small, big = HookProgression(s, t), HookProgression(s, t * j)
                assert all(is_core(lam, big) for lam in iter_cores(small, 30))


def test_non_containment_witness():
    mod8, mod20 = HookProgression(3, 8), HookProgression(3, 20)
    witness = next(lam for lam in iter_cores(mod20, 40) if not is_core(lam, mod8))
    assert 11 in hook_multiset(witness) or 19 in hook_multiset(witness)
    # containment the other way does hold
    assert all(is_core(lam, HookProgression(3, 4 * 2)) for lam in iter_cores(HookProgression(3, 4), 40))


@pytest.mark.parametrize("s", range(1, 11))
def test_largest_partition_without_long_hooks(s):
    weights = [lam.weight for lam in iter_cores(HookProgression(s, 1), s * s)]
    assert max(weights) == s * s // 4
