import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import count_partitions
from simulcores.qseries import (
    TruncatedSeries,
    jacobi_cube,
    octagonal_series,
    pentagonal_series,
    pochhammer,
    robbins_2core3_check,
    verify_dream_cong,
    verify_xia_yao,
    xia_yao_corollary,
    xia_yao_identity,
)

P = TruncatedSeries


def test_partition_numbers():
    assert pochhammer(1, -1, 10).coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_pochhammer_matches_partition_recursion():
    assert list(pochhammer(1, -1, 40).coeffs) == [count_partitions(n) for n in range(41)]


def test_empty_product():
    assert pochhammer(3, 0, 20) == P.one(20)


def test_pentagonal_small():
    assert pentagonal_series(10).terms() == [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)]
    assert pentagonal_series(10)[0] == 1


def test_pentagonal_equals_product():
    assert pochhammer(1, 1, 500) == pentagonal_series(500)


def test_jacobi_cube():
    assert jacobi_cube(10).terms() == [(0, 1), (1, -3), (3, 5), (6, -7), (10, 9)]
    assert jacobi_cube(10)[2] == 0
    assert pochhammer(1, 3, 300) == jacobi_cube(300)


def test_octagonal_exponents():
    assert [e for e, _ in octagonal_series(16).terms()] == [0, 1, 5, 8, 16]


@pytest.mark.parametrize("p, k, l, N", [(2, 1, 1, 200), (3, 1, 3, 200), (3, 2, 1, 100), (3, 1, 1, 200), (2, 2, 1, 200)])
def test_dream_congruence(p, k, l, N):
    assert verify_dream_cong(p, k, l, N)


def test_dream_rejects_composite():
    with pytest.raises(ValueError):
        verify_dream_cong(4, 1, 1, 50)


def test_dream_fails_at_wrong_modulus():
    # the congruence is sharp: it does not hold modulo p^(k+1)
    lhs = pochhammer(1, 3, 100)
    rhs = pochhammer(3, 1, 100)
    assert not lhs.congruent(rhs, 9)


def test_xia_yao():
    assert xia_yao_identity(200)
    assert xia_yao_corollary(200)
    assert verify_xia_yao(0)


def test_robbins():
    assert robbins_2core3_check(300)
    assert not pochhammer(3, 3, 30).__mul__(pochhammer(1, -1, 30)).congruent(octagonal_series(30))


def test_dissect_and_substitute():
    f = P([1, 1, 2, 3])
    assert f.dissect(2, 0) == P([1, 2], 1)
    assert f.dissect(1, 0) == f
    assert P([1, 1]).substitute_power(3).terms() == [(0, 1), (3, 1)]
    assert f.substitute_power(4).dissect(4, 0) == f


def test_truncation_is_minimum():
    a, b = P([1, 2, 3], 2), P([1, 1, 1, 1, 1], 4)
    assert (a + b).trunc == 2
    assert (a * b).trunc == 2


def test_modular_reduction_canonical():
    f = P([-1, 5, -7], modulus=3)
    assert f.coeffs == (2, 2, 2)
    g = P([1, 1]).reduce(2) * P([1, 1])
    assert g.modulus == 2 and g.coeffs == (1, 0)


def test_inverse_requires_unit():
    with pytest.raises(ZeroDivisionError):
        P([2, 1]).inverse()
    assert (P([2, 1], modulus=5).inverse() * P([2, 1], modulus=5)).coeffs == (1, 0)


def sparse_series(N):
    return st.dictionaries(st.integers(0, N), st.integers(-5, 5), max_size=8).map(
        lambda d: TruncatedSeries.from_terms(d, N)
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 200).flatmap(lambda N: st.tuples(sparse_series(N), sparse_series(N), sparse_series(N))))
def test_ring_laws(fgh):
    f, g, h = fgh
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


@pytest.mark.parametrize("a", range(1, 5))
@pytest.mark.parametrize("e", range(-5, 6))
def test_pochhammer_inverse(a, e):
    N = 200 if abs(e) <= 2 else 80
    assert pochhammer(a, e, N) * pochhammer(a, -e, N) == P.one(N)


def test_negative_power_matches_inverse():
    f = pochhammer(2, 3, 60)
    assert f ** -2 == pochhammer(2, -6, 60)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 120).flatmap(sparse_series), st.integers(1, 7))
def test_dissect_reassemble(f, m):
    total = TruncatedSeries([0], f.trunc)
    for r in range(min(m, f.trunc + 1)):
        total = total + f.dissect(m, r).substitute_power(m).shift(r)
    assert total == f


def test_repr_readable():
    assert repr(P([1, -1, 0, 2], 3)) == "1 - q + 2*q^3 + O(q^4)"
