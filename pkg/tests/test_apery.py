from math import gcd

import pytest

from aasemigroup import oracle
from aasemigroup.apery import (
    apery_set,
    apery_sum,
    contains,
    delta,
    frobenius,
    frobenius_corner,
    genus,
    phi,
)
from aasemigroup.arith import NotCoprime
from aasemigroup.rodseth import AAParams, l_shape, rodseth_data


def test_phi(worked):
    assert phi(0, 0, worked) == 0
    assert phi(4, 0, worked) == 20
    assert phi(2, 1, worked) == 23


def test_phi_overflow():
    p = AAParams(2, 1, 1, 3)
    with pytest.raises(OverflowError):
        phi(2**127, 0, p)


@pytest.mark.parametrize(
    "p, ap",
    [
        ((8, 1, 2, 13), [0, 9, 10, 13, 19, 20, 22, 23]),
        ((2, 1, 1, 3), [0, 3]),
        ((5, 1, 2, 9), [0, 6, 7, 9, 13]),
        ((9, 1, 2, 14), [0, 10, 11, 14, 21, 22, 24, 25, 35]),
    ],
)
def test_apery_set(p, ap):
    p = AAParams(*p)
    got = apery_set(p)
    assert list(got.values) == ap
    assert set(ap) == oracle.naive_apery(oracle.naive_build(p.generators), p.a)
    assert got.w(0) == 0 and all(got.w(i) % p.a == i for i in range(p.a))


def test_apery_needs_coprime():
    with pytest.raises(NotCoprime):
        apery_set(AAParams(6, 2, 1, 5))


@pytest.mark.parametrize("p, g", [((8, 1, 2, 13), 15), ((3, 1, 2, 8), 2), ((2, 1, 1, 3), 1), ((5, 2, 1, 1), -1)])
def test_frobenius(p, g):
    assert frobenius(AAParams(*p)) == g


@pytest.mark.parametrize("p, corner", [((8, 1, 2, 13), (2, 1)), ((8, 1, 2, 8), (7, 0)), ((5, 1, 2, 9), (3, 0))])
def test_frobenius_corner(p, corner):
    p = AAParams(*p)
    fc = frobenius_corner(p)
    assert (fc.x0, fc.y0) == corner
    assert (fc.x0, fc.y0) in l_shape(rodseth_data(p))
    assert phi(fc.x0, fc.y0, p) == frobenius(p) + p.a


@pytest.mark.parametrize("p, total", [((8, 1, 2, 13), 116), ((2, 1, 1, 3), 3), ((9, 1, 2, 14), 162)])
def test_apery_sum(p, total):
    p = AAParams(*p)
    assert apery_sum(p) == total == sum(apery_set(p).values)


@pytest.mark.parametrize("p, N, dl", [((8, 1, 2, 13), 11, 6), ((3, 1, 2, 8), 2, 1), ((2, 1, 1, 3), 1, 0)])
def test_genus_delta(p, N, dl):
    p = AAParams(*p)
    assert genus(p) == N
    assert delta(p) == dl


def test_contains(worked):
    assert not contains(worked, 15)
    assert contains(worked, 0)
    assert contains(worked, 16)
    assert not contains(worked, -3)


def _small_sweep():
    for a in range(2, 16):
        for d in range(1, 5):
            if gcd(a, d) != 1:
                continue
            for k in range(1, 4):
                for c in range(1, 30, 2):
                    yield AAParams(a, d, k, c)


def test_contains_agrees_with_sieve():
    for p in _small_sweep():
        ns = oracle.naive_build(p.generators)
        ap = apery_set(p)
        g = frobenius(p)
        for n in range(0, g + 2 * p.a + 1):
            assert contains(p, n, ap) == (n in ns), (p, n)


@pytest.mark.parametrize("e", [2, 3, 5])
def test_scaling_laws_small(e):
    for p in _small_sweep():
        if gcd(e, p.a) != 1:
            continue
        scaled = [p.a] + [e * x for x in p.generators[1:]]
        ns = oracle.naive_build(scaled)
        ap = apery_set(p)
        assert oracle.naive_apery(ns, p.a) == {e * w for w in ap.values}
        assert oracle.naive_g(ns) == e * frobenius(p) + p.a * (e - 1)
        assert 2 * oracle.naive_N(ns) - 1 - oracle.naive_g(ns) == e * delta(p)
