from math import gcd

import pytest

from aasemigroup import oracle
from aasemigroup.invariants import maximal_candidates, profile, pseudo_frobenius, type_of
from aasemigroup.rodseth import AAParams, l_shape, rodseth_data


@pytest.mark.parametrize(
    "p, cands",
    [
        ((8, 1, 2, 13), [(3, 0), (4, 0), (1, 1), (2, 1)]),
        ((8, 1, 2, 8), [(6, 0), (7, 0)]),
        # v = -1 here, so L is the single row [0, 2] x {0}
        ((3, 1, 2, 8), [(1, 0), (2, 0)]),
        ((5, 1, 2, 9), [(2, 0), (3, 0), (0, 1)]),
    ],
)
def test_maximal_candidates(p, cands):
    p = AAParams(*p)
    L = l_shape(rodseth_data(p))
    assert sorted(maximal_candidates(L, p.k)) == sorted(cands)
    assert len(maximal_candidates(L, p.k)) <= 2 * p.k


@pytest.mark.parametrize(
    "p, pf", [((8, 1, 2, 13), [11, 12, 14, 15]), ((3, 1, 2, 8), [1, 2]), ((2, 1, 1, 3), [1]), ((7, 1, 2, 1), [-1])]
)
def test_pseudo_frobenius(p, pf):
    p = AAParams(*p)
    assert pseudo_frobenius(p) == pf
    assert oracle.naive_pf(oracle.naive_build(p.generators)) == pf


def test_type_examples():
    assert type_of(AAParams(8, 1, 2, 13)) == 4
    assert type_of(AAParams(2, 1, 1, 3)) == 1
    k = 5
    assert type_of(AAParams(3 * k + 2, 1, k, 5 * k + 3)) == 2 * k


def test_type_family_sharp():
    for k in range(1, 21):
        p = AAParams(3 * k + 2, 1, k, 5 * k + 3)
        pf = pseudo_frobenius(p)
        assert len(pf) == 2 * k
        a = p.a
        # maximal Apery elements are 2a+k+i and c+a+i for 1 <= i <= k
        expected = sorted({2 * a + k + i - a for i in range(1, k + 1)} | {p.c + a + i - a for i in range(1, k + 1)})
        assert pf == expected


def test_profile_examples():
    pr = profile(AAParams(8, 1, 2, 13))
    assert (pr.g, pr.N, pr.delta, pr.pseudo_frobenius, pr.type_) == (15, 11, 6, (11, 12, 14, 15), 4)
    assert pr.classification.verdict == "reducible"
    pr = profile(AAParams(3, 1, 2, 8))
    assert (pr.g, pr.N, pr.delta, pr.pseudo_frobenius, pr.type_) == (2, 2, 1, (1, 2), 2)
    assert pr.classification.case_tag == "a"
    pr = profile(AAParams(6, 2, 1, 5))
    assert (pr.type_, pr.delta, pr.classification.reduction_factor) == (2, 2, 2)
    assert not pr.classification.irreducible


def test_profile_invariants_and_reduction_against_oracle():
    for a in range(2, 25):
        for d in range(1, 9):
            for k in (1, 2, 3):
                for c in range(1, 40, 3):
                    if gcd(gcd(a, d), c) != 1:
                        continue
                    p = AAParams(a, d, k, c)
                    pr = profile(p)
                    ns = oracle.naive_build(p.generators)
                    assert pr.g == oracle.naive_g(ns)
                    assert pr.N == oracle.naive_N(ns)
                    assert list(pr.pseudo_frobenius) == oracle.naive_pf(ns)
                    assert pr.g == max(pr.pseudo_frobenius)
                    assert pr.type_ <= 2 * k
                    assert (pr.delta == 0) == (pr.pseudo_frobenius == (pr.g,))
                    if pr.delta == 1:
                        assert set(pr.pseudo_frobenius) == {pr.g, pr.g // 2}


@pytest.mark.parametrize("e", [3, 5, 7])
def test_type_invariant_under_scaling(e):
    for a in range(2, 14):
        if gcd(a, e) != 1:
            continue
        for d in range(1, 4):
            if gcd(a, d) != 1:
                continue
            for k in (1, 2, 3):
                for c in range(1, 25, 2):
                    p = AAParams(a, d, k, c)
                    scaled = [a] + [e * x for x in p.generators[1:]]
                    assert oracle.naive_type(oracle.naive_build(scaled)) == type_of(p)
