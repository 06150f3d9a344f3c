from math import gcd

import pytest

from aasemigroup import oracle
from aasemigroup.apery import apery_set, delta, frobenius
from aasemigroup.classify import (
    GOdd,
    KRequirement,
    case_conditions,
    classify,
    is_irreducible,
    is_pseudo_symmetric_delta,
    is_pseudo_symmetric_fast,
    is_symmetric,
    pslemma_b_check,
    reduce_scaling,
)
from aasemigroup.rodseth import AAParams


@pytest.mark.parametrize(
    "p, e, red", [((6, 2, 1, 5), 2, (3, 1, 1, 5)), ((8, 1, 2, 13), 1, (8, 1, 2, 13)), ((9, 3, 1, 5), 3, (3, 1, 1, 5))]
)
def test_reduce_scaling(p, e, red):
    got_e, got = reduce_scaling(AAParams(*p))
    assert (got_e, got.as_tuple()) == (e, red)


def test_reduction_to_trivial_semigroup():
    # <2, 4, 6, 5> = <2, 5>; reduced semigroup is N
    p = AAParams(2, 2, 2, 5)
    e, t = reduce_scaling(p)
    assert (e, t.a) == (2, 1)
    assert frobenius(t) == -1 and delta(t) == 0
    assert is_symmetric(p)


@pytest.mark.parametrize("p, sym", [((2, 1, 1, 3), True), ((3, 1, 2, 8), False), ((6, 2, 1, 5), False)])
def test_is_symmetric(p, sym):
    assert is_symmetric(AAParams(*p)) is sym


@pytest.mark.parametrize("p, ps", [((3, 1, 2, 8), True), ((4, 3, 2, 5), True), ((2, 1, 1, 3), False)])
def test_is_pseudo_symmetric_delta(p, ps):
    assert is_pseudo_symmetric_delta(AAParams(*p)) is ps


@pytest.mark.parametrize(
    "p, res",
    [
        ((3, 1, 2, 8), (True, "a")),
        ((4, 3, 2, 5), (True, "b")),
        ((5, 1, 2, 9), (True, "e")),
        ((7, 1, 2, 4), (True, "f")),
        ((9, 1, 2, 14), (True, "c")),
        ((7, 1, 2, 19), (True, "d")),
        ((8, 1, 2, 13), (False, None)),
        ((6, 2, 2, 5), (False, None)),
    ],
)
def test_is_pseudo_symmetric_fast(p, res):
    assert is_pseudo_symmetric_fast(AAParams(*p)) == res


def test_fast_criterion_needs_k2():
    with pytest.raises(KRequirement):
        is_pseudo_symmetric_fast(AAParams(3, 1, 1, 5))


@pytest.mark.parametrize("p, irr", [((2, 1, 1, 3), True), ((5, 1, 2, 9), True), ((8, 1, 2, 13), False)])
def test_is_irreducible(p, irr):
    assert is_irreducible(AAParams(*p)) is irr


def test_pslemma_b_check():
    ap = apery_set(AAParams(3, 1, 2, 5))
    assert list(ap.values) == [0, 4, 5]
    assert pslemma_b_check(ap, 2)
    assert pslemma_b_check(apery_set(AAParams(5, 1, 2, 9)), 8)
    with pytest.raises(GOdd):
        pslemma_b_check(apery_set(AAParams(8, 1, 2, 13)), 15)


def test_classification_invariants():
    for a in range(2, 20):
        for d in range(1, 7):
            for k in (1, 2, 3):
                for c in range(1, 40, 2):
                    if gcd(gcd(a, d), c) != 1:
                        continue
                    cl = classify(AAParams(a, d, k, c))
                    assert cl.irreducible == (cl.symmetric or cl.pseudo_symmetric)
                    assert not (cl.symmetric and cl.pseudo_symmetric)
                    if cl.pseudo_symmetric:
                        assert cl.reduction_factor == 1
                    assert (cl.case_tag is not None) == (cl.pseudo_symmetric and k >= 2)


def test_three_way_agreement_k2_small():
    for a in range(2, 30):
        for d in range(1, 6):
            if gcd(a, d) != 1:
                continue
            for c in range(1, 60):
                p = AAParams(a, d, 2, c)
                o = oracle.naive_is_pseudo_symmetric(oracle.naive_build(p.generators))
                assert is_pseudo_symmetric_fast(p)[0] == is_pseudo_symmetric_delta(p) == o, p


def test_overlapping_tags_are_only_a_and_b():
    # a = 3 with c = 3 + 2d satisfies both (a) and a(c-1) = 2(c+d), c odd
    for d in (1, 2, 4, 5):
        p = AAParams(3, d, 2, 3 + 2 * d)
        assert case_conditions(p) == ["a", "b"]
        assert is_pseudo_symmetric_fast(p) == (True, "a")
