"""Pseudo-Frobenius numbers, type and the aggregated profile."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .apery import AperySet, apery_set, frobenius, genus
from .arith import InternalInconsistency
from .rodseth import AAParams, LShape, l_shape, rodseth_data


@dataclass(frozen=True)
class SemigroupProfile:
    g: int
    N: int
    delta: int
    pseudo_frobenius: Tuple[int, ...]
    type_: int
    classification: "Classification"  # noqa: F821  (classify.Classification)
    apery: Optional[AperySet] = field(default=None, compare=False)


def maximal_candidates(L: LShape, k: int) -> List[Tuple[int, int]]:
    """Top-row points in the last ``k`` columns of each rectangle.

    Moving ``k`` right or one up inside ``L`` adds ``a+kd`` or ``c``, both in
    ``S``, so no other lattice point can map to a maximal Apery element.
    """
    out = []
    for x_hi, _, y_hi in L.rectangles():
        out.extend((x, y_hi) for x in range(max(0, x_hi - k + 1), x_hi + 1))
    return out


def _pf_from(p: AAParams, ap: AperySet, L: LShape) -> List[int]:
    from .apery import phi

    gens = p.generators
    pf = set()
    for x, y in maximal_candidates(L, p.k):
        w = phi(x, y, p)
        if all((w + n) not in ap for n in gens):
            pf.add(w - p.a)
    return sorted(pf)


def pseudo_frobenius(p: AAParams) -> List[int]:
    L = l_shape(rodseth_data(p))
    return _pf_from(p, apery_set(p, L), L)


def type_of(p: AAParams) -> int:
    t = len(pseudo_frobenius(p))
    if t > 2 * p.k:
        raise InternalInconsistency(f"type {t} exceeds 2k = {2 * p.k} for {p}")
    return t


def profile(p: AAParams, with_apery: bool = False) -> SemigroupProfile:
    """Every invariant of ``p``; scaled inputs go through the reduced semigroup.

    With ``e = gcd(a, d) > 1`` the semigroup is ``T^e`` for the reduced
    ``T = <a/e, ..., c>`` (first generator ``c``), so
    ``g = e g(T) + c(e-1)``, ``N = e N(T) + (c-1)(e-1)/2`` and each
    pseudo-Frobenius number maps as ``f -> e f + c(e-1)``.
    """
    from .classify import classify, reduce_scaling

    e, t = reduce_scaling(p)
    L = l_shape(rodseth_data(t))
    ap = apery_set(t, L)
    pf_t = _pf_from(t, ap, L)
    if len(pf_t) > 2 * t.k:
        raise InternalInconsistency(f"type {len(pf_t)} exceeds 2k for {t}")
    g_t, N_t = frobenius(t), genus(t)
    shift = p.c * (e - 1)
    g = e * g_t + shift
    N = e * N_t + (p.c - 1) * (e - 1) // 2
    pf = tuple(e * f + shift for f in pf_t)
    return SemigroupProfile(
        g=g,
        N=N,
        delta=2 * N - 1 - g,
        pseudo_frobenius=pf,
        type_=len(pf),
        classification=classify(p),
        apery=ap if (with_apery and e == 1) else None,
    )
