"""Symmetry, pseudo-symmetry and irreducibility of AA-semigroups.

Two independent routes are provided for pseudo-symmetry: the ``Delta = 1``
test on closed-form genus and Frobenius number, and the six-case criterion
on boundary Rodseth data (valid for ``k >= 2``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .apery import AperySet, delta
from .arith import gcd
from .rodseth import AAParams, RodsethData, rodseth_data_fast

CASES = ("a", "b", "c", "d", "e", "f")


class KRequirement(ValueError):
    """The six-case criterion needs ``k >= 2``."""


class GOdd(ValueError):
    """A pseudo-symmetric semigroup has an even Frobenius number."""


@dataclass(frozen=True)
class Classification:
    symmetric: bool
    pseudo_symmetric: bool
    irreducible: bool
    case_tag: Optional[str]
    reduction_factor: int

    @property
    def verdict(self) -> str:
        if self.symmetric:
            return "symmetric"
        if self.pseudo_symmetric:
            if self.case_tag:
                return f"pseudo-symmetric (case {self.case_tag})"
            return "pseudo-symmetric"
        return "reducible"


def reduce_scaling(p: AAParams) -> Tuple[int, AAParams]:
    e = gcd(p.a, p.d)
    if e == 1:
        return 1, p
    return e, AAParams(p.a // e, p.d // e, p.k, p.c)


def reduced_delta(p: AAParams) -> Tuple[int, int]:
    """``(e, Delta(T))``; ``Delta(S) = e * Delta(T)``."""
    e, t = reduce_scaling(p)
    return e, delta(t)


def is_symmetric(p: AAParams) -> bool:
    return reduced_delta(p)[1] == 0


def is_pseudo_symmetric_delta(p: AAParams) -> bool:
    e, dt = reduced_delta(p)
    return e == 1 and dt == 1


def _in_three_semigroup(d: int, c: int) -> bool:
    # Ap(<3, 3+d, 3+2d>; 3) = {0, 3+d, 3+2d}, residues d and 2d mod 3
    w = {0: 0, (3 + d) % 3: 3 + d, (3 + 2 * d) % 3: 3 + 2 * d}
    return c >= w[c % 3]


def case_conditions(p: AAParams, rd: RodsethData | None = None) -> List[str]:
    """Every case tag whose condition holds (``gcd(a, d) = 1``, ``k >= 2``)."""
    a, d, k, c = p.as_tuple()
    if rd is None:
        rd = rodseth_data_fast(p)
    s, P, R, v, m = rd.s, rd.P, rd.R, rd.v, rd.m
    tags = []
    if a == 3 and _in_three_semigroup(d, c):
        tags.append("a")
    if a * (c - 1) == 2 * (c + d) and c % 2 == 1:
        tags.append("b")
    sv, sv1, pv, pv1, rv = s[v], s[v + 1], P[v], P[v + 1], R[v]
    if sv % k == 3 % k and sv1 == 1 and pv1 == pv + 1 and rv == 3:
        tags.append("c")
    if sv % k == 1 % k and sv1 == 2 * k - 1 and pv1 == pv + 1 and rv == 1:
        tags.append("d")
    if m >= 0:
        s0, s1, r1 = s[0], s[1], R[1]
        if s0 % k == 2 % k and s0 == s1 + 1 and r1 == 1 - 2 * k:
            tags.append("e")
        if s0 % k == 2 % k and s0 == s1 + 3 and r1 == -1:
            tags.append("f")
    return tags


def is_pseudo_symmetric_fast(p: AAParams) -> Tuple[bool, Optional[str]]:
    if p.k < 2:
        raise KRequirement(f"k = {p.k}; use is_pseudo_symmetric_delta for k = 1")
    if gcd(p.a, p.d) != 1:
        return False, None
    tags = case_conditions(p)
    return (True, tags[0]) if tags else (False, None)


def classify(p: AAParams) -> Classification:
    e, dt = reduced_delta(p)
    sym = dt == 0
    tag = None
    if p.k >= 2:
        pseudo, tag = is_pseudo_symmetric_fast(p)
    else:
        pseudo = e == 1 and dt == 1
    return Classification(
        symmetric=sym,
        pseudo_symmetric=pseudo,
        irreducible=sym or pseudo,
        case_tag=tag,
        reduction_factor=e,
    )


def is_irreducible(p: AAParams) -> bool:
    return classify(p).irreducible


def pslemma_b_check(ap: AperySet, g: int) -> bool:
    """``w(g/2+i) + w(g/2-i) = w(g) + [i = 0 mod a] * a`` for every residue."""
    if g % 2:
        raise GOdd(f"Frobenius number {g} is odd")
    a, h, wg = ap.modulus, g // 2, ap.w(g)
    return all(
        ap.w(h + i) + ap.w(h - i) == wg + (a if i == 0 else 0) for i in range(a)
    )
