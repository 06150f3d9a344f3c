"""Apery set, Frobenius number and genus from the L-shape."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .arith import InternalInconsistency, ceil_div, checked, exact_div, sum_ceil_div
from .rodseth import AAParams, LShape, l_shape, rodseth_data, rodseth_data_fast


@dataclass(frozen=True)
class AperySet:
    modulus: int
    values: Tuple[int, ...]
    by_residue: Dict[int, int]

    def w(self, i: int) -> int:
        """The Apery element congruent to ``i`` modulo ``modulus``."""
        return self.by_residue[i % self.modulus]

    def __contains__(self, x: int) -> bool:
        return self.by_residue.get(x % self.modulus) == x

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class FrobeniusCorner:
    x0: int
    y0: int


def phi(x: int, y: int, p: AAParams) -> int:
    return checked(ceil_div(x, p.k) * p.a + x * p.d + y * p.c)


def apery_set(p: AAParams, shape: LShape | None = None) -> AperySet:
    if shape is None:
        shape = l_shape(rodseth_data(p))
    a, d, k, c = p.a, p.d, p.k, p.c
    by_residue: Dict[int, int] = {}
    for x_hi, y_lo, y_hi in shape.rectangles():
        row = [((x + k - 1) // k) * a + x * d for x in range(x_hi + 1)]
        for y in range(y_lo, y_hi + 1):
            yc = y * c
            for base in row:
                w = base + yc
                r = w % a
                if r in by_residue:
                    raise InternalInconsistency(
                        f"residue {r} hit twice ({by_residue[r]}, {w}) for {p}"
                    )
                by_residue[r] = w
    if len(by_residue) != a:
        raise InternalInconsistency(f"L-shape covers {len(by_residue)} residues, expected {a}")
    values = tuple(sorted(by_residue.values()))
    checked(values[-1])
    return AperySet(modulus=a, values=values, by_residue=by_residue)


def _corners(shape: LShape):
    # the two candidate corners; the B corner only exists when B is non-empty
    yield (shape.sv - 1, shape.Pv1 - shape.Pv - 1)
    if shape.Pv > 0:
        yield (shape.sv - shape.sv1 - 1, shape.Pv1 - 1)


def frobenius_corner(p: AAParams) -> FrobeniusCorner:
    shape = l_shape(rodseth_data_fast(p))
    x0, y0 = max(_corners(shape), key=lambda pt: phi(pt[0], pt[1], p))
    return FrobeniusCorner(x0, y0)


def frobenius(p: AAParams) -> int:
    """Frobenius number from the two corners of ``L``; -1 when ``S`` is N."""
    shape = l_shape(rodseth_data_fast(p))
    return checked(max(phi(x, y, p) for x, y in _corners(shape)) - p.a)


def _rect_sum(p: AAParams, x_hi: int, y_lo: int, y_hi: int) -> int:
    rows = y_hi - y_lo + 1
    base = p.a * sum_ceil_div(x_hi, p.k) + p.d * x_hi * (x_hi + 1) // 2
    ys = (y_lo + y_hi) * rows // 2
    return rows * base + (x_hi + 1) * p.c * ys


def apery_sum(p: AAParams, shape: LShape | None = None) -> int:
    if shape is None:
        shape = l_shape(rodseth_data_fast(p))
    return checked(sum(_rect_sum(p, *r) for r in shape.rectangles()))


def genus(p: AAParams) -> int:
    """Number of gaps, ``(2 * sum(Ap) - a(a-1)) / (2a)``."""
    a = p.a
    return exact_div(2 * apery_sum(p) - a * (a - 1), 2 * a)


def delta(p: AAParams) -> int:
    return 2 * genus(p) - 1 - frobenius(p)


def contains(p: AAParams, n: int, ap: AperySet | None = None) -> bool:
    if n < 0:
        return False
    if ap is None:
        ap = apery_set(p)
    return n >= ap.w(n)
