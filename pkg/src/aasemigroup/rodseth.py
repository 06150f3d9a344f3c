"""Negative-remainder continued fractions and the L-shape of an AA-semigroup.

For ``S = <a, a+d, ..., a+kd, c>`` with ``gcd(a, d) = 1`` the chain

    s_{-1} = a,  d*s_0 = c (mod a),  s_{i-1} = q_{i+1} s_i - s_{i+1}

together with ``P_{i+1} = q_{i+1} P_i - P_{i-1}`` and
``R_i = ((a+kd) s_i - kc P_i) / a`` determines a pivot ``v`` and two lattice
rectangles whose union ``L`` maps onto the Apery set of ``S`` modulo ``a``.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .arith import (
    InternalInconsistency,
    NotCoprime,
    ceil_div,
    checked,
    exact_div,
    gcd,
    gcd_many,
    mod_inverse,
)


@dataclass(frozen=True)
class AAParams:
    """The tuple ``(a, d, k, c)`` describing ``<a, a+d, ..., a+kd, c>``.

    ``a = 1`` is accepted so that scaling reductions can land on the trivial
    semigroup N; user-facing entry points require ``a >= 2``.
    """

    a: int
    d: int
    k: int
    c: int

    def __post_init__(self):
        for name in ("a", "d", "k", "c"):
            val = getattr(self, name)
            if not isinstance(val, int) or isinstance(val, bool):
                raise TypeError(f"{name} must be an int, got {type(val).__name__}")
            if val < 1:
                raise ValueError(f"{name} must be >= 1, got {val}")
            checked(val)
        if gcd_many(self.a, self.d, self.c) != 1:
            raise ValueError(
                f"gcd(a, d, c) = {gcd_many(self.a, self.d, self.c)}; generators are not coprime"
            )

    @property
    def generators(self) -> List[int]:
        return [self.a + i * self.d for i in range(self.k + 1)] + [self.c]

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.a, self.d, self.k, self.c)


@dataclass(frozen=True)
class RodsethData:
    """Rodseth sequences keyed by index.

    ``s``, ``P`` and ``R`` are keyed over ``-1..m+1`` and ``q`` over
    ``1..m+1``.  Data from :func:`rodseth_data_fast` only carries the
    boundary indices ``{-1, 0, 1, v-1, v, v+1, m-1, m, m+1}``; ``complete``
    tells the two apart.
    """

    params: AAParams
    s: Dict[int, int]
    q: Dict[int, int]
    P: Dict[int, int]
    R: Dict[int, int]
    m: int
    v: int
    complete: bool = True
    steps: int = field(default=0, compare=False)

    def indices(self) -> range:
        return range(-1, self.m + 2)

    def sequences(self) -> Tuple[List[int], List[int], List[int], List[int]]:
        """Dense ``(q, s, P, R)`` lists; only valid for complete data."""
        if not self.complete:
            raise ValueError("sequences() needs complete Rodseth data")
        idx = self.indices()
        return (
            [self.q[i] for i in range(1, self.m + 2)],
            [self.s[i] for i in idx],
            [self.P[i] for i in idx],
            [self.R[i] for i in idx],
        )


@dataclass(frozen=True)
class LShape:
    """``A = [0, sv-1] x [0, Pv1-Pv-1]`` and ``B = [0, sv-sv1-1] x [Pv1-Pv, Pv1-1]``."""

    sv: int
    sv1: int
    Pv: int
    Pv1: int

    @property
    def A(self) -> Tuple[int, int, int, int]:
        """Bounds ``(x_lo, x_hi, y_lo, y_hi)``; empty when a high bound is below its low."""
        return (0, self.sv - 1, 0, self.Pv1 - self.Pv - 1)

    @property
    def B(self) -> Tuple[int, int, int, int]:
        return (0, self.sv - self.sv1 - 1, self.Pv1 - self.Pv, self.Pv1 - 1)

    def rectangles(self) -> List[Tuple[int, int, int]]:
        """Non-empty rectangles as ``(x_max, y_lo, y_hi)``."""
        out = []
        for _, x1, y0, y1 in (self.A, self.B):
            if x1 >= 0 and y1 >= y0:
                out.append((x1, y0, y1))
        return out

    def size(self) -> int:
        return sum((x1 + 1) * (y1 - y0 + 1) for x1, y0, y1 in self.rectangles())

    def points(self):
        for x1, y0, y1 in self.rectangles():
            for y in range(y0, y1 + 1):
                for x in range(x1 + 1):
                    yield (x, y)

    def __contains__(self, pt) -> bool:
        x, y = pt
        return any(0 <= x <= x1 and y0 <= y <= y1 for x1, y0, y1 in self.rectangles())


def compute_s0(p: AAParams) -> int:
    if gcd(p.a, p.d) != 1:
        raise NotCoprime(f"gcd(a, d) = {gcd(p.a, p.d)}; reduce the scaling first")
    return (p.c * mod_inverse(p.d, p.a)) % p.a


def negative_remainder_cf(a: int, s0: int) -> Tuple[List[int], List[int], int]:
    """Return ``(q, s, m)`` with ``q = [q_1..q_{m+1}]`` and ``s = [s_{-1}..s_{m+1}]``."""
    if not 0 <= s0 < a:
        raise ValueError(f"need 0 <= s0 < a, got s0={s0}, a={a}")
    s = [a, s0]
    q: List[int] = []
    while s[-1]:
        qi = ceil_div(s[-2], s[-1])
        q.append(qi)
        s.append(qi * s[-1] - s[-2])
    return q, s, len(s) - 3


def p_sequence(q: List[int]) -> List[int]:
    """Return ``[P_{-1}, P_0, ..., P_{len(q)}]``."""
    P = [0, 1]
    for qi in q:
        if qi < 2:
            raise ValueError(f"quotients must be >= 2, got {qi}")
        P.append(qi * P[-1] - P[-2])
    return P


def _r_value(p: AAParams, s_i: int, P_i: int) -> int:
    return checked(exact_div((p.a + p.k * p.d) * s_i - p.k * p.c * P_i, p.a))


def r_sequence(p: AAParams, s: List[int], P: List[int]) -> List[int]:
    return [_r_value(p, si, Pi) for si, Pi in zip(s, P)]


def find_v(R: List[int]) -> int:
    """Index ``v`` (lists start at index -1) with ``R_{v+1} <= 0 < R_v``."""
    for pos in range(len(R) - 1):
        if R[pos] > 0 >= R[pos + 1]:
            return pos - 1
    raise InternalInconsistency(f"no sign change in R = {R}")


def rodseth_data(p: AAParams) -> RodsethData:
    s0 = compute_s0(p)
    q, s, m = negative_remainder_cf(p.a, s0)
    P = p_sequence(q)
    R = r_sequence(p, s, P)
    v = find_v(R)
    idx = range(-1, m + 2)
    return RodsethData(
        params=p,
        s=dict(zip(idx, s)),
        q={i + 1: qi for i, qi in enumerate(q)},
        P=dict(zip(idx, P)),
        R=dict(zip(idx, R)),
        m=m,
        v=v,
        complete=True,
        steps=len(q),
    )


class _Chain:
    """Piecewise-affine description of ``(s_i, P_i)`` over ``i = -1..m+1``.

    Each segment ``(start, end, s_start, ds, P_start, dP)`` covers indices
    ``start..end``; runs of quotient 2 become one segment.
    """

    def __init__(self):
        self.starts: List[int] = []
        self.segs: List[Tuple[int, int, int, int, int, int]] = []

    def add(self, start, end, s_start, ds, P_start, dP):
        self.starts.append(start)
        self.segs.append((start, end, s_start, ds, P_start, dP))

    def at(self, i: int) -> Tuple[int, int]:
        start, end, s0, ds, P0, dP = self.segs[bisect_right(self.starts, i) - 1]
        if not start <= i <= end:
            raise IndexError(i)
        t = i - start
        return s0 + t * ds, P0 + t * dP


def _build_chain(a: int, s0: int) -> Tuple[_Chain, int, int]:
    chain = _Chain()
    chain.add(-1, -1, a, 0, 0, 0)
    chain.add(0, 0, s0, 0, 1, 0)
    i = 0
    s_prev, s_cur, P_prev, P_cur = a, s0, 0, 1
    steps = 0
    while s_cur:
        steps += 1
        qi = ceil_div(s_prev, s_cur)
        if qi == 2:
            # s and P are arithmetic while quotients stay 2
            ds, dP = s_cur - s_prev, P_cur - P_prev
            run = s_cur // (s_prev - s_cur)
            chain.add(i + 1, i + run, s_cur + ds, ds, P_cur + dP, dP)
            i += run
            s_cur, P_cur = s_cur + run * ds, P_cur + run * dP
            s_prev, P_prev = s_cur - ds, P_cur - dP
        else:
            s_next, P_next = qi * s_cur - s_prev, qi * P_cur - P_prev
            i += 1
            chain.add(i, i, s_next, 0, P_next, 0)
            s_prev, s_cur, P_prev, P_cur = s_cur, s_next, P_cur, P_next
    return chain, i - 1, steps


@lru_cache(maxsize=4096)
def rodseth_data_fast(p: AAParams) -> RodsethData:
    """Boundary Rodseth data in time polynomial in ``log a``.

    Runs of equal quotient 2 are jumped over in one step (s and P are then
    arithmetic progressions); every other quotient at least halves ``s``, so
    the walk has ``O(log a)`` iterations.  ``v`` is found by bisection on the
    sign of ``R``, which is strictly decreasing in the index.

    Results are memoised; treat the returned mappings as read-only.
    """
    s0 = compute_s0(p)
    chain, m, steps = _build_chain(p.a, s0)

    def R_at(i):
        s_i, P_i = chain.at(i)
        return _r_value(p, s_i, P_i)

    lo, hi = -1, m + 1  # R(lo) > 0 >= R(hi); R_{m+1} < 0 always
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if R_at(mid) > 0:
            lo = mid
        else:
            hi = mid
    v = lo
    wanted = {-1, 0, 1, v - 1, v, v + 1, m - 1, m, m + 1}
    s, P, R, q = {}, {}, {}, {}
    for i in sorted(j for j in wanted if -1 <= j <= m + 1):
        s[i], P[i] = chain.at(i)
        R[i] = _r_value(p, s[i], P[i])
    for i in sorted(j for j in wanted if 1 <= j <= m + 1):
        # q_i = (s_{i-2} + s_i) / s_{i-1}
        s_a, _ = chain.at(i - 2)
        s_b, _ = chain.at(i - 1)
        q[i] = exact_div(s_a + s[i], s_b)
    return RodsethData(p, s, q, P, R, m, v, complete=False, steps=steps)


def l_shape(rd: RodsethData) -> LShape:
    v = rd.v
    return LShape(sv=rd.s[v], sv1=rd.s[v + 1], Pv=rd.P[v], Pv1=rd.P[v + 1])
