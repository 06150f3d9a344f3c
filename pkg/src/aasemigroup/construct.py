"""Parametric families of pseudo-symmetric AA-semigroups (k >= 2).

Each ``construct_*`` solves the defining equalities of one family for the
remaining unknowns and returns ``None`` when the free parameters are
infeasible; the auxiliary multiplier ``mu`` is derived and checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Optional

from .arith import gcd
from .classify import KRequirement, _in_three_semigroup, case_conditions
from .rodseth import AAParams

CONSTRUCTION_CASES = ("a", "b", "c1", "c2", "d", "e", "f")

# criterion tag each construction family corresponds to
CRITERION_TAG = {"a": "a", "b": "b", "c1": "c", "c2": "c", "d": "d", "e": "e", "f": "f"}


@dataclass(frozen=True)
class Recipe:
    case: str
    params: Dict[str, int]
    result: AAParams


def _make(a: int, d: int, k: int, c: int) -> Optional[AAParams]:
    if a < 2 or d < 1 or c < 1 or gcd(a, d) != 1:
        return None
    return AAParams(a, d, k, c)


def _div(num: int, den: int) -> Optional[int]:
    if den <= 0 or num % den:
        return None
    return num // den


def construct_a(d: int, c: int) -> Optional[AAParams]:
    if d < 1 or c < 1 or d % 3 == 0 or not _in_three_semigroup(d, c):
        return None
    return _make(3, d, 2, c)


def construct_b(a: int, c: int, k: int) -> Optional[AAParams]:
    if k < 2 or a < 4 or c < 3 or c % 2 == 0:
        return None
    d = _div(a * (c - 1) - 2 * c, 2)
    if d is None:
        return None
    return _make(a, d, k, c)


def construct_c1(k: int, d: int, a: int) -> Optional[AAParams]:
    if k < 2 or a % 6 not in (1, 5) or a <= 3 or a > 2 * k * d + 3:
        return None
    c = _div(6 * d, a - 3)
    if c is None:
        return None
    return _make(a, d, k, c)


def construct_c2(k: int, lam: int, m: int, d: int) -> Optional[AAParams]:
    if k < 2 or lam < 1 or m < 1 or d < 1:
        return None
    a = (2 + lam * k) * (m + 1) + 1
    c = _div(lam * (a + k * d) + 3 * d, m)
    if c is None or c < 1:
        return None
    mu = _div(c + (2 + lam * k) * d, a)
    if mu is None or mu < 1:
        return None
    return _make(a, d, k, c)


def construct_d(k: int, lam: int, v: int, d: int) -> Optional[AAParams]:
    if k < 2 or lam < 2 or v < 0 or d < 1:
        return None
    a = (v + 1) * (2 + (lam - 2) * k) + (lam * k + 1)
    c = _div(lam * (a + k * d) + d, v + 1)
    if c is None or c < 1:
        return None
    mu = _div(c + (2 + (lam - 2) * k) * d, a)
    if mu is None or mu < 1:
        return None
    return _make(a, d, k, c)


def construct_e(k: int, q1: int, R0: int, s0: int) -> Optional[AAParams]:
    if k < 2 or q1 < 2 or R0 < 1 or s0 < 2 or R0 % k != 2 % k or s0 % k != 2 % k:
        return None
    a = (q1 - 1) * s0 + 1
    d = _div(q1 * R0 + 2 * k - 1 - a, k)
    c = _div((R0 + 2 * k - 1) * (s0 - 1) + 2 * k - 1, k)
    if d is None or c is None:
        return None
    return _make(a, d, k, c)


def construct_f(k: int, q1: int, R0: int, s0: int) -> Optional[AAParams]:
    if k < 2 or q1 < 2 or R0 < 1 or s0 < 4 or s0 == 2:
        return None
    if R0 % k != 2 % k or s0 % k != 2 % k:
        return None
    a = (q1 - 1) * s0 + 3
    d = _div(q1 * R0 + 1 - a, k)
    c = _div((R0 + 1) * (s0 - 3) + 3, k)
    if d is None or c is None:
        return None
    return _make(a, d, k, c)


def _grid(case: str, k: int, bound: int) -> Iterator[Dict[str, int]]:
    r = range(1, bound + 1)
    if case == "a":
        yield from ({"d": d, "c": c} for d in r for c in r)
    elif case == "b":
        yield from ({"a": a, "c": c} for a in r for c in r)
    elif case == "c1":
        yield from ({"d": d, "a": a} for d in r for a in r)
    elif case == "c2":
        yield from ({"lam": lam, "m": m, "d": d} for lam in r for m in r for d in r)
    elif case == "d":
        for lam in range(2, bound + 1):
            for v in range(0, bound + 1):
                yield from ({"lam": lam, "v": v, "d": d} for d in r)
    elif case in ("e", "f"):
        for q1 in range(2, bound + 1):
            for R0 in r:
                if R0 % k != 2 % k:
                    continue
                for s0 in r:
                    if s0 % k == 2 % k:
                        yield {"q1": q1, "R0": R0, "s0": s0}
    else:
        raise ValueError(f"unknown construction case {case!r}")


def build(case: str, k: int, params: Dict[str, int]) -> Optional[AAParams]:
    if case == "a":
        return construct_a(params["d"], params["c"])
    if case == "b":
        return construct_b(params["a"], params["c"], k)
    if case == "c1":
        return construct_c1(k, params["d"], params["a"])
    if case == "c2":
        return construct_c2(k, params["lam"], params["m"], params["d"])
    if case == "d":
        return construct_d(k, params["lam"], params["v"], params["d"])
    if case == "e":
        return construct_e(k, params["q1"], params["R0"], params["s0"])
    if case == "f":
        return construct_f(k, params["q1"], params["R0"], params["s0"])
    raise ValueError(f"unknown construction case {case!r}")


def enumerate_recipes(case: str, k: int, bound: int) -> Iterator[Recipe]:
    """Yield every accepted recipe with free parameters in ``[1, bound]``.

    ``v`` for family ``d`` starts at 0 and ``q1`` for ``e``/``f`` at 2.
    Each result is re-checked against the six-case criterion.
    """
    if case not in CONSTRUCTION_CASES:
        raise ValueError(f"unknown construction case {case!r}")
    if k < 2:
        raise KRequirement(f"construction needs k >= 2, got {k}")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for params in _grid(case, k, bound):
        res = build(case, k, params)
        if res is None:
            continue
        tags = case_conditions(res)
        if CRITERION_TAG[case] not in tags:
            raise AssertionError(f"{case} recipe {params} -> {res} fails its criterion: {tags}")
        yield Recipe(case, dict(params), res)


def find_recipe(p: AAParams, case: str) -> Optional[Recipe]:
    """Recover free parameters that make ``case`` reproduce ``p``.

    For family ``a`` any ``k`` is accepted since the extra generators are
    redundant once ``a = 3``.
    """
    a, d, k, c = p.as_tuple()
    if case == "a":
        res = construct_a(d, c)
        ok = res is not None and (res.a, res.d, res.c) == (a, d, c)
        return Recipe(case, {"d": d, "c": c}, res) if ok else None
    candidates = []
    if case == "b":
        candidates = [{"a": a, "c": c}]
    elif case == "c1":
        candidates = [{"d": d, "a": a}]
    elif case == "c2":
        # a = (2 + lam k)(m + 1) + 1
        for m in range(1, a):
            lk = _div(a - 1, m + 1)
            if lk is not None and (lk - 2) > 0 and (lk - 2) % k == 0:
                candidates.append({"lam": (lk - 2) // k, "m": m, "d": d})
    elif case == "d":
        # a = (v + 1)(2 + (lam - 2)k) + lam k + 1  =>  lam k (v + 2) = a - 1 - 2(v+1) + 2k(v+1)
        for v in range(0, a):
            lam = _div(a - 1 - 2 * (v + 1) + 2 * k * (v + 1), k * (v + 2))
            if lam is not None and lam >= 2:
                candidates.append({"lam": lam, "v": v, "d": d})
    elif case in ("e", "f"):
        from .rodseth import rodseth_data_fast

        rd = rodseth_data_fast(p)
        if rd.m >= 0:
            candidates = [{"q1": rd.q[1], "R0": rd.R[0], "s0": rd.s[0]}]
    else:
        raise ValueError(f"unknown construction case {case!r}")
    for params in candidates:
        if build(case, k, params) == p:
            return Recipe(case, params, p)
    return None
