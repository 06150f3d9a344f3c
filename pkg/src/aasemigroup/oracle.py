"""Brute-force reference built straight from the definitions.

Membership is sieved in blocks of ``min(generators)`` cells: every entry in
a block depends only on entries at least one block earlier, so a block is a
vectorised OR of shifted slices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np

from .arith import gcd_many

DEFAULT_CAP = 10**7


class NotNumerical(ValueError):
    """The generators have a common factor, so the complement is infinite."""


class NotMember(ValueError):
    pass


class OracleCapExceeded(RuntimeError):
    pass


def oracle_cap() -> int:
    return int(os.environ.get("AA_ORACLE_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class NaiveSemigroup:
    generators: tuple
    membership: np.ndarray
    limit: int
    g: int

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.limit:
            return True
        return bool(self.membership[n])


def naive_build(gens: Sequence[int], cap: int | None = None) -> NaiveSemigroup:
    gens = sorted(set(int(x) for x in gens))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive")
    if gcd_many(*gens) != 1:
        raise NotNumerical(f"gcd{tuple(gens)} = {gcd_many(*gens)}")
    cap = oracle_cap() if cap is None else cap
    m0 = gens[0]
    size = max(4 * m0, 64)
    table = np.zeros(size, dtype=bool)
    table[0] = True
    last_false = -1
    end = 1  # table[:end] is final
    while True:
        blk_end = end + m0
        if blk_end > len(table):
            if 2 * len(table) > cap:
                raise OracleCapExceeded(f"sieve for {gens} needs more than {cap} cells")
            table = np.concatenate([table, np.zeros(len(table), dtype=bool)])
        blk = np.zeros(blk_end - end, dtype=bool)
        for n in gens:
            lo = end - n
            if lo + len(blk) <= 0:
                continue
            if lo >= 0:
                blk |= table[lo:lo + len(blk)]
            else:
                blk[-lo:] |= table[0:lo + len(blk)]
        table[end:blk_end] = blk
        falses = np.flatnonzero(~blk)
        if len(falses):
            last_false = end + int(falses[-1])
        end = blk_end
        if end - 1 - last_false >= m0:
            break
    g = last_false
    limit = max(g, 0) + 2 * m0
    if limit + 1 > cap:
        raise OracleCapExceeded(f"sieve for {gens} needs more than {cap} cells")
    if limit + 1 > len(table):
        table = np.concatenate([table, np.zeros(limit + 1 - len(table), dtype=bool)])
    table = table[: limit + 1].copy()
    table[end:] = True
    table.setflags(write=False)
    return NaiveSemigroup(tuple(gens), table, limit, g)


def naive_apery(ns: NaiveSemigroup, m: int) -> set:
    if m < 1 or m not in ns:
        raise NotMember(f"{m} is not a positive element of the semigroup")
    # the smallest member of every class lies below g + m + 1
    hi = max(ns.g, 0) + m + 1
    members = np.flatnonzero(ns.membership[: hi + 1])
    if hi > ns.limit:
        members = np.concatenate([members, np.arange(ns.limit + 1, hi + 1)])
    _, first = np.unique(members % m, return_index=True)
    return set(members[first].tolist())


def naive_g(ns: NaiveSemigroup) -> int:
    return ns.g


def naive_N(ns: NaiveSemigroup) -> int:
    return int(np.count_nonzero(~ns.membership))


def naive_pf(ns: NaiveSemigroup) -> List[int]:
    """Gaps ``x`` with ``x + n`` in ``S`` for every generator ``n``."""
    gaps = np.flatnonzero(~ns.membership)
    if ns.g < 0:
        return [-1]
    ok = np.ones(len(gaps), dtype=bool)
    for n in ns.generators:
        idx = gaps + n
        inside = idx <= ns.limit
        hit = np.ones(len(gaps), dtype=bool)
        hit[inside] = ns.membership[idx[inside]]
        ok &= hit
    return sorted(int(x) for x in gaps[ok])


def naive_type(ns: NaiveSemigroup) -> int:
    return len(naive_pf(ns))


def _union_mask(ns: NaiveSemigroup) -> np.ndarray:
    # x in S or g - x in S, for x in [0, g]
    g = ns.g
    seg = ns.membership[: g + 1]
    return seg | seg[::-1]


def naive_is_symmetric(ns: NaiveSemigroup) -> bool:
    if ns.g < 0:
        return True
    return bool(_union_mask(ns).all())


def naive_is_pseudo_symmetric(ns: NaiveSemigroup) -> bool:
    g = ns.g
    if g < 0 or g % 2:
        return False
    miss = np.flatnonzero(~_union_mask(ns))
    return miss.tolist() == [g // 2]
