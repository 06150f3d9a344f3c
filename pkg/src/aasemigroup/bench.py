"""Timing of the boundary-data classifier against set materialisation and the oracle."""

from __future__ import annotations

import time
from typing import Dict, List, Optional, Sequence

from . import apery, classify, oracle
from .arith import gcd
from .rodseth import AAParams, rodseth_data_fast

CSV_HEADER = ("a", "d", "k", "c", "fast_us", "apery_us", "oracle_us")


def adversarial_params(a: int, d: int = 1, k: int = 2) -> AAParams:
    """Parameters with ``s_0 = a - 1``, i.e. the longest all-2 quotient chain."""
    if gcd(a, d) != 1:
        raise ValueError(f"gcd({a}, {d}) != 1")
    return AAParams(a, d, k, (-d) % a or a)


def _time_us(fn, repeat: int = 1):
    best, out = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = (time.perf_counter() - t0) * 1e6
        best = dt if best is None else min(best, dt)
    return best, out


def fast_classify(p: AAParams) -> classify.Classification:
    rodseth_data_fast.cache_clear()
    return classify.classify(p)


def bench_instance(p: AAParams, repeat: int = 3, oracle_cap: Optional[int] = None) -> Dict:
    """Time the three routes on ``p`` and cross-check the values they produce."""
    fast_us, cl = _time_us(lambda: fast_classify(p), repeat)
    g_fast = apery.frobenius(p)
    apery_us, ap = _time_us(lambda: apery.apery_set(p), 1)
    row = {
        "a": p.a, "d": p.d, "k": p.k, "c": p.c,
        "fast_us": round(fast_us, 1),
        "apery_us": round(apery_us, 1),
        "oracle_us": "skipped",
        "agree": max(ap.values) - p.a == g_fast,
    }
    cap = oracle.oracle_cap() if oracle_cap is None else oracle_cap
    try:
        oracle_us, ns = _time_us(lambda: oracle.naive_build(p.generators, cap=cap), 1)
    except oracle.OracleCapExceeded:
        return row
    row["oracle_us"] = round(oracle_us, 1)
    o_sym, o_ps = oracle.naive_is_symmetric(ns), oracle.naive_is_pseudo_symmetric(ns)
    row["agree"] = (
        row["agree"]
        and ns.g == g_fast
        and set(ap.values) == oracle.naive_apery(ns, p.a)
        and (cl.symmetric, cl.pseudo_symmetric) == (o_sym, o_ps)
    )
    return row


def run_bench(sizes: Sequence[int], repeat: int = 3) -> List[Dict]:
    return [bench_instance(adversarial_params(max(3, int(n))), repeat=repeat) for n in sizes]
