"""Fast-path versus oracle comparison over parameter sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, Iterator, List, Optional

from . import apery, classify, invariants, oracle
from .rodseth import AAParams, RodsethData, l_shape, rodseth_data, rodseth_data_fast


def sweep_params(max_a: int, max_d: int, max_k: int, max_c: int, min_a: int = 2) -> Iterator[AAParams]:
    """Lexicographic ``(a, d, k, c)`` with ``gcd(a, d) = 1``."""
    for a in range(min_a, max_a + 1):
        for d in range(1, max_d + 1):
            if gcd(a, d) != 1:
                continue
            for k in range(1, max_k + 1):
                for c in range(1, max_c + 1):
                    yield AAParams(a, d, k, c)


def rodseth_identity_failures(rd: RodsethData) -> List[str]:
    """Check the chain identities on every index the data carries."""
    p = rd.params
    a, d, k, c = p.as_tuple()
    s, P, R, m, v = rd.s, rd.P, rd.R, rd.m, rd.v
    bad = []
    idx = sorted(s)
    if s[-1] != a or s[m + 1] != 0 or P[-1] != 0 or P[0] != 1:
        bad.append("boundary values")
    if s[m] != gcd(a, c) or P[m + 1] * s[m] != a:
        bad.append("s_m = gcd(a, c) / P_{m+1} = a / s_m")
    if R[-1] != a + k * d or R[m + 1] * s[m] != -k * c:
        bad.append("R_{-1} / R_{m+1}")
    for i in idx:
        if (d * s[i] - c * P[i]) % a:
            bad.append(f"d s_i = c P_i mod a at i={i}")
        if a * R[i] != (a + k * d) * s[i] - k * c * P[i]:
            bad.append(f"a R_i identity at i={i}")
        if i + 1 in s and s[i] * P[i + 1] - s[i + 1] * P[i] != a:
            bad.append(f"s_i P_(i+1) - s_(i+1) P_i = a at i={i}")
        if i + 1 in s and not (s[i] > s[i + 1] and R[i] > R[i + 1] and (i < 0 or P[i] < P[i + 1])):
            bad.append(f"monotonicity at i={i}")
    if not (R[v] > 0 >= R[v + 1]):
        bad.append("pivot v")
    if rd.complete:
        Rs = [R[i] for i in idx]
        if sum(1 for x, y in zip(Rs, Rs[1:]) if x > 0 >= y) != 1:
            bad.append("v not unique")
        for j in range(-1, m + 1):
            if P[j + 1] - P[j] == 1:
                if any(rd.q[i + 1] != 2 for i in range(0, j + 1)) or any(
                    P[i] != i + 1 for i in range(-1, j + 2)
                ):
                    bad.append(f"all-2 implication at j={j}")
    if l_shape(rd).size() != a:
        bad.append("|A| + |B| != a")
    return bad


@dataclass
class InstanceReport:
    params: AAParams
    mismatches: List[str] = field(default_factory=list)
    pseudo_symmetric: bool = False
    tags: List[str] = field(default_factory=list)
    type_: int = 0


def check_instance(p: AAParams, frobenius: Optional[Callable[[AAParams], int]] = None) -> InstanceReport:
    """Compare every fast-path quantity of ``p`` with the oracle."""
    frobenius = frobenius or apery.frobenius
    rep = InstanceReport(p)
    out = rep.mismatches
    rd = rodseth_data(p)
    rdf = rodseth_data_fast(p)
    out += ["rodseth: " + b for b in rodseth_identity_failures(rd)]
    out += ["rodseth_fast: " + b for b in rodseth_identity_failures(rdf)]
    if rdf.m != rd.m or rdf.v != rd.v or any(
        rdf.s[i] != rd.s[i] or rdf.P[i] != rd.P[i] or rdf.R[i] != rd.R[i] for i in rdf.s
    ) or any(rdf.q[i] != rd.q[i] for i in rdf.q):
        out.append("rodseth_data_fast disagrees with rodseth_data")

    ns = oracle.naive_build(p.generators)
    L = l_shape(rd)
    ap = apery.apery_set(p, L)
    g, N = frobenius(p), apery.genus(p)
    pf = invariants._pf_from(p, ap, L)
    o_ap = oracle.naive_apery(ns, p.a)
    o_g, o_N, o_pf = oracle.naive_g(ns), oracle.naive_N(ns), oracle.naive_pf(ns)
    o_sym, o_ps = oracle.naive_is_symmetric(ns), oracle.naive_is_pseudo_symmetric(ns)

    if set(ap.values) != o_ap:
        out.append(f"apery {sorted(ap.values)} != oracle {sorted(o_ap)}")
    if g != o_g or max(ap.values) - p.a != o_g:
        out.append(f"frobenius {g} != oracle {o_g}")
    if N != o_N:
        out.append(f"genus {N} != oracle {o_N}")
    if apery.apery_sum(p) != sum(ap.values):
        out.append("apery_sum != sum of materialised set")
    if pf != o_pf:
        out.append(f"pseudo_frobenius {pf} != oracle {o_pf}")
    if len(pf) > 2 * p.k:
        out.append(f"type {len(pf)} > 2k")
    rep.type_ = len(pf)

    cl = classify.classify(p)
    dlt = 2 * N - 1 - g
    ps_delta = classify.is_pseudo_symmetric_delta(p)
    if cl.symmetric != o_sym or (dlt == 0) != o_sym:
        out.append(f"symmetric {cl.symmetric} != oracle {o_sym}")
    if cl.pseudo_symmetric != o_ps or ps_delta != o_ps:
        out.append(f"pseudo-symmetric fast={cl.pseudo_symmetric} delta={ps_delta} oracle={o_ps}")
    if cl.irreducible != (o_sym or o_ps):
        out.append("irreducible")
    if o_sym != (len(o_pf) == 1):
        out.append("symmetric iff type 1")
    if o_ps and o_pf != sorted({o_g, o_g // 2}):
        out.append("pseudo-symmetric => S' = {g, g/2}")
    # equivalence: (g even and pairing identity) <=> g = 2N - 2 <=> definition
    lemma_b = g % 2 == 0 and g >= 0 and classify.pslemma_b_check(ap, g)
    if not (lemma_b == (g == 2 * N - 2) == o_ps):
        out.append(f"pairing identity {lemma_b}, g=2N-2 {g == 2 * N - 2}, oracle {o_ps}")
    if (g == 2 * N - 1) != o_sym:
        out.append("g = 2N - 1 <=> symmetric")
    if p.k >= 2:
        rep.tags = classify.case_conditions(p, rdf)
    rep.pseudo_symmetric = o_ps
    return rep


@dataclass
class SweepSummary:
    checked: int = 0
    reports: List[InstanceReport] = field(default_factory=list)
    first_mismatch: Optional[InstanceReport] = None


def run_sweep(params: Iterator[AAParams], keep: Callable[[InstanceReport], bool] = lambda r: False,
              **kw) -> SweepSummary:
    summary = SweepSummary()
    for p in params:
        rep = check_instance(p, **kw)
        summary.checked += 1
        if rep.mismatches and summary.first_mismatch is None:
            summary.first_mismatch = rep
        if rep.mismatches or keep(rep):
            summary.reports.append(rep)
    return summary
