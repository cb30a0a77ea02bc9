"""Registered claim checks over the catalog, and the suite runner.

Every check renders one inequality or equality per target instance and
embeds the certificates needed to replay the comparison.  Comparisons
against log2(t) are decided in exact integer arithmetic (2^x versus a
power of t); the lhs/rhs fields carry floats for readability only.

A statistic that exhausts its node budget yields a bracketing interval
instead of a value.  A one-sided claim is still decided when the
interval lands entirely on one side; otherwise the row is reported as
skipped with its bounds, never as a silent pass.
"""

import csv
import json
import math
import os
import time
from dataclasses import dataclass

from .algebra import gaussian_binomial
from .catalog import catalog, get
from .group import PermGroup
from .perm import Perm
from .rc import rc_exact
from .stats import (
    NodeBudget,
    quotient_regular,
    stat_B,
    stat_H,
    stat_I,
    stat_b,
    stat_len,
)
from .actions import ActionInstance

CHECK_IDS = (
    "INEQ_CHAIN", "RC_HEIGHT", "PROD_I", "PROD_H", "LEN_DP", "QUOT_CHAIN",
    "REGNORM_I", "DIAG_I", "PA_I", "ORBIT_SIZES", "SP_STAB", "PARTITION_I",
    "PGL_H", "PAIRS_H", "HEIGHT_MAIN", "IRRED_MAIN", "M24_I", "LIEBECK_B",
)

_STAT_FNS = {"b": stat_b, "B": stat_B, "H": stat_H, "I": stat_I}

# Fixed registries; normal-subgroup or pair discovery is out of scope.
_PROD_PAIRS = (
    ("sym3", "sym3"),
    ("sym2", "sym4"),
    ("alt4", "sym3"),
    ("aff-1-5", "sym2"),
    ("sym5", "alt4"),
)
_LEN_PAIRS = (("sym3", "sym3"), ("sym2", "sym4"), ("alt4", "sym3"))
_PA_ROWS = (("prod-sym3-2", "sym3", 2), ("prod-sym4-2", "sym4", 2),
            ("prod-sym5-2", "sym5", 2))
_ORBIT_ROWS = ((1, 1), (2, 1), (1, 2))
_ORBIT_ROWS_SLOW = ((2, 2),)
_SP_STAB_IDS = ("quad-1-1-plus", "quad-1-1-minus",
                "quad-2-1-plus", "quad-2-1-minus")
_PARTITION_ROWS = (("part-2-3", 2, 3), ("part-3-2", 3, 2), ("part-4-2", 4, 2))
_PGL_ROWS = (("sub-3-2-1", 3, 2), ("sub-4-2-1", 4, 2),
             ("sub-3-3-1", 3, 3), ("sub-3-4-1", 3, 4))


@dataclass
class CheckResult:
    """One rendered claim; passed None means skipped-with-bounds."""

    check_id: str
    instance_id: str
    claim: str
    lhs: float
    rhs: float
    passed: object
    certificates: dict
    runtime: float = 0.0
    skip_reason: str = ""

    def to_dict(self):
        d = {
            "check_id": self.check_id,
            "instance_id": self.instance_id,
            "claim": self.claim,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "certificates": self.certificates,
            "runtime": round(self.runtime, 6),
        }
        if self.passed is None:
            d["skip_reason"] = self.skip_reason
        return d


class SuiteContext:
    """Shared instance/group/statistic caches for one suite run.

    Statistics are memoized per (instance, stat) so checks that share a
    target pay for the search once.  Synthetic instances (products,
    normal subgroups) register under explicit keys.
    """

    def __init__(self, include_slow=False, budget_limit=None):
        self.include_slow = include_slow
        self.budget_limit = budget_limit
        self._instances = {}
        self._groups = {}
        self._stats = {}
        self._lens = {}
        self._rcs = {}
        self._prim = {}

    def instance(self, key):
        if key not in self._instances:
            self._instances[key] = get(key).build()
        return self._instances[key]

    def register(self, key, inst):
        self._instances[key] = inst

    def register_group(self, key, G):
        self._groups[key] = G

    def group(self, key):
        if key not in self._groups:
            self._groups[key] = self.instance(key).group()
        return self._groups[key]

    def stat(self, key, which):
        ck = (key, which)
        if ck not in self._stats:
            budget = NodeBudget(self.budget_limit)
            self._stats[ck] = _STAT_FNS[which](self.group(key), budget)
        return self._stats[ck]

    def length(self, key, mode="auto"):
        ck = (key, mode)
        if ck not in self._lens:
            self._lens[ck] = stat_len(self.group(key), mode)
        return self._lens[ck]

    def rc(self, key):
        if key not in self._rcs:
            self._rcs[key] = rc_exact(self.group(key),
                                      budget=NodeBudget(self.budget_limit))
        return self._rcs[key]

    def is_primitive(self, key):
        if key not in self._prim:
            G = self.group(key)
            self._prim[key] = G.is_transitive() and G.is_primitive()
        return self._prim[key]


def _fast_entries(degree_cap=None):
    out = []
    for e in catalog():
        if "slow" in e.tags:
            continue
        if degree_cap is not None and _entry_degree(e) > degree_cap:
            continue
        out.append(e)
    return out


_DEGREES = {}


def _entry_degree(entry):
    # degree probes build the instance; cache so filters stay cheap
    if entry.id not in _DEGREES:
        _DEGREES[entry.id] = entry.build().degree
    return _DEGREES[entry.id]


def _decide_le(cert, holds):
    """Decide a claim monotone-true downward in the statistic's value.

    Returns (True/False/None, reason); None means the bracketing
    interval straddles the boundary.
    """
    if holds(cert.upper):
        return True, ""
    if not holds(cert.lower):
        return False, ""
    return None, "budget exhausted: value in [%d, %d]" % (cert.lower, cert.upper)


def direct_product_instance(A, B, name=None):
    """Coordinatewise action of A x B on the product of the point sets.

    Point (x, y) is encoded as x*degB + y, matching the product-action
    encoding, so this group is literally the base subgroup of the
    corresponding wreath product instance.
    """
    dA, dB = A.degree, B.degree
    gens = []
    for g in A.generators:
        img = [0] * (dA * dB)
        for x in range(dA):
            gx = g.img[x] * dB
            for y in range(dB):
                img[x * dB + y] = gx + y
        gens.append(Perm(img))
    for h in B.generators:
        img = [0] * (dA * dB)
        for x in range(dA):
            base = x * dB
            for y in range(dB):
                img[base + y] = base + h.img[y]
        gens.append(Perm(img))
    labels = tuple("%s|%s" % (la, lb) for la in A.labels for lb in B.labels)
    meta = {
        "order": A.meta["order"] * B.meta["order"],
        "transitive": bool(A.meta.get("transitive"))
        and bool(B.meta.get("transitive")),
    }
    return ActionInstance(name or "%s x %s" % (A.name, B.name),
                          dA * dB, tuple(gens), labels, meta)


def _dp_key(ctx, a_id, b_id):
    key = "%s x %s" % (a_id, b_id)
    if key not in ctx._instances:
        ctx.register(key, direct_product_instance(
            ctx.instance(a_id), ctx.instance(b_id), name=key))
    return key


def _check_ineq_chain(ctx):
    results = []
    for e in _fast_entries(degree_cap=60):
        t0 = time.perf_counter()
        t = _entry_degree(e)
        certs = {s: ctx.stat(e.id, s) for s in ("b", "B", "H", "I")}
        b, B, H, I = (certs[s].value for s in ("b", "B", "H", "I"))
        cap = (t ** b).bit_length() - 1  # floor(b*log2 t)
        claim = ("b <= B <= H <= I <= floor(b*log2 t): "
                 "%d <= %d <= %d <= %d <= %d" % (b, B, H, I, cap))
        if all(c.exhaustive for c in certs.values()):
            passed, reason = b <= B <= H <= I <= cap, ""
        else:
            passed, reason = None, "budget exhausted on %s" % ",".join(
                s for s, c in certs.items() if not c.exhaustive)
        results.append(CheckResult(
            "INEQ_CHAIN", e.id, claim, float(I), float(cap), passed,
            {s: c.to_dict() for s, c in certs.items()},
            time.perf_counter() - t0, reason))
    return results


def _check_rc_height(ctx):
    results = []
    for e in _fast_entries(degree_cap=8):
        t0 = time.perf_counter()
        rc = ctx.rc(e.id)
        H = ctx.stat(e.id, "H")
        claim = "RC <= H + 1: %d <= %d + 1" % (rc.value, H.value)
        if rc.status == "exact" and H.exhaustive:
            passed, reason = rc.value <= H.value + 1, ""
        else:
            passed, reason = None, "RC in [%d, %d]" % (rc.lower, rc.upper)
        results.append(CheckResult(
            "RC_HEIGHT", e.id, claim, float(rc.value), float(H.value + 1),
            passed, {"rc": rc.to_dict(), "H": H.to_dict()},
            time.perf_counter() - t0, reason))
    return results


def _prod_rows(ctx, which):
    rows = []
    for a_id, b_id in _PROD_PAIRS:
        t0 = time.perf_counter()
        if ctx.group(a_id).is_trivial() or ctx.group(b_id).is_trivial():
            raise ValueError("product rows need nontrivial factors")
        key = _dp_key(ctx, a_id, b_id)
        ca = ctx.stat(a_id, which)
        cb = ctx.stat(b_id, which)
        cab = ctx.stat(key, which)
        rows.append((key, ca, cb, cab, time.perf_counter() - t0))
    return rows


def _check_prod_i(ctx):
    results = []
    for key, ca, cb, cab, dt in _prod_rows(ctx, "I"):
        rhs = ca.value + cb.value - 1
        claim = "I(A x B) == I(A) + I(B) - 1: %d == %d + %d - 1" % (
            cab.value, ca.value, cb.value)
        if all(c.exhaustive for c in (ca, cb, cab)):
            passed, reason = cab.value == rhs, ""
        else:
            passed, reason = None, "budget exhausted"
        results.append(CheckResult(
            "PROD_I", key, claim, float(cab.value), float(rhs), passed,
            {"I_A": ca.to_dict(), "I_B": cb.to_dict(), "I_AB": cab.to_dict()},
            dt, reason))
    return results


def _check_prod_h(ctx):
    results = []
    for key, ca, cb, cab, dt in _prod_rows(ctx, "H"):
        rhs = ca.value + cb.value
        claim = "H(A x B) <= H(A) + H(B): %d <= %d + %d" % (
            cab.value, ca.value, cb.value)
        if ca.exhaustive and cb.exhaustive:
            passed, reason = _decide_le(cab, lambda v, r=rhs: v <= r)
        else:
            passed, reason = None, "budget exhausted"
        results.append(CheckResult(
            "PROD_H", key, claim, float(cab.value), float(rhs), passed,
            {"H_A": ca.to_dict(), "H_B": cb.to_dict(), "H_AB": cab.to_dict()},
            dt, reason))
    return results


def _check_len_dp(ctx):
    results = []
    for a_id, b_id in _LEN_PAIRS:
        t0 = time.perf_counter()
        key = _dp_key(ctx, a_id, b_id)
        la, lb, lab = ctx.length(a_id), ctx.length(b_id), ctx.length(key)
        rhs = la.value + lb.value
        claim = "len(A x B) <= len(A) + len(B): %d <= %d + %d" % (
            lab.value, la.value, lb.value)
        if all(r.status == "exact" for r in (la, lb, lab)):
            passed, reason = lab.value <= rhs, ""
        else:
            passed, reason = None, "chain length not exact at this order"
        results.append(CheckResult(
            "LEN_DP", key, claim, float(lab.value), float(rhs), passed,
            {"len_A": la.to_dict(), "len_B": lb.to_dict(),
             "len_AB": lab.to_dict()}, time.perf_counter() - t0, reason))
    return results


def _quot_rows(ctx):
    # fixed pairs: Sym(4) over its Klein normal subgroup, and the
    # degree-9 wreath product over its base subgroup
    G1 = ctx.group("sym4")
    N1 = PermGroup(4, [Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1])])
    ctx.register_group("sym4:klein", N1)
    W = ctx.group("prod-sym3-2")
    base_key = _dp_key(ctx, "sym3", "sym3")
    NW = ctx.group(base_key)
    ctx.register_group("prod-sym3-2:base", NW)
    return (("sym4", "sym4:klein", G1, N1),
            ("prod-sym3-2", "prod-sym3-2:base", W, NW))


def _check_quot_chain(ctx):
    results = []
    for g_id, n_id, G, N in _quot_rows(ctx):
        t0 = time.perf_counter()
        for g in G.gens:
            gi = g.inverse()
            for h in N.gens:
                if gi * h * g not in N:
                    raise ValueError("registry subgroup is not normal")
        q_key = "%s / %s" % (g_id, n_id)
        if q_key not in ctx._groups:
            ctx.register_group(q_key, quotient_regular(G, N))
        lq = ctx.length(q_key)
        setup = time.perf_counter() - t0
        for which in ("H", "I"):
            t1 = time.perf_counter()
            cg = ctx.stat(g_id, which)
            cn = ctx.stat(n_id, which)
            rhs = cn.value + lq.value
            claim = "%s(G) <= %s(N) + len(G/N): %d <= %d + %d" % (
                which, which, cg.value, cn.value, lq.value)
            if cn.exhaustive and lq.status == "exact":
                passed, reason = _decide_le(cg, lambda v, r=rhs: v <= r)
            else:
                passed, reason = None, "rhs not exact"
            results.append(CheckResult(
                "QUOT_CHAIN", q_key, claim, float(cg.value), float(rhs),
                passed,
                {which + "_G": cg.to_dict(), which + "_N": cn.to_dict(),
                 "len_Q": lq.to_dict()},
                time.perf_counter() - t1 + (setup if which == "H" else 0.0),
                reason))
    return results


def _check_regnorm_i(ctx):
    results = []
    for e in catalog("affine"):
        t0 = time.perf_counter()
        t = _entry_degree(e)
        cert = ctx.stat(e.id, "I")
        claim = "I <= log2(t) + 1: %d <= %.3f" % (cert.value, math.log2(t) + 1)
        passed, reason = _decide_le(cert, lambda v, t=t: 2 ** (v - 1) <= t)
        results.append(CheckResult(
            "REGNORM_I", e.id, claim, float(cert.value), math.log2(t) + 1,
            passed, {"I": cert.to_dict(), "t": t},
            time.perf_counter() - t0, reason))
    return results


def _check_diag_i(ctx):
    results = []
    for e in catalog("type:SD"):
        if "slow" in e.tags and not ctx.include_slow:
            continue
        t0 = time.perf_counter()
        t = _entry_degree(e)
        cert = ctx.stat(e.id, "I")
        claim = "I <= log2(t): %d <= %.3f" % (cert.value, math.log2(t))
        passed, reason = _decide_le(cert, lambda v, t=t: 2 ** v <= t)
        results.append(CheckResult(
            "DIAG_I", e.id, claim, float(cert.value), math.log2(t),
            passed, {"I": cert.to_dict(), "t": t},
            time.perf_counter() - t0, reason))
    return results


def _check_pa_i(ctx):
    results = []
    for w_id, h_id, m in _PA_ROWS:
        t0 = time.perf_counter()
        cw = ctx.stat(w_id, "I")
        ch = ctx.stat(h_id, "I")
        rhs = m * ch.value + 1.5 * m
        claim = "I(W) <= m*I(H) + 3m/2: %d <= %d*%d + %.1f" % (
            cw.value, m, ch.value, 1.5 * m)
        if ch.exhaustive:
            # integer form: 2 I(W) <= 2m I(H) + 3m
            passed, reason = _decide_le(
                cw, lambda v, r=2 * m * ch.value + 3 * m: 2 * v <= r)
        else:
            passed, reason = None, "inner statistic not exact"
        results.append(CheckResult(
            "PA_I", w_id, claim, float(cw.value), rhs, passed,
            {"I_W": cw.to_dict(), "I_inner": ch.to_dict(), "m": m},
            time.perf_counter() - t0, reason))
    return results


def _sp_order(m, q):
    order = q ** (m * m)
    for i in range(1, m + 1):
        order *= q ** (2 * i) - 1
    return order


def _check_orbit_sizes(ctx):
    rows = _ORBIT_ROWS + (_ORBIT_ROWS_SLOW if ctx.include_slow else ())
    results = []
    for m, e_ in rows:
        q = 2 ** e_
        expect = {"plus": q ** m * (q ** m + 1) // 2,
                  "minus": q ** m * (q ** m - 1) // 2}
        sp = _sp_order(m, q)
        for sign, t_exp in expect.items():
            eid = "quad-%d-%d-%s" % (m, e_, sign)
            t0 = time.perf_counter()
            G = ctx.group(eid)
            ord_exp = sp if t_exp > 1 else 1  # degree-1 orbit kills the action
            ok = (G.degree == t_exp and G.is_transitive()
                  and G.order == ord_exp)
            claim = ("t == q^m(q^m%s1)/2 and transitive and |G| == %d: "
                     "t=%d |G|=%d" % ("+" if sign == "plus" else "-",
                                      ord_exp, G.degree, G.order))
            results.append(CheckResult(
                "ORBIT_SIZES", eid, claim, float(G.degree), float(t_exp), ok,
                {"order": str(G.order), "expected_order": str(ord_exp),
                 "transitive": G.is_transitive()},
                time.perf_counter() - t0))
    return results


def _check_sp_stab(ctx):
    results = []
    for eid in _SP_STAB_IDS:
        t0 = time.perf_counter()
        m = int(eid.split("-")[1])
        cert = ctx.stat(eid, "I")
        rhs = 1 + 2 * m
        claim = "I <= 1 + 2m: %d <= %d" % (cert.value, rhs)
        passed, reason = _decide_le(cert, lambda v, r=rhs: v <= r)
        results.append(CheckResult(
            "SP_STAB", eid, claim, float(cert.value), float(rhs), passed,
            {"I": cert.to_dict(), "m": m}, time.perf_counter() - t0, reason))
    return results


def _check_partition_i(ctx):
    results = []
    for eid, a, b in _PARTITION_ROWS:
        t0 = time.perf_counter()
        t = _entry_degree(get(eid))
        t_formula = math.factorial(a * b) // (
            math.factorial(a) * math.factorial(b) ** a)
        cert = ctx.stat(eid, "I")
        claim = "t == %d and I < 2*log2(t): %d < %.3f" % (
            t_formula, cert.value, 2 * math.log2(t))
        if t != t_formula:
            passed, reason = False, ""
        else:
            passed, reason = _decide_le(cert, lambda v, t=t: 2 ** v < t * t)
        results.append(CheckResult(
            "PARTITION_I", eid, claim, float(cert.value), 2 * math.log2(t),
            passed, {"I": cert.to_dict(), "t": t, "t_formula": t_formula},
            time.perf_counter() - t0, reason))
    return results


def _check_pgl_h(ctx):
    results = []
    for eid, n, q in _PGL_ROWS:
        t0 = time.perf_counter()
        cert = ctx.stat(eid, "H")
        expected = n if q == 2 else 2 * n - 2
        claim = "H == (n if q==2 else 2n-2): %d == %d" % (cert.value, expected)
        if cert.exhaustive:
            passed, reason = cert.value == expected, ""
        else:
            passed, reason = None, "H in [%d, %d]" % (cert.lower, cert.upper)
        results.append(CheckResult(
            "PGL_H", eid, claim, float(cert.value), float(expected), passed,
            {"H": cert.to_dict(), "n": n, "q": q},
            time.perf_counter() - t0, reason))
    return results


def _check_pairs_h(ctx):
    n, q, m = 3, 2, 1
    t_exp = {
        "pairs-3-2-1-comp":
            gaussian_binomial(n, m, q) * q ** (m * (n - m)),
        "pairs-3-2-1-flag":
            gaussian_binomial(n, n - m, q) * gaussian_binomial(n - m, m, q),
    }
    results = []
    for eid, t_formula in t_exp.items():
        t0 = time.perf_counter()
        t = _entry_degree(get(eid))
        cp = ctx.stat(eid, "H")
        h1 = ctx.stat("sub-3-2-1", "H")
        h2 = ctx.stat("sub-3-2-2", "H")
        rhs = h1.value + h2.value
        claim = ("t == %d and H <= H(omega_m) + H(omega_n-m): %d <= %d + %d"
                 % (t_formula, cp.value, h1.value, h2.value))
        if t != t_formula:
            passed, reason = False, ""
        elif h1.exhaustive and h2.exhaustive:
            passed, reason = _decide_le(cp, lambda v, r=rhs: v <= r)
        else:
            passed, reason = None, "rhs not exact"
        results.append(CheckResult(
            "PAIRS_H", eid, claim, float(cp.value), float(rhs), passed,
            {"H": cp.to_dict(), "H_m": h1.to_dict(), "H_nm": h2.to_dict(),
             "t": t, "t_formula": t_formula},
            time.perf_counter() - t0, reason))
    return results


def _main_targets(ctx):
    # theorem hypotheses: primitive, not large-base; degree 1 is
    # degenerate for a log2(t) bound
    out = []
    for e in _fast_entries():
        if "large_base" in e.tags:
            continue
        if _entry_degree(e) < 2 or not ctx.is_primitive(e.id):
            continue
        out.append(e)
    return out


def _check_height_main(ctx):
    results = []
    for e in _main_targets(ctx):
        t0 = time.perf_counter()
        t = _entry_degree(e)
        cert = ctx.stat(e.id, "H")
        claim = "H < 9*log2(t): %d < %.3f" % (cert.value, 9 * math.log2(t))
        passed, reason = _decide_le(cert, lambda v, t=t: 2 ** v < t ** 9)
        results.append(CheckResult(
            "HEIGHT_MAIN", e.id, claim, float(cert.value), 9 * math.log2(t),
            passed, {"H": cert.to_dict(), "t": t},
            time.perf_counter() - t0, reason))
    return results


def _check_irred_main(ctx):
    results = []
    for e in _main_targets(ctx):
        t0 = time.perf_counter()
        t = _entry_degree(e)
        cert = ctx.stat(e.id, "I")
        claim = "I < 7*log2(t): %d < %.3f" % (cert.value, 7 * math.log2(t))
        passed, reason = _decide_le(cert, lambda v, t=t: 2 ** v < t ** 7)
        results.append(CheckResult(
            "IRRED_MAIN", e.id, claim, float(cert.value), 7 * math.log2(t),
            passed, {"I": cert.to_dict(), "t": t},
            time.perf_counter() - t0, reason))
    return results


def _check_m24_i(ctx):
    # Registered target is 8; the search finds 7, and 7 is forced (see the
    # catalog note), so this row fails by design rather than being retuned.
    if not ctx.include_slow:
        return []
    t0 = time.perf_counter()
    cert = ctx.stat("m24", "I")
    claim = "I == 8: %d == 8" % cert.value
    if cert.exhaustive:
        passed, reason = cert.value == 8, ""
    else:
        passed, reason = None, "I in [%d, %d]" % (cert.lower, cert.upper)
    return [CheckResult("M24_I", "m24", claim, float(cert.value), 8.0,
                        passed, {"I": cert.to_dict()},
                        time.perf_counter() - t0, reason)]


def _check_liebeck_b(ctx):
    results = []
    for e in _fast_entries():
        if "large_base" in e.tags:
            continue
        t0 = time.perf_counter()
        t = _entry_degree(e)
        cert = ctx.stat(e.id, "b")
        bound = max((t - 1).bit_length() + 1, 7)  # ceil(log2 t) + 1 vs 7
        claim = "b <= max(ceil(log2 t)+1, 7): %d <= %d" % (cert.value, bound)
        passed, reason = _decide_le(cert, lambda v, r=bound: v <= r)
        results.append(CheckResult(
            "LIEBECK_B", e.id, claim, float(cert.value), float(bound),
            passed, {"b": cert.to_dict(), "t": t},
            time.perf_counter() - t0, reason))
    return results


_CHECKS = {
    "INEQ_CHAIN": _check_ineq_chain,
    "RC_HEIGHT": _check_rc_height,
    "PROD_I": _check_prod_i,
    "PROD_H": _check_prod_h,
    "LEN_DP": _check_len_dp,
    "QUOT_CHAIN": _check_quot_chain,
    "REGNORM_I": _check_regnorm_i,
    "DIAG_I": _check_diag_i,
    "PA_I": _check_pa_i,
    "ORBIT_SIZES": _check_orbit_sizes,
    "SP_STAB": _check_sp_stab,
    "PARTITION_I": _check_partition_i,
    "PGL_H": _check_pgl_h,
    "PAIRS_H": _check_pairs_h,
    "HEIGHT_MAIN": _check_height_main,
    "IRRED_MAIN": _check_irred_main,
    "M24_I": _check_m24_i,
    "LIEBECK_B": _check_liebeck_b,
}


def run_check(check_id, ctx):
    if check_id not in _CHECKS:
        raise ValueError("unknown check id %r (ids: %s)"
                         % (check_id, ", ".join(CHECK_IDS)))
    return _CHECKS[check_id](ctx)


def verify(check_id, include_slow=False, budget=None, ctx=None):
    """Run one registered check; returns its CheckResult rows."""
    if ctx is None:
        ctx = SuiteContext(include_slow=include_slow, budget_limit=budget)
    return run_check(check_id, ctx)


@dataclass
class SuiteConfig:
    suite: str = "default"     # default | all (all pulls in the slow tier)
    include_slow: bool = False
    checks: object = None      # None = every registered check
    out: str = "report.json"
    budget: object = None
    figures: bool = True


def run_suite(config):
    """Execute the configured checks and write JSON + CSV + figures.

    Returns the report dict.  Reports are deterministic apart from the
    runtime fields; rows appear in check-registry order.
    """
    if config.suite not in ("default", "all"):
        raise ValueError("unknown suite %r" % config.suite)
    include_slow = config.include_slow or config.suite == "all"
    check_ids = CHECK_IDS if config.checks is None else tuple(config.checks)
    for cid in check_ids:
        if cid not in _CHECKS:
            raise ValueError("unknown check id %r (ids: %s)"
                             % (cid, ", ".join(CHECK_IDS)))
    ctx = SuiteContext(include_slow=include_slow, budget_limit=config.budget)
    results, skipped = [], []
    for cid in check_ids:
        for row in _CHECKS[cid](ctx):
            (skipped if row.passed is None else results).append(row)
    summary = {
        "checks_run": len(check_ids),
        "rows": len(results) + len(skipped),
        "passed": sum(1 for r in results if r.passed),
        "failed": sum(1 for r in results if not r.passed),
        "skipped": len(skipped),
        "failed_rows": sorted("%s/%s" % (r.check_id, r.instance_id)
                              for r in results if not r.passed),
    }
    report = {
        "schema": 1,
        "config": {
            "suite": config.suite,
            "include_slow": include_slow,
            "checks": list(check_ids),
            "budget": config.budget,
        },
        "results": [r.to_dict() for r in results],
        "skipped": [r.to_dict() for r in skipped],
        "summary": summary,
    }
    _write_report(report, results, skipped, config)
    return report


def _write_report(report, results, skipped, config):
    with open(config.out, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    stem = os.path.splitext(config.out)[0]
    with open(stem + ".csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["check_id", "instance_id", "pass", "lhs", "rhs",
                    "runtime", "claim"])
        for r in results:
            w.writerow([r.check_id, r.instance_id, r.passed, r.lhs, r.rhs,
                        round(r.runtime, 6), r.claim])
        for r in skipped:
            w.writerow([r.check_id, r.instance_id, "skipped", r.lhs, r.rhs,
                        round(r.runtime, 6), r.claim])
    if config.figures:
        _render_figures(results, stem)


def _render_figures(results, stem):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    chain = [r for r in results if r.check_id == "INEQ_CHAIN"]
    if chain:
        ids = [r.instance_id for r in chain]
        xs = range(len(ids))
        fig, ax = plt.subplots(
            figsize=(max(8.0, 0.34 * len(ids)), 4.8))
        for stat, marker in (("b", "o"), ("B", "s"), ("H", "^"), ("I", "v")):
            ax.plot(xs, [r.certificates[stat]["value"] for r in chain],
                    marker, label=stat, alpha=0.8, linestyle="none")
        ax.plot(xs, [r.rhs for r in chain], "k--", lw=1,
                label="floor(b*log2 t)")
        ax.set_xticks(list(xs))
        ax.set_xticklabels(ids, rotation=90, fontsize=7)
        ax.set_ylabel("statistic value")
        ax.set_title("base-type statistics per catalog instance")
        ax.legend(loc="upper left", fontsize=8)
        fig.tight_layout()
        fig.savefig(stem + "_chain.png", dpi=150)
        plt.close(fig)

    hs = [r for r in results if r.check_id == "HEIGHT_MAIN"]
    irs = {r.instance_id: r for r in results if r.check_id == "IRRED_MAIN"}
    if hs:
        fig, ax = plt.subplots(figsize=(7.0, 4.8))
        logt = [math.log2(r.certificates["t"]) for r in hs]
        ax.plot(logt, [r.lhs for r in hs], "o", label="H")
        paired = [r for r in hs if r.instance_id in irs]
        ax.plot([math.log2(r.certificates["t"]) for r in paired],
                [irs[r.instance_id].lhs for r in paired], "s",
                label="I", alpha=0.7)
        grid = [min(logt), max(logt)]
        ax.plot(grid, [9 * x for x in grid], "r--", lw=1, label="9*log2 t")
        ax.plot(grid, [7 * x for x in grid], "b--", lw=1, label="7*log2 t")
        ax.set_xlabel("log2 t")
        ax.set_ylabel("statistic value")
        ax.set_title("height and irredundant length against the main bounds")
        ax.legend(loc="upper left", fontsize=8)
        fig.tight_layout()
        fig.savefig(stem + "_bounds.png", dpi=150)
        plt.close(fig)
