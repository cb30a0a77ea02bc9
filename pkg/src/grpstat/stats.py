"""Base-related statistics of finite permutation groups.

Computes, with machine-checkable certificates:

  b(G)   smallest base size
  B(G)   largest size of a minimal (inclusion-wise) base
  H(G)   largest independent set of points ("height")
  I(G)   longest irredundant base
  l(G)   longest strict chain of subgroups (exact under a cap, else bounds)

All exact searches are exhaustive depth-first searches with
orbit-representative branching and order-halving pruning.  Every search
takes a node budget; exceeding it yields a result flagged with bounds
instead of aborting.  Among equal-size witnesses the lexicographically
smallest is reported, so certificates are reproducible.  Searches run
sequentially in a deterministic order; results never depend on timing.
"""

import os
from dataclasses import dataclass
from math import factorial

from .group import PermGroup
from .perm import Perm

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_LATTICE_CAP = 2000


class StatsError(Exception):
    pass


class CertificateError(StatsError):
    pass


class BudgetExceeded(StatsError):
    def __init__(self, limit):
        super().__init__("node budget of %d exceeded" % limit)
        self.limit = limit


class NodeBudget:
    """Counts search nodes; raises BudgetExceeded past the limit.

    The default limit is 10**8 nodes, overridable with the
    GRPSTAT_NODE_BUDGET environment variable or an explicit argument.
    """

    def __init__(self, limit=None):
        if limit is None:
            env = os.environ.get("GRPSTAT_NODE_BUDGET")
            limit = int(env) if env else DEFAULT_NODE_BUDGET
        if limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)


def _as_budget(budget):
    if budget is None:
        return NodeBudget()
    if isinstance(budget, NodeBudget):
        return budget
    return NodeBudget(int(budget))


@dataclass(frozen=True)
class StatCertificate:
    """Witness and stabilizer-order evidence for one statistic.

    kind: min_base | max_minimal_base | max_independent | max_irredundant
    witness: point tuple (ordered for max_irredundant, sorted otherwise)
    orders: pointwise stabilizer orders along the witness, starting at |G|
    removal_orders: |G_(witness minus point)| per point, where the kind's
        invariant needs them (independence / minimality evidence)
    exhaustive: True when the search completed; False means value is only
        the best bound found before the node budget ran out
    lower, upper: bracketing interval (equal when exhaustive)
    nodes: search nodes spent
    """

    kind: str
    value: int
    witness: tuple
    orders: tuple
    removal_orders: tuple
    exhaustive: bool
    lower: int
    upper: int
    nodes: int

    def to_dict(self):
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": list(self.witness),
            "orders": [str(o) for o in self.orders],
            "removal_orders": [str(o) for o in self.removal_orders],
            "exhaustive": self.exhaustive,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
        }


@dataclass(frozen=True)
class LenResult:
    """Subgroup-chain length, exact or an upper bound.

    method: lattice | log2 | cyclic_formula | sym_formula
    """

    value: int
    status: str  # exact | upper_bound
    method: str

    def to_dict(self):
        return {"value": self.value, "status": self.status, "method": self.method}


def _log2_floor(n):
    return n.bit_length() - 1


def _min_base_lower(order, degree):
    # smallest k with degree**k >= order; any base has at least k points
    if order <= 1:
        return 0
    k = 0
    power = 1
    while power < order:
        power *= degree
        k += 1
    return k


def _chain_orders_along(G, points):
    orders = [G.order]
    S = G
    for a in points:
        S = S.stabilizer(a)
        orders.append(S.order)
    return tuple(orders), S


def _removal_orders(G, points, stab_order, need_base):
    """Independence (and for need_base, minimality) evidence, or None.

    Returns |G_(points minus a)| per a when every removal strictly
    enlarges the stabilizer; need_base additionally requires stab_order
    to be 1, making the witness a minimal base.
    """
    if need_base and stab_order != 1:
        return None
    out = []
    pts = list(points)
    for i in range(len(pts)):
        rest = pts[:i] + pts[i + 1:]
        o = G.pointwise_stabilizer(rest).order
        if o <= stab_order:
            return None
        out.append(o)
    return tuple(out)


def _set_children(S, floor_pt):
    """Next points for the subset searches: per orbit of S, the smallest
    member above floor_pt; singleton orbits never decrease the order."""
    out = []
    for orb in S.orbits():
        if len(orb) < 2:
            continue
        for x in orb:
            if x > floor_pt:
                out.append(x)
                break
    out.sort()
    return out


def _seq_children(S):
    """Next points for the ordered searches: smallest member of each
    non-singleton orbit of S (conjugate continuations are isomorphic)."""
    out = [orb[0] for orb in S.orbits() if len(orb) >= 2]
    out.sort()
    return out


def _max_set_search(G, budget, need_base):
    """Largest independent set (need_base: largest minimal base).

    Subsets are built in increasing point order; each node branches on
    the smallest admissible member of every orbit of the current
    pointwise stabilizer.  Independence is hereditary (removing a point
    from an independent set leaves one), so a child that fails it is
    pruned outright: the stabilizer of the extended set minus any one
    point must stay strictly larger than the stabilizer of the whole
    extension.  Those removal stabilizers ride along the recursion, one
    single-point extension per level, instead of being recomputed from
    scratch.  Minimal bases are exactly the independent sets whose
    chain ends at the trivial group, so the base search shares the
    pruning and records only trivial-stabilizer candidates.
    First-found witnesses at the final size are lexicographically
    smallest.
    """
    kind = "max_minimal_base" if need_base else "max_independent"
    order = G.order
    best = {"size": -1, "witness": (), "orders": (order,), "removal": ()}
    if not need_base or order == 1:
        best["size"] = 0

    def rec(points, S, orders, removed):
        # removed[i] is the pointwise stabilizer of points minus points[i]
        budget.spend()
        if len(points) > best["size"] and (not need_base or S.order == 1):
            best["size"] = len(points)
            best["witness"] = points
            best["orders"] = orders
            best["removal"] = tuple(R.order for R in removed)
        if S.order == 1:
            return
        if len(points) + _omega(S.order) <= best["size"]:
            return
        floor_pt = points[-1] if points else -1
        for a in _set_children(S, floor_pt):
            T = S.stabilizer(a)
            grown = []
            for R in removed:
                Ra = R.stabilizer(a)
                if Ra.order <= T.order:
                    break  # some earlier point is now implied: prune
                grown.append(Ra)
            else:
                rec(points + (a,), T, orders + (T.order,), grown + [S])

    exhausted = True
    try:
        rec((), G, (order,), [])
    except BudgetExceeded:
        exhausted = False
    value = best["size"]
    upper = value if exhausted else max(value, _omega(order))
    return StatCertificate(
        kind=kind,
        value=value,
        witness=best["witness"],
        orders=best["orders"],
        removal_orders=best["removal"],
        exhaustive=exhausted,
        lower=value,
        upper=upper,
        nodes=budget.used,
    )


def stat_H(G, budget=None):
    """Exact maximum independent-set size with witness and evidence."""
    return _max_set_search(G, _as_budget(budget), need_base=False)


def stat_B(G, budget=None):
    """Exact maximum minimal-base size with witness and evidence."""
    return _max_set_search(G, _as_budget(budget), need_base=True)


def stat_I(G, budget=None):
    """Exact maximum irredundant base length.

    Ordered search; every step must strictly decrease the stabilizer
    order, and maximal strict chains end at the trivial group, so each
    leaf is an irredundant base.
    """
    budget = _as_budget(budget)
    order = G.order
    best = {"len": 0, "witness": (), "orders": (order,)}

    def rec(prefix, S, orders):
        budget.spend()
        if S.order == 1:
            if len(prefix) > best["len"]:
                best["len"] = len(prefix)
                best["witness"] = prefix
                best["orders"] = orders
            return
        if len(prefix) + _omega(S.order) <= best["len"]:
            return
        for a in _seq_children(S):
            T = S.stabilizer(a)
            rec(prefix + (a,), T, orders + (T.order,))

    exhausted = True
    try:
        rec((), G, (order,))
    except BudgetExceeded:
        exhausted = False
    value = best["len"]
    upper = value if exhausted else max(value, _omega(order))
    return StatCertificate(
        kind="max_irredundant",
        value=value,
        witness=best["witness"],
        orders=best["orders"],
        removal_orders=(),
        exhaustive=exhausted,
        lower=value,
        upper=upper,
        nodes=budget.used,
    )


def stat_b(G, budget=None):
    """Exact minimum base size.

    Minimum bases are minimal, hence independent, hence strictly
    decreasing in every order, so the search may restrict to strict
    chains.  Seeded with the BSGS base; the search then hunts both any
    smaller base and the lexicographically smallest one of the final
    size (ties are explored until the first same-size leaf confirms it).
    """
    budget = _as_budget(budget)
    t = G.degree
    base0 = G.base()
    rec0 = G.chain_orders(base0)
    state = {
        "best": len(base0),
        "witness": tuple(base0),
        "orders": tuple(rec0.orders),
        "from_search": False,
    }

    def rec(prefix, S, orders):
        budget.spend()
        if S.order == 1:
            n = len(prefix)
            if n < state["best"] or (n == state["best"] and not state["from_search"]):
                state["best"] = n
                state["witness"] = prefix
                state["orders"] = orders
                state["from_search"] = True
            return
        slack = 0 if state["from_search"] else 1
        if len(prefix) + _min_base_lower(S.order, t) >= state["best"] + slack:
            return
        for a in _seq_children(S):
            T = S.stabilizer(a)
            rec(prefix + (a,), T, orders + (T.order,))

    exhausted = True
    try:
        rec((), G, (G.order,))
    except BudgetExceeded:
        exhausted = False
    value = state["best"]
    lower = value if exhausted else _min_base_lower(G.order, t)
    return StatCertificate(
        kind="min_base",
        value=value,
        witness=state["witness"],
        orders=state["orders"],
        removal_orders=(),
        exhaustive=exhausted,
        lower=lower,
        upper=value,
        nodes=budget.used,
    )


def independent_core(G, points):
    """Shrink a point set to an independent subset with the same
    pointwise stabilizer.  Greedy: candidates are dropped largest index
    first, so the smallest indices survive whenever possible."""
    pts = sorted(set(points))
    target = G.pointwise_stabilizer(pts).order
    i = len(pts) - 1
    while i >= 0:
        rest = pts[:i] + pts[i + 1:]
        if G.pointwise_stabilizer(rest).order == target:
            pts = rest
        i -= 1
    return tuple(pts)


def verify_certificate(G, cert):
    """Recompute a certificate's evidence from scratch; True or raise.

    Rebuilds the group from its generators so no cached chain is
    trusted, then checks the witness, the stabilizer orders along it,
    and the kind's own invariant.
    """
    fresh = PermGroup(G.degree, G.gens)
    if not cert.exhaustive:
        if not (cert.lower <= cert.value <= cert.upper):
            raise CertificateError("bounds do not bracket value")
    orders, S = _chain_orders_along(fresh, cert.witness)
    if orders != tuple(cert.orders):
        raise CertificateError("stabilizer orders do not match: %r != %r"
                               % (orders, tuple(cert.orders)))
    kind = cert.kind
    if kind in ("min_base", "max_minimal_base", "max_irredundant"):
        if orders[-1] != 1:
            raise CertificateError("witness is not a base")
    if cert.exhaustive and cert.value != len(cert.witness):
        raise CertificateError("value does not match witness size")
    if kind == "max_irredundant":
        if any(orders[i + 1] >= orders[i] for i in range(len(orders) - 1)):
            raise CertificateError("orders not strictly decreasing")
    if kind in ("max_independent", "max_minimal_base"):
        rem = _removal_orders(fresh, cert.witness, S.order,
                              need_base=(kind == "max_minimal_base"))
        if rem is None:
            raise CertificateError("witness fails the %s invariant" % kind)
        if rem != tuple(cert.removal_orders):
            raise CertificateError("removal orders do not match")
    return True


def _sym_chain_length(n):
    # longest subgroup chain of Sym(n): ceil(3n/2) - ones(n) - 1
    return (3 * n + 1) // 2 - bin(n).count("1") - 1


def _omega(n):
    count = 0
    d = 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    if n > 1:
        count += 1
    return count


def _close_indices(seed, mult, total):
    """Subgroup generated by the seed indices, inside the mult table.
    A proper subgroup has at most half the elements, so growing past
    total//2 identifies the whole group without finishing the closure."""
    known = set(seed)
    work = list(known)
    i = 0
    while i < len(work):
        x = work[i]
        i += 1
        row = mult[x]
        for y in list(known):
            for z in (row[y], mult[y][x]):
                if z not in known:
                    if 2 * (len(known) + 1) > total:
                        return None  # whole group
                    known.add(z)
                    work.append(z)
    return frozenset(known)


def _lattice_length(G, cap):
    elems, index = G._elements_raw(cap)
    n = len(elems)
    mult = []
    for p in elems:
        mult.append([index[tuple(q[x] for x in p)] for q in elems])
    ident = index[tuple(range(G.degree))]

    # cyclic subgroups of prime-power order generate every subgroup by joins
    cyclics = set()
    for i in range(n):
        if i == ident:
            continue
        mem = [ident]
        cur = i
        while cur != ident:
            mem.append(cur)
            cur = mult[cur][i]
        if _is_prime_power(len(mem)):
            cyclics.add(frozenset(mem))
    cyclics = sorted(cyclics, key=lambda s: (len(s), sorted(s)))

    whole = frozenset(range(n))
    subs = {frozenset([ident]), whole}
    subs.update(cyclics)
    work = sorted(subs, key=lambda s: (len(s), sorted(s)))
    while work:
        A = work.pop()
        if A is whole or len(A) == n:
            continue
        for C in cyclics:
            if C <= A:
                continue
            J = _close_indices(A | C, mult, n)
            if J is None:
                J = whole
            if J not in subs:
                subs.add(J)
                work.append(J)

    by_size = sorted(subs, key=lambda s: (len(s), sorted(s)))
    steps = {}
    for S in by_size:
        m = 0
        for T in by_size:
            if len(T) >= len(S):
                break
            if steps[T] + 1 > m and T < S:
                m = steps[T] + 1
        steps[S] = m
    return steps[frozenset(range(n))]


def _is_prime_power(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            return n == 1
        d += 1
    return True


def stat_len(G, mode="auto", cap=DEFAULT_LATTICE_CAP):
    """Longest strict subgroup chain of G.

    auto picks, in order: the prime-factor count for cyclic groups, the
    closed form for full symmetric groups, the subgroup lattice when
    |G| <= cap, else the floor(log2 |G|) upper bound.  exact_lattice
    forces the lattice (error above the cap); bound forces the log2
    bound.
    """
    order = G.order
    if mode == "bound":
        return LenResult(value=_log2_floor(order), status="upper_bound", method="log2")
    if mode == "exact_lattice":
        if order > cap:
            raise StatsError("order %d exceeds lattice cap %d" % (order, cap))
        return LenResult(value=_lattice_length(G, cap), status="exact", method="lattice")
    if mode != "auto":
        raise ValueError("unknown mode %r" % mode)
    if len(G.gens) <= 1:
        return LenResult(value=_omega(order), status="exact", method="cyclic_formula")
    if order == factorial(G.degree):
        return LenResult(value=_sym_chain_length(G.degree), status="exact",
                         method="sym_formula")
    if order <= cap:
        return LenResult(value=_lattice_length(G, cap), status="exact", method="lattice")
    return LenResult(value=_log2_floor(order), status="upper_bound", method="log2")


def quotient_regular(G, N):
    """Regular action of G/N on the right cosets of a normal subgroup N.

    Both groups must share a degree; N is checked to be a normal
    subgroup.  Point i is the i-th coset in first-appearance order over
    the deterministic element listing of G.
    """
    if N.degree != G.degree:
        raise StatsError("degree mismatch")
    for g in G.gens:
        gi = g.inverse()
        for h in N.gens:
            if gi * h * g not in N:
                raise StatsError("subgroup is not normal")
    if G.order % N.order != 0:
        raise StatsError("not a subgroup")
    elems = G.elements()
    n_elems = [p for p in elems if p in N]
    if len(n_elems) != N.order:
        raise StatsError("not a subgroup")
    coset_of = {}
    cosets = 0
    reps = []
    for p in elems:
        if p.img in coset_of:
            continue
        for h in n_elems:
            coset_of[(h * p).img] = cosets
        reps.append(p)
        cosets += 1
    gens = []
    for g in G.gens:
        img = [0] * cosets
        for i, p in enumerate(reps):
            img[i] = coset_of[(p * g).img]
        gens.append(Perm(img))
    return PermGroup(cosets, gens)


def all_stats(G, budget=None):
    """b, B, H, I and chain length in one call (shared budget)."""
    budget = _as_budget(budget)
    return {
        "b": stat_b(G, budget),
        "B": stat_B(G, budget),
        "H": stat_H(G, budget),
        "I": stat_I(G, budget),
        "len": stat_len(G),
    }
