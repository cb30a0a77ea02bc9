"""Constructors for concrete permutation actions.

Every constructor enumerates an explicit, deterministically ordered point
set, induces the generator permutations on it, and returns an
ActionInstance carrying point labels and verifiable metadata.  Claimed
metadata (order, transitivity, primitivity) is never decorative: validate()
recomputes each claim from the generators alone.

Enumerating constructors refuse to build more than `cap` points (default
DEGREE_CAP); exceeding the cap raises instead of truncating.
"""

import os
from dataclasses import dataclass, field
from itertools import combinations, product
from math import factorial, gcd, prod

from .algebra import (
    Field,
    MatrixGF,
    gaussian_binomial,
    rref,
    subspace_canonical,
    vec_add,
    vec_mat,
    vec_scale,
)
from .group import PermGroup
from .perm import Perm, parse_group_text


class ActionsError(ValueError):
    pass


DEGREE_CAP = 20000


def _check_cap(t, cap):
    if t > cap:
        raise ActionsError("degree %d exceeds the cap of %d points" % (t, cap))


@dataclass(frozen=True)
class ActionInstance:
    """A group action made concrete: generators as permutations of an
    indexed point set.

    meta may claim "order", "transitive", "primitive"; claims are checked
    by validate().  Other keys are informative only.
    """

    name: str
    degree: int
    generators: tuple
    labels: tuple
    meta: dict = field(default_factory=dict)

    def group(self):
        return PermGroup(self.degree, self.generators)

    def validate(self):
        """Recompute every meta claim from the generators; True or raise."""
        for g in self.generators:
            if g.degree != self.degree:
                raise ActionsError(
                    "%s: generator degree %d != %d" % (self.name, g.degree, self.degree)
                )
        if len(self.labels) != self.degree:
            raise ActionsError("%s: %d labels for %d points" % (self.name, len(self.labels), self.degree))
        G = self.group()
        claimed = self.meta.get("order")
        if claimed is not None and G.order != claimed:
            raise ActionsError(
                "%s: claimed order %d, computed %d" % (self.name, claimed, G.order)
            )
        claimed = self.meta.get("transitive")
        if claimed is not None and G.is_transitive() != claimed:
            raise ActionsError("%s: transitivity claim %r is wrong" % (self.name, claimed))
        claimed = self.meta.get("primitive")
        if claimed is not None and G.is_primitive() != claimed:
            raise ActionsError("%s: primitivity claim %r is wrong" % (self.name, claimed))
        return True


def _perm_from_map(points, index, image_fn):
    return Perm(tuple(index[image_fn(pt)] for pt in points))


# ---------------------------------------------------------------------------
# symmetric and alternating families


def _natural_gens(n, variant):
    if variant not in ("sym", "alt"):
        raise ActionsError("variant must be 'sym' or 'alt', got %r" % (variant,))
    if n < 1:
        raise ActionsError("n must be >= 1")
    if variant == "sym":
        if n == 1:
            return []
        gens = [Perm.from_cycles(n, [(0, 1)]), Perm.from_cycles(n, [tuple(range(n))])]
    else:
        if n < 3:
            raise ActionsError("alternating groups need n >= 3")
        cyc = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
        gens = [Perm.from_cycles(n, [(0, 1, 2)]), Perm.from_cycles(n, [cyc])]
    out = []
    for g in gens:
        if g not in out:
            out.append(g)
    return out


def act_natural(n, variant="sym"):
    """Sym(n) or Alt(n) on n points."""
    gens = _natural_gens(n, variant)
    order = factorial(n) if variant == "sym" else factorial(n) // 2
    meta = {"order": order, "transitive": True, "primitive": True}
    return ActionInstance(
        name="natural(%d,%s)" % (n, variant),
        degree=n,
        generators=tuple(gens),
        labels=tuple(str(i) for i in range(n)),
        meta=meta,
    )


def act_k_subsets(n, k, variant="sym"):
    """Sym(n) or Alt(n) on the k-element subsets of {0..n-1}."""
    if not 1 <= k < n:
        raise ActionsError("need 1 <= k < n")
    base = _natural_gens(n, variant)
    points = list(combinations(range(n), k))
    index = {pt: i for i, pt in enumerate(points)}
    gens = [
        _perm_from_map(points, index, lambda s, g=g: tuple(sorted(g(x) for x in s)))
        for g in base
    ]
    order = factorial(n) if variant == "sym" else factorial(n) // 2
    meta = {
        "order": order,
        "transitive": True,
        # complementary pairs form blocks when n = 2k
        "primitive": k == 1 or n != 2 * k,
    }
    return ActionInstance(
        name="subsets(%d,%d,%s)" % (n, k, variant),
        degree=len(points),
        generators=tuple(gens),
        labels=tuple("{%s}" % ",".join(map(str, pt)) for pt in points),
        meta=meta,
    )


def _partitions_into_blocks(points, a, b):
    if not points:
        yield ()
        return
    head = points[0]
    rest = points[1:]
    for others in combinations(rest, b - 1):
        block = (head,) + others
        left = tuple(x for x in rest if x not in others)
        for tail in _partitions_into_blocks(left, a - 1, b):
            yield (block,) + tail


def act_partitions(a, b, variant="sym", cap=DEGREE_CAP):
    """Sym(ab) or Alt(ab) on partitions of {0..ab-1} into a blocks of size b.

    Partitions are stored with sorted blocks listed by smallest element.
    The (2,2) action has kernel V4, so the claimed order drops there.
    """
    if a < 2 or b < 2:
        raise ActionsError("need a >= 2 and b >= 2")
    n = a * b
    t = factorial(n) // (factorial(a) * factorial(b) ** a)
    _check_cap(t, cap)
    base = _natural_gens(n, variant)
    points = sorted(_partitions_into_blocks(tuple(range(n)), a, b))
    if len(points) != t:
        raise ActionsError("partition enumeration produced %d of %d" % (len(points), t))
    index = {pt: i for i, pt in enumerate(points)}

    def image(part, g):
        return tuple(sorted(tuple(sorted(g(x) for x in blk)) for blk in part))

    gens = [_perm_from_map(points, index, lambda pt, g=g: image(pt, g)) for g in base]
    if (a, b) == (2, 2):
        order = 6 if variant == "sym" else 3
    else:
        order = factorial(n) if variant == "sym" else factorial(n) // 2
    meta = {"order": order, "transitive": True}
    return ActionInstance(
        name="partitions(%d,%d,%s)" % (a, b, variant),
        degree=t,
        generators=tuple(gens),
        labels=tuple("|".join(",".join(map(str, blk)) for blk in pt) for pt in points),
        meta=meta,
    )


# ---------------------------------------------------------------------------
# product action


def act_product(inner, r, top="sym", cap=DEGREE_CAP):
    """Product action on r-tuples of inner points, coordinates permuted by
    the top group (full Sym(r), or a supplied PermGroup of degree r)."""
    if r < 2:
        raise ActionsError("need r >= 2")
    if inner.degree < 2:
        raise ActionsError("inner degree must be >= 2")
    d = inner.degree
    t = d**r
    _check_cap(t, cap)
    if top == "sym":
        top_group = PermGroup(r, _natural_gens(r, "sym"))
        top_tag = "sym"
    elif isinstance(top, PermGroup):
        if top.degree != r:
            raise ActionsError("top group degree %d != r = %d" % (top.degree, r))
        top_group = top
        top_tag = "given"
    else:
        raise ActionsError("top must be 'sym' or a PermGroup")

    weights = [d ** (r - 1 - i) for i in range(r)]

    def decode(idx):
        out = []
        for w in weights:
            out.append(idx // w)
            idx %= w
        return out

    gens = []
    for i in range(r):
        for g in inner.generators:
            img = []
            for idx in range(t):
                c = decode(idx)
                c[i] = g(c[i])
                img.append(sum(x * w for x, w in zip(c, weights)))
            gens.append(Perm(tuple(img)))
    for tau in top_group.gens:
        img = []
        for idx in range(t):
            c = decode(idx)
            moved = [0] * r
            for j in range(r):
                moved[tau(j)] = c[j]
            img.append(sum(x * w for x, w in zip(moved, weights)))
        gens.append(Perm(tuple(img)))

    inner_group = PermGroup(d, inner.generators)
    meta = {
        "order": inner_group.order**r * top_group.order,
        "transitive": inner_group.is_transitive(),
    }
    labels = tuple(
        "(%s)" % ",".join(inner.labels[x] for x in decode(idx)) for idx in range(t)
    )
    return ActionInstance(
        name="product(%s,r=%d,%s)" % (inner.name, r, top_tag),
        degree=t,
        generators=tuple(gens),
        labels=labels,
        meta=meta,
    )


# ---------------------------------------------------------------------------
# linear families


def _gl_generators(F, n):
    """Standard GL_n(q) generators: primitive scalar in one slot (q > 2),
    the coordinate cycle, and one elementary transvection (n >= 2)."""
    mats = []
    ident = [[0] * n for _ in range(n)]
    for i in range(n):
        ident[i][i] = 1
    if F.q > 2:
        rows = [list(r) for r in ident]
        rows[0][0] = F.generator
        mats.append(MatrixGF.from_rows(F, rows))
    if n >= 2:
        cyc = [[0] * n for _ in range(n)]
        for i in range(n):
            cyc[i][(i + 1) % n] = 1
        mats.append(MatrixGF.from_rows(F, cyc))
        trans = [list(r) for r in ident]
        trans[0][1] = 1
        mats.append(MatrixGF.from_rows(F, trans))
    return mats


def _sl_generators(F, n):
    """SL_n(q): determinant-one cycle plus transvections with coefficients
    spanning the field over its prime subfield."""
    if n < 2:
        return []
    cyc = [[0] * n for _ in range(n)]
    for i in range(n):
        cyc[i][(i + 1) % n] = 1
    if n % 2 == 0:
        cyc[n - 1][0] = F.neg(1)
    mats = [MatrixGF.from_rows(F, cyc)]
    coef = 1
    for _ in range(F.f):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        rows[0][1] = coef
        mats.append(MatrixGF.from_rows(F, rows))
        coef = F.mul(coef, F.generator)
    return mats


def _gl_order(n, q):
    return prod(q**n - q**i for i in range(n))


def _field_for_order(q):
    p = 2
    while q % p:
        p += 1
    f = 0
    qq = q
    while qq % p == 0:
        qq //= p
        f += 1
    if qq != 1:
        raise ActionsError("%d is not a prime power" % q)
    return Field.get(p, f)


def act_affine(d, p, cap=DEGREE_CAP):
    """AGL_d(p) on the p^d vectors: translations by basis vectors plus
    standard GL_d(p) generators acting linearly on the labels."""
    if d < 1:
        raise ActionsError("need d >= 1")
    F = Field.get(p, 1)  # validates primality
    t = p**d
    _check_cap(t, cap)
    points = list(product(range(p), repeat=d))
    index = {v: i for i, v in enumerate(points)}
    gens = []
    for i in range(d):
        e = tuple(1 if j == i else 0 for j in range(d))
        gens.append(_perm_from_map(points, index, lambda v, e=e: vec_add(F, v, e)))
    for M in _gl_generators(F, d):
        gens.append(_perm_from_map(points, index, lambda v, M=M: vec_mat(F, v, M)))
    meta = {
        "order": t * _gl_order(d, p),
        "transitive": True,
        "primitive": True,
    }
    return ActionInstance(
        name="affine(%d,%d)" % (d, p),
        degree=t,
        generators=tuple(gens),
        labels=tuple("(%s)" % ",".join(map(str, v)) for v in points),
        meta=meta,
    )


def _subspace_points(n, q, m):
    from .algebra import enumerate_subspaces

    return sorted(enumerate_subspaces(n, q, m), key=lambda S: S.rows)


def _subspace_image(F, S, M):
    return subspace_canonical(F, [vec_mat(F, row, M) for row in S.rows])


def _frobenius_subspace(F, S):
    return subspace_canonical(F, [tuple(F.frobenius(x) for x in row) for row in S.rows])


def _subspace_label(S):
    return "[%s]" % ";".join(",".join(map(str, row)) for row in S.rows)


def act_subspaces(n, q, m, grp="gl", cap=DEGREE_CAP):
    """Projective action on the m-dimensional subspaces of GF(q)^n.

    grp selects the generators: 'gl' and 'sl' give the projective images
    PGL_n(q) and PSL_n(q); 'gammal' extends 'gl' by the Frobenius map.
    """
    if not 1 <= m < n:
        raise ActionsError("need 1 <= m < n")
    if grp not in ("gl", "sl", "gammal"):
        raise ActionsError("grp must be 'gl', 'sl' or 'gammal'")
    F = _field_for_order(q)
    t = gaussian_binomial(n, m, q)
    _check_cap(t, cap)
    points = _subspace_points(n, q, m)
    index = {S: i for i, S in enumerate(points)}
    mats = _sl_generators(F, n) if grp == "sl" else _gl_generators(F, n)
    gens = [
        _perm_from_map(points, index, lambda S, M=M: _subspace_image(F, S, M))
        for M in mats
    ]
    if grp == "gammal":
        gens.append(_perm_from_map(points, index, lambda S: _frobenius_subspace(F, S)))
    pgl = _gl_order(n, q) // (q - 1)
    if grp == "sl":
        order = pgl // gcd(n, q - 1)
    elif grp == "gammal":
        order = pgl * F.f
    else:
        order = pgl
    meta = {"order": order, "transitive": True, "primitive": True}
    return ActionInstance(
        name="subspaces(n=%d,q=%d,m=%d,%s)" % (n, q, m, grp),
        degree=t,
        generators=tuple(gens),
        labels=tuple(_subspace_label(S) for S in points),
        meta=meta,
    )


def _perp(F, S):
    """Orthogonal complement of a row space under the standard dot form."""
    n = S.n
    rows = S.rows
    pivots = [next(j for j in range(n) if row[j] != 0) for row in rows]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * n
        v[j] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(rows[i][j])
        basis.append(tuple(v))
    if not basis:
        raise ActionsError("perp of the full space is empty here")
    return subspace_canonical(F, basis)


def act_subspace_pairs(n, q, m, variant="complement", graph_aut=False, cap=DEGREE_CAP):
    """PGL_n(q) on pairs (U, W) with dim U = m, dim W = n-m, where either
    U + W = V (complement) or U < W (flag); optionally extended by the
    inverse-transpose graph automorphism (U, W) -> (perp W, perp U)."""
    if variant not in ("complement", "flag"):
        raise ActionsError("variant must be 'complement' or 'flag'")
    if not (1 <= m and 2 * m < n):
        raise ActionsError("need 1 <= m < n/2")
    F = _field_for_order(q)
    if variant == "complement":
        t = gaussian_binomial(n, m, q) * q ** (m * (n - m))
    else:
        t = gaussian_binomial(n, n - m, q) * gaussian_binomial(n - m, m, q)
    _check_cap(t, cap)
    small = _subspace_points(n, q, m)
    big = _subspace_points(n, q, n - m)
    points = []
    for U in small:
        for W in big:
            joined, _ = rref(F, list(U.rows) + list(W.rows))
            if variant == "complement":
                if len(joined) == n:
                    points.append((U, W))
            else:
                if len(joined) == n - m:
                    points.append((U, W))
    points.sort(key=lambda uw: (uw[0].rows, uw[1].rows))
    if len(points) != t:
        raise ActionsError("pair enumeration produced %d of %d" % (len(points), t))
    index = {pt: i for i, pt in enumerate(points)}
    gens = [
        _perm_from_map(
            points,
            index,
            lambda uw, M=M: (_subspace_image(F, uw[0], M), _subspace_image(F, uw[1], M)),
        )
        for M in _gl_generators(F, n)
    ]
    if graph_aut:
        gens.append(
            _perm_from_map(points, index, lambda uw: (_perp(F, uw[1]), _perp(F, uw[0])))
        )
    order = _gl_order(n, q) // (q - 1)
    if graph_aut:
        order *= 2
    meta = {"order": order, "transitive": True}
    return ActionInstance(
        name="pairs(n=%d,q=%d,m=%d,%s%s)"
        % (n, q, m, variant, ",graph" if graph_aut else ""),
        degree=t,
        generators=tuple(gens),
        labels=tuple(
            "{%s,%s}" % (_subspace_label(U), _subspace_label(W)) for U, W in points
        ),
        meta=meta,
    )


# ---------------------------------------------------------------------------
# quadratic forms in characteristic 2


@dataclass(frozen=True)
class QuadFormPoint:
    """The quadratic form theta_a indexed by the vector a; distinct vectors
    give distinct forms."""

    a: tuple

    def sign_bit(self, F, m):
        return F.trace2(theta0(F, m, self.a))

    def evaluate(self, F, m, v):
        return theta_eval(F, m, self.a, v)


def theta0(F, m, v):
    """Split reference form: sum of v_i * v_{m+i}."""
    s = 0
    for i in range(m):
        s = F.add(s, F.mul(v[i], v[m + i]))
    return s


def symplectic_phi(F, m, u, v):
    s = 0
    for i in range(m):
        s = F.add(s, F.add(F.mul(u[i], v[m + i]), F.mul(u[m + i], v[i])))
    return s


def theta_eval(F, m, a, v):
    w = symplectic_phi(F, m, a, v)
    return F.add(theta0(F, m, v), F.mul(w, w))


def symplectic_form_matrix(F, m):
    rows = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        rows[i][m + i] = 1
        rows[m + i][i] = 1
    return MatrixGF.from_rows(F, rows)


def transvection_matrix(F, m, c):
    """v -> v + phi(v, c) c as a matrix; symplectic for every c."""
    n = 2 * m
    rows = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        rows.append(vec_add(F, e, vec_scale(F, symplectic_phi(F, m, e, c), c)))
    return MatrixGF.from_rows(F, rows)


def form_image(F, m, x, a):
    """Index vector of theta_a composed with x^-1.

    x is a symplectic MatrixGF, a transvection vector c (tuple/list), or
    the tag "frobenius".
    """
    a = tuple(a)
    if len(a) != 2 * m:
        raise ActionsError("vector has length %d, need %d" % (len(a), 2 * m))
    if x == "frobenius":
        return tuple(F.frobenius(ai) for ai in a)
    if isinstance(x, (tuple, list)):
        # theta_a(c) = theta_0(c) + phi(a,c)^2
        c = tuple(x)
        w = symplectic_phi(F, m, a, c)
        val = F.add(theta0(F, m, c), F.mul(w, w))
        coef = F.add(F.sqrt2(val), 1)
        return vec_add(F, a, vec_scale(F, coef, c))
    if isinstance(x, MatrixGF):
        n = 2 * m
        if x.rows != n or x.cols != n:
            raise ActionsError("matrix is %dx%d, need %dx%d" % (x.rows, x.cols, n, n))
        fmat = symplectic_form_matrix(F, m)
        if x * fmat * x.transpose() != fmat:
            raise ActionsError("matrix does not preserve the symplectic form")
        xinv = x.inverse()
        b = []
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            lam = F.add(theta_eval(F, m, a, vec_mat(F, e, xinv)), theta0(F, m, e))
            b.append(F.sqrt2(lam))
        # f is an involution, so solving f a'^T = b^T swaps the halves of b
        return tuple(b[m:]) + tuple(b[:m])
    raise ActionsError("unsupported form operator %r" % (x,))


def act_quadratic_forms(m, e, sign="plus", group="transvections", cap=DEGREE_CAP):
    """Transvection group Sp_2m(2^e) on quadratic forms refining the split
    symplectic form, restricted by the trace sign of the index vector.

    sign: "plus" (trace 0), "minus" (trace 1), or "all";
    group: "transvections" or "gammasp" (adds the Frobenius point map).
    """
    if m < 1 or e < 1:
        raise ActionsError("need m >= 1 and e >= 1")
    if sign not in ("plus", "minus", "all"):
        raise ActionsError("sign must be 'plus', 'minus' or 'all'")
    if group not in ("transvections", "gammasp"):
        raise ActionsError("group must be 'transvections' or 'gammasp'")
    F = Field.get(2, e)
    q = F.q
    n = 2 * m
    _check_cap(q**n, cap)
    vectors = list(product(range(q), repeat=n))
    if sign == "plus":
        points = [a for a in vectors if F.trace2(theta0(F, m, a)) == 0]
    elif sign == "minus":
        points = [a for a in vectors if F.trace2(theta0(F, m, a)) == 1]
    else:
        points = vectors
    index = {a: i for i, a in enumerate(points)}
    gens = []
    for c in vectors:
        if any(c):
            gens.append(
                _perm_from_map(points, index, lambda a, c=c: form_image(F, m, c, a))
            )
    if group == "gammasp":
        gens.append(
            _perm_from_map(points, index, lambda a: form_image(F, m, "frobenius", a))
        )
    sp = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    if (m, e, sign) == (1, 1, "minus"):
        order = 1  # a single point: the action forgets the whole group
    elif group == "gammasp" and e > 1:
        order = sp * e
    else:
        order = sp
    meta = {"order": order, "transitive": sign != "all"}
    return ActionInstance(
        name="quadforms(m=%d,q=%d,%s,%s)" % (m, q, sign, group),
        degree=len(points),
        generators=tuple(gens),
        labels=tuple("(%s)" % ",".join(map(str, a)) for a in points),
        meta=meta,
    )


# ---------------------------------------------------------------------------
# diagonal actions


class DiagonalSpec:
    """Simple group T (as a PermGroup), factor count m, and outer
    automorphisms given as permutations of T's element list.

    Construction checks that T has trivial centre and is perfect, and that
    each supplied automorphism fixes the identity and respects all products
    (checked on generator rows, which generate the full multiplication).
    """

    def __init__(self, T, m, outer_autos=()):
        if m < 2:
            raise ActionsError("need m >= 2")
        if T.order <= 1:
            raise ActionsError("T must be nontrivial")
        self.T = T
        self.m = m
        elements = T.elements()
        self.elements = elements
        self.order = T.order
        self.index = {g.img: i for i, g in enumerate(elements)}
        self.ident = self.index[tuple(range(T.degree))]
        self.inv = tuple(self.index[g.inverse().img] for g in elements)
        self._lrows = {}
        self._rrows = {}
        for z in elements:
            if not z.is_identity() and all(z * g == g * z for g in T.gens):
                raise ActionsError("T has a nontrivial centre")
        if T.derived_subgroup().order != T.order:
            raise ActionsError("T is not perfect")
        autos = []
        for aut in outer_autos:
            aut = aut if isinstance(aut, Perm) else Perm(tuple(aut))
            if aut.degree != self.order:
                raise ActionsError("automorphism degree %d != |T| = %d" % (aut.degree, self.order))
            if aut(self.ident) != self.ident:
                raise ActionsError("automorphism moves the identity")
            for g in T.gens:
                gi = self.index[g.img]
                row = self.lrow(gi)
                arow = self.lrow(aut(gi))
                for t in range(self.order):
                    if aut(row[t]) != arow[aut(t)]:
                        raise ActionsError("automorphism breaks a product")
            autos.append(aut)
        self.outer_autos = tuple(autos)

    def lrow(self, i):
        """Products i*t for all t, as element indices."""
        if i not in self._lrows:
            gi = self.elements[i]
            self._lrows[i] = tuple(self.index[(gi * t).img] for t in self.elements)
        return self._lrows[i]

    def rrow(self, i):
        """Products t*i for all t."""
        if i not in self._rrows:
            gi = self.elements[i]
            self._rrows[i] = tuple(self.index[(t * gi).img] for t in self.elements)
        return self._rrows[i]

    def inner_auto(self, i):
        """Conjugation by element i as a permutation of the element list."""
        j = self.inv[i]
        left = self.lrow(j)
        row = self.rrow(i)
        return Perm(tuple(row[left[t]] for t in range(self.order)))


def _diag_encode(tup, order, m):
    idx = 0
    for x in tup:
        idx = idx * order + x
    return idx


def _diag_decode(idx, order, m):
    out = [0] * (m - 1)
    for pos in range(m - 2, -1, -1):
        idx, out[pos] = divmod(idx, order)
    return out


def diagonal_translation(spec, s_indices):
    """Right multiplication by (s_1,...,s_m) on distinguished coset
    representatives (1, t_2, ..., t_m), as a point permutation."""
    if len(s_indices) != spec.m:
        raise ActionsError("need one factor entry per coordinate")
    N = spec.order
    m = spec.m
    lead = spec.lrow(spec.inv[s_indices[0]])
    rights = [spec.rrow(s) for s in s_indices[1:]]
    img = []
    for idx in range(N ** (m - 1)):
        tup = _diag_decode(idx, N, m)
        moved = [lead[r[t]] for t, r in zip(tup, rights)]
        img.append(_diag_encode(moved, N, m))
    return Perm(tuple(img))


def diagonal_automorphism(spec, aut):
    """A Cayley automorphism applied in every coordinate."""
    N = spec.order
    m = spec.m
    img = []
    for idx in range(N ** (m - 1)):
        tup = _diag_decode(idx, N, m)
        img.append(_diag_encode([aut(t) for t in tup], N, m))
    return Perm(tuple(img))


def diagonal_coordinate_perm(spec, pi):
    """Coordinate shuffle by pi in Sym(m), renormalized so the first entry
    of the shuffled tuple returns to the identity."""
    N = spec.order
    m = spec.m
    img = []
    for idx in range(N ** (m - 1)):
        tup = [spec.ident] + _diag_decode(idx, N, m)
        moved = [0] * m
        for j in range(m):
            moved[pi(j)] = tup[j]
        lead = spec.lrow(spec.inv[moved[0]])
        img.append(_diag_encode([lead[x] for x in moved[1:]], N, m))
    return Perm(tuple(img))


def act_diagonal(spec, cap=DEGREE_CAP):
    """Diagonal action of T^m extended by supplied automorphisms and the
    full coordinate symmetric group, on |T|^(m-1) coset representatives."""
    N = spec.order
    m = spec.m
    t = N ** (m - 1)
    _check_cap(t, cap)
    gens = []
    for g in spec.T.gens:
        gi = spec.index[g.img]
        s = (gi,) + (spec.ident,) * (m - 1)
        gens.append(diagonal_translation(spec, s))
    for aut in spec.outer_autos:
        gens.append(diagonal_automorphism(spec, aut))
    for pi in _natural_gens(m, "sym"):
        gens.append(diagonal_coordinate_perm(spec, pi))
    aut_group = PermGroup(
        N,
        [spec.inner_auto(spec.index[g.img]) for g in spec.T.gens]
        + list(spec.outer_autos),
    )
    outer_order = aut_group.order // N
    omega = _diag_encode([spec.ident] * (m - 1), N, m)
    meta = {
        "order": N**m * outer_order * factorial(m),
        "transitive": True,
        "omega": omega,
    }
    labels = tuple(
        "(%s)" % ",".join(map(str, _diag_decode(idx, N, m))) for idx in range(t)
    )
    return ActionInstance(
        name="diagonal(|T|=%d,m=%d,autos=%d)" % (N, m, len(spec.outer_autos)),
        degree=t,
        generators=tuple(gens),
        labels=labels,
        meta=meta,
    )


def alt_transposition_auto(T):
    """Conjugation by the transposition (0 1) as a permutation of T's
    element list; T must be normalized by it (Alt(n) is)."""
    tau = Perm.from_cycles(T.degree, [(0, 1)])
    elements = T.elements()
    index = {g.img: i for i, g in enumerate(elements)}
    img = []
    for g in elements:
        c = (tau * g * tau).img
        if c not in index:
            raise ActionsError("the transposition does not normalize T")
        img.append(index[c])
    return Perm(tuple(img))


def psl32_graph_auto():
    """PSL_3(2) on the seven points, together with its inverse-transpose
    automorphism as a permutation of the element list."""
    F = Field.get(2, 1)
    points = _subspace_points(3, 2, 1)
    index = {S: i for i, S in enumerate(points)}

    def point_perm(M):
        return Perm(tuple(index[_subspace_image(F, S, M)] for S in points))

    mats = []
    for entries in product(range(2), repeat=9):
        rows = [entries[0:3], entries[3:6], entries[6:9]]
        reduced, _ = rref(F, rows)
        if len(reduced) == 3:
            mats.append(MatrixGF.from_rows(F, rows))
    by_perm = {point_perm(M).img: M for M in mats}
    T = PermGroup(7, [point_perm(M) for M in _gl_generators(F, 3)])
    elements = T.elements()
    eindex = {g.img: i for i, g in enumerate(elements)}
    img = []
    for g in elements:
        M = by_perm[g.img]
        img.append(eindex[point_perm(M.inverse().transpose()).img])
    return T, Perm(tuple(img))


# ---------------------------------------------------------------------------
# the degree-24 quintuply transitive group


def act_m24():
    """The degree-24 group with order 244823040, from embedded generators."""
    path = os.path.join(os.path.dirname(__file__), "data", "m24.grp")
    with open(path, "r", encoding="utf-8") as fh:
        degree, gens = parse_group_text(fh.read())
    if degree != 24:
        raise ActionsError("embedded data has degree %d" % degree)
    meta = {"order": 244823040, "transitive": True, "primitive": True}
    return ActionInstance(
        name="m24",
        degree=24,
        generators=tuple(gens),
        labels=tuple(str(i) for i in range(24)),
        meta=meta,
    )
