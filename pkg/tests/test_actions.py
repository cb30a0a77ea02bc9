from itertools import product
from math import comb, factorial

import pytest

from grpstat.actions import (
    ActionsError,
    DiagonalSpec,
    act_affine,
    act_diagonal,
    act_k_subsets,
    act_m24,
    act_natural,
    act_partitions,
    act_product,
    act_quadratic_forms,
    act_subspace_pairs,
    act_subspaces,
    alt_transposition_auto,
    diagonal_automorphism,
    diagonal_translation,
    form_image,
    psl32_graph_auto,
    symplectic_phi,
    theta_eval,
    transvection_matrix,
)
from grpstat.algebra import Field, gaussian_binomial
from grpstat.catalog import entry_ids, get
from grpstat.perm import Perm
from grpstat.group import PermGroup


def test_every_catalog_entry_validates():
    for eid in entry_ids():
        inst = get(eid).build()
        assert inst.validate(), eid
        assert len(inst.labels) == inst.degree


def test_natural_actions():
    s6 = act_natural(6)
    assert s6.degree == 6 and s6.meta["order"] == 720
    a6 = act_natural(6, "alt")
    assert a6.meta["order"] == 360
    assert a6.group().is_primitive()
    with pytest.raises(ActionsError):
        act_natural(4, "cyclic")
    with pytest.raises(ActionsError):
        act_natural(2, "alt")


def test_k_subsets():
    inst = act_k_subsets(5, 2)
    assert inst.degree == comb(5, 2)
    assert inst.labels[0] == "{0,1}"
    assert inst.group().order == 120
    # n = 2k pairs up complementary subsets into blocks
    assert act_k_subsets(6, 3).meta["primitive"] is False
    assert not act_k_subsets(6, 3).group().is_primitive()
    with pytest.raises(ActionsError):
        act_k_subsets(4, 4)


def test_partitions_degrees_and_kernel():
    assert act_partitions(2, 3).degree == 10
    assert act_partitions(3, 2).degree == 15
    assert act_partitions(4, 2).degree == 105
    small = act_partitions(2, 2)
    assert small.degree == 3
    # the Klein four-group acts trivially here, so only Sym(3) is left
    assert small.group().order == 6
    assert small.labels[0] == "0,1|2,3"
    with pytest.raises(ActionsError):
        act_partitions(1, 3)
    with pytest.raises(ActionsError):
        act_partitions(4, 3, cap=100)


def test_partition_degree_formula():
    for a, b in ((2, 3), (3, 2), (4, 2)):
        t = factorial(a * b) // (factorial(a) * factorial(b) ** a)
        assert act_partitions(a, b).degree == t


def test_product_action():
    inner = act_natural(3)
    inst = act_product(inner, 2)
    assert inst.degree == 9
    assert inst.meta["order"] == 6 * 6 * 2
    G = inst.group()
    assert G.order == 72
    assert G.is_primitive()
    assert inst.labels[1] == "(0,1)"
    with pytest.raises(ActionsError):
        act_product(inner, 1)
    top = PermGroup(3, [Perm.from_cycles(3, [(0, 1, 2)])])
    cyc_top = act_product(inner, 3, top=top)
    assert cyc_top.meta["order"] == 6**3 * 3
    with pytest.raises(ActionsError):
        act_product(inner, 2, top=top)


def test_affine_actions():
    inst = act_affine(2, 3)
    assert inst.degree == 9
    assert inst.meta["order"] == 9 * 48
    assert inst.group().is_primitive()
    assert act_affine(3, 2).meta["order"] == 8 * 168
    from grpstat.algebra import AlgebraError
    with pytest.raises(AlgebraError):
        act_affine(1, 6)


def test_subspace_actions():
    for n, q, expect in ((3, 2, 7), (4, 2, 15), (3, 3, 13), (3, 4, 21)):
        inst = act_subspaces(n, q, 1)
        assert inst.degree == gaussian_binomial(n, 1, q) == expect
    psl = act_subspaces(2, 4, 1, "sl")
    assert psl.degree == 5 and psl.group().order == 60
    gam = act_subspaces(2, 4, 1, "gammal")
    assert gam.group().order == 120
    planes = act_subspaces(3, 2, 2)
    assert planes.degree == 7
    with pytest.raises(ActionsError):
        act_subspaces(3, 2, 3)
    with pytest.raises(ActionsError):
        act_subspaces(3, 2, 1, "psl")


def test_subspace_pair_actions():
    comp = act_subspace_pairs(3, 2, 1, "complement")
    assert comp.degree == 28
    flag = act_subspace_pairs(3, 2, 1, "flag")
    assert flag.degree == 21
    graph = act_subspace_pairs(3, 2, 1, "flag", graph_aut=True)
    assert graph.degree == 21
    assert graph.group().order == 2 * flag.group().order
    # complements and flags both carry proper block systems here
    assert not comp.group().is_primitive()
    assert not flag.group().is_primitive()
    with pytest.raises(ActionsError):
        act_subspace_pairs(4, 2, 2)
    with pytest.raises(ActionsError):
        act_subspace_pairs(3, 2, 1, "chain")


def _sp_order(m, q):
    out = q ** (m * m)
    for i in range(1, m + 1):
        out *= q ** (2 * i) - 1
    return out


def test_quadratic_form_degrees_and_orders():
    for m, e in ((1, 1), (2, 1), (1, 2)):
        q = 2**e
        plus = act_quadratic_forms(m, e, "plus")
        minus = act_quadratic_forms(m, e, "minus")
        assert plus.degree == q**m * (q**m + 1) // 2
        assert minus.degree == q**m * (q**m - 1) // 2
        if minus.degree > 1:
            assert minus.group().order == _sp_order(m, q)
        assert plus.group().order == _sp_order(m, q) if plus.degree > 1 else True
    lone = act_quadratic_forms(1, 1, "minus")
    assert lone.degree == 1 and lone.meta["order"] == 1
    gam = act_quadratic_forms(1, 2, "plus", group="gammasp")
    assert gam.group().order == 2 * _sp_order(1, 4)
    with pytest.raises(ActionsError):
        act_quadratic_forms(1, 1, sign="zero")
    with pytest.raises(ActionsError):
        act_quadratic_forms(0, 1)


def _transvection_map(F, m, c):
    def tc(v):
        coef = symplectic_phi(F, m, v, c)
        return tuple(F.add(a, F.mul(coef, ci)) for a, ci in zip(v, c))
    return tc


@pytest.mark.parametrize("m,e", [(1, 1), (2, 1), (1, 2)])
def test_form_image_matches_brute_evaluation(m, e):
    F = Field.get(2, e)
    n = 2 * m
    vectors = list(product(range(F.q), repeat=n))
    for c in vectors:
        if not any(c):
            continue
        tc = _transvection_map(F, m, c)
        for a in vectors:
            a2 = form_image(F, m, c, a)
            assert all(
                theta_eval(F, m, a2, v) == theta_eval(F, m, a, tc(v))
                for v in vectors
            )


@pytest.mark.parametrize("m,e", [(1, 1), (2, 1), (1, 2)])
def test_form_image_matrix_path_agrees(m, e):
    F = Field.get(2, e)
    n = 2 * m
    vectors = [v for v in product(range(F.q), repeat=n) if any(v)]
    for c in vectors[:6]:
        M = transvection_matrix(F, m, c)
        for a in product(range(F.q), repeat=n):
            assert form_image(F, m, M, a) == form_image(F, m, c, a)


def test_form_image_frobenius_path():
    F = Field.get(2, 2)
    m = 1
    vectors = list(product(range(4), repeat=2))
    for a in vectors:
        a2 = form_image(F, m, "frobenius", a)
        for v in vectors:
            fv = tuple(F.frobenius(x) for x in v)
            assert theta_eval(F, m, a2, fv) == F.frobenius(theta_eval(F, m, a, v))


def test_form_image_rejects_bad_operators():
    F = Field.get(2, 1)
    with pytest.raises(ActionsError):
        form_image(F, 1, (1, 0), (1, 0, 0))  # form vector has the wrong length
    with pytest.raises(ActionsError):
        form_image(F, 1, "twist", (1, 0))
    from grpstat.algebra import MatrixGF
    with pytest.raises(ActionsError):
        form_image(F, 1, MatrixGF.identity(F, 3), (1, 0))
    # a singular matrix cannot preserve the (nondegenerate) form
    bad = MatrixGF.from_rows(F, [(1, 1), (1, 1)])
    with pytest.raises(ActionsError):
        form_image(F, 1, bad, (1, 0))


def test_diagonal_action_shape():
    T = act_natural(5, "alt").group()
    spec = DiagonalSpec(T, 2, (alt_transposition_auto(T),))
    inst = act_diagonal(spec)
    assert inst.degree == 60
    assert inst.meta["order"] == 60 * 60 * 2 * 2
    G = inst.group()
    assert G.order == inst.meta["order"]
    assert G.stabilizer(inst.meta["omega"]).order == 240


def test_diagonal_equal_translation_is_conjugation():
    T = act_natural(5, "alt").group()
    spec = DiagonalSpec(T, 2)
    omega = 0
    for g in T.gens:
        s = spec.index[g.img]
        tr = diagonal_translation(spec, (s, s))
        assert tr(spec.ident) == spec.ident or omega != spec.ident
        assert tr == diagonal_automorphism(spec, spec.inner_auto(s))


def test_diagonal_spec_validation():
    with pytest.raises(ActionsError):
        DiagonalSpec(act_natural(5, "alt").group(), 1)
    with pytest.raises(ActionsError):
        DiagonalSpec(act_natural(4).group(), 2)  # not perfect
    with pytest.raises(ActionsError):
        DiagonalSpec(PermGroup(3, [Perm((1, 2, 0))]), 2)  # abelian
    T = act_natural(5, "alt").group()
    good = alt_transposition_auto(T)
    broken = list(good.img)
    # swapping images of elements of different orders cannot respect products
    els = T.elements()
    i3 = next(i for i, g in enumerate(els) if g.order() == 3)
    i5 = next(i for i, g in enumerate(els) if g.order() == 5)
    broken[i3], broken[i5] = broken[i5], broken[i3]
    with pytest.raises(ActionsError):
        DiagonalSpec(T, 2, (Perm(tuple(broken)),))


def test_psl32_graph_auto_is_outer():
    T, aut = psl32_graph_auto()
    assert T.order == 168
    spec = DiagonalSpec(T, 2, (aut,))
    inners = {spec.inner_auto(i).img for i in range(T.order)}
    assert aut.img not in inners


def test_m24_facts():
    inst = act_m24()
    assert inst.degree == 24
    G = inst.group()
    assert G.order == 244823040
    rec = G.chain_orders((0, 1, 2, 3, 4))
    quotients = [a // b for a, b in zip(rec.orders, rec.orders[1:])]
    assert quotients == [24, 23, 22, 21, 20]
    assert rec.orders[-1] == 48
