import random

import pytest

import oracles
from grpstat.perm import Perm
from grpstat.group import PermGroup


def sym(n):
    return PermGroup(n, [Perm.from_cycles(n, [(0, 1)]),
                         Perm.from_cycles(n, [tuple(range(n))])])


def cyc(n):
    return PermGroup(n, [Perm.from_cycles(n, [tuple(range(n))])])


def dihedral4():
    return PermGroup(4, [Perm((1, 2, 3, 0)), Perm((1, 0, 3, 2))])


def klein4():
    return PermGroup(4, [Perm((1, 0, 3, 2)), Perm((2, 3, 0, 1))])


def test_orders():
    assert sym(5).order == 120
    assert cyc(6).order == 6
    assert dihedral4().order == 8
    assert klein4().order == 4
    assert PermGroup(3, []).order == 1


def test_generator_validation():
    with pytest.raises(TypeError):
        PermGroup(3, [(1, 0, 2)])
    with pytest.raises(ValueError):
        PermGroup(3, [Perm((1, 0))])
    with pytest.raises(ValueError):
        PermGroup(0, [])


def test_duplicate_and_identity_generators_dropped():
    p = Perm((1, 0, 2))
    G = PermGroup(3, [p, p, Perm.identity(3)])
    assert G.gens == (p,)
    assert G.order == 2


def test_membership():
    G = sym(4)
    assert Perm((1, 2, 3, 0)) in G
    A = PermGroup(4, [Perm((1, 2, 0, 3)), Perm((0, 2, 3, 1))])
    assert A.order == 12
    assert Perm((1, 0, 2, 3)) not in A
    assert Perm((1, 0, 2)) not in A


def test_orbits_and_transitivity():
    G = PermGroup(5, [Perm.from_cycles(5, [(0, 1, 2)])])
    assert G.orbits() == ((0, 1, 2), (3,), (4,))
    assert not G.is_transitive()
    assert sym(4).is_transitive()
    assert sorted(G.orbit(1)) == [0, 1, 2]


def test_orbit_stabilizer_counting():
    G = sym(5)
    S = G.stabilizer(0)
    assert S.order * len(G.orbit(0)) == G.order
    assert all(Perm._raw(e.img)(0) == 0 for e in S.gens)
    T = S.stabilizer(3)
    assert T.order == 6


def test_transversal_maps_base_point():
    G = dihedral4()
    for target, u in G.transversal(0).items():
        assert u(0) == target


def test_pointwise_stabilizer_and_chain_orders():
    G = sym(5)
    H = G.pointwise_stabilizer((0, 1, 0))
    assert H.order == 6
    rec = G.chain_orders((0, 1, 2, 3))
    assert rec.orders == (120, 24, 6, 2, 1)
    assert rec.is_irredundant
    assert rec.is_base
    rec2 = G.chain_orders((0, 0))
    assert rec2.orders == (120, 24, 24)
    assert not rec2.is_irredundant


def test_fixed_points():
    G = PermGroup(5, [Perm.from_cycles(5, [(1, 2)])])
    assert G.fixed_points() == (0, 3, 4)


def test_primitivity_and_blocks():
    assert sym(4).is_primitive()
    assert not cyc(4).is_primitive()
    assert not dihedral4().is_primitive()
    blocks = dihedral4().nontrivial_block_system()
    assert blocks is not None
    assert sorted(len(b) for b in blocks) == [2, 2]
    # alt(4) is 2-transitive, so no proper blocks survive
    A = PermGroup(4, [Perm((1, 2, 0, 3)), Perm((0, 2, 3, 1))])
    assert A.is_primitive()
    assert PermGroup(1, []).is_primitive()


def test_minimal_block_merging():
    G = cyc(6)
    blocks = G.minimal_block(0, 3)
    assert blocks == ((0, 3), (1, 4), (2, 5))


def test_derived_subgroup():
    assert sym(4).derived_subgroup().order == 12
    A = PermGroup(4, [Perm((1, 2, 0, 3)), Perm((0, 2, 3, 1))])
    D = A.derived_subgroup()
    assert D.order == 4
    assert D.derived_subgroup().order == 1
    assert cyc(6).derived_subgroup().order == 1


def test_subgroup_relations():
    G = sym(4)
    A = G.derived_subgroup()
    assert A.is_subgroup_of(G)
    assert not G.is_subgroup_of(A)
    B = PermGroup(4, [Perm((1, 2, 0, 3)), Perm((0, 2, 3, 1))])
    assert A.same_group_as(B)


def test_elements_listing():
    G = dihedral4()
    elems = G.elements()
    assert len(elems) == 8
    assert len(set(elems)) == 8
    assert all(e in G for e in elems)
    with pytest.raises(ValueError):
        sym(5).elements(cap=100)


def test_chain_is_deterministic():
    mk = lambda: PermGroup(6, [Perm.from_cycles(6, [(0, 1, 2, 3, 4, 5)]),
                               Perm.from_cycles(6, [(0, 1)])])
    G, H = mk(), mk()
    assert G.base() == H.base()
    assert [g.img for g in G.strong_gens()] == [g.img for g in H.strong_gens()]


def test_order_against_brute_closure():
    rng = random.Random(11)
    for _ in range(12):
        n = rng.randrange(2, 7)
        gens = []
        for _ in range(rng.randrange(1, 3)):
            img = list(range(n))
            rng.shuffle(img)
            gens.append(Perm(img))
        G = PermGroup(n, gens)
        assert G.order == len(oracles.close_elements(n, [g.img for g in gens]))


def test_stabilizer_against_brute_filter():
    rng = random.Random(13)
    for _ in range(8):
        n = rng.randrange(3, 7)
        img = list(range(n))
        rng.shuffle(img)
        img2 = list(range(n))
        rng.shuffle(img2)
        G = PermGroup(n, [Perm(img), Perm(img2)])
        elems = oracles.close_elements(n, [img, img2])
        pt = rng.randrange(n)
        assert G.stabilizer(pt).order == oracles.stab_size(elems, (pt,))
