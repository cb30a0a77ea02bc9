import random

import pytest

from grpstat.perm import (
    Perm,
    PermError,
    format_group_text,
    parse_group_text,
    parse_perm,
)


def test_identity_and_degree():
    e = Perm.identity(5)
    assert e.degree == 5
    assert e.is_identity()
    assert all(e(x) == x for x in range(5))


def test_rejects_non_permutations():
    with pytest.raises(PermError):
        Perm((0, 0, 1))
    with pytest.raises(PermError):
        Perm((0, 2))
    with pytest.raises(PermError):
        Perm((0, 1, "2"))


def test_composition_is_left_to_right():
    p = Perm((1, 2, 0))
    q = Perm((0, 2, 1))
    pq = p * q
    for x in range(3):
        assert pq(x) == q(p(x))


def test_degree_mismatch_product():
    with pytest.raises(PermError):
        Perm((1, 0)) * Perm((1, 2, 0))


def test_inverse_and_pow():
    p = Perm((1, 2, 3, 0))
    assert (p * p.inverse()).is_identity()
    assert p ** 4 == Perm.identity(4)
    assert p ** -1 == p.inverse()
    assert p ** 3 == p.inverse()
    assert p.order() == 4


def test_from_cycles():
    p = Perm.from_cycles(5, [(0, 1, 2), (3, 4)])
    assert p.img == (1, 2, 0, 4, 3)
    assert p.order() == 6
    assert Perm.from_cycles(3, []).is_identity()


def test_from_cycles_rejects_bad_input():
    with pytest.raises(PermError):
        Perm.from_cycles(4, [(0, 0, 1)])
    with pytest.raises(PermError):
        Perm.from_cycles(4, [(0, 5)])
    with pytest.raises(PermError):
        Perm.from_cycles(4, [(0, 1), (1, 2)])


def test_cycles_start_at_smallest_point():
    p = Perm.from_cycles(6, [(2, 4, 3), (0, 5)])
    assert p.cycles() == [(0, 5), (2, 4, 3)]
    assert p.cycles(include_fixed=True) == [(0, 5), (1,), (2, 4, 3)]


def test_parse_perm_forms():
    assert parse_perm("(0 1 2)(3 4)", 5).img == (1, 2, 0, 4, 3)
    assert parse_perm("(0, 1)", 3).img == (1, 0, 2)
    assert parse_perm("[1,2,0]", 3).img == (1, 2, 0)
    assert parse_perm("1 2 0", 3).img == (1, 2, 0)
    assert parse_perm("id", 4).is_identity()
    assert parse_perm("()", 4).is_identity()


def test_parse_perm_rejects_garbage():
    with pytest.raises(PermError):
        parse_perm("(0 1) junk", 3)
    with pytest.raises(PermError):
        parse_perm("[]", 3)
    with pytest.raises(PermError):
        parse_perm("[1,2]", 3)
    with pytest.raises(PermError):
        parse_perm("one two", 3)


def test_group_text_round_trip():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randrange(2, 9)
        gens = []
        for _ in range(rng.randrange(1, 4)):
            img = list(range(n))
            rng.shuffle(img)
            gens.append(Perm(img))
        degree, parsed = parse_group_text(format_group_text(n, gens))
        assert degree == n
        assert parsed == gens


def test_group_text_comments_and_whitespace():
    text = """
    # leading comment
    degree 4   # trailing comment

    (0 1)(2 3)
    [2,3,0,1]
    """
    degree, gens = parse_group_text(text)
    assert degree == 4
    assert gens[0].img == (1, 0, 3, 2)
    assert gens[1].img == (2, 3, 0, 1)


def test_group_text_errors():
    with pytest.raises(PermError):
        parse_group_text("")
    with pytest.raises(PermError):
        parse_group_text("# only comments\n")
    with pytest.raises(PermError):
        parse_group_text("degree\n")
    with pytest.raises(PermError):
        parse_group_text("degree x\n")
    with pytest.raises(PermError):
        parse_group_text("degree 0\n")
    with pytest.raises(PermError):
        parse_group_text("order 4\n(0 1)\n")


def test_format_group_text_comment_header():
    text = format_group_text(3, [Perm((1, 0, 2))], comment="two\nlines")
    assert text.startswith("# two\n# lines\ndegree 3\n")
