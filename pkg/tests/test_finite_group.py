import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _catalog import GROUPS, brute_automorphisms
from quandlekit.errors import (
    BadAutomorphism,
    BoundExceeded,
    LengthMismatch,
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAbelian,
    NotAssociative,
    NotLatin,
    ParseError,
)
from quandlekit.finite_group import (
    GroupAutomorphism,
    aut_order,
    automorphisms,
    check_group,
    compose,
    cyclic_group,
    identity_automorphism,
    inner_automorphism,
    invert,
    is_automorphism,
    parse_automorphism,
    read_group,
    symmetric_group,
)
from quandlekit.tables import relabel


def assert_group_invariants(G):
    n, t = G.order, G.table
    for a in range(n):
        assert t[0][a] == a and t[a][0] == a
        assert t[a][G.inverse[a]] == 0
        assert sorted(t[a]) == list(range(n))
        assert sorted(t[b][a] for b in range(n)) == list(range(n))
    for a, b, c in itertools.product(range(n), repeat=3):
        assert t[t[a][b]][c] == t[a][t[b][c]]


def test_trivial_group():
    G = check_group([[0]])
    assert G.order == 1 and G.inverse == (0,)


def test_z3_inverse():
    G = check_group([[(a + b) % 3 for b in range(3)] for a in range(3)])
    assert G.inverse == (0, 2, 1)


def test_not_latin():
    with pytest.raises(NotLatin) as exc:
        check_group([[0, 1], [1, 1]])
    assert (exc.value.kind, exc.value.index) == ("row", 1)


def test_no_identity():
    with pytest.raises(NoIdentity):
        check_group([[(-a - b) % 3 for b in range(3)] for a in range(3)])


def test_no_inverse():
    # order-5 loop: 2*3 = 0 but 3*2 = 1
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 3, 4, 0, 1], [3, 4, 1, 2, 0], [4, 2, 0, 1, 3]]
    with pytest.raises(NoInverse) as exc:
        check_group(loop)
    assert exc.value.element == 2


def test_not_associative():
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative) as exc:
        check_group(loop)
    a, b, c = exc.value.witness
    assert loop[loop[a][b]][c] != loop[a][loop[b][c]]


@pytest.mark.parametrize("rows", [[], [[0, 1]], [[0, 2], [1, 0]]])
def test_malformed(rows):
    with pytest.raises(MalformedTable):
        check_group(rows)


def test_identity_relabelled_to_zero():
    # Z/2 with identity at index 1
    G = check_group([[1, 0], [0, 1]])
    assert G.table == ((0, 1), (1, 0))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.data())
def test_relabelled_cyclic_groups_normalise(n, data):
    p = data.draw(st.permutations(range(n)))
    table = relabel(cyclic_group(n).table, p)
    G = check_group(table)
    assert_group_invariants(G)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_fixture_groups_satisfy_invariants(name):
    assert_group_invariants(GROUPS[name])


def test_is_automorphism_examples():
    z3, z4 = cyclic_group(3), cyclic_group(4)
    assert is_automorphism(z3, [0, 1, 2])
    assert is_automorphism(z3, [0, 2, 1])
    # swapping 1 and 2 only
    assert not is_automorphism(z4, [0, 2, 1, 3])
    with pytest.raises(LengthMismatch):
        is_automorphism(z4, [0, 2, 1])


def test_is_automorphism_rejects_non_bijections():
    z4 = cyclic_group(4)
    assert not is_automorphism(z4, [0, 2, 2, 0])
    assert is_automorphism(z4, [0, 3, 2, 1])


@pytest.mark.parametrize(
    "name,count",
    [("Z1", 1), ("Z3", 2), ("Z2xZ2", 6), ("Z8", 4), ("Z7", 6), ("S3", 6), ("D4", 8), ("Z2xZ4", 8), ("Q8", 24)],
)
def test_automorphism_counts_match_brute_force(name, count):
    G = GROUPS[name]
    auts = automorphisms(G)
    assert [phi.map for phi in auts] == brute_automorphisms(G)
    assert len(auts) == count


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_automorphisms_form_a_group(name):
    auts = automorphisms(GROUPS[name])
    maps = {phi.map for phi in auts}
    for f in auts:
        assert invert(f).map in maps
        assert len(auts) % aut_order(f) == 0
        for g in auts:
            assert compose(f, g).map in maps


def test_automorphism_bound():
    with pytest.raises(BoundExceeded):
        automorphisms(cyclic_group(30))
    assert len(automorphisms(cyclic_group(30), bound=30)) == 8


def test_aut_order_examples():
    z5 = cyclic_group(5)
    assert aut_order(identity_automorphism(z5)) == 1
    assert aut_order(GroupAutomorphism((0, 2, 1))) == 2
    assert aut_order(GroupAutomorphism(tuple(2 * x % 5 for x in range(5)))) == 4


def test_inner_automorphism_is_automorphism():
    S3 = symmetric_group(3)
    for h in S3.elements:
        assert is_automorphism(S3, inner_automorphism(S3, h))


def test_parse_automorphism_specs():
    z3 = cyclic_group(3)
    assert parse_automorphism(z3, "id").map == (0, 1, 2)
    assert parse_automorphism(z3, "aut:1").map == (0, 2, 1)
    assert parse_automorphism(z3, "0,2,1").map == (0, 2, 1)
    for bad in ("aut:2", "aut:x", "0,1", "1,0,2", "a,b,c"):
        with pytest.raises(BadAutomorphism):
            parse_automorphism(z3, bad)


def test_require_abelian():
    assert not symmetric_group(3).is_abelian()
    with pytest.raises(NotAbelian):
        symmetric_group(3).require_abelian()


def test_group_file_round_trip():
    G = GROUPS["D4"]
    assert read_group(G.to_text()) == G


@pytest.mark.parametrize(
    "text,line",
    [
        ("group 2\n0 1\n", 3),
        ("group x\n", 1),
        ("group 2\n0 1\n1 5\n", 3),
        ("group 2\n0 1 1\n1 0\n", 2),
        ("quandle 1\n0\n", 1),
        ("", 1),
    ],
)
def test_group_file_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        read_group(text)
    assert exc.value.line == line
