import itertools

import pytest

from _catalog import GROUPS, PAIRS, brute_quandle_iso
from quandlekit.constructions import (
    alexander_quandle,
    coincidences,
    conj_quandle,
    dihedral_quandle,
    embed_into_finite_witness,
    embed_into_semidirect,
    generalized_alexander_quandle,
    twisted_conj_quandle,
)
from quandlekit.errors import NotAbelian
from quandlekit.finite_group import (
    GroupAutomorphism,
    cyclic_group,
    identity_automorphism,
    inner_automorphism,
    symmetric_group,
)
from quandlekit.quandle_core import FiniteQuandle, check_quandle, is_quandle_hom, trivial_quandle
from quandlekit.semidirect import SemiZElement

Z3, Z4 = cyclic_group(3), cyclic_group(4)
NEG3 = GroupAutomorphism((0, 2, 1))
TIMES3 = GroupAutomorphism((0, 3, 2, 1))
S3 = symmetric_group(3)
# lexicographic S3: index 2 swaps 0,1; index 5 swaps 0,2; index 1 swaps 1,2
T01, T02, T12 = 2, 5, 1

IDS = [p[0] for p in PAIRS]


def test_conj_abelian_is_trivial():
    assert conj_quandle(GROUPS["Z2xZ4"]).quandle == trivial_quandle(8)


def test_conj_s3_transpositions():
    Q = conj_quandle(S3)
    assert Q.table[T01][T02] == T12
    check_quandle(Q.table)


def test_conj_trivial_group():
    assert conj_quandle(GROUPS["Z1"]).quandle.table == ((0,),)


def test_alexander_examples():
    assert alexander_quandle(Z3, identity_automorphism(Z3)).quandle == trivial_quandle(3)
    D = alexander_quandle(Z3, NEG3)
    assert D.table[1][0] == 2
    assert D.table == tuple(tuple((2 * h - g) % 3 for h in range(3)) for g in range(3))
    assert alexander_quandle(Z4, TIMES3).table[1][2] == 3


def test_alexander_rejects_nonabelian():
    with pytest.raises(NotAbelian):
        alexander_quandle(S3, identity_automorphism(S3))


def test_twisted_example():
    assert twisted_conj_quandle(Z3, NEG3).table[1][0] == 2


def test_generalized_examples():
    assert generalized_alexander_quandle(Z3, identity_automorphism(Z3)).quandle == trivial_quandle(3)
    g = generalized_alexander_quandle(S3, identity_automorphism(S3)).quandle
    t = twisted_conj_quandle(S3, identity_automorphism(S3)).quandle
    assert g == trivial_quandle(6) and t != g and not t.is_trivial()


def test_dihedral_quandle():
    for n in range(1, 8):
        D = dihedral_quandle(n)
        assert D.table == tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n))


def test_labels_and_origin():
    Q = twisted_conj_quandle(S3, inner_automorphism(S3, T01))
    assert Q.labels == tuple(range(6))
    assert Q.origin.kind == "twisted" and Q.origin.is_twisted()
    assert not generalized_alexander_quandle(S3, identity_automorphism(S3)).origin.is_twisted()


def test_coincidence_notes():
    notes = coincidences(Z3, NEG3)
    assert "abelian base: twisted = alexander" in notes
    assert not any(n.startswith("phi = id") for n in notes)
    assert "phi = id: twisted = conj" in coincidences(S3, identity_automorphism(S3))


@pytest.mark.parametrize("label,G,phi", PAIRS, ids=IDS)
def test_all_constructions_are_quandles(label, G, phi):
    builders = [twisted_conj_quandle, generalized_alexander_quandle]
    if G.is_abelian():
        builders.append(alexander_quandle)
    for build in builders:
        check_quandle(build(G, phi).table, extended=True)
    check_quandle(conj_quandle(G).table, extended=True)


@pytest.mark.parametrize("label,G,phi", PAIRS, ids=IDS)
def test_twisted_matches_formula(label, G, phi):
    # independent evaluation of phi(h^-1 g) h straight from the group table
    t, inv, f = G.table, G.inverse, phi.map
    Q = twisted_conj_quandle(G, phi)
    for g, h in itertools.product(G.elements, repeat=2):
        assert Q.table[g][h] == t[f[t[inv[h]][g]]][h]


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_coincidence_laws(name):
    G = GROUPS[name]
    ident = identity_automorphism(G)
    assert twisted_conj_quandle(G, ident).table == conj_quandle(G).table
    assert generalized_alexander_quandle(G, ident).quandle == trivial_quandle(G.order)


ABELIAN = [p for p in PAIRS if p[1].is_abelian()]


@pytest.mark.parametrize("label,G,phi", ABELIAN, ids=[p[0] for p in ABELIAN])
def test_abelian_coincidences(label, G, phi):
    alex = alexander_quandle(G, phi).table
    assert twisted_conj_quandle(G, phi).table == alex
    assert generalized_alexander_quandle(G, phi).table == alex


def test_embed_semidirect_trivial():
    H, emb, report = embed_into_semidirect(GROUPS["Z1"], identity_automorphism(GROUPS["Z1"]))
    assert report.pairs_checked == 1 and report.ok
    assert emb == (SemiZElement(0, 1),)


def test_embed_semidirect_z3():
    H, emb, report = embed_into_semidirect(Z3, NEG3)
    assert report.pairs_checked == 9 and report.ok and report.image_matches_table
    assert report.summary() == "9/9 pairs verified"


def test_embed_semidirect_s3_inner():
    _, _, report = embed_into_semidirect(S3, inner_automorphism(S3, T01))
    assert report.pairs_checked == 36 and report.ok


@pytest.mark.parametrize("label,G,phi", PAIRS, ids=IDS)
def test_embed_semidirect_all_fixtures(label, G, phi):
    _, _, report = embed_into_semidirect(G, phi)
    assert report.pairs_checked == G.order ** 2 and not report.mismatches and report.ok


def test_witness_z3():
    Hk, f, report = embed_into_finite_witness(Z3, NEG3)
    assert brute_quandle_iso(twisted_conj_quandle(Z3, NEG3).quandle, dihedral_quandle(3).quandle)
    assert Hk.order == 6 and report.k == 2 and report.ok
    # the image is the three non-identity-coset elements of order 2
    assert all(Hk.element_order(v) == 2 for v in f)
    assert is_quandle_hom(f, dihedral_quandle(3).quandle, conj_quandle(Hk).quandle)


def test_witness_identity_phi():
    G = GROUPS["S3"]
    Hk, f, report = embed_into_finite_witness(G, identity_automorphism(G))
    assert report.k == 1 and Hk == G and f.map == tuple(G.elements)


def test_witness_z4():
    Hk, f, report = embed_into_finite_witness(Z4, TIMES3)
    assert Hk.order == 8 and report.pairs_checked == 16 and report.ok


@pytest.mark.parametrize("label,G,phi", PAIRS, ids=IDS)
def test_witness_image_is_isomorphic_subquandle(label, G, phi):
    Hk, f, report = embed_into_finite_witness(G, phi)
    assert report.ok
    C = conj_quandle(Hk).quandle
    image = sorted(set(f))
    pos = {v: i for i, v in enumerate(image)}
    sub = FiniteQuandle(len(image), tuple(tuple(pos[C.table[a][b]] for b in image) for a in image))
    check_quandle(sub.table)
    assert len(image) == G.order
    # f is a bijective hom onto the image, hence an isomorphism
    assert is_quandle_hom(tuple(pos[v] for v in f), twisted_conj_quandle(G, phi).quandle, sub)
