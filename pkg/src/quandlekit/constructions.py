"""Quandles built from groups, and the embedding ``g -> (g, 1)`` into ``G x|_phi Z``.

Orientation throughout: ``table[x][y] = x * y``.

=====================  ==========================
conjugation            ``h * g = g^-1 h g``
Alexander (abelian)    ``g * h = phi(g) + h - phi(h)``
twisted conjugation    ``g * h = phi(h^-1 g) h``
generalized Alexander  ``g * h = phi(g h^-1) h``
=====================  ==========================
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import VerificationFailed
from .finite_group import (
    FiniteGroup,
    GroupAutomorphism,
    aut_order,
    cyclic_group,
    identity_automorphism,
)
from .quandle_core import FiniteQuandle, QuandleMap, is_quandle_hom
from .semidirect import (
    SemiCyclicGroup,
    SemiZElement,
    SemiZGroup,
    build_finite_witness,
    semi_conjugate,
)

TWISTED_KINDS = ("conj", "alex", "twisted")


@dataclass(frozen=True)
class Origin:
    """How a labelled quandle was constructed; ``phi`` is None for ``conj``."""

    kind: str
    group: FiniteGroup
    phi: GroupAutomorphism | None = None

    def is_twisted(self) -> bool:
        """True when the table is literally a twisted conjugation quandle Conj(G, phi)."""
        return self.kind in TWISTED_KINDS

    def twisted_phi(self) -> GroupAutomorphism:
        return self.phi if self.phi is not None else identity_automorphism(self.group)


@dataclass(frozen=True)
class LabeledQuandle:
    quandle: FiniteQuandle
    labels: tuple
    origin: Origin | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.quandle.order or len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct, one per element")

    @property
    def order(self) -> int:
        return self.quandle.order

    @property
    def table(self):
        return self.quandle.table


def _from_op(G: FiniteGroup, op, kind, phi=None) -> LabeledQuandle:
    table = tuple(tuple(op(g, h) for h in G.elements) for g in G.elements)
    return LabeledQuandle(FiniteQuandle(G.order, table), tuple(G.elements), Origin(kind, G, phi))


def conj_quandle(G: FiniteGroup) -> LabeledQuandle:
    t, inv = G.table, G.inverse
    return _from_op(G, lambda h, g: t[t[inv[g]][h]][g], "conj")


def alexander_quandle(A: FiniteGroup, phi: GroupAutomorphism) -> LabeledQuandle:
    A.require_abelian()
    t, inv, f = A.table, A.inverse, phi.map
    return _from_op(A, lambda g, h: t[t[f[g]][h]][inv[f[h]]], "alex", phi)


def twisted_conj_quandle(G: FiniteGroup, phi: GroupAutomorphism) -> LabeledQuandle:
    t, inv, f = G.table, G.inverse, phi.map
    return _from_op(G, lambda g, h: t[f[t[inv[h]][g]]][h], "twisted", phi)


def generalized_alexander_quandle(G: FiniteGroup, phi: GroupAutomorphism) -> LabeledQuandle:
    t, inv, f = G.table, G.inverse, phi.map
    return _from_op(G, lambda g, h: t[f[t[g][inv[h]]]][h], "genalex", phi)


def dihedral_quandle(n: int) -> LabeledQuandle:
    """``x * y = 2y - x mod n``."""
    A = cyclic_group(n)
    return alexander_quandle(A, GroupAutomorphism(tuple(A.inverse)))


def coincidences(G: FiniteGroup, phi: GroupAutomorphism) -> list[str]:
    """Which table identities between the constructions apply to ``(G, phi)``."""
    notes = []
    if phi.map == tuple(G.elements):
        notes.append("phi = id: twisted = conj")
        notes.append("phi = id: genalex = trivial")
    if G.is_abelian():
        notes.append("abelian base: twisted = alexander")
        notes.append("abelian base: genalex = alexander")
    return notes


# -- the embedding -------------------------------------------------------------

@dataclass
class EmbeddingReport:
    pairs_checked: int = 0
    mismatches: list = field(default_factory=list)
    injective: bool = False
    image_matches_table: bool = False

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.injective and self.image_matches_table

    def summary(self) -> str:
        good = self.pairs_checked - len(self.mismatches)
        return f"{good}/{self.pairs_checked} pairs verified"


def embed_into_semidirect(G: FiniteGroup, phi: GroupAutomorphism, strict: bool = True):
    """Check ``(g,1) * (h,1) = (phi(h^-1 g) h, 1)`` in Conj(G x|_phi Z) for all pairs.

    Returns ``(H, embedding, report)`` where ``embedding[g] = (g, 1)``. With
    ``strict`` a mismatch raises VerificationFailed; a mismatch would mean an
    implementation bug.
    """
    H = SemiZGroup(G, phi)
    t, inv, f = G.table, G.inverse, phi.map
    embedding = tuple(SemiZElement(g, 1) for g in G.elements)
    twisted = twisted_conj_quandle(G, phi).table
    report = EmbeddingReport()
    image = []
    for g in G.elements:
        row = []
        for h in G.elements:
            got = semi_conjugate(H, embedding[g], embedding[h])
            expected = SemiZElement(t[f[t[inv[h]][g]]][h], 1)
            report.pairs_checked += 1
            if got != expected:
                report.mismatches.append((g, h, got, expected))
            row.append(got.g)
        image.append(tuple(row))
    report.injective = len(set(embedding)) == G.order
    report.image_matches_table = tuple(image) == twisted
    if strict and not report.ok:
        w = report.mismatches[0][:2] if report.mismatches else None
        raise VerificationFailed(f"embedding check failed at {w}", w, report)
    return H, embedding, report


@dataclass
class WitnessReport:
    k: int
    witness_order: int
    pairs_checked: int
    is_hom: bool
    injective: bool

    @property
    def ok(self) -> bool:
        return self.is_hom and self.injective


def embed_into_finite_witness(G: FiniteGroup, phi: GroupAutomorphism, strict: bool = True):
    """Embed Conj(G, phi) into Conj(G x|_phi Z/k), ``k`` the order of ``phi``.

    Returns ``(H_k, f, report)`` with ``f[g]`` the index of ``(g, 1 mod k)``.
    """
    k = aut_order(phi)
    Hk = build_finite_witness(G, phi, k)
    coords = SemiCyclicGroup(G, phi, k)
    f = QuandleMap(tuple(coords.index(g, 1) for g in G.elements))
    source = twisted_conj_quandle(G, phi).quandle
    target = conj_quandle(Hk).quandle
    report = WitnessReport(
        k=k,
        witness_order=Hk.order,
        pairs_checked=G.order ** 2,
        is_hom=is_quandle_hom(f, source, target),
        injective=f.is_injective(),
    )
    if strict and not report.ok:
        raise VerificationFailed("finite witness embedding failed", report=report)
    return Hk, f, report
