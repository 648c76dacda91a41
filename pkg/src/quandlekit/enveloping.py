"""The associated group As(Q) and certified embeddings Q -> Conj(G).

A quandle is injective (``x -> e_x`` into As(Q) is one-to-one) exactly when
it embeds in some conjugation quandle, so an explicit injective homomorphism
into Conj(G) certifies both. The search here only ever proves embeddability;
when it gives up the status is UNKNOWN, never "not embeddable".
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

from .constructions import LabeledQuandle, conj_quandle, embed_into_finite_witness
from .errors import ParseError
from .finite_group import FiniteGroup, check_group
from .quandle_core import FiniteQuandle, QuandleMap, is_quandle_hom
from .tables import Perm, is_permutation, perm_conj, perm_inv, perm_mul

DEFAULT_MAX_DEGREE = 6
DEFAULT_BUDGET = 10**6
CLOSURE_LIMIT = 5040


# -- presentation -------------------------------------------------------------

@dataclass(frozen=True)
class QuandlePresentation:
    """Generators ``e_0..e_{n-1}``; relation ``(x, y, z)`` reads ``e_y^-1 e_x e_y = e_z``."""

    generator_count: int
    relations: tuple[tuple[int, int, int], ...]

    @property
    def redundant(self) -> tuple[bool, ...]:
        return tuple(x == y for x, y, _ in self.relations)

    def to_text(self) -> str:
        lines = [f"gen {self.generator_count}"]
        lines.extend(f"rel {x} {y} {z}" for x, y, z in self.relations)
        return "\n".join(lines) + "\n"


def as_presentation(Q: FiniteQuandle) -> QuandlePresentation:
    Q = _unwrap(Q)
    rels = tuple((x, y, Q.table[x][y]) for x in range(Q.order) for y in range(Q.order))
    return QuandlePresentation(Q.order, rels)


def parse_presentation(text: str) -> QuandlePresentation:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines or lines[0][1][0] != "gen" or len(lines[0][1]) != 2:
        raise ParseError("expected 'gen <n>' header", 1)
    try:
        n = int(lines[0][1][1])
        rels = []
        for lineno, words in lines[1:]:
            if len(words) != 4 or words[0] != "rel":
                raise ParseError("expected 'rel <x> <y> <z>'", lineno)
            rel = tuple(int(w) for w in words[1:])
            if any(not 0 <= v < n for v in rel):
                raise ParseError("generator index out of range", lineno)
            rels.append(rel)
    except ValueError:
        raise ParseError("non-integer field") from None
    return QuandlePresentation(n, tuple(rels))


# -- certificates -------------------------------------------------------------

@dataclass(frozen=True)
class PermutationCertificate:
    """``x -> images[x]`` into Conj(S_degree); permutations act on the right."""

    degree: int
    images: tuple[Perm, ...]

    def describe(self) -> str:
        return f"Conj(S_{self.degree})"


@dataclass(frozen=True)
class GroupCertificate:
    group: FiniteGroup
    map: QuandleMap

    def describe(self) -> str:
        return f"Conj(H) with |H| = {self.group.order}"


class Status(enum.Enum):
    EMBEDDABLE = "EMBEDDABLE"
    UNKNOWN = "UNKNOWN"


@dataclass
class EmbeddabilityReport:
    status: Status
    certificate: PermutationCertificate | GroupCertificate | None = None
    method: str | None = None
    nodes: int = 0
    degrees_tried: list = field(default_factory=list)
    budget_exhausted: bool = False

    @property
    def degree(self):
        cert = self.certificate
        return cert.degree if isinstance(cert, PermutationCertificate) else None


def inner_permutations(Q: FiniteQuandle) -> tuple[Perm, ...]:
    return _unwrap(Q).inner_permutations()


def inner_certificate(Q: FiniteQuandle) -> PermutationCertificate | None:
    """``x -> S_x`` when the right translations are pairwise distinct."""
    perms = inner_permutations(Q)
    if len(set(perms)) != len(perms):
        return None
    return PermutationCertificate(len(perms), perms)


def _unwrap(Q) -> FiniteQuandle:
    return Q.quandle if isinstance(Q, LabeledQuandle) else Q


# -- verification ------------------------------------------------------------

def conjugation_closure(perms, limit: int = CLOSURE_LIMIT) -> list[Perm] | None:
    """Smallest set containing ``perms`` closed under ``a * b = b^-1 a b``, sorted.

    Returns None past ``limit`` elements.
    """
    elems = set(perms)
    frontier = list(elems)
    while frontier:
        nxt = []
        current = list(elems)
        for a in frontier:
            for b in current:
                for c in (perm_conj(a, b), perm_conj(b, a)):
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
                        if len(elems) > limit:
                            return None
        frontier = nxt
    return sorted(elems)


def verify_certificate(Q, report) -> bool:
    """Re-check a certificate from scratch against the rebuilt conjugation quandle."""
    Q = _unwrap(Q)
    cert = report.certificate if isinstance(report, EmbeddabilityReport) else report
    if isinstance(report, EmbeddabilityReport) and report.status is not Status.EMBEDDABLE:
        return False
    if isinstance(cert, GroupCertificate):
        H = check_group(cert.group.table)
        f = cert.map
        if len(f) != Q.order or any(not 0 <= v < H.order for v in f):
            return False
        return f.is_injective() and is_quandle_hom(f, Q, conj_quandle(H).quandle)
    if isinstance(cert, PermutationCertificate):
        images = cert.images
        if len(images) != Q.order or len(set(images)) != len(images):
            return False
        if not all(is_permutation(p, cert.degree) for p in images):
            return False
        # a homomorphic image is closed under conjugation, so a runaway closure refutes
        closure = conjugation_closure(images, limit=max(CLOSURE_LIMIT, Q.order))
        if closure is None:
            return False
        index = {p: i for i, p in enumerate(closure)}
        target = FiniteQuandle(
            len(closure),
            tuple(tuple(index[perm_conj(a, b)] for b in closure) for a in closure),
        )
        f = QuandleMap(tuple(index[p] for p in images))
        return is_quandle_hom(f, Q, target)
    return False


# -- search ------------------------------------------------------------------

class _BudgetExhausted(Exception):
    pass


class _PermutationSearch:
    """Backtracking for an injective hom ``Q -> Conj(S_d)``.

    Elements are assigned in index order, candidates in lexicographic order;
    after each choice every forced image ``sigma_{x*y} = sigma_y^-1 sigma_x
    sigma_y`` (and its inverse form) is propagated.
    """

    def __init__(self, Q: FiniteQuandle, degree: int, budget: int):
        self.Q = Q
        self.degree = degree
        self.budget = budget
        self.nodes = 0
        self.perms = list(itertools.permutations(range(degree)))
        self._conj: dict = {}
        self._unconj: dict = {}

    def conj(self, a, b):
        key = (a, b)
        c = self._conj.get(key)
        if c is None:
            c = self._conj[key] = perm_conj(a, b)
        return c

    def unconj(self, a, b):
        # b a b^-1
        key = (a, b)
        c = self._unconj.get(key)
        if c is None:
            c = self._unconj[key] = perm_mul(perm_mul(b, a), perm_inv(b))
        return c

    def propagate(self, sigma, used) -> bool:
        t, n = self.Q.table, self.Q.order
        changed = True
        while changed:
            changed = False
            for y in range(n):
                sy = sigma[y]
                if sy is None:
                    continue
                for x in range(n):
                    z = t[x][y]
                    sx, sz = sigma[x], sigma[z]
                    if sx is not None:
                        want = self.conj(sx, sy)
                        if sz is None:
                            if want in used:
                                return False
                            sigma[z] = want
                            used.add(want)
                            changed = True
                        elif sz != want:
                            return False
                    elif sz is not None:
                        want = self.unconj(sz, sy)
                        if want in used:
                            return False
                        sigma[x] = want
                        used.add(want)
                        changed = True
        return True

    def run(self):
        return self._search([None] * self.Q.order, set())

    def _search(self, sigma, used):
        try:
            x = sigma.index(None)
        except ValueError:
            return tuple(sigma)
        for p in self.perms:
            if p in used:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExhausted
            s2, u2 = list(sigma), set(used)
            s2[x] = p
            u2.add(p)
            if self.propagate(s2, u2):
                found = self._search(s2, u2)
                if found is not None:
                    return found
        return None


def search_embedding(
    Q,
    max_degree: int = DEFAULT_MAX_DEGREE,
    budget: int = DEFAULT_BUDGET,
) -> EmbeddabilityReport:
    """Look for an injective quandle homomorphism into some Conj(G).

    Tries, cheapest first: the inner certificate ``x -> S_x``; the finite
    semidirect witness when ``Q`` is a labelled twisted conjugation quandle;
    a permutation search over Conj(S_d) for ``d = 2..max_degree``.
    """
    origin = Q.origin if isinstance(Q, LabeledQuandle) else None
    base = _unwrap(Q)

    cert = inner_certificate(base)
    if cert is not None:
        return EmbeddabilityReport(Status.EMBEDDABLE, cert, "inner")

    if origin is not None and origin.is_twisted():
        Hk, f, _ = embed_into_finite_witness(origin.group, origin.twisted_phi())
        return EmbeddabilityReport(Status.EMBEDDABLE, GroupCertificate(Hk, f), "finite-witness")

    report = EmbeddabilityReport(Status.UNKNOWN)
    remaining = budget
    for d in range(2, max_degree + 1):
        report.degrees_tried.append(d)
        if base.order > math.factorial(d):
            continue
        search = _PermutationSearch(base, d, remaining)
        try:
            images = search.run()
        except _BudgetExhausted:
            report.nodes += search.nodes - 1
            report.budget_exhausted = True
            return report
        report.nodes += search.nodes
        remaining -= search.nodes
        if images is not None:
            report.status = Status.EMBEDDABLE
            report.certificate = PermutationCertificate(d, images)
            report.method = "permutation-search"
            return report
    return report

