"""Finite groups as multiplication tables, and their automorphisms.

Elements are the indices ``0..n-1`` with the identity always at index 0.
Groups are written multiplicatively even when abelian; additive formulas
read ``g + h`` as ``table[g][h]`` and ``-h`` as ``inverse[h]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import (
    BadAutomorphism,
    BoundExceeded,
    LengthMismatch,
    NoIdentity,
    NoInverse,
    NotAbelian,
    NotAssociative,
    NotLatin,
)
from .tables import (
    Table,
    as_table,
    format_table,
    is_permutation,
    parse_table,
    perm_mul,
    relabel,
)

DEFAULT_AUT_BOUND = 24


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: Table
    inverse: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return self.commutator_witness() is None

    def commutator_witness(self):
        t = self.table
        for a in range(self.order):
            for b in range(a + 1, self.order):
                if t[a][b] != t[b][a]:
                    return a, b
        return None

    def require_abelian(self) -> None:
        w = self.commutator_witness()
        if w is not None:
            raise NotAbelian(*w)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def to_text(self) -> str:
        return format_table("group", self.table)


@dataclass(frozen=True)
class GroupAutomorphism:
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def __len__(self) -> int:
        return len(self.map)


def check_group(rows) -> FiniteGroup:
    """Validate a multiplication table and return the group it defines.

    Checks run in the order: latin square, identity, two-sided inverses,
    associativity. If the identity is not at index 0 it is swapped there.
    """
    table = as_table(rows)
    n = len(table)
    for a in range(n):
        if not is_permutation(table[a]):
            raise NotLatin("row", a)
    for b in range(n):
        if not is_permutation([table[a][b] for a in range(n)]):
            raise NotLatin("column", b)

    e = next(
        (
            e
            for e in range(n)
            if all(table[e][a] == a and table[a][e] == a for a in range(n))
        ),
        None,
    )
    if e is None:
        raise NoIdentity()
    if e != 0:
        swap = list(range(n))
        swap[0], swap[e] = e, 0
        table = relabel(table, swap)

    inverse = []
    for a in range(n):
        b = table[a].index(0)
        if table[b][a] != 0:
            raise NoInverse(a)
        inverse.append(b)

    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rab, rb = table[ab], table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NotAssociative(a, b, c)
    return FiniteGroup(n, table, tuple(inverse))


def group_from_elements(elements: Sequence[Hashable], mul: Callable) -> FiniteGroup:
    """Tabulate a group given concrete elements and a product function."""
    index = {x: i for i, x in enumerate(elements)}
    rows = [[index[mul(a, b)] for b in elements] for a in elements]
    return check_group(rows)


# -- automorphisms ----------------------------------------------------------

def is_automorphism(G: FiniteGroup, mapping) -> bool:
    mapping = tuple(getattr(mapping, "map", mapping))
    if len(mapping) != G.order:
        raise LengthMismatch(f"map has length {len(mapping)}, group has order {G.order}")
    if not is_permutation(mapping):
        return False
    t = G.table
    return all(
        mapping[t[a][b]] == t[mapping[a]][mapping[b]]
        for a in range(G.order)
        for b in range(G.order)
    )


def identity_automorphism(G: FiniteGroup) -> GroupAutomorphism:
    return GroupAutomorphism(tuple(range(G.order)))


def compose(f: GroupAutomorphism, g: GroupAutomorphism) -> GroupAutomorphism:
    """``f o g``: apply ``g`` then ``f``."""
    return GroupAutomorphism(tuple(f.map[x] for x in g.map))


def invert(f: GroupAutomorphism) -> GroupAutomorphism:
    out = [0] * len(f.map)
    for x, y in enumerate(f.map):
        out[y] = x
    return GroupAutomorphism(tuple(out))


def power(f: GroupAutomorphism, k: int) -> GroupAutomorphism:
    base = f if k >= 0 else invert(f)
    out = tuple(range(len(f.map)))
    for _ in range(abs(k)):
        out = tuple(base.map[x] for x in out)
    return GroupAutomorphism(out)


def aut_order(phi: GroupAutomorphism) -> int:
    ident = tuple(range(len(phi.map)))
    k, cur = 1, phi.map
    while cur != ident:
        cur = tuple(phi.map[x] for x in cur)
        k += 1
    return k


def inner_automorphism(G: FiniteGroup, h: int) -> GroupAutomorphism:
    """Conjugation ``g -> h^-1 g h``."""
    hi = G.inverse[h]
    return GroupAutomorphism(tuple(G.table[G.table[hi][g]][h] for g in G.elements))


def generating_set(G: FiniteGroup) -> list[int]:
    """Greedy generators: repeatedly add the least element outside the span."""
    gens: list[int] = []
    span = {0}
    for a in G.elements:
        if a not in span:
            gens.append(a)
            span = _span(G, gens)
    return gens


def _span(G: FiniteGroup, gens) -> set[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _extend(G: FiniteGroup, gens, images):
    """Extend generator images to a hom on the generated subgroup, or None.

    Breadth-first closure under right multiplication by generators; the map
    is well defined and injective there iff no conflict is met.
    """
    t = G.table
    f = {0: 0}
    used = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            fx = f[x]
            for g, img in zip(gens, images):
                y = t[x][g]
                fy = t[fx][img]
                if y in f:
                    if f[y] != fy:
                        return None
                elif fy in used:
                    return None
                else:
                    f[y] = fy
                    used.add(fy)
                    nxt.append(y)
        frontier = nxt
    return f


def automorphisms(G: FiniteGroup, bound: int = DEFAULT_AUT_BOUND) -> list[GroupAutomorphism]:
    """All automorphisms of ``G``, sorted lexicographically by map array.

    Backtracks over images of a greedy generating set; each partial choice is
    extended to the subgroup it generates and pruned on any conflict.
    """
    if G.order > bound:
        raise BoundExceeded(f"group order {G.order} exceeds automorphism bound {bound}")
    gens = generating_set(G)
    orders = [G.element_order(a) for a in G.elements]
    candidates = [[b for b in G.elements if orders[b] == orders[g]] for g in gens]
    found = []

    def search(i, images):
        f = _extend(G, gens[:i], images)
        if f is None:
            return
        if i == len(gens):
            found.append(GroupAutomorphism(tuple(f[a] for a in G.elements)))
            return
        for b in candidates[i]:
            if b not in f.values():
                search(i + 1, images + [b])

    search(0, [])
    return sorted(found, key=lambda phi: phi.map)


def parse_automorphism(G: FiniteGroup, spec: str, auts=None) -> GroupAutomorphism:
    """Resolve ``id``, ``aut:<i>`` or an explicit comma/space separated map."""
    spec = spec.strip()
    if spec == "id":
        return identity_automorphism(G)
    if spec.startswith("aut:"):
        try:
            i = int(spec[4:])
        except ValueError:
            raise BadAutomorphism(f"bad automorphism index in '{spec}'") from None
        auts = automorphisms(G) if auts is None else auts
        if not 0 <= i < len(auts):
            raise BadAutomorphism(f"automorphism index {i} out of range 0..{len(auts) - 1}")
        return auts[i]
    try:
        mapping = tuple(int(w) for w in spec.replace(",", " ").split())
    except ValueError:
        raise BadAutomorphism(f"cannot parse automorphism '{spec}'") from None
    if len(mapping) != G.order or not is_automorphism(G, mapping):
        raise BadAutomorphism(f"{list(mapping)} is not an automorphism of the group")
    return GroupAutomorphism(mapping)


# -- catalogue ---------------------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    return group_from_elements(range(n), lambda a, b: (a + b) % n)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Pairs ``(a, b)`` encoded as ``a * |H| + b``."""
    pairs = list(itertools.product(G.elements, H.elements))
    return group_from_elements(pairs, lambda x, y: (G.table[x[0]][y[0]], H.table[x[1]][y[1]]))


def symmetric_group(d: int) -> FiniteGroup:
    """Permutations of ``range(d)`` in lexicographic order; ``a*b`` applies ``a`` first."""
    return group_from_elements(list(itertools.permutations(range(d))), perm_mul)


def symmetric_elements(d: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(d)))


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order ``2n``."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    elems = {tuple(range(n))}
    frontier = list(elems)
    while frontier:
        nxt = []
        for x in frontier:
            for g in (rot, ref):
                y = perm_mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return group_from_elements(sorted(elems), perm_mul)


_QUAT_UNITS = {  # (i, j) -> (sign, k) for basis 1, i, j, k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion_group() -> FiniteGroup:
    """Q8 as ``(sign, unit)`` pairs: 1, -1, i, -i, j, -j, k, -k."""
    elems = [(s, u) for u in range(4) for s in (1, -1)]

    def mul(x, y):
        s, u = _QUAT_UNITS[x[1], y[1]]
        return (x[0] * y[0] * s, u)

    return group_from_elements(elems, mul)


def read_group(text: str) -> FiniteGroup:
    _, table = parse_table(text, kind="group")
    return check_group(table)
