"""Finite quandles as operation tables.

``table[x][y]`` is ``x * y``. The right translation ``S_y: x -> x * y`` is
column ``y`` of the table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    BoundExceeded,
    ColumnNotBijective,
    InnerIdentityViolated,
    NotDistributive,
    NotIdempotent,
    RangeError,
)
from .tables import (
    Perm,
    Table,
    as_table,
    columns,
    format_table,
    is_permutation,
    parse_table,
    perm_conj,
    relabel,
)

DEFAULT_ENUM_BOUND = 5


@dataclass(frozen=True)
class FiniteQuandle:
    order: int
    table: Table

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inner(self, y: int) -> Perm:
        """The right translation ``S_y`` as a permutation tuple."""
        return tuple(self.table[x][y] for x in range(self.order))

    def inner_permutations(self) -> tuple[Perm, ...]:
        return columns(self.table)

    def is_trivial(self) -> bool:
        return all(self.table[x][y] == x for x in range(self.order) for y in range(self.order))

    def relabel(self, p) -> "FiniteQuandle":
        return FiniteQuandle(self.order, relabel(self.table, p))

    def to_text(self) -> str:
        return format_table("quandle", self.table)


@dataclass(frozen=True)
class QuandleMap:
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __len__(self) -> int:
        return len(self.map)

    def __iter__(self) -> Iterator[int]:
        return iter(self.map)

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)


def check_quandle(rows, extended: bool = False) -> FiniteQuandle:
    """Validate the three quandle axioms and return the quandle.

    Raises the error for the first failing axiom in the order idempotence,
    column bijectivity, right self-distributivity. With ``extended`` also
    checks ``S_{x*y} = S_y^-1 S_x S_y`` for all pairs.
    """
    table = as_table(rows)
    n = len(table)
    for x in range(n):
        if table[x][x] != x:
            raise NotIdempotent(x)
    cols = columns(table)
    for y in range(n):
        if not is_permutation(cols[y]):
            raise ColumnNotBijective(y)
    for x in range(n):
        row = table[x]
        for y in range(n):
            rxy = table[row[y]]
            ry = table[y]
            for z in range(n):
                if rxy[z] != table[row[z]][ry[z]]:
                    raise NotDistributive(x, y, z)
    if extended:
        for x in range(n):
            for y in range(n):
                if perm_conj(cols[x], cols[y]) != cols[table[x][y]]:
                    raise InnerIdentityViolated(x, y)
    return FiniteQuandle(n, table)


def trivial_quandle(n: int) -> FiniteQuandle:
    return FiniteQuandle(n, tuple(tuple(x for _ in range(n)) for x in range(n)))


def read_quandle(text: str, extended: bool = False) -> FiniteQuandle:
    _, table = parse_table(text, kind="quandle")
    return check_quandle(table, extended=extended)


# -- homomorphisms -----------------------------------------------------------

def is_quandle_hom(f, Q: FiniteQuandle, R: FiniteQuandle) -> bool:
    f = tuple(getattr(f, "map", f))
    if len(f) != Q.order:
        raise RangeError(f"map has length {len(f)}, domain has order {Q.order}")
    if any(not 0 <= v < R.order for v in f):
        raise RangeError(f"map values must lie in 0..{R.order - 1}")
    qt, rt = Q.table, R.table
    return all(
        f[qt[x][y]] == rt[f[x]][f[y]] for x in range(Q.order) for y in range(Q.order)
    )


def find_homs(
    Q: FiniteQuandle,
    R: FiniteQuandle,
    injective_only: bool = False,
    limit: int | None = None,
) -> list[QuandleMap]:
    """Homomorphisms ``Q -> R`` in lexicographic order of their map arrays.

    Assigns ``f(0), f(1), ...`` in turn, smallest candidate first, and prunes as
    soon as an instance ``f(x*y) = f(x)*f(y)`` with all three points assigned
    fails.
    """
    n, qt, rt = Q.order, Q.table, R.table
    if injective_only and n > R.order:
        return []
    f = [-1] * n
    used = [False] * R.order
    out: list[QuandleMap] = []

    def consistent(x: int) -> bool:
        # every triple (a, b, a*b) whose largest index is x
        for a in range(x + 1):
            ra = qt[a]
            for b in range(x + 1):
                c = ra[b]
                if c <= x and (a == x or b == x or c == x):
                    if f[c] != rt[f[a]][f[b]]:
                        return False
        return True

    def search(x: int) -> bool:
        if x == n:
            out.append(QuandleMap(tuple(f)))
            return limit is not None and len(out) >= limit
        for v in range(R.order):
            if injective_only and used[v]:
                continue
            f[x] = v
            if consistent(x):
                used[v] = True
                if search(x + 1):
                    return True
                used[v] = False
        f[x] = -1
        return False

    if limit is None or limit > 0:
        search(0)
    return out


def compose_maps(f: QuandleMap, g: QuandleMap) -> QuandleMap:
    """``f o g``: apply ``g`` first."""
    return QuandleMap(tuple(f.map[x] for x in g.map))


def are_isomorphic(Q: FiniteQuandle, R: FiniteQuandle) -> QuandleMap | None:
    if Q.order != R.order:
        return None
    if sorted(_cycle_type(p) for p in Q.inner_permutations()) != sorted(
        _cycle_type(p) for p in R.inner_permutations()
    ):
        return None
    found = find_homs(Q, R, injective_only=True, limit=1)
    return found[0] if found else None


def _cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths))


# -- enumeration ---------------------------------------------------------------

def canonical_form(Q: FiniteQuandle) -> FiniteQuandle:
    """The relabeling of ``Q`` whose row-major table is lexicographically least."""
    best = min(relabel(Q.table, p) for p in itertools.permutations(range(Q.order)))
    return FiniteQuandle(Q.order, best)


def _column_candidates(n: int, y: int) -> list[Perm]:
    return [p for p in itertools.permutations(range(n)) if p[y] == y]


def iter_quandle_tables(n: int) -> Iterator[Table]:
    """Every labelled quandle table of order ``n``.

    Columns ``S_0, S_1, ...`` are chosen in turn from permutations fixing
    their own index; a partial choice is pruned when some distributivity
    instance ``S_z(S_y(x)) = S_{y*z}(S_z(x))`` with all columns known fails.
    """
    cols: list[Perm] = []
    cands = [_column_candidates(n, y) for y in range(n)]

    def ok(j: int) -> bool:
        for y in range(j + 1):
            for z in range(j + 1):
                w = cols[z][y]
                if w > j or j not in (y, z, w):
                    continue
                sy, sz, sw = cols[y], cols[z], cols[w]
                for x in range(n):
                    if sz[sy[x]] != sw[sz[x]]:
                        return False
        return True

    def search(j: int):
        if j == n:
            yield tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))
            return
        for p in cands[j]:
            cols.append(p)
            if ok(j):
                yield from search(j + 1)
            cols.pop()

    yield from search(0)


def enumerate_quandles(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[FiniteQuandle]:
    """One canonical representative per isomorphism class of order ``n``, sorted."""
    if n < 1:
        raise ValueError("quandles are non-empty")
    if n > bound:
        raise BoundExceeded(f"order {n} exceeds enumeration bound {bound}")
    perms = list(itertools.permutations(range(n)))
    seen: set[Table] = set()
    reps = []
    for table in iter_quandle_tables(n):
        if table in seen:
            continue
        orbit = {relabel(table, p) for p in perms}
        seen |= orbit
        reps.append(FiniteQuandle(n, min(orbit)))
    return sorted(reps, key=lambda q: q.table)
