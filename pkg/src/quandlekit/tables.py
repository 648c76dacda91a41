"""Square index tables: validation, relabeling, permutations and the text file format.

Both groups and quandles are stored as ``n x n`` tuples of indices. The file
format is a header line ``<kind> <n>`` followed by ``n`` rows of ``n``
whitespace-separated indices.
"""

from .errors import MalformedTable, ParseError

Table = tuple[tuple[int, ...], ...]
Perm = tuple[int, ...]


def as_table(rows) -> Table:
    """Freeze ``rows`` into a tuple table, rejecting bad shapes and entries."""
    table = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(table)
    if n == 0:
        raise MalformedTable("table is empty")
    for x, row in enumerate(table):
        if len(row) != n:
            raise MalformedTable(f"row {x} has length {len(row)}, expected {n}")
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTable(f"entry ({x},{y}) = {v} out of range 0..{n - 1}")
    return table


def is_permutation(seq, n=None) -> bool:
    n = len(seq) if n is None else n
    return len(seq) == n and sorted(seq) == list(range(n))


def relabel(table: Table, p) -> Table:
    """Return the table with every label ``x`` renamed to ``p[x]``."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        px = p[x]
        row = table[x]
        for y in range(n):
            out[px][p[y]] = p[row[y]]
    return tuple(tuple(r) for r in out)


def columns(table: Table) -> tuple[Perm, ...]:
    n = len(table)
    return tuple(tuple(table[x][y] for x in range(n)) for y in range(n))


# Permutations act on the right: ``perm_mul(a, b)`` applies ``a`` first, then ``b``.

def perm_mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[i] for i in a)


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def perm_conj(a: Perm, b: Perm) -> Perm:
    """``b^-1 a b``: the conjugation-quandle product ``a * b``."""
    return perm_mul(perm_mul(perm_inv(b), a), b)


# -- text format ------------------------------------------------------------

def format_table(kind: str, table: Table) -> str:
    lines = [f"{kind} {len(table)}"]
    lines.extend(" ".join(str(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"


def parse_table(text: str, kind=None) -> tuple[str, Table]:
    """Parse a table file; returns ``(kind, table)``.

    Blank lines and ``#`` comments are ignored. ``kind`` restricts the accepted
    header word when given.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty file", 1)
    lineno, header = lines[0]
    words = header.split()
    if len(words) != 2:
        raise ParseError("header must be '<kind> <n>'", lineno)
    found, size = words
    if kind is not None and found != kind:
        raise ParseError(f"expected '{kind}' header, got '{found}'", lineno)
    if found not in ("group", "quandle"):
        raise ParseError(f"unknown table kind '{found}'", lineno)
    try:
        n = int(size)
    except ValueError:
        raise ParseError(f"bad dimension '{size}'", lineno) from None
    if n <= 0:
        raise ParseError(f"dimension must be positive, got {n}", lineno)
    body = lines[1:]
    if len(body) != n:
        last = body[-1][0] if body else lineno
        raise ParseError(f"expected {n} rows, found {len(body)}", last + (len(body) < n))
    rows = []
    for lineno, line in body:
        try:
            row = [int(w) for w in line.split()]
        except ValueError:
            raise ParseError("non-integer entry", lineno) from None
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
        for v in row:
            if not 0 <= v < n:
                raise ParseError(f"entry {v} out of range 0..{n - 1}", lineno)
        rows.append(tuple(row))
    return found, tuple(rows)
