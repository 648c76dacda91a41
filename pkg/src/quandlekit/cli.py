"""Command-line front end.

Every subcommand prints one summary line starting with ``RESULT:``. Exit
codes: 0 success, 1 semantic failure, 2 unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions as cons
from .enveloping import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_DEGREE,
    GroupCertificate,
    Status,
    as_presentation,
    search_embedding,
    verify_certificate,
)
from .errors import (
    BoundExceeded,
    GroupError,
    MalformedTable,
    ParseError,
    QuandleAxiomError,
    QuandleKitError,
)
from .finite_group import check_group, parse_automorphism, read_group
from .quandle_core import (
    DEFAULT_ENUM_BOUND,
    check_quandle,
    enumerate_quandles,
    find_homs,
    read_quandle,
)
from .tables import parse_table

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2

BUILDERS = {
    "conj": lambda G, phi: cons.conj_quandle(G),
    "alex": cons.alexander_quandle,
    "twisted": cons.twisted_conj_quandle,
    "genalex": cons.generalized_alexander_quandle,
}


class _Out:
    """Payload goes to ``--out`` or stdout; messages follow it on stdout only with ``--out``."""

    def __init__(self, path):
        self.path = path
        self.msg_stream = sys.stdout if path else sys.stderr

    def payload(self, text: str):
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)

    def say(self, line: str):
        print(line, file=self.msg_stream)

    def result(self, line: str):
        print(f"RESULT: {line}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def cmd_check(args) -> int:
    kind, table = parse_table(_read(args.path))
    try:
        if kind == "group":
            G = check_group(table)
            print("PASS")
            print(f"RESULT: PASS group order={G.order}")
        else:
            Q = check_quandle(table, extended=True)
            print("PASS")
            print(f"RESULT: PASS quandle order={Q.order}")
    except QuandleAxiomError as exc:
        print(str(exc))
        print(f"RESULT: FAIL axiom={exc.axiom} witness={','.join(map(str, exc.witness))}")
        return EXIT_FAIL
    except GroupError as exc:
        print(str(exc))
        print(f"RESULT: FAIL {type(exc).__name__}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_build(args) -> int:
    G = read_group(_read(args.group))
    phi = parse_automorphism(G, args.phi)
    out = _Out(args.out)
    lq = BUILDERS[args.kind](G, phi)
    if args.format == "presentation":
        out.payload(as_presentation(lq.quandle).to_text())
    elif args.format == "table":
        out.payload(lq.quandle.to_text())
    for note in cons.coincidences(G, phi):
        out.say(note)
    detail = "" if args.kind == "conj" else f" phi={','.join(map(str, phi.map))}"
    out.result(f"BUILT {args.kind} order={lq.order}{detail}")
    return EXIT_OK


def cmd_embed(args) -> int:
    G = read_group(_read(args.group))
    phi = parse_automorphism(G, args.phi)
    if args.mode == "symbolic":
        _, emb, report = cons.embed_into_semidirect(G, phi)
        for g, e in enumerate(emb):
            print(f"{g} -> ({e.g},{e.m})")
        print(report.summary())
        print(f"RESULT: VERIFIED {report.summary()}")
        return EXIT_OK

    Hk, f, report = cons.embed_into_finite_witness(G, phi)
    out = _Out(args.out)
    out.payload(Hk.to_text())
    out.say(f"witness k={report.k} order={Hk.order}")
    if Hk.table == G.table:
        out.say("witness equals input group")
    out.say("map " + " ".join(str(v) for v in f.map))
    out.result(f"VERIFIED witness order={Hk.order} {report.pairs_checked} pairs")
    return EXIT_OK


def cmd_search(args) -> int:
    Q = read_quandle(_read(args.quandle))
    report = search_embedding(Q, max_degree=args.max_degree, budget=args.budget)
    if report.status is Status.EMBEDDABLE:
        if not verify_certificate(Q, report):
            print("RESULT: ERROR certificate failed re-verification")
            return EXIT_FAIL
        cert = report.certificate
        print(f"target {cert.describe()}")
        if isinstance(cert, GroupCertificate):
            print("map " + " ".join(map(str, cert.map.map)))
            detail = f"order={cert.group.order}"
        else:
            for x, p in enumerate(cert.images):
                print(f"{x} -> {list(p)}")
            detail = f"degree={cert.degree}"
        print(f"RESULT: EMBEDDABLE method={report.method} {detail}")
        return EXIT_OK
    reason = "budget" if report.budget_exhausted else "max-degree"
    print(
        f"RESULT: UNKNOWN reached={reason} max_degree={args.max_degree} "
        f"nodes={report.nodes}"
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        reps = enumerate_quandles(args.n, bound=args.bound)
    except BoundExceeded as exc:
        print(str(exc))
        print("RESULT: FAIL bound exceeded")
        return EXIT_FAIL
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, q in enumerate(reps):
            (outdir / f"q{args.n}_{i}.quandle").write_text(q.to_text())
    else:
        for q in reps:
            sys.stdout.write(q.to_text())
    print(f"RESULT: {len(reps)} classes of order {args.n}")
    return EXIT_OK


def cmd_homs(args) -> int:
    Q = read_quandle(_read(args.source))
    R = read_quandle(_read(args.target))
    homs = find_homs(Q, R, injective_only=args.injective, limit=args.limit)
    for f in homs:
        print(" ".join(map(str, f.map)))
    print(f"RESULT: {len(homs)} homomorphisms")
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quandlekit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a group or quandle file")
    c.add_argument("path")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("build", help="build a quandle from a group")
    b.add_argument("kind", choices=sorted(BUILDERS))
    b.add_argument("group")
    b.add_argument("phi", nargs="?", default="id", help="id, aut:<i>, or an explicit map")
    b.add_argument("--out")
    b.add_argument("--format", choices=("table", "presentation", "report"), default="table")
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("embed", help="verify the embedding of Conj(G, phi)")
    e.add_argument("group")
    e.add_argument("phi", nargs="?", default="id")
    e.add_argument("mode", nargs="?", choices=("symbolic", "finite"), default="symbolic")
    e.add_argument("--out")
    e.set_defaults(func=cmd_embed)

    s = sub.add_parser("search", help="search for an embedding certificate")
    s.add_argument("quandle")
    s.add_argument("--max-degree", type=_positive, default=DEFAULT_MAX_DEGREE)
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_search)

    n = sub.add_parser("enumerate", help="one quandle per isomorphism class")
    n.add_argument("n", type=_positive)
    n.add_argument("--bound", type=_positive, default=DEFAULT_ENUM_BOUND)
    n.add_argument("--out", help="directory for the quandle files")
    n.set_defaults(func=cmd_enumerate)

    h = sub.add_parser("homs", help="list quandle homomorphisms")
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--injective", action="store_true")
    h.add_argument("--limit", type=_positive)
    h.set_defaults(func=cmd_homs)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, MalformedTable) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print("RESULT: PARSE-ERROR")
        return EXIT_PARSE
    except QuandleKitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        print(f"RESULT: FAIL {type(exc).__name__}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
