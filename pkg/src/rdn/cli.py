"""Command-line front end: ``rdn {parse,materialize,validate,explain,tbox,example}``.

Data goes to stdout, diagnostics to stderr.

Exit codes: 0 success / conformant, 1 violations found (or triple absent
for ``explain``), 2 parse error, 3 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .corpus import lewis_full
from .engine import ProofNode, Status, explain, materialize, render_proof
from .graph import DEFAULT_NAMESPACE, Graph
from .terms import Iri, TermError, Triple
from .turtle import Compactor, ParseError, parse, parse_term, serialize
from .validator import check
from .vocab import tbox_turtle

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE_ERROR = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means parse error here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rdn", description="Role-Dependent Names pattern toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--base", default=DEFAULT_NAMESPACE,
        help="namespace bound to the ':' prefix (default: %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", help="parse a Turtle file and print it normalized")
    p.add_argument("path")

    p = sub.add_parser("materialize", help="print the fixpoint of a Turtle file")
    p.add_argument("path")
    p.add_argument("-o", "--output", metavar="OUT", help="write Turtle here instead of stdout")
    p.add_argument("--trace", action="store_true", help="print derivations to stderr")

    p = sub.add_parser("validate", help="check a Turtle file against the pattern")
    p.add_argument("path")
    p.add_argument("--no-materialize", action="store_true",
                   help="check the asserted triples only")
    p.add_argument("--no-una", action="store_true",
                   help="drop the unique name assumption (skips C4 and C9)")
    p.add_argument("--json", action="store_true", help="machine-readable report")

    p = sub.add_parser("explain", help="show how a triple is derived")
    p.add_argument("path")
    p.add_argument("subject")
    p.add_argument("predicate")
    p.add_argument("object")

    sub.add_parser("tbox", help="print the sixteen axioms as OWL in Turtle")
    sub.add_parser("example", help="print the C. S. Lewis example corpus")
    return parser


def _load(path: str, base: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse(text, base)


def _cmd_parse(args, out, err) -> int:
    graph = _load(args.path, args.base)
    out.write(serialize(graph))
    err.write(f"{len(graph)} triples\n")
    return EXIT_OK


def _cmd_materialize(args, out, err) -> int:
    graph = _load(args.path, args.base)
    closed, trace = materialize(graph)
    if args.trace:
        c = Compactor(graph.prefixes)
        for t, d in trace.ordered():
            premises = " & ".join(c.triple(p) for p in d.premises)
            err.write(f"DERIVED {c.triple(t)} BY {d.rule} FROM {premises}\n")
    text = serialize(closed)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
    else:
        out.write(text)
    err.write(f"{len(graph)} asserted, {len(trace)} inferred\n")
    return EXIT_OK


def _cmd_validate(args, out, err) -> int:
    graph = _load(args.path, args.base)
    report = check(
        graph, materialize_first=not args.no_materialize, unique_names=not args.no_una
    )
    if args.json:
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_text())
        for cid in report.not_evaluated:
            err.write(f"{cid} not evaluated (unique name assumption disabled)\n")
        status = "conforms" if report.conforms else f"{len(report)} violation(s)"
        err.write(f"{args.path}: {status}\n")
    return EXIT_OK if report.conforms else EXIT_VIOLATIONS


def _cmd_explain(args, out, err) -> int:
    graph = _load(args.path, args.base)
    try:
        terms = [parse_term(x, graph.prefixes) for x in (args.subject, args.predicate, args.object)]
        target = Triple(*terms)
    except (ParseError, TermError) as exc:
        raise UsageError(f"malformed triple argument: {exc}") from None
    _, trace = materialize(graph)
    c = Compactor(graph.prefixes)
    result = explain(trace, target)
    if isinstance(result, ProofNode):
        out.write(render_proof(result, c.triple) + "\n")
        return EXIT_OK
    out.write(f"{c.triple(target)}  [{result}]\n")
    return EXIT_OK if result is Status.ASSERTED else EXIT_VIOLATIONS


def _cmd_tbox(args, out, err) -> int:
    out.write(tbox_turtle())
    return EXIT_OK


def _cmd_example(args, out, err) -> int:
    out.write(serialize(lewis_full(args.base)))
    return EXIT_OK


_COMMANDS = {
    "parse": _cmd_parse,
    "materialize": _cmd_materialize,
    "validate": _cmd_validate,
    "explain": _cmd_explain,
    "tbox": _cmd_tbox,
    "example": _cmd_example,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        Iri(args.base)
    except TermError as exc:
        err.write(f"rdn: error: --base: {exc}\n")
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out, err)
    except ParseError as exc:
        err.write(f"{getattr(args, 'path', '<input>')}:{exc.line}:{exc.column}: "
                  f"{exc.kind}: {exc.message}\n")
        return EXIT_PARSE_ERROR
    except UsageError as exc:
        err.write(f"rdn: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
