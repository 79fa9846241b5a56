"""Command line front end: ``efslift <subcommand> ...``.

Documents are read from FILE (``-`` for standard input) and results are
written in the text format to standard output, or to ``--out``.  Every run
ends with one summary line ``RESULT <subcommand> pass=<n> fail=<n> seed=<s>``;
the parser skips such lines, so output can be piped straight back in.
"""
from __future__ import annotations

import argparse
import sys

from . import gen
from .efs import FillSquare, diagonal_fill
from .fincat import factor_bo_ff
from .lift import check_lifted_efs, levelwise_factor, lifted_diagonal_fill
from .report import CategoryError, InternalError, InvalidInput, ValidationError
from .shapes import SHAPES
from .textformat import Document, ParseError, parse, render
from .twocat import compose_two_nat, identity_modification

OK, INVALID, PARSE, INTERNAL, USAGE = 0, 1, 2, 3, 4

SHAPE_NAMES = tuple(SHAPES) + ("locally-discrete-random", "random")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def resolve_shape(name, seed=0, p: gen.GenParams = gen.GenParams()):
    """A named shape, or a random one drawn from ``seed``."""
    if name in SHAPES:
        return SHAPES[name]()
    if name == "locally-discrete-random":
        return gen.gen_two_cat(seed, gen.GenParams(p.max_objects, p.max_morphisms, index=gen.TWO_CAT_KINDS.index("locally-discrete")))
    if name == "random":
        return gen.gen_two_cat(seed, p)
    raise UsageError(f"unknown shape {name!r}; choose from {', '.join(SHAPE_NAMES)}")


def _params(args):
    try:
        return gen.GenParams(args.max_objects, args.max_morphisms)
    except InvalidInput as exc:
        raise UsageError(str(exc)) from exc


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _pick(doc, name, kinds, what):
    """The block ``name``; when not given, the block called ``what`` or the only block of one of ``kinds``."""
    if name is None and what.replace("-", "_") in doc:
        name = what.replace("-", "_")
    if name is None:
        found = [n for n in doc.names() if doc.block(n).kind in kinds]
        if len(found) != 1:
            raise UsageError(f"give --{what}: the document has {len(found)} candidate blocks")
        name = found[0]
    if name not in doc:
        raise UsageError(f"no block named {name!r}")
    if doc.block(name).kind not in kinds:
        raise UsageError(f"block {name!r} is a {doc.block(name).kind}, expected {' or '.join(kinds)}")
    return name


def _emit(args, doc):
    text = render(doc)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------


def cmd_validate(args):
    doc = parse(_read(args.file))
    for b in doc:
        print(f"# ok {b.kind} {b.name}")
    return len(doc.blocks), 0


def cmd_factor(args):
    doc = parse(_read(args.file))
    name = _pick(doc, args.functor, ("fun",), "functor")
    f = doc[name]
    fac = factor_bo_ff(f)
    out = doc.subdocument([name])
    out.add("I", fac.i, share=False)
    out.add("B", fac.b, share=False)
    out.add("M", fac.m, share=False)
    _emit(args, out)
    return 1, 0


def cmd_lift(args):
    doc = parse(_read(args.file))
    name = _pick(doc, args.transformation, ("2nat",), "transformation")
    fac = levelwise_factor(doc[name])
    out = doc.subdocument([name])
    out.add("I", fac.i, share=False)
    out.add("eps", fac.eps, share=False)
    out.add("mu", fac.mu, share=False)
    _emit(args, out)
    return 1, 0


def cmd_diagonal_fill(args):
    doc = parse(_read(args.file))
    names = {
        "eps": _pick(doc, args.eps, ("fun", "2nat"), "eps"),
        "mu": _pick(doc, args.mu, ("fun", "2nat"), "mu"),
        "alpha": _pick(doc, args.alpha, ("fun", "2nat"), "alpha"),
        "alpha_prime": _pick(doc, args.alpha_prime, ("fun", "2nat"), "alpha-prime"),
    }
    kinds = {doc.block(n).kind for n in names.values()}
    if len(kinds) != 1:
        raise UsageError("eps, mu, alpha and alpha-prime must all be functors or all 2-natural transformations")
    lifted = kinds == {"2nat"}
    psi_name = args.psi
    if psi_name is None and "psi" in doc:
        psi_name = "psi"
    if psi_name is not None:
        psi_name = _pick(doc, psi_name, ("mod",) if lifted else ("nat",), "psi")
        names["psi"] = psi_name
    eps, mu, alpha, alpha_prime = (doc[names[k]] for k in ("eps", "mu", "alpha", "alpha_prime"))
    psi = doc[psi_name] if psi_name is not None else None
    if lifted:
        if psi is None:
            psi = identity_modification(compose_two_nat(alpha_prime, eps))
        delta, psi_tilde = lifted_diagonal_fill(eps, mu, alpha, alpha_prime, psi)
    else:
        delta, psi_tilde = diagonal_fill(FillSquare(eps, mu, alpha, alpha_prime, psi))
    out = doc.subdocument(names.values())
    out.add("delta", delta, share=False)
    out.add("psi_tilde", psi_tilde, share=False)
    _emit(args, out)
    return 1, 0


def cmd_check_axioms(args):
    c = resolve_shape(args.shape, args.seed, _params(args))
    report = check_lifted_efs(c, seed=args.seed, cases=args.cases)
    for v in report.violations:
        print(f"case {v.where[0]} (seed {v.where[1]}): {v.message}", file=sys.stderr)
    if report.counterexamples and args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(report.counterexamples[0])
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from exc
    print(f"# check-axioms shape={args.shape} pass {report.passed}/{args.cases}")
    return report.passed, args.cases - report.passed


GENERATE_KINDS = gen.DOCUMENT_KINDS + ("square", "fill")


def cmd_generate(args):
    p = _params(args)
    if args.kind == "square":
        inst = gen.gen_fill_instance(args.seed, p)
        sq = inst.square
        doc = Document()
        for name in ("eps", "mu", "alpha", "alpha_prime", "psi"):
            doc.add(name, getattr(sq, name), share=False)
    elif args.kind == "fill":
        from .lift import LiftedFill

        c = resolve_shape(args.shape, args.seed, p)
        fill = LiftedFill(gen.rng_for(args.seed), c, gen.GenParams(min(p.max_objects, 3), min(p.max_morphisms, 5)))
        doc = Document()
        doc.add("C", c)
        for name in ("eps", "mu", "alpha", "alpha_prime", "psi"):
            doc.add(name, getattr(fill, name), share=False)
    else:
        doc = gen.gen_document(args.seed, args.kind, p)
    _emit(args, doc)
    return 1, 0


# -- driver --------------------------------------------------------------


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cases", type=int, default=100)
    common.add_argument("--shape", default="walking-arrow", choices=SHAPE_NAMES)
    common.add_argument("--max-objects", type=int, default=4)
    common.add_argument("--max-morphisms", type=int, default=12)
    common.add_argument("--out", metavar="FILE")

    parser = _Parser(prog="efslift", description="Finite bo/ff factorizations, fills and their levelwise lifts.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser("validate", parents=[common], help="parse and validate a document")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("factor", parents=[common], help="bo/ff factorization of a functor")
    p.add_argument("--functor", metavar="NAME")
    p.add_argument("file")
    p.set_defaults(run=cmd_factor)

    p = sub.add_parser("diagonal-fill", parents=[common], help="fill a square, in Cat or levelwise")
    for flag in ("--eps", "--mu", "--alpha", "--alpha-prime", "--psi"):
        p.add_argument(flag, metavar="NAME")
    p.add_argument("file")
    p.set_defaults(run=cmd_diagonal_fill)

    p = sub.add_parser("lift", parents=[common], help="levelwise factorization of a 2-natural transformation")
    p.add_argument("--transformation", metavar="NAME")
    p.add_argument("file")
    p.set_defaults(run=cmd_lift)

    p = sub.add_parser("check-axioms", parents=[common], help="run the lifted axiom harness on a shape")
    p.set_defaults(run=cmd_check_axioms)

    p = sub.add_parser("generate", parents=[common], help="print a random document")
    p.add_argument("--kind", default="cat", choices=GENERATE_KINDS)
    p.set_defaults(run=cmd_generate)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    if args.cases < 0:
        print("efslift: --cases must be non-negative", file=sys.stderr)
        return USAGE
    passed, failed, code = 0, 1, OK
    try:
        passed, failed = args.run(args)
        code = OK if failed == 0 else INTERNAL
    except UsageError as exc:
        print(f"efslift: {exc}", file=sys.stderr)
        return USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = PARSE
    except ValidationError as exc:
        print(f"invalid {exc.what}:", file=sys.stderr)
        for v in exc.report.violations:
            print(f"  {v}", file=sys.stderr)
        code = INVALID
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        code = INTERNAL
    except CategoryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        code = INVALID
    print(f"RESULT {args.command} pass={passed} fail={failed} seed={args.seed}")
    sys.stdout.flush()
    return code


def main():
    sys.exit(run())
