"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 a negative domain verdict (reference
cycle, paradox, not a code), 3 malformed input.  Output is assembled in full
before anything is written, so a failing run prints nothing to stdout.
"""

from __future__ import annotations

import argparse
import sys

from . import godel
from .metatheory import (
    LeveledCorpus,
    Naming,
    finite_truth_definition,
    liar_report,
    quote,
    stratify,
    t_instance,
    verify_material_adequacy,
)
from .paradox import Scenario, explain, format_valuation, consistent_valuations
from .semantics import (
    Assignment,
    Model,
    SEQUENCE_TABLE,
    build_class_model,
    is_true,
    philosophers_model,
    satisfying_assignments,
    satisfies,
    verdict,
)
from .syntax import LCC, Signature, ast_repr, free_variables, is_sentence, parse_formula, render, subformulas

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _add_model_options(p, need_model=True):
    g = p.add_mutually_exclusive_group(required=need_model)
    g.add_argument("--model", help="'philosophers' or a model JSON file")
    g.add_argument("--class-model-rank", type=int, metavar="R", help="hereditarily finite sets of rank <= R")
    if not need_model:
        g.add_argument("--signature", help="signature JSON file (default: the single binary predicate I)")


def _model(args) -> Model:
    if args.class_model_rank is not None:
        return build_class_model(args.class_model_rank)
    if args.model == "philosophers":
        return philosophers_model()
    return Model.load(args.model)


def _table(args) -> godel.SymbolTable:
    return godel.SymbolTable.load(args.table) if args.table else godel.SymbolTable.default()


def _assignment(args, m: Model) -> Assignment:
    if args.sequence:
        a = Assignment.from_sequence(SEQUENCE_TABLE[args.sequence])
    else:
        a = Assignment({}, args.default if args.default is not None else m.domain[0])
    for item in args.bind:
        name, sep, value = item.partition("=")
        if not sep or not name.startswith("x") or not name[1:].isdigit() or int(name[1:]) < 1:
            raise UsageError(f"bad binding {item!r}; expected xK=ELEMENT")
        a = a.rebind(int(name[1:]), value)
    if args.default is not None and args.sequence:
        a = Assignment(a.bindings, args.default)
    a.check(m)
    return a


def _format_binding(b: dict) -> str:
    return " ".join(f"x{k}={v}" for k, v in b.items()) or "(empty binding)"


# -- subcommands -----------------------------------------------------------

def cmd_parse(args):
    if args.signature:
        sig = Signature.load(args.signature)
    elif args.model or args.class_model_rank is not None:
        sig = _model(args).signature
    else:
        sig = LCC
    f = parse_formula(args.formula, sig)
    fv = sorted(free_variables(f))
    lines = [
        f"ast: {ast_repr(f)}",
        f"text: {render(f)}",
        f"free: {' '.join(str(v) for v in fv) if fv else '-'}",
        f"sentence: {_bool(is_sentence(f))}",
    ]
    if args.subformulas:
        for path, sub in subformulas(f):
            lines.append(f"  [{'.'.join(map(str, path)) or 'root'}] {render(sub)}")
    return EXIT_OK, lines


def cmd_eval(args):
    m = _model(args)
    f = parse_formula(args.formula, m.signature)
    return EXIT_OK, [_bool(satisfies(m, _assignment(args, m), f))]


def cmd_truth(args):
    m = _model(args)
    f = parse_formula(args.formula, m.signature)
    lines = [_bool(is_true(m, f))]
    if args.witness:
        v = verdict(m, Assignment({}, m.domain[0]), f)
        if v.witness:
            lines.append(f"decided by x{v.witness[0]}={v.witness[1]}")
    return EXIT_OK, lines


def cmd_enum(args):
    m = _model(args)
    f = parse_formula(args.formula, m.signature)
    return EXIT_OK, [_format_binding(b) for b in satisfying_assignments(m, f, cap=args.cap)]


def cmd_tschema(args):
    if args.action == "instance":
        sig = _model(args).signature if (args.model or args.class_model_rank is not None) else None
        lines = []
        for text in args.formula:
            inst = t_instance(parse_formula(text, sig), Naming(args.naming), _table(args))
            lines.append(inst.display)
        return EXIT_OK, lines
    if args.action == "define":
        sig = _model(args).signature if (args.model or args.class_model_rank is not None) else None
        d = finite_truth_definition([(quote(t), parse_formula(t, sig)) for t in args.formula])
        return EXIT_OK, [d.display]
    m = _model(args)
    d = finite_truth_definition([(quote(t), parse_formula(t, m.signature)) for t in args.formula])
    report = verify_material_adequacy(d, m)
    return (EXIT_OK if report.passed else EXIT_DOMAIN), report.lines()


def _read_operand(value):
    return value if value is not None else sys.stdin.read().rstrip("\n")


def cmd_godel(args):
    table = _table(args)
    if args.action == "encode":
        return EXIT_OK, [str(godel.encode(table, _read_operand(args.operand)))]
    try:
        n = godel.from_decimal(_read_operand(args.operand))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        d = godel.decode(table, n)
    except godel.CodecError as exc:
        kind = "UNKNOWN CODE" if isinstance(exc, godel.UnknownCode) else "NOT A CODE"
        return EXIT_DOMAIN, [f"{kind}: {exc}"]
    return EXIT_OK, [d.text, "WELL-FORMED" if d.well_formed else "NOT WELL-FORMED"]


def cmd_numeral(args):
    if args.n < 0:
        raise UsageError("numerals are defined for natural numbers")
    return EXIT_OK, [godel.numeral(args.n)]


def cmd_stratify(args):
    result = stratify(LeveledCorpus.load(args.corpus))
    return (EXIT_OK if result.ok else EXIT_DOMAIN), result.lines()


def cmd_liar(args):
    report = liar_report()
    return EXIT_OK, report.lines()


def cmd_kripke(args):
    s = Scenario.load(args.scenario)
    vals = consistent_valuations(s)
    if not vals:
        lines = ["PARADOX: no consistent valuation"]
        if args.explain:
            # show why the all-true candidate fails
            v = {a.id: (a.value if a.is_ground else True) for a in s.assertions}
            lines += [r.line() for r in explain(s, v)]
        return EXIT_DOMAIN, lines
    lines = []
    for v in vals:
        lines.append(format_valuation(v))
        if args.explain:
            lines += ["  " + r.line() for r in explain(s, v)]
    return EXIT_OK, lines


# -- wiring ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tarski", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", help="print AST, free variables and sentence flag")
    p.add_argument("--formula", required=True)
    p.add_argument("--subformulas", action="store_true")
    _add_model_options(p, need_model=False)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("eval", help="does an assignment satisfy a formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--bind", action="append", default=[], metavar="xK=ELEMENT")
    p.add_argument("--default", help="element for every unbound variable (default: first domain element)")
    p.add_argument("--sequence", choices=sorted(SEQUENCE_TABLE), help="start from a tabulated sequence")
    _add_model_options(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("truth", help="truth of a sentence in a model")
    p.add_argument("--formula", required=True)
    p.add_argument("--witness", action="store_true")
    _add_model_options(p)
    p.set_defaults(func=cmd_truth)

    p = sub.add_parser("enum", help="bindings of the free variables that satisfy a formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--cap", type=int, default=10**6)
    _add_model_options(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("tschema", help="T-instances, finite truth definitions, adequacy")
    p.add_argument("action", choices=("instance", "define", "adequacy"))
    p.add_argument("--formula", action="append", required=True)
    p.add_argument("--naming", choices=[n.value for n in Naming], default="quote")
    p.add_argument("--table", help="symbol table JSON file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--model")
    g.add_argument("--class-model-rank", type=int, metavar="R")
    p.set_defaults(func=cmd_tschema)

    p = sub.add_parser("godel", help="Gödel codes of symbol strings")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("operand", nargs="?", help="string or decimal number (default: read stdin)")
    p.add_argument("--table", help="symbol table JSON file")
    p.set_defaults(func=cmd_godel)

    p = sub.add_parser("numeral", help="the numeral s(...s(0)...) for n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_numeral)

    p = sub.add_parser("stratify", help="infer truth levels or report semantic closure")
    p.add_argument("corpus")
    p.set_defaults(func=cmd_stratify)

    p = sub.add_parser("liar", help="certified derivation of the liar contradiction")
    p.set_defaults(func=cmd_liar)

    p = sub.add_parser("kripke", help="consistent valuations of an assertion network")
    p.add_argument("action", choices=("solve",))
    p.add_argument("scenario")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_kripke)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "tschema" and args.action == "adequacy" and not (args.model or args.class_model_rank is not None):
        stderr.write("tarski tschema adequacy: a model is required (--model or --class-model-rank)\n")
        return EXIT_USAGE
    try:
        code, lines = args.func(args)
    except UsageError as exc:
        stderr.write(f"tarski {args.command}: {exc}\n")
        return EXIT_USAGE
    except (ValueError, KeyError, OSError, RuntimeError) as exc:
        # json.JSONDecodeError and every domain validation error are ValueErrors
        stderr.write(f"tarski {args.command}: {exc}\n")
        return EXIT_INPUT
    stdout.write("".join(line + "\n" for line in lines))
    return code


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
