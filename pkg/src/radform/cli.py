"""Command-line front end: verify, diagnose, and transform formula documents.

Every subcommand reads DSL documents or inline expressions, runs the
corresponding library operation, and prints a plain-text report with one
record per line in a stable order, so outputs can be diffed against
golden files.  Exit codes: 0 when every check passes, 1 when a
verification or precondition fails, 2 for unreadable or unparseable
input.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field

from radform.cyclotomic import root_of_unity
from radform.dsl import DslError, PolyContext, max_name_index, parse_expression
from radform.formula import (
    FormalRadicalFormula,
    PolyRadicalFormula,
    SolvabilityScheme,
    builtin,
    parse,
    serialize,
    to_poly_formula,
    verify_poly_formula,
)
from radform.multipoly import symmetrize
from radform.obstruction import run_ruffini
from radform.permchar import Perm, character_of
from radform.resolvent import abel_polynomialize, derive_witnesses
from radform.tower import witness_check

DEFAULT_SEED = 0
DEFAULT_MAX_DEGREE = 24


@dataclass
class CliConfig:
    command: str
    inputs: list = field(default_factory=list)
    output: str | None = None
    seed: int = DEFAULT_SEED
    max_degree: int = DEFAULT_MAX_DEGREE
    verbose: bool = False


def _emit(config: CliConfig, text: str):
    if config.output:
        with open(config.output, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _read_document(path: str):
    with open(path) as handle:
        return parse(handle.read())


def cmd_verify(config: CliConfig) -> int:
    document = _read_document(config.inputs[0])
    if isinstance(document, SolvabilityScheme):
        _emit(
            config,
            f"scheme n={document.n} s={document.s}: shape accepted; "
            "no witnesses to check at this level",
        )
        return 0
    if isinstance(document, PolyRadicalFormula):
        report = verify_poly_formula(document)
    else:
        try:
            witnesses, notes = derive_witnesses(document)
        except ValueError as err:
            return _fail(f"witness derivation failed: {err}", 1)
        report = witness_check(document.spec, witnesses, target=document.target)
        if config.verbose:
            for note in notes:
                print(note, file=sys.stderr)
    _emit(config, "\n".join(report.lines()))
    return 0 if report.all_pass else 1


def cmd_obstruct(config: CliConfig) -> int:
    document = _read_document(config.inputs[0])
    if not isinstance(document, PolyRadicalFormula):
        return _fail("obstruct needs a polyformula document with witnesses", 2)
    try:
        report = run_ruffini(document)
    except ValueError as err:
        return _fail(str(err), 1)
    _emit(config, "\n".join(report.lines()))
    return 0


def _unit_power(value, q: int) -> str:
    eps = root_of_unity(q, q)
    for m in range(q):
        if value == eps ** m:
            if m == 0:
                return "1"
            if m == 1:
                return f"w({q})"
            return f"w({q})^{m}"
    raise AssertionError("character value is not a q-th root of unity")


def cmd_character(config: CliConfig, expr: str, q: int, perms) -> int:
    n = max(max_name_index(expr, "x"), 1)
    for text in perms:
        for digits in re.findall(r"\d+", text):
            n = max(n, int(digits))
    ctx = PolyContext(n, {f"x{i}": i for i in range(1, n + 1)}, where="f")
    f = parse_expression(expr, ctx)
    lines = []
    for text in perms:
        try:
            alpha = Perm.from_cycles(text, n)
        except ValueError as err:
            return _fail(str(err), 2)
        try:
            value = character_of(f, q, alpha)
        except ValueError as err:
            return _fail(f"character undefined for {text.strip()}: {err}", 1)
        lines.append(f"chi({text.strip()}) = {_unit_power(value, q)}")
    _emit(config, "\n".join(lines))
    return 0


def cmd_symmetrize(config: CliConfig, expr: str) -> int:
    n = max_name_index(expr, "x")
    if n == 0:
        return _fail("expression mentions no x-variables", 2)
    ctx = PolyContext(n, {f"x{i}": i for i in range(1, n + 1)}, where="f")
    f = parse_expression(expr, ctx)
    if not f.is_zero():
        exps, _ = f.leading_term()
        if sum(exps) > config.max_degree:
            return _fail(
                f"degree {sum(exps)} exceeds the cap {config.max_degree} "
                "(raise it with --max-degree)",
                1,
            )
    try:
        result = symmetrize(f)
    except ValueError as err:
        return _fail(str(err), 1)
    names = [f"s{i}" for i in range(1, n + 1)]
    _emit(config, result.poly.render(names))
    return 0


def cmd_abelize(config: CliConfig) -> int:
    document = _read_document(config.inputs[0])
    if not isinstance(document, FormalRadicalFormula):
        return _fail("abelize needs a towerformula document", 2)
    try:
        witnesses, notes = derive_witnesses(document)
        report = abel_polynomialize(document, witnesses)
        converted = to_poly_formula(report.final, report.witnesses)
    except ValueError as err:
        return _fail(str(err), 1)
    out = [serialize(converted).rstrip("\n"), ""]
    out.extend(f"# {note}" for note in notes)
    out.extend(f"# {line}" for line in report.lines())
    _emit(config, "\n".join(out))
    return 0


def cmd_builtin(config: CliConfig, name: str) -> int:
    try:
        document = builtin(name)
    except ValueError as err:
        return _fail(str(err), 2)
    _emit(config, serialize(document))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized sampling (default 0)")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                        help="safety cap for expression expansion")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="radform",
        description="verify, diagnose, and transform radical formula documents",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="check every identity of a formula document")
    p.add_argument("input")

    p = sub.add_parser("obstruct", parents=[common],
                       help="run the degree-5 diagnosis on a polyformula")
    p.add_argument("input")

    p = sub.add_parser("character", parents=[common],
                       help="character values of a polynomial at even permutations")
    p.add_argument("expr")
    p.add_argument("q", type=int)
    p.add_argument("perms", nargs="+")

    p = sub.add_parser("symmetrize", parents=[common],
                       help="rewrite a symmetric polynomial in the s-basis")
    p.add_argument("expr")

    p = sub.add_parser("abelize", parents=[common],
                       help="rewrite a towerformula to polynomial witnesses")
    p.add_argument("input")

    p = sub.add_parser("builtin", parents=[common],
                       help="print a built-in formula document")
    p.add_argument("name")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = CliConfig(
        command=args.command,
        inputs=[getattr(args, "input")] if hasattr(args, "input") else [],
        output=args.output,
        seed=args.seed,
        max_degree=args.max_degree,
        verbose=args.verbose,
    )
    try:
        if args.command == "verify":
            return cmd_verify(config)
        if args.command == "obstruct":
            return cmd_obstruct(config)
        if args.command == "character":
            return cmd_character(config, args.expr, args.q, args.perms)
        if args.command == "symmetrize":
            return cmd_symmetrize(config, args.expr)
        if args.command == "abelize":
            return cmd_abelize(config)
        if args.command == "builtin":
            return cmd_builtin(config, args.name)
    except DslError as err:
        return _fail(str(err), 2)
    except OSError as err:
        return _fail(str(err), 2)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
