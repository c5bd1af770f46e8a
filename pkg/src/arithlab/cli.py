"""Command-line front end.

One subcommand per workbench operation, with minimal deterministic
output so results can be scripted against.  Exit codes follow one
contract everywhere: 0 success / accepted / true, 1 rejected / false /
violations found / operation refused, 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import sys

from . import corpus as corpus_mod
from . import diagonal, models, primrec
from .godel import (
    InfeasibleMagnitudeError,
    NotACodeError,
    NumberingConfig,
    NumberingError,
    decode_expr,
    encode_expr,
    encode_proof,
    meta_neg,
    meta_num,
    meta_pf,
    meta_sub,
)
from .proofs import ProofFormatError, check_proof, parse_proof
from .syntax import (
    CaptureError,
    ForAll,
    ParseError,
    SyntaxToolError,
    numeral,
    parse,
    parse_formula,
    substitute,
    to_text,
)

_SEQ_NAMES = {"prime": "prime", "pair": "pairing"}
_MODE_NAMES = {"standard": "standard", "param": "parameterized"}


def _config(args) -> NumberingConfig:
    return NumberingConfig(scheme=args.scheme, seq=_SEQ_NAMES[args.seq])


def _add_coding_flags(sub) -> None:
    sub.add_argument(
        "--scheme",
        choices=("mendelson", "compact"),
        default="mendelson",
        help="symbol numbering scheme",
    )
    sub.add_argument(
        "--seq",
        choices=("prime", "pair"),
        default="prime",
        help="sequence encoding (prime powers or the pairing bit stream)",
    )


def _read_file(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


class _ArgError(Exception):
    """Bad command line value, reported like any other error."""


def _int_arg(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise _ArgError(f"{what} must be an integer, got {text!r}") from None
    if value < 0:
        raise _ArgError(f"{what} must be nonnegative")
    return value


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_parse(args) -> int:
    print(to_text(parse(args.text)))
    return 0


def cmd_check_proof(args) -> int:
    proof = parse_proof(_read_file(args.file))
    result = check_proof(proof)
    if result.accepted:
        print(f"accepted: {to_text(result.theorem)}")
        return 0
    print(f"rejected at line {result.line}: {result.reason}")
    return 1


def cmd_encode(args) -> int:
    print(encode_expr(parse(args.text), _config(args)))
    return 0


def cmd_decode(args) -> int:
    code = _int_arg(args.code, "code")
    print(to_text(decode_expr(code, _config(args))))
    return 0


def cmd_num(args) -> int:
    n = _int_arg(args.n, "n")
    print(meta_num(n, _config(args)))
    return 0


def cmd_neg(args) -> int:
    code = _int_arg(args.code, "code")
    print(meta_neg(code, _config(args)))
    return 0


def cmd_sub(args) -> int:
    expr = _int_arg(args.expr_code, "expression code")
    term = _int_arg(args.term_code, "term code")
    var = _int_arg(args.var_code, "variable code")
    print(meta_sub(expr, term, var, _config(args)))
    return 0


def cmd_pf(args) -> int:
    u = _int_arg(args.proof_code, "proof code")
    x = _int_arg(args.conclusion_code, "conclusion code")
    if meta_pf(u, x, _config(args)):
        print("yes")
        return 0
    print("no")
    return 1


def cmd_encode_proof(args) -> int:
    proof = parse_proof(_read_file(args.file))
    print(encode_proof(proof, _config(args)))
    return 0


def cmd_diag(args) -> int:
    formula = parse_formula(args.formula)
    result = diagonal.diagonalize(formula, args.var, _config(args))
    print(f"q {result.q}")
    print(f"p {result.p}")
    if result.r is not None:
        print(f"r {result.r}")
        print(f"sentence-code {result.sentence_code}")
    else:
        print(f"r {result.r_expression}")
        print(f"sentence-code {result.sentence_code_expression}")
    print(f"sentence {to_text(result.sentence)}")
    return 0


def cmd_represent(args) -> int:
    func = primrec.parse_pr(args.function)
    rep = primrec.represent(func)
    print(f"arity {func.arity}")
    print(
        "inputs "
        + " ".join(f"x{i}" for i in rep.inputs)
        + f"  output x{rep.output}"
    )
    print(to_text(rep.formula))
    if args.check is None:
        return 0
    try:
        arg_values = tuple(int(tok) for tok in args.check.split(","))
    except ValueError:
        return _fail(f"--check takes comma-separated integers, got {args.check!r}")
    verdict = primrec.check_representation(func, arg_values, args.bound)
    print(verdict)
    return 0 if verdict.verdict == "confirmed" else 1


def cmd_eval(args) -> int:
    m = models.parse_interpretation(_read_file(args.model))
    formula = parse_formula(args.formula)
    if models.is_true(m, formula, _MODE_NAMES[args.mode]):
        print("true")
        return 0
    print("false")
    return 1


def cmd_image(args) -> int:
    m = models.parse_interpretation(_read_file(args.model))
    print(" ".join(str(v) for v in models.numeral_image(m)))
    return 0


def cmd_restrict(args) -> int:
    m = models.parse_interpretation(_read_file(args.model))
    try:
        print(models.format_interpretation(models.restrict(m)), end="")
    except models.RestrictError as e:
        print(f"not restrictable: {e}", file=sys.stderr)
        return 1
    return 0


def cmd_chain(args) -> int:
    m = models.parse_interpretation(_read_file(args.model))
    formula = parse_formula(args.formula)
    mode = _MODE_NAMES[args.mode]
    universal = models.is_true(m, ForAll(args.var, formula), mode)
    points = len(models.numeral_image(m)) + 1
    instances = []
    for k in range(points):
        inst = models.is_true(m, substitute(formula, args.var, numeral(k)), mode)
        instances.append(inst)
        print(f"instance {k}: {'true' if inst else 'false'}")
    print(f"universal: {'true' if universal else 'false'}")
    agree = universal == all(instances)
    print("chain: " + ("consistent" if agree else "divergent"))
    return 0 if agree else 1


def cmd_metacheck(args) -> int:
    budget: int | str
    if args.budget == "full":
        budget = "full"
    else:
        try:
            budget = int(args.budget)
        except ValueError:
            return _fail(f"--budget takes an integer or 'full', got {args.budget!r}")
    families = tuple(tok for tok in args.families.split(",") if tok)
    try:
        report = models.metacheck(
            args.size, families, _MODE_NAMES[args.mode], budget, args.eq
        )
    except ValueError as e:
        return _fail(str(e))
    print(report)
    return 1 if report.violations else 0


def cmd_corpus(args) -> int:
    names = corpus_mod.write_corpus(args.directory)
    print(f"wrote {len(names)} proofs to {args.directory}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithlab",
        description="workbench for first-order arithmetic: syntax, proofs, "
        "codes, representability, diagonalisation and finite models",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("parse", help="parse and echo canonical text")
    sub.add_argument("text")
    sub.set_defaults(func=cmd_parse)

    sub = commands.add_parser("check-proof", help="run the proof checker on a file")
    sub.add_argument("file")
    sub.set_defaults(func=cmd_check_proof)

    sub = commands.add_parser("encode", help="code of an expression")
    sub.add_argument("text")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_encode)

    sub = commands.add_parser("decode", help="expression of a code")
    sub.add_argument("code")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_decode)

    sub = commands.add_parser("num", help="code of the numeral for n")
    sub.add_argument("n")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_num)

    sub = commands.add_parser("neg", help="code of the negation of a coded formula")
    sub.add_argument("code")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_neg)

    sub = commands.add_parser(
        "sub", help="code-level substitution of a coded term for a variable"
    )
    sub.add_argument("expr_code")
    sub.add_argument("term_code")
    sub.add_argument("var_code")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_sub)

    sub = commands.add_parser(
        "pf", help="does the first code prove the second? (total check)"
    )
    sub.add_argument("proof_code")
    sub.add_argument("conclusion_code")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_pf)

    sub = commands.add_parser("encode-proof", help="code of a proof file")
    sub.add_argument("file")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_encode_proof)

    sub = commands.add_parser(
        "diag", help="diagonalise a formula against its own closure code"
    )
    sub.add_argument("formula")
    sub.add_argument("--var", type=int, default=2, help="diagonal slot variable")
    _add_coding_flags(sub)
    sub.set_defaults(func=cmd_diag)

    sub = commands.add_parser(
        "represent", help="representing formula of a PR function"
    )
    sub.add_argument("function", help="s-expression or catalog name")
    sub.add_argument(
        "--check", help="comma-separated arguments to probe numerically"
    )
    sub.add_argument("--bound", type=int, default=100, help="rival search bound")
    sub.set_defaults(func=cmd_represent)

    sub = commands.add_parser("eval", help="truth of a formula in a finite model")
    sub.add_argument("model", help="interpretation file")
    sub.add_argument("formula")
    sub.add_argument(
        "--mode", choices=("standard", "param"), default="standard"
    )
    sub.set_defaults(func=cmd_eval)

    sub = commands.add_parser("image", help="numeral image of a finite model")
    sub.add_argument("model")
    sub.set_defaults(func=cmd_image)

    sub = commands.add_parser(
        "restrict", help="substructure of a model on its numeral image"
    )
    sub.add_argument("model")
    sub.set_defaults(func=cmd_restrict)

    sub = commands.add_parser(
        "chain", help="universal truth against numeral instances in a model"
    )
    sub.add_argument("model")
    sub.add_argument("var", type=int)
    sub.add_argument("formula")
    sub.add_argument(
        "--mode", choices=("standard", "param"), default="standard"
    )
    sub.set_defaults(func=cmd_chain)

    sub = commands.add_parser(
        "metacheck",
        help="hunt for violations of pinned laws over small interpretations",
    )
    sub.add_argument("--size", type=int, default=2, help="largest domain size")
    sub.add_argument(
        "--families",
        default="A1,A2,A3,A4,A5",
        help="comma-separated family names",
    )
    sub.add_argument(
        "--mode", choices=("standard", "param"), default="standard"
    )
    sub.add_argument("--budget", default="full")
    sub.add_argument(
        "--eq", choices=("identity", "congruent"), default="identity"
    )
    sub.set_defaults(func=cmd_metacheck)

    sub = commands.add_parser("corpus", help="write the bundled proof corpus")
    sub.add_argument("directory")
    sub.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000_000)  # codes outgrow the default cap
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CaptureError, models.RestrictError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return 1
    except ParseError as e:
        return _fail(str(e))
    except (NotACodeError, InfeasibleMagnitudeError, NumberingError) as e:
        return _fail(str(e))
    except (primrec.PRError, models.ModelError, SyntaxToolError,
            _ArgError) as e:
        return _fail(str(e))
    except ProofFormatError as e:
        return _fail(str(e))
    except OSError as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
