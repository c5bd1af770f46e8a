"""Symbol numbering and expression/proof codes, with code-level metafunctions.

Every term and formula has an official symbol string over the fixed
alphabet  ( ) , ~ -> forall  x_k  a_1 (the constant 0)  f_1^1 (successor)
f_1^2 (plus)  f_2^2 (times)  A_1^2 (equality):

    0             a1
    x_k           x_k
    S(t)          f_1^1 ( t )
    (t + u)       f_1^2 ( t , u )
    (t * u)       f_2^2 ( t , u )
    (t = u)       A_1^2 ( t , u )
    ~B            ( ~ B )
    (B -> C)      ( B -> C )
    forall x_k.B  ( ( forall x_k ) B )

Two symbol numbering schemes:

  mendelson   ( 3  ) 5  , 7  ~ 9  -> 11  forall 13,  x_k 13+8k,
              a_k 7+8k,  f_k^n 1+8(2^n 3^k),  A_k^n 3+8(2^n 3^k)
  compact     a dense enumeration from 1, variables x_k at 11+k

and two sequence encodings:

  prime       product of p_i ^ code(u_i) over the first primes; faithful
              to the textbook construction but explodes quickly, so a
              feasibility guard (max_symbols, max_code_bits) rejects
              anything large with a loud error instead of grinding
  pairing     a binary stream: a leading 1 bit, then each symbol as a
              self-delimiting (Elias gamma) chunk; numerals are kept as a
              single run-length chunk, so the numeral for n costs
              O(log n) bits and diagonal-sized codes stay workable

The same two-layer scheme encodes proofs: a proof code is the sequence
code of its line formulas' expression codes.  Justifications are not
encoded; the proof predicate re-derives checkability, treating a proof as
a bare formula sequence in which every line must be an axiom or follow
from earlier lines by MP or GEN.

The metafunctions operate on codes: meta_num builds numeral codes
directly, meta_neg and meta_sub rewrite decoded symbol sequences (not
trees) and re-encode, and meta_pf is a total predicate that never raises
on arbitrary input.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import proofs as _proofs
from .syntax import (
    Add,
    BigNumeral,
    CaptureError,
    Eq,
    ForAll,
    Formula,
    Implies,
    Mul,
    Not,
    Succ,
    Term,
    Var,
    Zero,
    canon_numerals,
    numeral_value,
    semantic_eq,
)

Expr = Term | Formula

# Official alphabet symbols, as tagged tuples.
LPAREN = ("lparen",)
RPAREN = ("rparen",)
COMMA = ("comma",)
NEG = ("neg",)
IMP = ("imp",)
FORALL = ("forall",)
ZERO_CONST = ("const", 1)
SUCC_FN = ("fn", 1, 1)
ADD_FN = ("fn", 2, 1)
MUL_FN = ("fn", 2, 2)
EQ_PRED = ("pred", 2, 1)

Symbol = tuple
# A token is a symbol or a numeral run ("numrun", n) standing for the
# official string of the numeral for n (n >= 1).
Token = tuple

SCHEMES = ("mendelson", "compact")
SEQ_ENCODINGS = ("prime", "pairing")

_MAX_DEPTH = 500  # nesting cap for decoded expressions
_MAX_PRIMES = 10_000  # factorisation cap for decoded sequences


class NumberingError(Exception):
    """Base class for coding errors."""


class NotACodeError(NumberingError):
    """The number is not a code of the expected kind."""


class InfeasibleMagnitudeError(NumberingError):
    """The requested code would blow past the feasibility guard."""


@dataclass(frozen=True)
class NumberingConfig:
    """Scheme and sequence-encoding selection plus feasibility guards.

    max_symbols and max_code_bits guard the prime encoding only; the
    pairing encoding grows linearly and needs no guard.  expand_max is
    the largest numeral materialised as an explicit S chain on decode;
    larger numerals decode to compact num(n) nodes.
    """

    scheme: str = "mendelson"
    seq: str = "prime"
    max_symbols: int = 64
    max_code_bits: int = 4096
    expand_max: int = 500

    def __post_init__(self) -> None:
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.seq not in SEQ_ENCODINGS:
            raise ValueError(f"unknown sequence encoding {self.seq!r}")


DEFAULT_CONFIG = NumberingConfig()

_COMPACT_CODES = {
    LPAREN: 1,
    RPAREN: 2,
    COMMA: 3,
    NEG: 4,
    IMP: 5,
    FORALL: 6,
    ZERO_CONST: 7,
    SUCC_FN: 8,
    ADD_FN: 9,
    MUL_FN: 10,
    EQ_PRED: 11,
}
_COMPACT_BY_CODE = {code: sym for sym, code in _COMPACT_CODES.items()}

_MENDELSON_PUNCT = {LPAREN: 3, RPAREN: 5, COMMA: 7, NEG: 9, IMP: 11, FORALL: 13}
_MENDELSON_PUNCT_BY_CODE = {code: sym for sym, code in _MENDELSON_PUNCT.items()}

_LANGUAGE_FNS = {(1, 1), (2, 1), (2, 2)}


def sym_code(symbol: Symbol, config: NumberingConfig = DEFAULT_CONFIG) -> int:
    """The numeric code of an alphabet symbol under the configured scheme."""
    if config.scheme == "mendelson":
        if symbol in _MENDELSON_PUNCT:
            return _MENDELSON_PUNCT[symbol]
        kind = symbol[0]
        if kind == "var":
            return 13 + 8 * symbol[1]
        if kind == "const":
            return 7 + 8 * symbol[1]
        if kind == "fn" and (symbol[1], symbol[2]) in _LANGUAGE_FNS:
            return 1 + 8 * (2 ** symbol[1] * 3 ** symbol[2])
        if kind == "pred" and symbol == EQ_PRED:
            return 3 + 8 * (2 ** symbol[1] * 3 ** symbol[2])
        raise NumberingError(f"not a symbol of the language: {symbol!r}")
    if symbol in _COMPACT_CODES:
        return _COMPACT_CODES[symbol]
    if symbol[0] == "var":
        return 11 + symbol[1]
    raise NumberingError(f"not a symbol of the language: {symbol!r}")


def code_to_symbol(
    code: int, config: NumberingConfig = DEFAULT_CONFIG
) -> Symbol | None:
    """Inverse of sym_code; None when code is no language symbol's code."""
    if code < 1:
        return None
    if config.scheme == "compact":
        if code in _COMPACT_BY_CODE:
            return _COMPACT_BY_CODE[code]
        if code > 11:
            return ("var", code - 11)
        return None
    if code in _MENDELSON_PUNCT_BY_CODE:
        return _MENDELSON_PUNCT_BY_CODE[code]
    if code < 15:
        return None
    residue = code % 8
    payload = code // 8
    if residue == 5:
        return ("var", (code - 13) // 8)
    if residue == 7:
        return ("const", payload) if payload == 1 else None
    if residue in (1, 3):
        # payload must factor as 2^n 3^k for a known function or predicate
        n = 0
        while payload % 2 == 0:
            payload //= 2
            n += 1
        k = 0
        while payload % 3 == 0:
            payload //= 3
            k += 1
        if payload != 1 or n == 0 or k == 0:
            return None
        if residue == 1:
            return ("fn", n, k) if (n, k) in _LANGUAGE_FNS else None
        return ("pred", n, k) if ("pred", n, k) == EQ_PRED else None
    return None


def variable_code(index: int, config: NumberingConfig = DEFAULT_CONFIG) -> int:
    return sym_code(("var", index), config)


# --------------------------------------------------------------------------
# official token streams


def official_tokens(e: Expr) -> list[Token]:
    """The official symbol string of e, with numerals kept as runs."""
    out: list[Token] = []
    _tokens(e, out)
    return out


def _tokens(e: Expr, out: list[Token]) -> None:
    if isinstance(e, Term):
        value = numeral_value(e)
        if value is not None:
            out.append(ZERO_CONST if value == 0 else ("numrun", value))
            return
        if isinstance(e, Var):
            out.append(("var", e.index))
            return
        if isinstance(e, Succ):
            depth = 0
            while isinstance(e, Succ):
                out.append(SUCC_FN)
                out.append(LPAREN)
                depth += 1
                e = e.arg
            _tokens(e, out)
            out.extend([RPAREN] * depth)
            return
        if isinstance(e, (Add, Mul)):
            out.append(ADD_FN if isinstance(e, Add) else MUL_FN)
            out.append(LPAREN)
            _tokens(e.left, out)
            out.append(COMMA)
            _tokens(e.right, out)
            out.append(RPAREN)
            return
        raise TypeError(f"not a term: {e!r}")
    if isinstance(e, Eq):
        out.append(EQ_PRED)
        out.append(LPAREN)
        _tokens(e.left, out)
        out.append(COMMA)
        _tokens(e.right, out)
        out.append(RPAREN)
        return
    if isinstance(e, Not):
        out.append(LPAREN)
        out.append(NEG)
        _tokens(e.body, out)
        out.append(RPAREN)
        return
    if isinstance(e, Implies):
        out.append(LPAREN)
        _tokens(e.left, out)
        out.append(IMP)
        _tokens(e.right, out)
        out.append(RPAREN)
        return
    if isinstance(e, ForAll):
        out.extend([LPAREN, LPAREN, FORALL, ("var", e.index), RPAREN])
        _tokens(e.body, out)
        out.append(RPAREN)
        return
    raise TypeError(f"not a term or formula: {e!r}")


def token_symbol_length(tokens: list[Token]) -> int:
    """Raw symbol count once numeral runs are expanded."""
    total = 0
    for tok in tokens:
        # a run of n successors expands to n function symbols, n opening
        # and n closing parentheses around the zero constant
        total += 3 * tok[1] + 1 if tok[0] == "numrun" else 1
    return total


def symbol_length(e: Expr) -> int:
    return token_symbol_length(official_tokens(e))


def _normalize_tokens(tokens: list[Token]) -> list[Token]:
    """Collapse successor runs around numerals into single numrun tokens.

    Sequence-level rewriting (substitution) can leave f_1^1 ( ... )
    wrappers around a numeral; encoding must be independent of how the
    numeral was assembled, so runs are re-canonicalised here.
    """
    out: list[Token] = []
    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]
        if tok == SUCC_FN and i + 1 < n and tokens[i + 1] == LPAREN:
            j = i
            k = 0
            while j + 1 < n and tokens[j] == SUCC_FN and tokens[j + 1] == LPAREN:
                k += 1
                j += 2
            core = tokens[j] if j < n else None
            value = None
            if core == ZERO_CONST:
                value = 0
            elif core is not None and core[0] == "numrun":
                value = core[1]
            if value is not None and tokens[j + 1 : j + 1 + k] == [RPAREN] * k:
                out.append(("numrun", value + k))
                i = j + 1 + k
                continue
            out.append(tokens[i])
            out.append(tokens[i + 1])
            i += 2
            continue
        if tok[0] == "numrun" and tok[1] == 0:
            out.append(ZERO_CONST)
            i += 1
            continue
        out.append(tok)
        i += 1
    return out


def _expand_tokens(tokens: list[Token], config: NumberingConfig) -> list[Symbol]:
    """Raw symbol list, expanding numeral runs (prime encoding path)."""
    count = token_symbol_length(tokens)
    if count > config.max_symbols:
        raise InfeasibleMagnitudeError(
            f"official string has {count} symbols; the prime-encoding guard "
            f"allows {config.max_symbols}"
        )
    out: list[Symbol] = []
    for tok in tokens:
        if tok[0] == "numrun":
            out.extend([SUCC_FN, LPAREN] * tok[1])
            out.append(ZERO_CONST)
            out.extend([RPAREN] * tok[1])
        else:
            out.append(tok)
    return out


# --------------------------------------------------------------------------
# token parsing (decode direction)


class _TokenParser:
    def __init__(self, tokens: list[Token], expand_max: int):
        self.tokens = tokens
        self.i = 0
        self.expand_max = expand_max

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: Token, what: str) -> None:
        if self.peek() != expected:
            raise NotACodeError(f"official string malformed: expected {what}")
        self.i += 1

    def _numeral(self, value: int) -> Term:
        if value <= self.expand_max:
            t: Term = Zero()
            for _ in range(value):
                t = Succ(t)
            return t
        return BigNumeral(value)

    def parse_expr(self) -> Expr:
        tok = self.peek()
        if tok is None:
            raise NotACodeError("empty official string")
        if tok == EQ_PRED or tok == LPAREN:
            return self.parse_formula(0)
        return self.parse_term(0)

    def parse_term(self, depth: int) -> Term:
        if depth > _MAX_DEPTH:
            raise NotACodeError("official string nests too deeply")
        tok = self.peek()
        if tok is None:
            raise NotACodeError("official string ends inside a term")
        if tok == ZERO_CONST:
            self.i += 1
            return Zero()
        if tok[0] == "numrun":
            self.i += 1
            return self._numeral(tok[1])
        if tok[0] == "var":
            self.i += 1
            if tok[1] < 1:
                raise NotACodeError("variable index must be >= 1")
            return Var(tok[1])
        if tok == SUCC_FN:
            chain = 0
            while self.peek() == SUCC_FN:
                self.i += 1
                self.take(LPAREN, "'(' after successor")
                chain += 1
            core = self.parse_term(depth + 1)
            for _ in range(chain):
                self.take(RPAREN, "')'")
                core = Succ(core)
            value = numeral_value(core)
            if value is not None:
                return self._numeral(value) if value > self.expand_max else core
            return core
        if tok in (ADD_FN, MUL_FN):
            self.i += 1
            self.take(LPAREN, "'('")
            left = self.parse_term(depth + 1)
            self.take(COMMA, "','")
            right = self.parse_term(depth + 1)
            self.take(RPAREN, "')'")
            return Add(left, right) if tok == ADD_FN else Mul(left, right)
        raise NotACodeError(f"unexpected symbol in term position: {tok!r}")

    def parse_formula(self, depth: int) -> Formula:
        if depth > _MAX_DEPTH:
            raise NotACodeError("official string nests too deeply")
        tok = self.peek()
        if tok is None:
            raise NotACodeError("official string ends inside a formula")
        if tok == EQ_PRED:
            self.i += 1
            self.take(LPAREN, "'('")
            left = self.parse_term(depth + 1)
            self.take(COMMA, "','")
            right = self.parse_term(depth + 1)
            self.take(RPAREN, "')'")
            return Eq(left, right)
        if tok == LPAREN:
            nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
            if nxt == NEG:
                self.i += 2
                body = self.parse_formula(depth + 1)
                self.take(RPAREN, "')'")
                return Not(body)
            third = self.tokens[self.i + 2] if self.i + 2 < len(self.tokens) else None
            if nxt == LPAREN and third == FORALL:
                self.i += 3
                var = self.peek()
                if var is None or var[0] != "var" or var[1] < 1:
                    raise NotACodeError("malformed quantifier prefix")
                self.i += 1
                self.take(RPAREN, "')' closing the quantifier prefix")
                body = self.parse_formula(depth + 1)
                self.take(RPAREN, "')'")
                return ForAll(var[1], body)
            self.i += 1
            left = self.parse_formula(depth + 1)
            self.take(IMP, "'->'")
            right = self.parse_formula(depth + 1)
            self.take(RPAREN, "')'")
            return Implies(left, right)
        raise NotACodeError(f"unexpected symbol in formula position: {tok!r}")


def _parse_tokens(tokens: list[Token], config: NumberingConfig) -> Expr:
    parser = _TokenParser(tokens, config.expand_max)
    expr = parser.parse_expr()
    if parser.i != len(tokens):
        raise NotACodeError("trailing symbols after a complete expression")
    return expr


# --------------------------------------------------------------------------
# primes


_primes: list[int] = [2, 3, 5, 7, 11, 13]


def nth_prime(i: int) -> int:
    """The i-th prime, 0-based."""
    candidate = _primes[-1]
    while len(_primes) <= i:
        candidate += 2
        if all(candidate % p for p in _primes if p * p <= candidate):
            _primes.append(candidate)
    return _primes[i]


def _encode_prime_sequence(values: list[int], config: NumberingConfig) -> int:
    estimate = 0
    for i, value in enumerate(values):
        if value > config.max_code_bits:
            raise InfeasibleMagnitudeError(
                f"sequence entry {value} as an exponent would exceed the "
                f"{config.max_code_bits}-bit guard"
            )
        estimate += value * nth_prime(i).bit_length()
        if estimate > config.max_code_bits:
            raise InfeasibleMagnitudeError(
                f"prime-encoded sequence needs about {estimate} bits; the "
                f"guard allows {config.max_code_bits}"
            )
    code = 1
    for i, value in enumerate(values):
        code *= nth_prime(i) ** value
    return code


def _decode_prime_sequence(code: int) -> list[int]:
    if code < 2:
        raise NotACodeError("no valid factorisation shape")
    values = []
    remaining = code
    i = 0
    while remaining > 1:
        if i >= _MAX_PRIMES:
            raise NotACodeError("sequence uses more primes than supported")
        p = nth_prime(i)
        exponent = 0
        while remaining % p == 0:
            remaining //= p
            exponent += 1
        if exponent == 0:
            raise NotACodeError(
                f"no valid factorisation shape (missing prime {p})"
            )
        values.append(exponent)
        i += 1
    return values


# --------------------------------------------------------------------------
# pairing (bit stream) encoding


def _gamma_bits(n: int) -> str:
    # Elias gamma: for n >= 1, len(bin(n))-1 zeros then bin(n).
    b = bin(n)[2:]
    return "0" * (len(b) - 1) + b


def _read_gamma(bits: str, i: int) -> tuple[int, int]:
    zeros = 0
    n = len(bits)
    while i < n and bits[i] == "0":
        zeros += 1
        i += 1
    if i + zeros + 1 > n:
        raise NotACodeError("bit stream ends inside a length-prefixed chunk")
    chunk = bits[i : i + zeros + 1]
    return int(chunk, 2), i + zeros + 1


def _encode_pairing_tokens(tokens: list[Token], config: NumberingConfig) -> int:
    parts = ["1"]
    for tok in tokens:
        if tok[0] == "numrun":
            parts.append(_gamma_bits(1))
            parts.append(_gamma_bits(tok[1]))
        else:
            parts.append(_gamma_bits(sym_code(tok, config) + 1))
    return int("".join(parts), 2)


def _decode_pairing_tokens(code: int, config: NumberingConfig) -> list[Token]:
    if code < 1:
        raise NotACodeError("pairing codes are positive")
    bits = bin(code)[3:]  # strip "0b" and the leading sentinel 1
    tokens: list[Token] = []
    i = 0
    while i < len(bits):
        value, i = _read_gamma(bits, i)
        if value == 1:
            run, i = _read_gamma(bits, i)
            tokens.append(("numrun", run))
            continue
        symbol = code_to_symbol(value - 1, config)
        if symbol is None:
            raise NotACodeError(f"{value - 1} is not a symbol code")
        tokens.append(symbol)
    return tokens


def _encode_pairing_sequence(values: list[int]) -> int:
    parts = ["1"]
    for value in values:
        if value < 1:
            raise NotACodeError("sequence entries must be positive")
        parts.append(_gamma_bits(value))
    return int("".join(parts), 2)


def _decode_pairing_sequence(code: int) -> list[int]:
    if code < 1:
        raise NotACodeError("pairing codes are positive")
    bits = bin(code)[3:]
    values = []
    i = 0
    while i < len(bits):
        value, i = _read_gamma(bits, i)
        values.append(value)
    return values


# --------------------------------------------------------------------------
# expression codes


def _encode_tokens(tokens: list[Token], config: NumberingConfig) -> int:
    tokens = _normalize_tokens(tokens)
    if config.seq == "prime":
        symbols = _expand_tokens(tokens, config)
        return _encode_prime_sequence(
            [sym_code(s, config) for s in symbols], config
        )
    return _encode_pairing_tokens(tokens, config)


def _decode_tokens(code: int, config: NumberingConfig) -> list[Token]:
    if config.seq == "prime":
        values = _decode_prime_sequence(code)
        symbols: list[Token] = []
        for value in values:
            symbol = code_to_symbol(value, config)
            if symbol is None:
                raise NotACodeError(f"{value} is not a symbol code")
            symbols.append(symbol)
        return symbols
    return _decode_pairing_tokens(code, config)


def encode_expr(e: Expr, config: NumberingConfig = DEFAULT_CONFIG) -> int:
    """The code of e's official symbol string."""
    return _encode_tokens(official_tokens(e), config)


def decode_expr(code: int, config: NumberingConfig = DEFAULT_CONFIG) -> Expr:
    """The expression whose official string code is given.

    Raises NotACodeError when code is not an expression code.
    """
    if not isinstance(code, int) or code < 1:
        raise NotACodeError("expression codes are positive integers")
    return _parse_tokens(_decode_tokens(code, config), config)


# --------------------------------------------------------------------------
# metafunctions on codes


def meta_num(n: int, config: NumberingConfig = DEFAULT_CONFIG) -> int:
    """Code of the numeral for n, built without a syntax tree."""
    if n < 0:
        raise ValueError("numerals exist for n >= 0 only")
    tokens: list[Token] = [ZERO_CONST] if n == 0 else [("numrun", n)]
    return _encode_tokens(tokens, config)


def meta_neg(code: int, config: NumberingConfig = DEFAULT_CONFIG) -> int:
    """Code of the negation of the formula encoded by code."""
    tokens = _decode_tokens(code, config)
    expr = _parse_tokens(tokens, config)
    if not isinstance(expr, Formula):
        raise NotACodeError("not a formula code")
    return _encode_tokens([LPAREN, NEG, *tokens, RPAREN], config)


def meta_sub(
    expr_code: int,
    term_code: int,
    var_code: int,
    config: NumberingConfig = DEFAULT_CONFIG,
) -> int:
    """Code-level substitution.

    Rewrites the decoded symbol sequence of expr_code, replacing every
    free occurrence of the variable whose symbol code is var_code by the
    decoded sequence of term_code, then re-encodes.  Mirrors the
    tree-level substitute exactly, including the capture condition.
    """
    var_symbol = code_to_symbol(var_code, config)
    if var_symbol is None or var_symbol[0] != "var":
        raise NotACodeError(f"{var_code} is not a variable symbol code")
    target = var_symbol[1]

    tokens = _decode_tokens(expr_code, config)
    _parse_tokens(tokens, config)  # well-formedness check only

    term_tokens = _decode_tokens(term_code, config)
    term_expr = _parse_tokens(term_tokens, config)
    if not isinstance(term_expr, Term):
        raise NotACodeError("substituent is not a term code")
    term_vars = {tok[1] for tok in term_tokens if tok[0] == "var"}

    out: list[Token] = []
    depth = 0
    # (variable index, depth before the quantifier's outer lparen)
    binders: list[tuple[int, int]] = []
    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]
        if tok == LPAREN:
            if (
                i + 2 < n
                and tokens[i + 1] == LPAREN
                and tokens[i + 2] == FORALL
            ):
                var_tok = tokens[i + 3] if i + 3 < n else None
                if var_tok is None or var_tok[0] != "var":
                    raise NotACodeError("malformed quantifier prefix")
                binders.append((var_tok[1], depth))
                out.extend(tokens[i : i + 5])  # ( ( forall x_k )
                depth += 1  # net effect of the five tokens
                i += 5
                continue
            depth += 1
            out.append(tok)
            i += 1
            continue
        if tok == RPAREN:
            depth -= 1
            while binders and binders[-1][1] >= depth:
                binders.pop()
            out.append(tok)
            i += 1
            continue
        if tok[0] == "var" and tok[1] == target:
            if any(b == target for b, _ in binders):
                out.append(tok)  # bound occurrence
            else:
                for b, _ in binders:
                    if b in term_vars:
                        raise CaptureError(b, target)
                out.extend(term_tokens)
            i += 1
            continue
        out.append(tok)
        i += 1
    return _encode_tokens(out, config)


def encode_proof(
    proof: _proofs.Proof, config: NumberingConfig = DEFAULT_CONFIG
) -> int:
    """Sequence code of the proof's line-formula codes."""
    line_codes = [encode_expr(line.formula, config) for line in proof.lines]
    if config.seq == "prime":
        return _encode_prime_sequence(line_codes, config)
    return _encode_pairing_sequence(line_codes)


def meta_pf(u: int, x: int, config: NumberingConfig = DEFAULT_CONFIG) -> bool:
    """Whether u codes a proof whose conclusion has code x.

    Total: any malformed input yields False, never an exception.  A proof
    here is a nonempty formula sequence in which every formula is an
    axiom instance or follows from earlier entries by MP or GEN.
    """
    try:
        if not isinstance(u, int) or not isinstance(x, int):
            return False
        if config.seq == "prime":
            line_codes = _decode_prime_sequence(u)
        else:
            line_codes = _decode_pairing_sequence(u)
        if not line_codes:
            return False
        formulas = []
        for line_code in line_codes:
            expr = decode_expr(line_code, config)
            if not isinstance(expr, Formula):
                return False
            formulas.append(canon_numerals(expr))
        conclusion = decode_expr(x, config)
        if not isinstance(conclusion, Formula):
            return False
        if formulas[-1] != canon_numerals(conclusion):
            return False
        for m, f in enumerate(formulas):
            if not _derivable_at(formulas, m, f):
                return False
        return True
    except NumberingError:
        return False
    except (ValueError, RecursionError):
        return False


def _derivable_at(formulas: list[Formula], m: int, f: Formula) -> bool:
    if _proofs.is_any_axiom(f):
        return True
    for j in range(m):
        fj = formulas[j]
        if isinstance(fj, Implies) and fj.right == f:
            if any(formulas[i] == fj.left for i in range(m)):
                return True
    if isinstance(f, ForAll):
        body = f.body
        return any(formulas[i] == body for i in range(m))
    return False
