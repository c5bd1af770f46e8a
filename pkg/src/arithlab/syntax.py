"""Terms and formulas of first-order arithmetic, with a parser and printer.

The object language has individual variables x1, x2, ..., the constant 0,
successor S, binary + and *, equality as the only predicate, and the
connectives ~ (negation), -> (implication) and forall.  Conjunction,
disjunction and exists are accepted by the parser as sugar and expand into
the primitive connectives.

Concrete grammar (whitespace between tokens is insignificant):

    term    := "0" | "x" DIGITS | "S(" term ")"
             | "(" term "+" term ")" | "(" term "*" term ")"
             | "num(" DIGITS ")"
    formula := "(" term "=" term ")" | "~" formula
             | "(" formula "->" formula ")" | "forall x" DIGITS "." formula

The printer emits exactly this grammar with single spaces around infix
operators, so parse(to_text(e)) == e for every tree the library builds.

num(n) is a compact numeral: it stands for n nested applications of S to 0
without materialising them.  num(0) is interchangeable with 0 everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class Term:
    """Base class for terms."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


class Formula:
    """Base class for formulas."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Var(Term):
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Succ(Term):
    arg: Term


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class BigNumeral(Term):
    """The numeral for n, kept as a count instead of a Succ chain."""

    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"numeral value must be >= 0, got {self.value}")


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ForAll(Formula):
    index: int
    body: Formula

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")


Expr = Term | Formula


def numeral(n: int) -> BigNumeral:
    """The numeral for n in compact form."""
    return BigNumeral(n)


def conj(a: Formula, b: Formula) -> Formula:
    """a and b, expanded to primitives as ~(a -> ~b)."""
    return Not(Implies(a, Not(b)))


def disj(a: Formula, b: Formula) -> Formula:
    """a or b, expanded to primitives as (~a -> b)."""
    return Implies(Not(a), b)


def exists(index: int, body: Formula) -> Formula:
    """exists x_index, expanded to primitives as ~forall x_index ~body."""
    return Not(ForAll(index, Not(body)))


# --------------------------------------------------------------------------
# errors


class SyntaxToolError(Exception):
    """Base class for errors raised by this module."""


class ParseError(SyntaxToolError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CaptureError(SyntaxToolError):
    """Substituting a term would capture one of its variables."""

    def __init__(self, binder: int, var: int):
        super().__init__(
            f"substituting for x{var} would capture x{binder} "
            f"under its binder"
        )
        self.binder = binder
        self.var = var


# --------------------------------------------------------------------------
# printing


def to_text(e: Expr) -> str:
    parts: list[str] = []
    _emit(e, parts)
    return "".join(parts)


def _emit(e: Expr, out: list[str]) -> None:
    if isinstance(e, Succ):
        # Peel whole chains iteratively; deep numerals must not recurse.
        depth = 0
        while isinstance(e, Succ):
            out.append("S(")
            depth += 1
            e = e.arg
        _emit(e, out)
        out.append(")" * depth)
    elif isinstance(e, Zero):
        out.append("0")
    elif isinstance(e, Var):
        out.append(f"x{e.index}")
    elif isinstance(e, BigNumeral):
        out.append(f"num({e.value})")
    elif isinstance(e, (Add, Mul)):
        op = "+" if isinstance(e, Add) else "*"
        out.append("(")
        _emit(e.left, out)
        out.append(f" {op} ")
        _emit(e.right, out)
        out.append(")")
    elif isinstance(e, Eq):
        out.append("(")
        _emit(e.left, out)
        out.append(" = ")
        _emit(e.right, out)
        out.append(")")
    elif isinstance(e, Not):
        out.append("~")
        _emit(e.body, out)
    elif isinstance(e, Implies):
        out.append("(")
        _emit(e.left, out)
        out.append(" -> ")
        _emit(e.right, out)
        out.append(")")
    elif isinstance(e, ForAll):
        out.append(f"forall x{e.index} . ")
        _emit(e.body, out)
    else:
        raise TypeError(f"not a term or formula: {e!r}")


# --------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<lpar>\()|(?P<rpar>\))|(?P<plus>\+)"
    r"|(?P<star>\*)|(?P<eq>=)|(?P<tilde>~)|(?P<dot>\.)|(?P<amp>&)"
    r"|(?P<bar>\|)|(?P<var>x[0-9]+)|(?P<number>[0-9]+)"
    r"|(?P<word>[A-Za-z_][A-Za-z0-9_]*))"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r}", n - len(rest))
        kind = m.lastgroup
        assert kind is not None
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            got = tok.text or "end of input"
            raise ParseError(f"expected {what}, got {got!r}", tok.pos)
        return self.advance()

    # items ---------------------------------------------------------------

    def parse_item(self) -> Expr:
        tok = self.peek()
        if tok.kind == "tilde" or (
            tok.kind == "word" and tok.text in ("forall", "exists")
        ):
            return self.parse_formula()
        if tok.kind == "lpar":
            return self._parse_paren()
        return self.parse_term()

    def _parse_paren(self) -> Expr:
        self.expect("lpar", "'('")
        first = self.parse_item()
        tok = self.peek()
        if isinstance(first, Term):
            if tok.kind in ("plus", "star"):
                self.advance()
                second = self.parse_term()
                self.expect("rpar", "')'")
                return Add(first, second) if tok.kind == "plus" else Mul(first, second)
            if tok.kind == "eq":
                self.advance()
                second = self.parse_term()
                self.expect("rpar", "')'")
                return Eq(first, second)
            raise ParseError(
                f"expected '+', '*' or '=' after term, got {tok.text or 'end of input'!r}",
                tok.pos,
            )
        if tok.kind == "arrow":
            self.advance()
            second = self.parse_formula()
            self.expect("rpar", "')'")
            return Implies(first, second)
        if tok.kind == "amp":
            self.advance()
            second = self.parse_formula()
            self.expect("rpar", "')'")
            return conj(first, second)
        if tok.kind == "bar":
            self.advance()
            second = self.parse_formula()
            self.expect("rpar", "')'")
            return disj(first, second)
        raise ParseError(
            f"expected '->' after formula, got {tok.text or 'end of input'!r}",
            tok.pos,
        )

    # terms ---------------------------------------------------------------

    def parse_term(self) -> Term:
        tok = self.peek()
        if tok.kind == "number":
            if tok.text != "0":
                raise ParseError(
                    f"bare numeral literals other than '0' are not terms; "
                    f"write num({tok.text})",
                    tok.pos,
                )
            self.advance()
            return Zero()
        if tok.kind == "var":
            self.advance()
            index = int(tok.text[1:])
            if index < 1:
                raise ParseError("variable index must be >= 1", tok.pos)
            return Var(index)
        if tok.kind == "word" and tok.text == "S":
            # Peel whole S chains in a loop; deep chains must not recurse.
            depth = 0
            while self.peek().kind == "word" and self.peek().text == "S":
                self.advance()
                self.expect("lpar", "'(' after S")
                depth += 1
            core = self.parse_term()
            for _ in range(depth):
                self.expect("rpar", "')'")
                core = Succ(core)
            return core
        if tok.kind == "word" and tok.text == "num":
            self.advance()
            self.expect("lpar", "'(' after num")
            number = self.expect("number", "numeral digits")
            self.expect("rpar", "')'")
            return BigNumeral(int(number.text))
        if tok.kind == "lpar":
            item = self._parse_paren()
            if not isinstance(item, Term):
                raise ParseError("expected a term, found a formula", tok.pos)
            return item
        raise ParseError(
            f"expected a term, got {tok.text or 'end of input'!r}", tok.pos
        )

    # formulas ------------------------------------------------------------

    def parse_formula(self) -> Formula:
        tok = self.peek()
        if tok.kind == "tilde":
            self.advance()
            return Not(self.parse_formula())
        if tok.kind == "word" and tok.text == "forall":
            self.advance()
            var = self.expect("var", "a variable after forall")
            index = int(var.text[1:])
            if index < 1:
                raise ParseError("variable index must be >= 1", var.pos)
            self.expect("dot", "'.' after quantified variable")
            return ForAll(index, self.parse_formula())
        if tok.kind == "word" and tok.text == "exists":
            self.advance()
            var = self.expect("var", "a variable after exists")
            index = int(var.text[1:])
            if index < 1:
                raise ParseError("variable index must be >= 1", var.pos)
            self.expect("dot", "'.' after quantified variable")
            return exists(index, self.parse_formula())
        if tok.kind == "lpar":
            item = self._parse_paren()
            if not isinstance(item, Formula):
                raise ParseError("expected a formula, found a term", tok.pos)
            return item
        raise ParseError(
            f"expected a formula, got {tok.text or 'end of input'!r}", tok.pos
        )


def parse(text: str) -> Expr:
    """Parse text as a term or a formula, whichever it is."""
    p = _Parser(text)
    item = p.parse_item()
    tail = p.peek()
    if tail.kind != "eof":
        raise ParseError(f"trailing input {tail.text!r}", tail.pos)
    return item


def parse_term(text: str) -> Term:
    item = parse(text)
    if not isinstance(item, Term):
        raise ParseError("expected a term, found a formula", 0)
    return item


def parse_formula(text: str) -> Formula:
    item = parse(text)
    if not isinstance(item, Formula):
        raise ParseError("expected a formula, found a term", 0)
    return item


# --------------------------------------------------------------------------
# free variables and substitution


def free_vars(e: Expr) -> frozenset[int]:
    """Indices of the variables occurring free in e."""
    out: set[int] = set()
    # (node, bound-variable set) work list; Succ chains are peeled inline.
    stack: list[tuple[Expr, frozenset[int]]] = [(e, frozenset())]
    while stack:
        node, bound = stack.pop()
        while isinstance(node, Succ):
            node = node.arg
        if isinstance(node, Var):
            if node.index not in bound:
                out.add(node.index)
        elif isinstance(node, (Zero, BigNumeral)):
            pass
        elif isinstance(node, (Add, Mul, Eq)):
            stack.append((node.left, bound))
            stack.append((node.right, bound))
        elif isinstance(node, Not):
            stack.append((node.body, bound))
        elif isinstance(node, Implies):
            stack.append((node.left, bound))
            stack.append((node.right, bound))
        elif isinstance(node, ForAll):
            stack.append((node.body, bound | {node.index}))
        else:
            raise TypeError(f"not a term or formula: {node!r}")
    return frozenset(out)


def substitute_term(t: Term, var: int, replacement: Term) -> Term:
    if isinstance(t, Var):
        return replacement if t.index == var else t
    if isinstance(t, (Zero, BigNumeral)):
        return t
    if isinstance(t, Succ):
        depth = 0
        while isinstance(t, Succ):
            depth += 1
            t = t.arg
        core = substitute_term(t, var, replacement)
        for _ in range(depth):
            core = Succ(core)
        return core
    if isinstance(t, Add):
        return Add(
            substitute_term(t.left, var, replacement),
            substitute_term(t.right, var, replacement),
        )
    if isinstance(t, Mul):
        return Mul(
            substitute_term(t.left, var, replacement),
            substitute_term(t.right, var, replacement),
        )
    raise TypeError(f"not a term: {t!r}")


def substitute(f: Formula, var: int, replacement: Term) -> Formula:
    """f with replacement for every free occurrence of x_var.

    Raises CaptureError if a free variable of the replacement would fall
    under a binder of f (the replacement is not free for x_var in f).
    """
    if isinstance(f, Eq):
        return Eq(
            substitute_term(f.left, var, replacement),
            substitute_term(f.right, var, replacement),
        )
    if isinstance(f, Not):
        return Not(substitute(f.body, var, replacement))
    if isinstance(f, Implies):
        return Implies(
            substitute(f.left, var, replacement),
            substitute(f.right, var, replacement),
        )
    if isinstance(f, ForAll):
        if f.index == var:
            return f
        if var not in free_vars(f.body):
            return f
        if f.index in free_vars(replacement):
            raise CaptureError(f.index, var)
        return ForAll(f.index, substitute(f.body, var, replacement))
    raise TypeError(f"not a formula: {f!r}")


# --------------------------------------------------------------------------
# numeral handling


def numeral_value(t: Term) -> int | None:
    """The n such that t is the numeral for n, or None if t is not one."""
    count = 0
    while isinstance(t, Succ):
        count += 1
        t = t.arg
    if isinstance(t, Zero):
        return count
    if isinstance(t, BigNumeral):
        return count + t.value
    return None


def expand_numerals(e: Expr, limit: int = 10**6) -> Expr:
    """e with every num(n) node replaced by an explicit S chain.

    Refuses to expand a numeral larger than limit, since the result would
    have that many nodes.
    """
    if isinstance(e, BigNumeral):
        if e.value > limit:
            raise ValueError(
                f"refusing to expand num({e.value}); limit is {limit}"
            )
        t: Term = Zero()
        for _ in range(e.value):
            t = Succ(t)
        return t
    if isinstance(e, (Zero, Var)):
        return e
    if isinstance(e, Succ):
        depth = 0
        while isinstance(e, Succ):
            depth += 1
            e = e.arg
        core = expand_numerals(e, limit)
        assert isinstance(core, Term)
        for _ in range(depth):
            core = Succ(core)
        return core
    if isinstance(e, Add):
        left = expand_numerals(e.left, limit)
        right = expand_numerals(e.right, limit)
        assert isinstance(left, Term) and isinstance(right, Term)
        return Add(left, right)
    if isinstance(e, Mul):
        left = expand_numerals(e.left, limit)
        right = expand_numerals(e.right, limit)
        assert isinstance(left, Term) and isinstance(right, Term)
        return Mul(left, right)
    if isinstance(e, Eq):
        left = expand_numerals(e.left, limit)
        right = expand_numerals(e.right, limit)
        assert isinstance(left, Term) and isinstance(right, Term)
        return Eq(left, right)
    if isinstance(e, Not):
        body = expand_numerals(e.body, limit)
        assert isinstance(body, Formula)
        return Not(body)
    if isinstance(e, Implies):
        left = expand_numerals(e.left, limit)
        right = expand_numerals(e.right, limit)
        assert isinstance(left, Formula) and isinstance(right, Formula)
        return Implies(left, right)
    if isinstance(e, ForAll):
        body = expand_numerals(e.body, limit)
        assert isinstance(body, Formula)
        return ForAll(e.index, body)
    raise TypeError(f"not a term or formula: {e!r}")


def canon_numerals(e: Expr) -> Expr:
    """Canonical form for comparisons: every numeral becomes a num(n) node.

    Succ chains ending in 0 or num(k) collapse; everything else is kept.
    Two trees denote the same official expression exactly when their
    canonical forms are equal.
    """
    if isinstance(e, (Zero, BigNumeral)):
        return BigNumeral(e.value if isinstance(e, BigNumeral) else 0)
    if isinstance(e, Var):
        return e
    if isinstance(e, Succ):
        depth = 0
        while isinstance(e, Succ):
            depth += 1
            e = e.arg
        core = canon_numerals(e)
        if isinstance(core, BigNumeral):
            return BigNumeral(core.value + depth)
        assert isinstance(core, Term)
        for _ in range(depth):
            core = Succ(core)
        return core
    if isinstance(e, Add):
        left, right = canon_numerals(e.left), canon_numerals(e.right)
        assert isinstance(left, Term) and isinstance(right, Term)
        return Add(left, right)
    if isinstance(e, Mul):
        left, right = canon_numerals(e.left), canon_numerals(e.right)
        assert isinstance(left, Term) and isinstance(right, Term)
        return Mul(left, right)
    if isinstance(e, Eq):
        left, right = canon_numerals(e.left), canon_numerals(e.right)
        assert isinstance(left, Term) and isinstance(right, Term)
        return Eq(left, right)
    if isinstance(e, Not):
        body = canon_numerals(e.body)
        assert isinstance(body, Formula)
        return Not(body)
    if isinstance(e, Implies):
        left, right = canon_numerals(e.left), canon_numerals(e.right)
        assert isinstance(left, Formula) and isinstance(right, Formula)
        return Implies(left, right)
    if isinstance(e, ForAll):
        body = canon_numerals(e.body)
        assert isinstance(body, Formula)
        return ForAll(e.index, body)
    raise TypeError(f"not a term or formula: {e!r}")


def semantic_eq(a: Expr, b: Expr) -> bool:
    """Equality up to the compact/expanded numeral distinction."""
    return canon_numerals(a) == canon_numerals(b)
