"""Hilbert-style proof objects and a pure checker for them.

A proof is a numbered sequence of formulas, each carrying a justification:

  A1   B -> (C -> B)
  A2   (B -> (C -> D)) -> ((B -> C) -> (B -> D))
  A3   (~C -> ~B) -> ((~C -> B) -> C)
  A4   forall x.B -> B(t), where t is free for x in B
  A5   forall x.(B -> C) -> (B -> forall x.C), where x is not free in B
  S1   (x1 = x2) -> ((x1 = x3) -> (x2 = x3))
  S2   (x1 = x2) -> (S(x1) = S(x2))
  S3   ~(0 = S(x1))
  S4   (S(x1) = S(x2)) -> (x1 = x2)
  S5   ((x1 + 0) = x1)
  S6   ((x1 + S(x2)) = S((x1 + x2)))
  S7   ((x1 * 0) = 0)
  S8   ((x1 * S(x2)) = ((x1 * x2) + x1))
  IND  B(0) -> (forall x.(B(x) -> B(S(x))) -> forall x.B(x))
  MP i j    modus ponens: line i is B, line j is (B -> this line)
  GEN i xk  generalization: this line is forall xk . (line i)

A1-A5 and IND are schemas matched structurally; S1-S8 are the eight fixed
formulas above (general instances are derived inside proofs with GEN, A4
and MP).  Formula comparison is up to the compact/expanded numeral
distinction, so num(1) and S(0) are interchangeable in any slot.

The checker walks the lines in order and reports either acceptance with
the final formula as the theorem, or the first failing line and a reason.

Proof file format, one line per proof line, numbered from 1 and strictly
increasing (blank lines and lines starting with '#' are ignored):

    <n>. <formula> ; <JUST>

where <JUST> is one of A1..A5, S1..S8, IND, "MP <i> <j>" or "GEN <i> x<k>".
"""

from __future__ import annotations

from dataclasses import dataclass, field

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
    ParseError,
    Succ,
    Term,
    Var,
    Zero,
    canon_numerals,
    free_vars,
    parse_formula,
    semantic_eq,
    substitute,
    to_text,
)

LOGICAL_SCHEMAS = ("A1", "A2", "A3", "A4", "A5")
PROPER_AXIOMS = ("S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8")
ALL_AXIOM_TAGS = LOGICAL_SCHEMAS + PROPER_AXIOMS + ("IND",)

_x1, _x2, _x3 = Var(1), Var(2), Var(3)

PROPER_AXIOM_FORMULAS: dict[str, Formula] = {
    "S1": Implies(Eq(_x1, _x2), Implies(Eq(_x1, _x3), Eq(_x2, _x3))),
    "S2": Implies(Eq(_x1, _x2), Eq(Succ(_x1), Succ(_x2))),
    "S3": Not(Eq(Zero(), Succ(_x1))),
    "S4": Implies(Eq(Succ(_x1), Succ(_x2)), Eq(_x1, _x2)),
    "S5": Eq(Add(_x1, Zero()), _x1),
    "S6": Eq(Add(_x1, Succ(_x2)), Succ(Add(_x1, _x2))),
    "S7": Eq(Mul(_x1, Zero()), Zero()),
    "S8": Eq(Mul(_x1, Succ(_x2)), Add(Mul(_x1, _x2), _x1)),
}


@dataclass(frozen=True)
class Axiom:
    """Justification by an axiom tag: A1..A5, S1..S8 or IND."""

    tag: str

    def __post_init__(self) -> None:
        if self.tag not in ALL_AXIOM_TAGS:
            raise ValueError(f"unknown axiom tag {self.tag!r}")

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class ModusPonens:
    """MP premise_line implication_line (both 1-based, earlier lines)."""

    premise: int
    implication: int

    def __str__(self) -> str:
        return f"MP {self.premise} {self.implication}"


@dataclass(frozen=True)
class Generalization:
    """GEN source_line x<var> (1-based, earlier line)."""

    source: int
    var: int

    def __str__(self) -> str:
        return f"GEN {self.source} x{self.var}"


Justification = Axiom | ModusPonens | Generalization


@dataclass(frozen=True)
class ProofLine:
    number: int
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    lines: tuple[ProofLine, ...]

    @property
    def conclusion(self) -> Formula:
        if not self.lines:
            raise ValueError("empty proof has no conclusion")
        return self.lines[-1].formula


@dataclass(frozen=True)
class CheckResult:
    accepted: bool
    theorem: Formula | None = None
    line: int | None = None
    reason: str | None = None

    def __str__(self) -> str:
        if self.accepted:
            assert self.theorem is not None
            return f"accepted: {to_text(self.theorem)}"
        return f"rejected at line {self.line}: {self.reason}"


class ProofFormatError(Exception):
    """A proof file line that does not match the format."""


# --------------------------------------------------------------------------
# axiom schema matching


def _match_a1(f: Formula) -> bool:
    # B -> (C -> B)
    return (
        isinstance(f, Implies)
        and isinstance(f.right, Implies)
        and semantic_eq(f.right.right, f.left)
    )


def _match_a2(f: Formula) -> bool:
    # (B -> (C -> D)) -> ((B -> C) -> (B -> D))
    if not (
        isinstance(f, Implies)
        and isinstance(f.left, Implies)
        and isinstance(f.left.right, Implies)
        and isinstance(f.right, Implies)
        and isinstance(f.right.left, Implies)
        and isinstance(f.right.right, Implies)
    ):
        return False
    b, c, d = f.left.left, f.left.right.left, f.left.right.right
    return (
        semantic_eq(f.right.left.left, b)
        and semantic_eq(f.right.left.right, c)
        and semantic_eq(f.right.right.left, b)
        and semantic_eq(f.right.right.right, d)
    )


def _match_a3(f: Formula) -> bool:
    # (~C -> ~B) -> ((~C -> B) -> C)
    if not (
        isinstance(f, Implies)
        and isinstance(f.left, Implies)
        and isinstance(f.left.left, Not)
        and isinstance(f.left.right, Not)
        and isinstance(f.right, Implies)
        and isinstance(f.right.left, Implies)
        and isinstance(f.right.left.left, Not)
    ):
        return False
    c, b = f.left.left.body, f.left.right.body
    return (
        semantic_eq(f.right.left.left.body, c)
        and semantic_eq(f.right.left.right, b)
        and semantic_eq(f.right.right, c)
    )


def find_instantiation(body: Formula, var: int, instance: Formula) -> Term | None:
    """The term t with body[x_var := t] == instance, if one exists.

    Comparison is up to numeral form.  Returns Var(var) when x_var is not
    free in body and instance equals body.  Returns None when no t works
    (including when t would not be free for x_var in body).
    """
    candidates: list[Term] = []

    def walk(b, i, bound: frozenset[int]) -> bool:
        # Align a Succ chain on one side with a num(n) node on the other.
        while isinstance(b, Succ) and isinstance(i, BigNumeral) and i.value > 0:
            b, i = b.arg, BigNumeral(i.value - 1)
        while isinstance(i, Succ) and isinstance(b, BigNumeral) and b.value > 0:
            b, i = BigNumeral(b.value - 1), i.arg
        if isinstance(b, Var):
            if b.index == var and var not in bound:
                if not isinstance(i, Term):
                    return False
                candidates.append(i)
                return True
            return isinstance(i, Var) and i.index == b.index
        if type(b) is not type(i):
            if isinstance(b, Term) and isinstance(i, Term):
                has_hole = var not in bound and var in free_vars(b)
                return not has_hole and semantic_eq(b, i)
            return False
        if isinstance(b, Zero):
            return True
        if isinstance(b, BigNumeral):
            return b.value == i.value
        if isinstance(b, Succ):
            return walk(b.arg, i.arg, bound)
        if isinstance(b, (Add, Mul, Eq, Implies)):
            return walk(b.left, i.left, bound) and walk(b.right, i.right, bound)
        if isinstance(b, Not):
            return walk(b.body, i.body, bound)
        if isinstance(b, ForAll):
            if b.index != i.index:
                return False
            return walk(b.body, i.body, bound | {b.index})
        raise TypeError(f"not a term or formula: {b!r}")

    if not walk(body, instance, frozenset()):
        return None
    if not candidates:
        return Var(var) if semantic_eq(body, instance) else None
    t = candidates[0]
    for other in candidates[1:]:
        if not semantic_eq(other, t):
            return None
    try:
        result = substitute(body, var, t)
    except CaptureError:
        return None
    return t if semantic_eq(result, instance) else None


def _match_a4(f: Formula) -> bool:
    # forall x.B -> B(t), t free for x in B
    return (
        isinstance(f, Implies)
        and isinstance(f.left, ForAll)
        and find_instantiation(f.left.body, f.left.index, f.right) is not None
    )


def _match_a5(f: Formula) -> bool:
    # forall x.(B -> C) -> (B -> forall x.C), x not free in B
    if not (
        isinstance(f, Implies)
        and isinstance(f.left, ForAll)
        and isinstance(f.left.body, Implies)
        and isinstance(f.right, Implies)
        and isinstance(f.right.right, ForAll)
    ):
        return False
    x = f.left.index
    b, c = f.left.body.left, f.left.body.right
    return (
        f.right.right.index == x
        and semantic_eq(f.right.left, b)
        and semantic_eq(f.right.right.body, c)
        and x not in free_vars(b)
    )


def _match_ind(f: Formula) -> bool:
    # B(0) -> (forall x.(B(x) -> B(S(x))) -> forall x.B(x))
    if not (
        isinstance(f, Implies)
        and isinstance(f.right, Implies)
        and isinstance(f.right.left, ForAll)
        and isinstance(f.right.left.body, Implies)
        and isinstance(f.right.right, ForAll)
    ):
        return False
    x = f.right.right.index
    if f.right.left.index != x:
        return False
    b = f.right.right.body
    step = f.right.left.body
    if not semantic_eq(step.left, b):
        return False
    try:
        base = substitute(b, x, Zero())
        succ_case = substitute(b, x, Succ(Var(x)))
    except CaptureError:
        return False
    return semantic_eq(f.left, base) and semantic_eq(step.right, succ_case)


def check_axiom(f: Formula, tag: str) -> bool:
    """Whether f is an instance of the named axiom (schema)."""
    if tag == "A1":
        return _match_a1(f)
    if tag == "A2":
        return _match_a2(f)
    if tag == "A3":
        return _match_a3(f)
    if tag == "A4":
        return _match_a4(f)
    if tag == "A5":
        return _match_a5(f)
    if tag == "IND":
        return _match_ind(f)
    if tag in PROPER_AXIOM_FORMULAS:
        return semantic_eq(f, PROPER_AXIOM_FORMULAS[tag])
    raise ValueError(f"unknown axiom tag {tag!r}")


def is_any_axiom(f: Formula) -> bool:
    return any(check_axiom(f, tag) for tag in ALL_AXIOM_TAGS)


# --------------------------------------------------------------------------
# proof checking


def check_line(
    formulas: dict[int, Formula], line: ProofLine
) -> str | None:
    """None if the line is justified given the earlier formulas, else a reason."""
    just = line.justification
    if isinstance(just, Axiom):
        if not check_axiom(line.formula, just.tag):
            return f"formula is not an instance of {just.tag}"
        return None
    if isinstance(just, ModusPonens):
        for ref in (just.premise, just.implication):
            if ref >= line.number or ref < 1:
                return f"MP cites line {ref}, which is not an earlier line"
            if ref not in formulas:
                return f"MP cites line {ref}, which does not exist"
        premise = formulas[just.premise]
        implication = formulas[just.implication]
        if not semantic_eq(implication, Implies(premise, line.formula)):
            return (
                f"MP mismatch: line {just.implication} is not "
                f"(line {just.premise} -> this line)"
            )
        return None
    if isinstance(just, Generalization):
        if just.source >= line.number or just.source < 1:
            return f"GEN cites line {just.source}, which is not an earlier line"
        if just.source not in formulas:
            return f"GEN cites line {just.source}, which does not exist"
        expected = ForAll(just.var, formulas[just.source])
        if not semantic_eq(line.formula, expected):
            return (
                f"GEN mismatch: this line is not forall x{just.var} of "
                f"line {just.source}"
            )
        return None
    return f"unknown justification {just!r}"


def check_proof(proof: Proof) -> CheckResult:
    """Check every line; accept with the last formula as theorem, or
    reject at the first failing line."""
    if not proof.lines:
        return CheckResult(False, line=0, reason="proof has no lines")
    formulas: dict[int, Formula] = {}
    last = 0
    for line in proof.lines:
        if line.number <= last:
            return CheckResult(
                False,
                line=line.number,
                reason=f"line numbers must increase (after {last})",
            )
        reason = check_line(formulas, line)
        if reason is not None:
            return CheckResult(False, line=line.number, reason=reason)
        formulas[line.number] = line.formula
        last = line.number
    return CheckResult(True, theorem=proof.lines[-1].formula)


# --------------------------------------------------------------------------
# proof file format


def parse_justification(text: str) -> Justification:
    parts = text.split()
    if not parts:
        raise ProofFormatError("missing justification")
    head = parts[0]
    if head in ALL_AXIOM_TAGS:
        if len(parts) != 1:
            raise ProofFormatError(f"{head} takes no arguments")
        return Axiom(head)
    if head == "MP":
        if len(parts) != 3:
            raise ProofFormatError("MP needs two line numbers")
        try:
            return ModusPonens(int(parts[1]), int(parts[2]))
        except ValueError:
            raise ProofFormatError("MP needs two line numbers") from None
    if head == "GEN":
        if len(parts) != 3 or not parts[2].startswith("x"):
            raise ProofFormatError("GEN needs a line number and a variable")
        try:
            return Generalization(int(parts[1]), int(parts[2][1:]))
        except ValueError:
            raise ProofFormatError(
                "GEN needs a line number and a variable"
            ) from None
    raise ProofFormatError(f"unknown justification {head!r}")


def parse_proof(text: str) -> Proof:
    """Parse the proof file format.  Raises ProofFormatError naming the
    offending source line on malformed input."""
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        head, dot, rest = stripped.partition(".")
        if not dot or not head.strip().isdigit():
            raise ProofFormatError(
                f"source line {lineno}: expected '<n>. <formula> ; <JUST>'"
            )
        number = int(head.strip())
        formula_text, sep, just_text = rest.partition(";")
        if not sep:
            raise ProofFormatError(
                f"source line {lineno}: missing ';' before justification"
            )
        try:
            formula = parse_formula(formula_text.strip())
        except ParseError as exc:
            raise ProofFormatError(
                f"source line {lineno}: bad formula: {exc}"
            ) from None
        try:
            just = parse_justification(just_text.strip())
        except ProofFormatError as exc:
            raise ProofFormatError(f"source line {lineno}: {exc}") from None
        lines.append(ProofLine(number, formula, just))
    return Proof(tuple(lines))


def format_proof(proof: Proof) -> str:
    out = []
    for line in proof.lines:
        out.append(
            f"{line.number}. {to_text(line.formula)} ; {line.justification}"
        )
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# proof construction helper


@dataclass
class ProofBuilder:
    """Accumulates lines, reusing an existing line when the same formula
    was already derived (keyed on canonical form)."""

    _lines: list[ProofLine] = field(default_factory=list)
    _by_formula: dict = field(default_factory=dict)

    def add(self, formula: Formula, justification: Justification) -> int:
        key = canon_numerals(formula)
        existing = self._by_formula.get(key)
        if existing is not None:
            return existing
        number = len(self._lines) + 1
        self._lines.append(ProofLine(number, formula, justification))
        self._by_formula[key] = number
        return number

    def formula(self, number: int) -> Formula:
        return self._lines[number - 1].formula

    def axiom(self, tag: str, formula: Formula) -> int:
        return self.add(formula, Axiom(tag))

    def mp(self, premise: int, implication: int) -> int:
        impl = self.formula(implication)
        if not isinstance(impl, Implies):
            raise ValueError(f"line {implication} is not an implication")
        return self.add(impl.right, ModusPonens(premise, implication))

    def gen(self, source: int, var: int) -> int:
        return self.add(
            ForAll(var, self.formula(source)), Generalization(source, var)
        )

    def proper_instance(self, tag: str, terms: list[Term]) -> int:
        """Derive the instance of S-axiom tag at the given terms, in
        variable order x1, x2, x3.  The terms must be closed."""
        base = PROPER_AXIOM_FORMULAS[tag]
        axiom_vars = sorted(free_vars(base))
        if len(terms) != len(axiom_vars):
            raise ValueError(
                f"{tag} has {len(axiom_vars)} variables, got {len(terms)} terms"
            )
        line = self.axiom(tag, base)
        current = base
        # Close off x3, x2, x1 in turn so the outermost quantifier is x1.
        for var in reversed(axiom_vars):
            line = self.gen(line, var)
            current = ForAll(var, current)
        for var, term in zip(axiom_vars, terms):
            assert isinstance(current, ForAll)
            instantiated = substitute(current.body, var, term)
            step = self.axiom("A4", Implies(current, instantiated))
            line = self.add(instantiated, ModusPonens(line, step))
            current = instantiated
        return line

    # equality reasoning ---------------------------------------------------

    def eq_refl(self, t: Term) -> int:
        """Derive (t = t) for closed t."""
        plus_zero = self.proper_instance("S5", [t])  # (t + 0) = t
        chain = self.proper_instance("S1", [Add(t, Zero()), t, t])
        step = self.mp(plus_zero, chain)
        return self.mp(plus_zero, step)

    def eq_sym(self, line_ab: int) -> int:
        """From a line (a = b), derive (b = a) for closed a, b."""
        f = self.formula(line_ab)
        assert isinstance(f, Eq)
        a, b = f.left, f.right
        refl = self.eq_refl(a)
        chain = self.proper_instance("S1", [a, b, a])
        step = self.mp(line_ab, chain)
        return self.mp(refl, step)

    def eq_trans(self, line_ab: int, line_bc: int) -> int:
        """From lines (a = b) and (b = c), derive (a = c) for closed terms."""
        f_ab = self.formula(line_ab)
        f_bc = self.formula(line_bc)
        assert isinstance(f_ab, Eq) and isinstance(f_bc, Eq)
        a, b = f_ab.left, f_ab.right
        c = f_bc.right
        line_ba = self.eq_sym(line_ab)
        chain = self.proper_instance("S1", [b, a, c])
        step = self.mp(line_ba, chain)
        return self.mp(line_bc, step)

    def imp_trans(self, line_ab: int, line_bc: int) -> int:
        """From lines (A -> B) and (B -> C), derive (A -> C)."""
        f_ab = self.formula(line_ab)
        f_bc = self.formula(line_bc)
        assert isinstance(f_ab, Implies) and isinstance(f_bc, Implies)
        a = f_ab.left
        weaken = self.axiom("A1", Implies(f_bc, Implies(a, f_bc)))
        nested = self.mp(line_bc, weaken)
        dist = self.axiom(
            "A2",
            Implies(
                Implies(a, f_bc),
                Implies(f_ab, Implies(a, f_bc.right)),
            ),
        )
        step = self.mp(nested, dist)
        return self.mp(line_ab, step)

    def build(self) -> Proof:
        return Proof(tuple(self._lines))
