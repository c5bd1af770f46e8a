"""Finite interpretations and two satisfaction modes.

An Interpretation fixes a finite domain 0..size-1 with a distinguished
zero, a successor table, binary tables for plus and times, and a truth
table for the equality predicate.  Normal means equality is interpreted
as identity.

Two satisfaction relations share the machinery:

  standard       the usual Tarski clauses; variables denote whatever
                 the assignment says, quantifiers sweep the domain
  parameterized  identical clauses except at the variable lookup: a
                 value outside the numeral image (the closure of zero
                 under successor) is read as zero instead

Quantifiers sweep the full domain in both modes; in parameterized mode
the lookup remap makes a universal quantifier behave as if it ranged
over the numeral image only.  That collapse, and where it makes familiar
logical laws fail, is what metacheck hunts for: it enumerates small
interpretations and evaluates pinned instance families, reporting every
(interpretation, instance) pair on which an expected law breaks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .syntax import (
    Add,
    BigNumeral,
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
    exists,
    free_vars,
    numeral,
    parse_formula,
    parse_term,
    substitute,
)

MODES = ("standard", "parameterized")


class ModelError(Exception):
    """Malformed interpretation or file format problem."""


class RestrictError(ModelError):
    """The numeral image is not closed under an operation."""


@dataclass(frozen=True)
class Interpretation:
    """A finite structure for the arithmetic language.

    Tables are tuples: succ[a], add[a][b], mul[a][b] are domain
    elements; eq[a][b] is 0 or 1.
    """

    size: int
    zero: int
    succ: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    eq: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        s = self.size
        if s < 1:
            raise ModelError("domain must have at least one element")
        if not 0 <= self.zero < s:
            raise ModelError("zero must be a domain element")
        if len(self.succ) != s or any(not 0 <= v < s for v in self.succ):
            raise ModelError("succ must map the domain into itself")
        for name, table in (("add", self.add), ("mul", self.mul)):
            if len(table) != s or any(
                len(row) != s or any(not 0 <= v < s for v in row)
                for row in table
            ):
                raise ModelError(f"{name} must be a total {s}x{s} table")
        if len(self.eq) != s or any(
            len(row) != s or any(v not in (0, 1) for v in row)
            for row in self.eq
        ):
            raise ModelError(f"eq must be a {s}x{s} table of 0/1")

    @property
    def normal(self) -> bool:
        return all(
            self.eq[a][b] == (1 if a == b else 0)
            for a in range(self.size)
            for b in range(self.size)
        )

    def __str__(self) -> str:
        return format_interpretation(self)


def normal_interpretation(
    size: int,
    zero: int,
    succ: tuple[int, ...],
    add: tuple[tuple[int, ...], ...],
    mul: tuple[tuple[int, ...], ...],
) -> Interpretation:
    """Interpretation with equality read as identity."""
    eq = identity_eq(size)
    return Interpretation(size, zero, tuple(succ), _freeze(add), _freeze(mul), eq)


def identity_eq(size: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(1 if a == b else 0 for b in range(size)) for a in range(size)
    )


def _freeze(table) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in table)


# --------------------------------------------------------------------------
# file format


def format_interpretation(m: Interpretation) -> str:
    def rows(table) -> str:
        return " / ".join(" ".join(str(v) for v in row) for row in table)

    lines = [
        f"size {m.size}",
        f"zero {m.zero}",
        "succ " + " ".join(str(v) for v in m.succ),
        "add " + rows(m.add),
        "mul " + rows(m.mul),
        "eq " + ("identity" if m.normal else rows(m.eq)),
    ]
    return "\n".join(lines) + "\n"


def parse_interpretation(text: str) -> Interpretation:
    fields: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key in fields:
            raise ModelError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = rest.split()
    for key in ("size", "zero", "succ", "add", "mul", "eq"):
        if key not in fields:
            raise ModelError(f"missing field {key!r}")
    unknown = set(fields) - {"size", "zero", "succ", "add", "mul", "eq"}
    if unknown:
        raise ModelError(f"unknown fields: {sorted(unknown)}")

    def ints(key: str) -> list[int]:
        out = []
        for tok in fields[key]:
            if tok == "/":
                continue
            try:
                out.append(int(tok))
            except ValueError:
                raise ModelError(f"field {key!r}: bad number {tok!r}") from None
        return out

    size_list = ints("size")
    zero_list = ints("zero")
    if len(size_list) != 1 or len(zero_list) != 1:
        raise ModelError("size and zero take a single number")
    size = size_list[0]
    if size < 1:
        raise ModelError("domain must have at least one element")

    def table(key: str) -> tuple[tuple[int, ...], ...]:
        flat = ints(key)
        if len(flat) != size * size:
            raise ModelError(
                f"field {key!r}: expected {size * size} entries, got {len(flat)}"
            )
        return tuple(
            tuple(flat[r * size : (r + 1) * size]) for r in range(size)
        )

    succ = ints("succ")
    if len(succ) != size:
        raise ModelError(f"field 'succ': expected {size} entries")
    eq = identity_eq(size) if fields["eq"] == ["identity"] else table("eq")
    try:
        return Interpretation(
            size, zero_list[0], tuple(succ), table("add"), table("mul"), eq
        )
    except ModelError:
        raise
    except Exception as e:  # table shape errors surfaced by validation
        raise ModelError(str(e)) from e


# --------------------------------------------------------------------------
# valuation


@lru_cache(maxsize=None)
def numeral_image(m: Interpretation) -> tuple[int, ...]:
    """Closure of zero under succ, in discovery order."""
    seen = []
    present = set()
    v = m.zero
    while v not in present:
        seen.append(v)
        present.add(v)
        v = m.succ[v]
    return tuple(seen)


def _apply_succ(m: Interpretation, v: int, k: int) -> int:
    """succ applied k times to v, collapsing along the eventual cycle."""
    path = []
    pos: dict[int, int] = {}
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = m.succ[v]
    if k < len(path):
        return path[k]
    entry = pos[v]
    period = len(path) - entry
    return path[entry + (k - entry) % period]


def numeral_value_in(m: Interpretation, n: int) -> int:
    """Value of the numeral for n (handles astronomically large n)."""
    return _apply_succ(m, m.zero, n)


Assignment = dict[int, int]


def term_value(
    m: Interpretation, t: Term, env: Assignment, mode: str = "standard"
) -> int:
    """Value of t under env.  Unassigned variables read as zero.

    In parameterized mode a variable lookup yielding a value outside the
    numeral image is replaced by zero; everything else is untouched.
    """
    if isinstance(t, Var):
        v = env.get(t.index, m.zero)
        if not 0 <= v < m.size:
            raise ModelError(f"assignment sends x{t.index} outside the domain")
        if mode == "parameterized" and v not in numeral_image(m):
            return m.zero
        return v
    if isinstance(t, Zero):
        return m.zero
    if isinstance(t, BigNumeral):
        return numeral_value_in(m, t.value)
    if isinstance(t, Succ):
        succs = 0
        while isinstance(t, Succ):
            succs += 1
            t = t.arg
        return _apply_succ(m, term_value(m, t, env, mode), succs)
    if isinstance(t, Add):
        return m.add[term_value(m, t.left, env, mode)][
            term_value(m, t.right, env, mode)
        ]
    if isinstance(t, Mul):
        return m.mul[term_value(m, t.left, env, mode)][
            term_value(m, t.right, env, mode)
        ]
    raise TypeError(f"not a term: {t!r}")


def satisfies(
    m: Interpretation, env: Assignment, f: Formula, mode: str = "standard"
) -> bool:
    """Tarski satisfaction under the chosen mode."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(f, Eq):
        return bool(
            m.eq[term_value(m, f.left, env, mode)][
                term_value(m, f.right, env, mode)
            ]
        )
    if isinstance(f, Not):
        return not satisfies(m, env, f.body, mode)
    if isinstance(f, Implies):
        return (not satisfies(m, env, f.left, mode)) or satisfies(
            m, env, f.right, mode
        )
    if isinstance(f, ForAll):
        return all(
            satisfies(m, {**env, f.index: d}, f.body, mode)
            for d in range(m.size)
        )
    raise TypeError(f"not a formula: {f!r}")


def is_true(m: Interpretation, f: Formula, mode: str = "standard") -> bool:
    """Truth: satisfaction under every assignment to the free variables."""
    fv = sorted(free_vars(f))
    if not fv:
        return satisfies(m, {}, f, mode)
    return all(
        satisfies(m, dict(zip(fv, combo)), f, mode)
        for combo in itertools.product(range(m.size), repeat=len(fv))
    )


def restrict(m: Interpretation) -> Interpretation:
    """The substructure on the numeral image, elements renumbered in
    discovery order.  Raises RestrictError when plus or times escapes."""
    image = numeral_image(m)
    index = {v: i for i, v in enumerate(image)}
    for name, table in (("add", m.add), ("mul", m.mul)):
        for a in image:
            for b in image:
                if table[a][b] not in index:
                    raise RestrictError(
                        f"{name}({a}, {b}) = {table[a][b]} lies outside "
                        f"the numeral image {list(image)}"
                    )
    size = len(image)
    return Interpretation(
        size=size,
        zero=0,
        succ=tuple(index[m.succ[v]] for v in image),
        add=tuple(tuple(index[m.add[a][b]] for b in image) for a in image),
        mul=tuple(tuple(index[m.mul[a][b]] for b in image) for a in image),
        eq=tuple(tuple(m.eq[a][b] for b in image) for a in image),
    )


# --------------------------------------------------------------------------
# enumeration


def enumerate_interpretations(size: int, eq_tables: str = "identity"):
    """All interpretations of the given size, in a fixed order.

    eq_tables selects the equality tables paired with each algebra:
    "identity" yields normal interpretations only, "congruent" also
    yields every non-identity equivalence relation compatible with the
    operation tables.
    """
    if eq_tables not in ("identity", "congruent"):
        raise ValueError(f"unknown eq_tables filter {eq_tables!r}")
    domain = range(size)
    rows = list(itertools.product(domain, repeat=size))
    for zero in domain:
        for succ in rows:
            for add in itertools.product(rows, repeat=size):
                for mul in itertools.product(rows, repeat=size):
                    if eq_tables == "identity":
                        yield normal_interpretation(size, zero, succ, add, mul)
                        continue
                    for eq in _congruences(size, succ, add, mul):
                        yield Interpretation(size, zero, succ, add, mul, eq)


def _congruences(size, succ, add, mul):
    """Equality tables that are congruences for the given operations."""
    for bits in itertools.product((0, 1), repeat=size * size):
        eq = tuple(
            tuple(bits[a * size + b] for b in range(size)) for a in range(size)
        )
        if _is_congruence(size, succ, add, mul, eq):
            yield eq


def _is_congruence(size, succ, add, mul, eq) -> bool:
    domain = range(size)
    for a in domain:
        if not eq[a][a]:
            return False
        for b in domain:
            if eq[a][b] != eq[b][a]:
                return False
            for c in domain:
                if eq[a][b] and eq[b][c] and not eq[a][c]:
                    return False
    for a in domain:
        for b in domain:
            if not eq[a][b]:
                continue
            if not eq[succ[a]][succ[b]]:
                return False
            for c in domain:
                if not eq[add[a][c]][add[b][c]] or not eq[add[c][a]][add[c][b]]:
                    return False
                if not eq[mul[a][c]][mul[b][c]] or not eq[mul[c][a]][mul[c][b]]:
                    return False
    return True


def random_interpretation(
    rng: random.Random, size: int, eq_tables: str = "identity"
) -> Interpretation:
    """One random interpretation; with "congruent" the equality table is
    sampled from the congruences of the drawn algebra."""
    domain = range(size)
    succ = tuple(rng.randrange(size) for _ in domain)
    add = tuple(tuple(rng.randrange(size) for _ in domain) for _ in domain)
    mul = tuple(tuple(rng.randrange(size) for _ in domain) for _ in domain)
    zero = rng.randrange(size)
    if eq_tables == "identity":
        return normal_interpretation(size, zero, succ, add, mul)
    options = list(_congruences(size, succ, add, mul))
    return Interpretation(size, zero, succ, add, mul, rng.choice(options))


# --------------------------------------------------------------------------
# pinned instance families


def _fml(text: str) -> Formula:
    return parse_formula(text)


A_INSTANCES: dict[str, tuple[Formula, ...]] = {
    # B -> (C -> B)
    "A1": (
        _fml("((x1 = 0) -> ((x2 = 0) -> (x1 = 0)))"),
        _fml("((0 = 0) -> ((S(0) = 0) -> (0 = 0)))"),
        _fml(
            "(forall x1 . (x1 = x1) -> ((x2 = 0) -> forall x1 . (x1 = x1)))"
        ),
    ),
    # (B -> (C -> D)) -> ((B -> C) -> (B -> D))
    "A2": (
        _fml(
            "(((x1 = 0) -> ((x2 = 0) -> (x1 = x2)))"
            " -> (((x1 = 0) -> (x2 = 0)) -> ((x1 = 0) -> (x1 = x2))))"
        ),
        _fml(
            "(((0 = 0) -> ((S(0) = 0) -> (x1 = x1)))"
            " -> (((0 = 0) -> (S(0) = 0)) -> ((0 = 0) -> (x1 = x1))))"
        ),
    ),
    # (~C -> ~B) -> ((~C -> B) -> C)
    "A3": (
        _fml(
            "((~(x1 = 0) -> ~(x2 = 0))"
            " -> ((~(x1 = 0) -> (x2 = 0)) -> (x1 = 0)))"
        ),
        _fml(
            "((~(0 = 0) -> ~(S(0) = 0))"
            " -> ((~(0 = 0) -> (S(0) = 0)) -> (0 = 0)))"
        ),
    ),
    # (forall x . B(x)) -> B(t)
    "A4": (
        _fml("(forall x1 . (x1 = x1) -> (0 = 0))"),
        _fml("(forall x2 . (x2 = 0) -> ((x1 + x1) = 0))"),
        _fml("(forall x1 . (x1 = x1) -> (S(x2) = S(x2)))"),
        _fml("(forall x2 . ((x2 * 0) = 0) -> ((S(0) * 0) = 0))"),
        _fml(
            "(forall x1 . ((x1 = 0) -> (x1 = 0))"
            " -> ((x2 = 0) -> (x2 = 0)))"
        ),
    ),
    # B -> forall x . B with x not free in B
    "A5": (
        _fml("((x2 = 0) -> forall x1 . (x2 = 0))"),
        _fml("((0 = 0) -> forall x1 . (0 = 0))"),
        _fml("(forall x1 . (x1 = 0) -> forall x2 . forall x1 . (x1 = 0))"),
    ),
}

# the size-2 interpretation documented alongside the A4 family: succ is
# constantly zero, so the numeral image is {0}, while 0 + 0 = 1
WITNESS_MODEL = normal_interpretation(
    size=2,
    zero=0,
    succ=(0, 0),
    add=((1, 0), (0, 0)),
    mul=((0, 0), (0, 0)),
)
WITNESS_INSTANCE = A_INSTANCES["A4"][1]

MP_PAIRS: tuple[tuple[Formula, Formula], ...] = (
    (_fml("(0 = 0)"), _fml("(S(0) = S(0))")),
    (_fml("forall x1 . (x1 = x1)"), _fml("(x2 = x2)")),
    (_fml("(x1 = x1)"), _fml("((x1 + 0) = (x1 + 0))")),
)

GEN_CASES: tuple[tuple[int, Formula], ...] = (
    (1, _fml("(x1 = x1)")),
    (2, _fml("((x1 + x2) = (x1 + x2))")),
    (1, _fml("(x2 = 0)")),
)

DUALITY_CASES: tuple[tuple[int, Formula], ...] = (
    (1, _fml("(x1 = 0)")),
    (2, _fml("(S(x2) = x1)")),
    (1, _fml("((x1 = 0) -> (x2 = x1))")),
)

# successor keeps values inside the numeral image, so only terms built
# with + or * can expose the lookup remap
SUBSTITUTION_CASES: tuple[tuple[Formula, int, str], ...] = (
    (_fml("(x1 = 0)"), 1, "(x2 + x2)"),
    (_fml("(S(x1) = x2)"), 1, "(x2 * x2)"),
    (_fml("forall x2 . (x1 = x2)"), 1, "0"),
    (_fml("(x1 = 0)"), 1, "S(x2)"),
)

CHAIN_CASES: tuple[tuple[int, Formula], ...] = (
    (1, _fml("(x1 = 0)")),
    (1, _fml("((x1 = x2) -> (x2 = x1))")),
    (2, _fml("((x2 * x2) = x2)")),
)


@lru_cache(maxsize=1)
def collapse_suite() -> tuple[tuple[int, Formula], ...]:
    """Thirty pinned (variable, body) pairs for the quantifier-collapse
    law, drawn once from a fixed seed."""
    rng = random.Random(471127)
    out = []
    for _ in range(30):
        x = rng.choice((1, 2))
        out.append((x, _random_formula(rng, depth=3)))
    return tuple(out)


def _random_term(rng: random.Random, depth: int) -> Term:
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(
            (Zero(), Var(1), Var(2), Var(3), Succ(Zero()), Var(1))
        )
    kind = rng.randrange(3)
    if kind == 0:
        return Succ(_random_term(rng, depth - 1))
    left = _random_term(rng, depth - 1)
    right = _random_term(rng, depth - 1)
    return Add(left, right) if kind == 1 else Mul(left, right)


def _random_formula(rng: random.Random, depth: int) -> Formula:
    if depth == 0 or rng.random() < 0.35:
        return Eq(_random_term(rng, 2), _random_term(rng, 2))
    kind = rng.randrange(4)
    if kind == 0:
        return Not(_random_formula(rng, depth - 1))
    if kind == 1:
        return Implies(
            _random_formula(rng, depth - 1), _random_formula(rng, depth - 1)
        )
    if kind == 2:
        return ForAll(rng.choice((1, 2, 3)), _random_formula(rng, depth - 1))
    return Eq(_random_term(rng, 2), _random_term(rng, 2))


# --------------------------------------------------------------------------
# metacheck


FAMILIES = ("A1", "A2", "A3", "A4", "A5", "rules", "duality", "substitution",
            "collapse", "chain")


@dataclass(frozen=True)
class Violation:
    family: str
    model: Interpretation
    detail: str

    def __str__(self) -> str:
        model_line = format_interpretation(self.model).replace("\n", "; ").rstrip("; ")
        return f"[{self.family}] {self.detail}\n    model: {model_line}"


@dataclass(frozen=True)
class MetacheckReport:
    families: tuple[str, ...]
    mode: str
    max_size: int
    eq_tables: str
    examined: int
    exhausted: bool
    violations: tuple[Violation, ...]

    def __str__(self) -> str:
        head = (
            f"metacheck mode={self.mode} sizes<={self.max_size} "
            f"families={','.join(self.families)} eq={self.eq_tables}: "
            f"{self.examined} interpretations examined"
            f"{'' if self.exhausted else ' (budget hit, enumeration cut short)'}"
            f", {len(self.violations)} violation(s)"
        )
        if not self.violations:
            return head
        return "\n".join([head] + [str(v) for v in self.violations])


def _check_families(
    m: Interpretation, families: tuple[str, ...], mode: str
) -> list[Violation]:
    out = []
    image = numeral_image(m)
    for family in families:
        if family in A_INSTANCES:
            for inst in A_INSTANCES[family]:
                if not is_true(m, inst, mode):
                    out.append(
                        Violation(family, m, f"instance not true: {inst}")
                    )
            continue
        if family == "rules":
            for a, b in MP_PAIRS:
                imp = Implies(a, b)
                if (
                    is_true(m, a, mode)
                    and is_true(m, imp, mode)
                    and not is_true(m, b, mode)
                ):
                    out.append(
                        Violation(
                            family, m, f"detachment loses truth: {a} with {imp}"
                        )
                    )
            for x, b in GEN_CASES:
                if is_true(m, b, mode) and not is_true(m, ForAll(x, b), mode):
                    out.append(
                        Violation(
                            family,
                            m,
                            f"generalisation loses truth: {b} over x{x}",
                        )
                    )
            continue
        if family == "duality":
            for x, b in DUALITY_CASES:
                fv = sorted(free_vars(b) | {x})
                for combo in itertools.product(range(m.size), repeat=len(fv)):
                    env = dict(zip(fv, combo))
                    direct = any(
                        satisfies(m, {**env, x: d}, b, mode)
                        for d in range(m.size)
                    )
                    sugared = satisfies(m, env, exists(x, b), mode)
                    if direct != sugared:
                        out.append(
                            Violation(
                                family,
                                m,
                                f"existential duality breaks for x{x} in {b}"
                                f" at {env}",
                            )
                        )
                        break
            continue
        if family == "substitution":
            for b, x, t_text in SUBSTITUTION_CASES:
                t = parse_term(t_text)
                sub = substitute(b, x, t)
                fv = sorted((free_vars(b) - {x}) | free_vars(t))
                bad = None
                for combo in itertools.product(range(m.size), repeat=len(fv)):
                    env = dict(zip(fv, combo))
                    lhs = satisfies(m, env, sub, mode)
                    rhs = satisfies(
                        m,
                        {**env, x: term_value(m, t, env, mode)},
                        b,
                        mode,
                    )
                    if lhs != rhs:
                        bad = env
                        break
                if bad is not None:
                    out.append(
                        Violation(
                            family,
                            m,
                            f"substitution lemma breaks for {t_text} into x{x}"
                            f" of {b} at {bad}",
                        )
                    )
            continue
        if family == "collapse":
            points = image if mode == "parameterized" else tuple(range(m.size))
            for x, b in collapse_suite():
                lhs = is_true(m, ForAll(x, b), mode)
                fv = sorted(free_vars(b) - {x})
                rhs = all(
                    satisfies(m, {**dict(zip(fv, combo)), x: d}, b, mode)
                    for combo in itertools.product(
                        range(m.size), repeat=len(fv)
                    )
                    for d in points
                )
                if lhs != rhs:
                    out.append(
                        Violation(
                            family,
                            m,
                            f"quantifier collapse mismatch for x{x} in {b}",
                        )
                    )
            continue
        if family == "chain":
            # numerals reach every image point; universal truth must
            # imply every numeral instance, and in parameterized mode
            # the instances must add back up to the universal claim
            for x, b in CHAIN_CASES:
                universal = is_true(m, ForAll(x, b), mode)
                instances = all(
                    is_true(m, substitute(b, x, numeral(k)), mode)
                    for k in range(len(image) + 1)
                )
                if universal and not instances:
                    out.append(
                        Violation(
                            family,
                            m,
                            f"a numeral instance of x{x} escapes {b}",
                        )
                    )
                elif (
                    mode == "parameterized" and instances and not universal
                ):
                    out.append(
                        Violation(
                            family,
                            m,
                            f"numeral instances of x{x} do not lift to the "
                            f"universal claim {b}",
                        )
                    )
            continue
        raise ValueError(f"unknown family {family!r}")
    return out


def metacheck(
    max_size: int,
    families,
    mode: str = "standard",
    budget: int | str = "full",
    eq_tables: str = "identity",
) -> MetacheckReport:
    """Evaluate the pinned instance families over every interpretation of
    size 1..max_size (or until the budget runs out)."""
    families = tuple(families)
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if budget != "full" and (not isinstance(budget, int) or budget < 1):
        raise ValueError("budget must be 'full' or a positive integer")

    violations: list[Violation] = []
    examined = 0
    exhausted = True
    for size in range(1, max_size + 1):
        for m in enumerate_interpretations(size, eq_tables):
            if budget != "full" and examined >= budget:
                exhausted = False
                break
            examined += 1
            violations.extend(_check_families(m, families, mode))
        if not exhausted:
            break
    return MetacheckReport(
        families=families,
        mode=mode,
        max_size=max_size,
        eq_tables=eq_tables,
        examined=examined,
        exhausted=exhausted,
        violations=tuple(violations),
    )
