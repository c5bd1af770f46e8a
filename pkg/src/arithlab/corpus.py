"""A small corpus of checked proofs, built programmatically.

The kernel's S axioms are fixed formulas in x1..x3, so instances at other
terms are derived the long way: generalize, then strip the quantifiers
with A4 and MP.  ProofBuilder's equality helpers (reflexivity, symmetry,
transitivity through S1) package the standard derivations.

build_all() returns every corpus proof keyed by name; write_corpus()
serialises them in the proof file format.
"""

from __future__ import annotations

import os

from .proofs import PROPER_AXIOM_FORMULAS, Proof, ProofBuilder, format_proof
from .syntax import (
    Add,
    Eq,
    ForAll,
    Implies,
    Not,
    Succ,
    Var,
    Zero,
    substitute,
)

_ZERO = Zero()
_ONE = Succ(Zero())


def build_implication_identity() -> Proof:
    """((0 = 0) -> (0 = 0)) in the classic five lines from A1, A2 and MP."""
    b = ProofBuilder()
    f = Eq(_ZERO, _ZERO)
    f_to_f = Implies(f, f)
    l1 = b.axiom("A1", Implies(f, Implies(f, f)))
    l2 = b.axiom("A1", Implies(f, Implies(f_to_f, f)))
    l3 = b.axiom(
        "A2",
        Implies(
            Implies(f, Implies(f_to_f, f)),
            Implies(Implies(f, f_to_f), Implies(f, f)),
        ),
    )
    l4 = b.mp(l2, l3)
    b.mp(l1, l4)
    return b.build()


def build_gen_plus_zero() -> Proof:
    """forall x1.((x1 + 0) = x1) directly from S5 and GEN."""
    b = ProofBuilder()
    s5 = b.axiom("S5", PROPER_AXIOM_FORMULAS["S5"])
    b.gen(s5, 1)
    return b.build()


def build_zero_plus_zero() -> Proof:
    """((0 + 0) = 0), an S5 instance at 0."""
    b = ProofBuilder()
    b.proper_instance("S5", [_ZERO])
    return b.build()


def build_succ_not_zero() -> Proof:
    """~(0 = S(0)), an S3 instance at 0."""
    b = ProofBuilder()
    b.proper_instance("S3", [_ZERO])
    return b.build()


def build_reflexivity_zero() -> Proof:
    """(0 = 0), derived from S5 and S1."""
    b = ProofBuilder()
    b.eq_refl(_ZERO)
    return b.build()


def build_one_plus_one() -> Proof:
    """((S(0) + S(0)) = S(S(0)))."""
    b = ProofBuilder()
    # (S(0) + S(0)) = S((S(0) + 0))
    l_ab = b.proper_instance("S6", [_ONE, _ZERO])
    # (S(0) + 0) = S(0)
    l_s5 = b.proper_instance("S5", [_ONE])
    # ((S(0) + 0) = S(0)) -> (S((S(0) + 0)) = S(S(0)))
    l_s2 = b.proper_instance("S2", [Add(_ONE, _ZERO), _ONE])
    l_bc = b.mp(l_s5, l_s2)
    b.eq_trans(l_ab, l_bc)
    return b.build()


def build_induction_left_identity() -> Proof:
    """forall x1.((0 + x1) = x1), which genuinely needs IND."""
    b = ProofBuilder()
    x1 = Var(1)
    prop = Eq(Add(_ZERO, x1), x1)
    # Base case: ((0 + 0) = 0).
    base = b.proper_instance("S5", [_ZERO])
    # Step: ((0 + x1) = x1) -> ((0 + S(x1)) = S(x1)).
    u = Add(_ZERO, Succ(x1))
    v = Succ(Add(_ZERO, x1))
    unfold = b.proper_instance("S6", [_ZERO, x1])  # (u = v)
    lift = b.proper_instance("S2", [Add(_ZERO, x1), x1])
    # lift: ((0 + x1) = x1) -> (v = S(x1))
    unfold_sym = b.eq_sym(unfold)  # (v = u)
    chain = b.proper_instance("S1", [v, u, Succ(x1)])
    half = b.mp(unfold_sym, chain)  # (v = S(x1)) -> (u = S(x1))
    step_impl = b.imp_trans(lift, half)
    step_closed = b.gen(step_impl, 1)
    base_f = substitute(prop, 1, _ZERO)
    step_f = Implies(prop, substitute(prop, 1, Succ(x1)))
    ind = b.axiom(
        "IND", Implies(base_f, Implies(ForAll(1, step_f), ForAll(1, prop)))
    )
    halfway = b.mp(base, ind)
    b.mp(step_closed, halfway)
    return b.build()


def build_conditional_closure() -> Proof:
    """((0 = 0) -> forall x1.((x1 + 0) = x1)), exercising A5."""
    b = ProofBuilder()
    s5f = PROPER_AXIOM_FORMULAS["S5"]
    trivial = Eq(_ZERO, _ZERO)
    s5 = b.axiom("S5", s5f)
    weaken = b.axiom("A1", Implies(s5f, Implies(trivial, s5f)))
    cond = b.mp(s5, weaken)
    closed = b.gen(cond, 1)
    a5 = b.axiom(
        "A5",
        Implies(
            ForAll(1, Implies(trivial, s5f)),
            Implies(trivial, ForAll(1, s5f)),
        ),
    )
    b.mp(closed, a5)
    return b.build()


def build_contraposition_instance() -> Proof:
    """A one-line A3 instance with B = C = (0 = 0)."""
    b = ProofBuilder()
    f = Eq(_ZERO, _ZERO)
    nf = Not(f)
    b.axiom("A3", Implies(Implies(nf, nf), Implies(Implies(nf, f), f)))
    return b.build()


CORPUS_BUILDERS = {
    "implication_identity": build_implication_identity,
    "gen_plus_zero": build_gen_plus_zero,
    "zero_plus_zero": build_zero_plus_zero,
    "succ_not_zero": build_succ_not_zero,
    "reflexivity_zero": build_reflexivity_zero,
    "one_plus_one": build_one_plus_one,
    "induction_left_identity": build_induction_left_identity,
    "conditional_closure": build_conditional_closure,
    "contraposition_instance": build_contraposition_instance,
}


def build_all() -> dict[str, Proof]:
    return {name: builder() for name, builder in CORPUS_BUILDERS.items()}


def write_corpus(directory: str) -> list[str]:
    """Write every corpus proof as <name>.prf under directory."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, proof in build_all().items():
        path = os.path.join(directory, f"{name}.prf")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(format_proof(proof))
        written.append(path)
    return written


if __name__ == "__main__":  # pragma: no cover
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    for path in write_corpus(target):
        print(path)
