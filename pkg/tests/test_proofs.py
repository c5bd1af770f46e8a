"""Proof kernel: axiom matchers, line checking, corpus, mutations."""

import os
import random

import pytest

from arithlab.corpus import build_all
from arithlab.proofs import (
    ALL_AXIOM_TAGS,
    Axiom,
    CheckResult,
    Generalization,
    ModusPonens,
    Proof,
    ProofBuilder,
    ProofFormatError,
    ProofLine,
    check_axiom,
    check_proof,
    find_instantiation,
    format_proof,
    is_any_axiom,
    parse_justification,
    parse_proof,
)
from arithlab.syntax import ForAll, parse_formula, parse_term, to_text

from conftest import mutate_proof_line, rand_mutated_proof


@pytest.fixture(scope="module")
def corpus():
    return build_all()


# ---------------------------------------------------------------- axioms

def test_logical_schema_instances():
    assert check_axiom(parse_formula("((0 = 0) -> ((x1 = 0) -> (0 = 0)))"),
                       "A1")
    assert not check_axiom(parse_formula("((0 = 0) -> ((x1 = 0) -> (x1 = 0)))"),
                           "A1")
    a2 = ("(((0 = 0) -> ((x1 = 0) -> (x2 = 0))) -> "
          "(((0 = 0) -> (x1 = 0)) -> ((0 = 0) -> (x2 = 0))))")
    assert check_axiom(parse_formula(a2), "A2")
    a3 = ("((~(x1 = 0) -> ~(0 = 0)) -> "
          "((~(x1 = 0) -> (0 = 0)) -> (x1 = 0)))")
    assert check_axiom(parse_formula(a3), "A3")


def test_a4_instances():
    assert check_axiom(
        parse_formula("(forall x1 . ((x1 + 0) = x1) -> ((0 + 0) = 0))"), "A4")
    assert check_axiom(
        parse_formula("(forall x1 . (x1 = x1) -> (S(x2) = S(x2)))"), "A4")
    # t must be substitutable: x2 below would be captured
    assert not check_axiom(
        parse_formula(
            "(forall x1 . forall x2 . (x1 = x2) -> forall x2 . (S(x2) = x2))"),
        "A4")
    # consequent must be body[x := t] for a single t
    assert not check_axiom(
        parse_formula("(forall x1 . ((x1 + 0) = x1) -> ((0 + 0) = S(0)))"),
        "A4")


def test_a5_instances():
    assert check_axiom(
        parse_formula(
            "(forall x1 . ((0 = 0) -> (x1 = x1)) -> "
            "((0 = 0) -> forall x1 . (x1 = x1)))"), "A5")
    # antecedent of the inner implication must not contain x1 free
    assert not check_axiom(
        parse_formula(
            "(forall x1 . ((x1 = 0) -> (x1 = x1)) -> "
            "((x1 = 0) -> forall x1 . (x1 = x1)))"), "A5")


def test_proper_axioms_are_fixed_formulas():
    assert check_axiom(parse_formula("((x1 + 0) = x1)"), "S5")
    # instances at other terms are not themselves the axiom
    assert not check_axiom(parse_formula("((S(0) + 0) = S(0))"), "S5")
    assert check_axiom(parse_formula("((x1 + S(x2)) = S((x1 + x2)))"), "S6")
    assert check_axiom(parse_formula("~(0 = S(x1))"), "S3")


def test_induction_schema():
    ind = ("(((0 + 0) = 0) -> "
           "(forall x2 . (((x2 + 0) = x2) -> ((S(x2) + 0) = S(x2))) -> "
           "forall x2 . ((x2 + 0) = x2)))")
    assert check_axiom(parse_formula(ind), "IND")
    assert is_any_axiom(parse_formula(ind))
    assert not is_any_axiom(parse_formula("(0 = 0)"))


def test_find_instantiation():
    body = parse_formula("((x1 + 0) = x1)")
    assert find_instantiation(body, 1, parse_formula("((S(0) + 0) = S(0))")) \
        == parse_term("S(0)")
    assert find_instantiation(body, 1, parse_formula("((S(0) + 0) = 0)")) \
        is None
    # identity instantiation maps the variable to itself
    assert find_instantiation(body, 1, body) == parse_term("x1")


def test_check_axiom_rejects_unknown_tag():
    with pytest.raises(ValueError):
        check_axiom(parse_formula("(0 = 0)"), "A9")
    assert "IND" in ALL_AXIOM_TAGS


# ---------------------------------------------------------------- corpus

def test_corpus_all_accepted(corpus):
    assert len(corpus) >= 5
    for name, proof in sorted(corpus.items()):
        result = check_proof(proof)
        assert result.accepted, f"{name}: {result.reason}"
        assert result.theorem == proof.conclusion


def test_corpus_contains_one_plus_one(corpus):
    concl = corpus["one_plus_one"].conclusion
    assert to_text(concl) == "((S(0) + S(0)) = S(S(0)))"


def test_corpus_prefixes_accepted(corpus):
    # every prefix of a valid proof is a valid proof
    for proof in corpus.values():
        for k in range(1, len(proof.lines) + 1):
            prefix = Proof(lines=proof.lines[:k])
            assert check_proof(prefix).accepted


def test_corpus_round_trips_through_text(corpus):
    for proof in corpus.values():
        again = parse_proof(format_proof(proof))
        assert again == proof


def test_shipped_corpus_files_match_builders(corpus):
    directory = os.path.join(os.path.dirname(__file__), "..", "corpus")
    for name, proof in corpus.items():
        path = os.path.join(directory, f"{name}.prf")
        assert os.path.exists(path), f"missing {name}.prf"
        with open(path, encoding="utf-8") as handle:
            assert parse_proof(handle.read()) == proof


# ------------------------------------------------------------- mutations

# (proof, 1-based line, replacement, expected first bad line, reason bit)
MUTATIONS = [
    ("implication_identity", 1, "(0 = 0)",
     1, "not an instance of A1"),
    ("implication_identity", 1, "((0 = 0) -> ((S(0) = S(0)) -> (0 = 0)))",
     5, "MP mismatch"),  # still a valid A1 instance; MP at line 5 breaks
    ("implication_identity", 3, "((0 = 0) -> (0 = 0))",
     3, "not an instance of A2"),
    ("gen_plus_zero", 1, "((x1 + 0) = x2)",
     1, "not an instance of S5"),
    ("gen_plus_zero", 2, "forall x1 . ((x1 + 0) = x2)",
     2, "GEN mismatch"),
    ("zero_plus_zero", 3, "(forall x1 . ((x1 + 0) = x1) -> ((0 + 0) = S(0)))",
     3, "not an instance of A4"),
    ("zero_plus_zero", 4, "((0 + 0) = S(0))",
     4, "MP mismatch"),
    ("succ_not_zero", 1, "~(S(x1) = 0)",
     1, "not an instance of S3"),
    ("one_plus_one", 4,
     "(forall x1 . forall x2 . ((x1 + S(x2)) = S((x1 + x2))) -> "
     "forall x2 . ((0 + S(x2)) = S((0 + x2))))",
     5, "MP mismatch"),  # swapped in a different valid A4 instance
    ("one_plus_one", 49, "((S(0) + S(0)) = S(S(S(0))))",
     49, "MP mismatch"),
]


@pytest.mark.parametrize("name,lineno,text,bad_line,reason_bit", MUTATIONS)
def test_single_line_mutations_rejected(corpus, name, lineno, text,
                                        bad_line, reason_bit):
    mutated = mutate_proof_line(corpus[name], lineno, parse_formula(text))
    result = check_proof(mutated)
    assert not result.accepted
    assert result.line == bad_line
    assert reason_bit in result.reason


def test_random_mutations_never_accepted_silently(corpus):
    # a rejected check always names a line and a reason
    rng = random.Random(4242)
    for _ in range(60):
        proof = corpus[rng.choice(sorted(corpus))]
        result = check_proof(rand_mutated_proof(rng, proof))
        if not result.accepted:
            assert result.line is not None
            assert result.reason


# ------------------------------------------------------------ structure

def test_empty_proof_rejected():
    result = check_proof(Proof(lines=()))
    assert not result.accepted


def test_mp_citations_must_precede():
    lines = (
        ProofLine(1, parse_formula("(0 = 0)"), ModusPonens(2, 3)),
    )
    result = check_proof(Proof(lines=lines))
    assert not result.accepted
    assert result.line == 1


def test_gen_binds_named_variable(corpus):
    proof = corpus["gen_plus_zero"]
    concl = proof.conclusion
    assert isinstance(concl, ForAll) and concl.index == 1


def test_justification_parsing():
    assert parse_justification("A1") == Axiom("A1")
    assert parse_justification("MP 2 3") == ModusPonens(2, 3)
    assert parse_justification("GEN 4 x2") == Generalization(4, 2)
    with pytest.raises(ProofFormatError):
        parse_justification("FROB 1")
    with pytest.raises(ProofFormatError):
        parse_justification("MP 2")


def test_parse_proof_malformed_lines():
    with pytest.raises(ProofFormatError):
        parse_proof("1. (0 = 0) A1\n")  # missing ';'
    with pytest.raises(ProofFormatError):
        parse_proof("one. (0 = 0) ; A1\n")


def test_line_numbers_must_increase():
    text = "3. ((x1 + 0) = x1) ; S5\n2. ((x1 + 0) = x1) ; S5\n"
    result = check_proof(parse_proof(text))
    assert not result.accepted
    assert "increase" in result.reason


def test_proof_builder_helpers():
    b = ProofBuilder()
    n1 = b.add(parse_formula("((x1 + 0) = x1)"), Axiom("S5"))
    n2 = b.add(ForAll(1, b.formula(n1)), Generalization(n1, 1))
    proof = b.build()
    assert len(proof.lines) == 2
    assert check_proof(proof).accepted
    assert n2 == 2
    # adding an already-derived formula reuses its line
    assert b.add(parse_formula("((x1 + 0) = x1)"), Axiom("S5")) == n1


def test_check_result_str_mentions_verdict(corpus):
    good = check_proof(corpus["zero_plus_zero"])
    assert "accepted" in str(good)
    bad = check_proof(mutate_proof_line(corpus["zero_plus_zero"], 4,
                                        parse_formula("(0 = S(0))")))
    assert str(bad.line) in str(bad)
