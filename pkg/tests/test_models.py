"""Finite interpretations, two satisfaction modes, the divergence search."""

import itertools
import random

import pytest

from arithlab.models import (
    A_INSTANCES,
    FAMILIES,
    WITNESS_INSTANCE,
    WITNESS_MODEL,
    Interpretation,
    ModelError,
    RestrictError,
    collapse_suite,
    enumerate_interpretations,
    format_interpretation,
    identity_eq,
    is_true,
    metacheck,
    normal_interpretation,
    numeral_image,
    numeral_value_in,
    parse_interpretation,
    random_interpretation,
    restrict,
    satisfies,
    term_value,
)
from arithlab.syntax import parse_formula, parse_term, to_text

STANDARD_TWO = normal_interpretation(
    size=2, zero=0, succ=(1, 0),
    add=((0, 1), (1, 0)), mul=((0, 0), (0, 1)))


# ------------------------------------------------------- interpretations

def test_interpretation_validation():
    with pytest.raises(ModelError):
        normal_interpretation(size=0, zero=0, succ=(), add=(), mul=())
    with pytest.raises(ModelError):
        normal_interpretation(size=2, zero=2, succ=(0, 0),
                              add=((0, 0), (0, 0)), mul=((0, 0), (0, 0)))
    with pytest.raises(ModelError):
        normal_interpretation(size=2, zero=0, succ=(0,),
                              add=((0, 0), (0, 0)), mul=((0, 0), (0, 0)))


def test_normal_property():
    assert STANDARD_TWO.normal
    skew = Interpretation(
        size=2, zero=0, succ=(1, 0), add=((0, 1), (1, 0)),
        mul=((0, 0), (0, 1)), eq=((1, 1), (1, 1)))
    assert not skew.normal


def test_format_parse_round_trip():
    text = format_interpretation(WITNESS_MODEL)
    again = parse_interpretation(text)
    assert again == WITNESS_MODEL
    assert "eq identity" in text


def test_parse_interpretation_errors():
    with pytest.raises(ModelError):
        parse_interpretation("size 2\nzero 0\n")      # missing tables
    with pytest.raises(ModelError):
        parse_interpretation("size 2\nsize 2\nzero 0\nsucc 1 0\n"
                             "add 0 1 / 1 0\nmul 0 0 / 0 1\neq identity\n")
    with pytest.raises(ModelError):
        parse_interpretation("size 2\nzero 0\nsucc 1 0\nfrob 1\n"
                             "add 0 1 / 1 0\nmul 0 0 / 0 1\neq identity\n")


def test_parse_interpretation_comments_and_identity():
    text = ("# two element clock\nsize 2\nzero 0\nsucc 1 0\n"
            "add 0 1 / 1 0\nmul 0 0 / 0 1\neq identity\n")
    m = parse_interpretation(text)
    assert m == STANDARD_TWO


# ----------------------------------------------------- terms and truth

def test_numeral_image_and_values():
    assert numeral_image(STANDARD_TWO) == (0, 1)
    assert numeral_image(WITNESS_MODEL) == (0,)
    assert numeral_value_in(STANDARD_TWO, 5) == 1
    assert numeral_value_in(WITNESS_MODEL, 17) == 0


def test_numeral_value_in_long_orbit():
    # size-3 cycle with a tail: 0 -> 1 -> 2 -> 1 -> ...
    m = normal_interpretation(
        size=3, zero=0, succ=(1, 2, 1),
        add=tuple(tuple(0 for _ in range(3)) for _ in range(3)),
        mul=tuple(tuple(0 for _ in range(3)) for _ in range(3)))
    values = [numeral_value_in(m, n) for n in range(7)]
    assert values == [0, 1, 2, 1, 2, 1, 2]
    assert numeral_value_in(m, 10**9) == 2
    assert numeral_image(m) == (0, 1, 2)


def test_term_value_standard():
    env = {1: 1, 2: 0}
    t = parse_term("((x1 + S(0)) * x1)")
    # (1 + 1) * 1 = 0 * 1 = 0 in the two element clock
    assert term_value(STANDARD_TWO, t, env) == 0
    assert term_value(STANDARD_TWO, parse_term("num(7)"), {}) == 1


def test_term_value_parameterized_remaps_lookup():
    # raw values outside the numeral image read as zero
    m = WITNESS_MODEL   # image is {0}
    env = {1: 1}
    assert term_value(m, parse_term("x1"), env, mode="parameterized") == 0
    assert term_value(m, parse_term("x1"), env, mode="standard") == 1
    # operations still use the raw tables afterwards
    t = parse_term("(x1 + x1)")
    assert term_value(m, t, env, mode="parameterized") == \
        m.add[0][0]


def test_satisfies_and_is_true():
    f = parse_formula("forall x1 . ((x1 + 0) = x1)")
    assert is_true(STANDARD_TWO, f)
    g = parse_formula("(x1 = S(0))")
    assert satisfies(STANDARD_TWO, {1: 1}, g)
    assert not satisfies(STANDARD_TWO, {1: 0}, g)
    # is_true sweeps the free variable
    assert not is_true(STANDARD_TWO, g)


def test_mode_validation():
    with pytest.raises(ValueError):
        is_true(STANDARD_TWO, parse_formula("(0 = 0)"), mode="sideways")


def test_witness_model_replay():
    assert is_true(WITNESS_MODEL, WITNESS_INSTANCE, mode="standard")
    assert not is_true(WITNESS_MODEL, WITNESS_INSTANCE, mode="parameterized")
    assert to_text(WITNESS_INSTANCE) == \
        "(forall x2 . (x2 = 0) -> ((x1 + x1) = 0))"


# ------------------------------------------------------------- restrict

def test_restrict_full_image_is_identity_up_to_renumbering():
    m = restrict(STANDARD_TWO)
    assert m.size == 2
    assert is_true(m, parse_formula("forall x1 . ((x1 + 0) = x1)"))


def test_restrict_refuses_escaping_operations():
    with pytest.raises(RestrictError) as exc:
        restrict(WITNESS_MODEL)
    assert "outside the numeral image" in str(exc.value)


def test_restrict_relabels_to_discovery_order():
    # zero sits at 2, the successor orbit visits 2 -> 0 -> 1 -> 0 ...
    m = normal_interpretation(
        size=3, zero=2, succ=(1, 0, 0),
        add=tuple(tuple((a + b) % 3 for b in (2, 0, 1)) for a in (2, 0, 1)),
        mul=tuple(tuple(0 for _ in range(3)) for _ in range(3)))
    # keep only what the orbit reaches, renumbered from zero
    try:
        r = restrict(m)
    except RestrictError:
        pytest.skip("tables escape the image for this layout")
    assert r.zero == 0


def test_restrict_agrees_with_parameterized_truth():
    # when restriction succeeds, parameterized truth in the big model
    # matches standard truth in the restricted one
    rng = random.Random(640640)
    suite = collapse_suite()[:10]
    checked = 0
    while checked < 8:
        m = random_interpretation(rng, rng.choice((2, 3)))
        try:
            r = restrict(m)
        except RestrictError:
            continue
        checked += 1
        for _, f in suite:
            assert is_true(m, f, mode="parameterized") == \
                is_true(r, f, mode="standard")


# ---------------------------------------------------------- enumeration

def test_enumerate_interpretations_count():
    # size 1: every table is forced
    assert len(list(enumerate_interpretations(1))) == 1
    # size 2: zero choice x succ tables x add tables x mul tables
    models = list(enumerate_interpretations(2))
    assert len(models) == 2 * 4 * 16 * 16
    assert all(m.normal for m in models)
    assert len(set(models)) == len(models)


def test_enumerate_congruent_eq_tables():
    plain = list(enumerate_interpretations(2))
    congruent = list(enumerate_interpretations(2, eq_tables="congruent"))
    # every size-2 operation set admits exactly the identity and the
    # all-true relation
    assert len(congruent) == 2 * len(plain)
    all_true = tuple(tuple(1 for _ in range(2)) for _ in range(2))
    eqs = {m.eq for m in congruent}
    assert eqs == {identity_eq(2), all_true}


def test_random_interpretation_is_reproducible():
    a = random_interpretation(random.Random(7), 3)
    b = random_interpretation(random.Random(7), 3)
    assert a == b


# ------------------------------------------------------------ metacheck

def test_metacheck_standard_axioms_hold_everywhere():
    report = metacheck(2, ("A1", "A2", "A3"), mode="standard")
    assert report.violations == ()
    assert report.examined > 0
    assert report.exhausted


def test_metacheck_a4_parameterized_finds_divergence():
    report = metacheck(2, ("A4",), mode="parameterized")
    assert report.violations
    v = report.violations[0]
    assert v.family == "A4"
    assert "instance not true" in v.detail
    # the documented witness model is among the violators
    assert any(w.model == WITNESS_MODEL for w in report.violations)


def test_metacheck_counts_are_deterministic():
    a = metacheck(2, ("A4",), mode="parameterized")
    b = metacheck(2, ("A4",), mode="parameterized")
    assert a.examined == b.examined
    assert len(a.violations) == len(b.violations)
    assert str(a) == str(b)


def test_metacheck_budget_cuts_off():
    report = metacheck(2, ("A4",), mode="parameterized", budget=50)
    assert report.examined <= 50
    assert not report.exhausted


def test_metacheck_rejects_unknown_family():
    with pytest.raises(ValueError):
        metacheck(1, ("A7",))
    with pytest.raises(ValueError):
        metacheck(1, ("A1",), mode="sideways")


def test_metacheck_collapse_family_clean_both_modes():
    for mode in ("standard", "parameterized"):
        report = metacheck(1, ("collapse",), mode=mode)
        assert report.violations == (), mode


def test_metacheck_substitution_family_parameterized_only():
    clean = metacheck(2, ("substitution",), mode="standard")
    assert clean.violations == ()
    dirty = metacheck(2, ("substitution",), mode="parameterized")
    assert dirty.violations


def test_metacheck_report_str_shape():
    report = metacheck(1, ("A1", "rules"))
    text = str(report)
    assert "examined" in text
    assert "violation(s)" in text


def test_collapse_suite_is_pinned():
    suite = collapse_suite()
    assert len(suite) == 30
    assert collapse_suite() is suite       # cached, not rebuilt
    for var, f in suite:
        assert var in (1, 2)
