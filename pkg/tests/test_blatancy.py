"""Blatant falsity/truth: definition cases and exhaustive properties."""

import random

from qbfgames.formula import (
    FALSE,
    TRUE,
    And,
    Assignment,
    Literal,
    Not,
    Or,
    blatantly_false,
    blatantly_true,
    parse_formula,
    simplify,
)
from qbfgames.generators import random_formula

from _corpus import (
    SAMPLE_TEXT,
    SAMPLE_VARS,
    all_partial_assignments,
    completion_mask,
    enumerate_formulas,
    truth_table,
)


def empty(n):
    return Assignment.empty(n)


class TestDefinitionCases:
    def test_nested_constant_false_is_blatant(self):
        # (not x0) and (false and (x1 or x2)) and x3
        f = And(
            (
                Literal(0, True),
                And((FALSE, Or((Literal(1), Literal(2))))),
                Literal(3),
            )
        )
        assert blatantly_false(f, empty(4))

    def test_contradiction_is_not_blatant(self):
        f = And((Literal(0), Literal(0, True)))
        assert not blatantly_false(f, empty(1))

    def test_false_assigned_literal(self):
        a = Assignment.from_pairs(1, [(0, False)])
        assert blatantly_false(Literal(0), a)
        assert blatantly_true(Literal(0, True), a)

    def test_true_assigned_literal(self):
        a = Assignment.from_pairs(1, [(0, True)])
        assert blatantly_true(Literal(0), a)
        assert blatantly_false(Literal(0, True), a)

    def test_unassigned_literal_is_neither(self):
        assert not blatantly_false(Literal(0), empty(1))
        assert not blatantly_true(Literal(0), empty(1))

    def test_tautology_is_not_blatantly_true(self):
        f = Or((Literal(0), Literal(0, True)))
        assert not blatantly_true(f, empty(1))

    def test_sample_formula_blatantly_true_after_five_moves(self):
        # x3=T x1=F x2=T x4=F x0=T makes every clause blatantly true
        f = parse_formula(SAMPLE_TEXT, SAMPLE_VARS)
        a = Assignment.from_pairs(
            SAMPLE_VARS, [(3, True), (1, False), (2, True), (4, False), (0, True)]
        )
        assert blatantly_true(f, a)
        assert not blatantly_true(
            f, Assignment.from_pairs(SAMPLE_VARS, [(3, True), (1, False)])
        )

    def test_not_swaps_polarity(self):
        inner = Or((Literal(0), Literal(1)))
        a = Assignment.from_pairs(2, [(0, True)])
        assert blatantly_true(inner, a)
        assert blatantly_false(Not(inner), a)

    def test_constants(self):
        assert blatantly_false(FALSE, empty(0))
        assert blatantly_true(TRUE, empty(0))
        assert not blatantly_false(TRUE, empty(0))


class TestExhaustiveProperties:
    """Soundness, mutual exclusivity, and duality over every formula with up
    to two connectives and all 81 partial assignments (the acceptance suite
    re-runs this at three connectives)."""

    def test_small_corpus(self):
        assigns = all_partial_assignments()
        for f in enumerate_formulas(2):
            tt = truth_table(f)
            negated = Not(f)
            for a in assigns:
                bf = blatantly_false(f, a)
                bt = blatantly_true(f, a)
                assert not (bf and bt), (f, a)
                mask = completion_mask(a)
                if bf:
                    assert tt & mask == 0, (f, a)
                if bt:
                    assert (~tt) & mask == 0, (f, a)
                assert bt == blatantly_false(negated, a), (f, a)
                assert bf == blatantly_true(negated, a), (f, a)


class TestSimplifyAgreement:
    def test_blatant_falsity_implies_simplified_constant(self):
        # required direction: blatant falsity always collapses the simplified
        # view to the false constant (dually for truth)
        assigns = all_partial_assignments()
        for f in enumerate_formulas(2):
            for a in assigns:
                if blatantly_false(f, a):
                    assert simplify(f, a) == FALSE, (f, a)
                if blatantly_true(f, a):
                    assert simplify(f, a) == TRUE, (f, a)

    def test_converse_observed_for_this_simplifier(self):
        # With the fixed rule set (substitution, short-circuit, flattening,
        # unwrapping, double negation) the converse holds as well: the
        # simplifier never detects falsity that the blatancy recursion
        # misses.  This is an observed property of this particular rule set,
        # not a requirement; a stronger simplifier would break it.
        assigns = all_partial_assignments()
        for f in enumerate_formulas(2):
            for a in assigns:
                s = simplify(f, a)
                if s == FALSE:
                    assert blatantly_false(f, a), (f, a)
                if s == TRUE:
                    assert blatantly_true(f, a), (f, a)

    def test_agreement_on_random_formulas(self):
        rng = random.Random(7)
        for _ in range(400):
            n = rng.randint(1, 8)
            f = random_formula(rng, n, budget=rng.randint(0, 12))
            a = Assignment(tuple(rng.choice((True, False, None)) for _ in range(n)))
            assert blatantly_false(f, a) == (simplify(f, a) == FALSE)
            assert blatantly_true(f, a) == (simplify(f, a) == TRUE)
