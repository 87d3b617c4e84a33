#!/usr/bin/env python3
"""
Test script for hypothesis checks, case classification and the lemma suite.

This script tests that:
1. Hypothesis records name each failed condition and classification refuses to run on them
2. Theorem A cases A1, A2 and A3a are recognized and agree with the brute-force commutator set
3. Theorem B recognizes the T2_9(0,0,0) commutation map, rejects the seven other variants and reports
   undetermined cases over budget
4. The lemma suite reports not-applicable on abelian groups and passes on catalog groups
"""

import sys
from itertools import product
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from loguru import logger

from catalog import catalog_build
from pgc.collector import PcGroup
from pgc.constructions import elementary_abelian, heisenberg, t2_9
from pgc.errors import HypothesisError
from pgc.schemas import LemmaStatus, Theorem, TheoremCase
from pgc.verifier import (
    STEM_NOTE,
    applicable_theorem,
    check_hypotheses,
    classify,
    classify_theorem_A,
    classify_theorem_B,
    lemma_suite,
    maximal_centralizer_element,
)

# Configure logger for testing
logger.remove()
logger.add(sys.stderr, level="DEBUG")


def _statuses(checks):
    return {c.lemma: c.status for c in checks}


def test_hypotheses_record_failures():
    record = check_hypotheses(heisenberg(3), "A")
    assert not record.passed
    assert [c.name for c in record.failures()] == ["|γ2(G)| = p^4"]
    assert record.reading is not None

    with pytest.raises(HypothesisError) as exc:
        classify_theorem_A(heisenberg(3))
    assert exc.value.record == record

    with pytest.raises(HypothesisError):
        classify_theorem_B(heisenberg(2))
    assert applicable_theorem(heisenberg(3)) is None


def test_theorem_a_class_four():
    result = classify_theorem_A(catalog_build("phi23", {"p": 5}))
    assert result.case is TheoremCase.A1
    assert result.predicted_unequal and result.brute_force_unequal
    assert result.agree is True
    assert result.width2
    assert any(line.startswith("non-commutator") for line in result.evidence)
    assert STEM_NOTE in result.notes

    result = classify(catalog_build("phi40", {"p": 5}), Theorem.A)
    assert result.case is TheoremCase.none
    assert result.agree is True


def test_theorem_a_class_three():
    pres = catalog_build("class3_p7_4", {"p": 3})
    assert applicable_theorem(pres) is Theorem.A
    result = classify(pres, "A")
    assert result.case is TheoremCase.A2
    assert result.agree is True


def test_theorem_a_class_two():
    group = PcGroup(catalog_build("F_mod_R", {"p": 3}))
    x = maximal_centralizer_element(group)
    assert x is not None
    result = classify_theorem_A(group)
    assert result.case is TheoremCase.A3a
    assert result.agree is True

    result = classify_theorem_A(catalog_build("F_mod_R1", {"p": 3}))
    assert result.case is TheoremCase.none
    assert not result.brute_force_unequal
    assert result.agree is True


def test_theorem_b():
    result = classify_theorem_B(t2_9(0, 0, 0))
    assert result.case is TheoremCase.B1
    assert result.agree is True

    result = classify_theorem_B(t2_9(1, 0, 0))
    assert result.case is TheoremCase.none
    assert result.agree is True


@pytest.mark.parametrize("r,s,t", list(product((0, 1), repeat=3)))
def test_theorem_b_on_every_t2_variant(r, s, t):
    special = (r, s, t) == (0, 0, 0)
    result = classify_theorem_B(t2_9(r, s, t))
    assert result.case is (TheoremCase.B1 if special else TheoremCase.none)
    assert result.predicted_unequal is special
    assert result.brute_force_unequal is special
    assert result.agree is True


def test_theorem_b_over_budget():
    result = classify_theorem_B(t2_9(0, 0, 0), budget=1)
    assert result.case is TheoremCase.undetermined
    assert result.predicted_unequal is None
    assert result.agree is None
    assert result.brute_force_unequal
    assert any(note.startswith("case undetermined") for note in result.notes)


def test_lemma_suite_on_abelian_group():
    checks = lemma_suite(elementary_abelian(3, 3))
    assert len(checks) == 8
    assert all(c.status is LemmaStatus.not_applicable for c in checks)


def test_lemma_suite_on_catalog_groups():
    statuses = _statuses(lemma_suite(catalog_build("phi23", {"p": 5})))
    assert statuses["center_not_maximal_in_derived"] is LemmaStatus.passed
    assert statuses["breadth_at_least_three"] is LemmaStatus.passed
    assert statuses["covering_family"] is LemmaStatus.not_applicable

    statuses = _statuses(lemma_suite(catalog_build("F_mod_R", {"p": 3})))
    assert statuses["pth_powers_central"] is LemmaStatus.passed
    assert statuses["breadth_at_least_three"] is LemmaStatus.passed
    assert statuses["stem_condition"] is LemmaStatus.passed
    assert LemmaStatus.failed not in statuses.values()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
