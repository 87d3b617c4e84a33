#!/usr/bin/env python3
"""
Test script for the commutator set.

This script tests that:
1. K(G) = γ2(G) on groups where every element of γ2 is a commutator
2. Known non-commutators are reported as witnesses (φ23, F/R, T2_9(0,0,0))
3. is_commutator produces a pair (x, y) with [x, y] = w and rejects elements outside γ2
4. [x, G] is x^-1·class(x)
5. The covering check validates its preconditions
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from loguru import logger

from catalog import catalog_build, get_entry_by_name
from pgc.collector import PcGroup
from pgc.commutators import commutator_set, covering_check, is_commutator, two_commutator_width, x_commutators
from pgc.constructions import free_class2, heisenberg, t2_9
from pgc.errors import NotInDerivedSubgroupError, PreconditionError
from pgc.structure import center, closure, derived_subgroup

# Configure logger for testing
logger.remove()
logger.add(sys.stderr, level="DEBUG")


def test_small_groups_have_all_commutators():
    for pres in (heisenberg(3), heisenberg(2), free_class2(3, 3)):
        group = PcGroup(pres)
        analysis = commutator_set(group)
        assert analysis.equal
        assert analysis.witnesses == []
        assert analysis.size == derived_subgroup(group).order
        assert two_commutator_width(group)


def test_free_class2_rank4_has_non_commutators():
    # x1∧x2 + x3∧x4 is not decomposable
    group = PcGroup(free_class2(4, 3))
    analysis = commutator_set(group)
    assert not analysis.equal
    w = group.word([("[x2,x1]", 1), ("[x4,x3]", 1)])
    assert w in analysis.witnesses
    assert analysis.width2


def test_phi23_witness():
    group = PcGroup(catalog_build("phi23", {"p": 5}))
    analysis = commutator_set(group)
    assert not analysis.equal
    labels = [w.label() for w in analysis.witnesses]
    assert "α4·γ" in labels
    assert analysis.width2
    assert analysis.witnesses == sorted(analysis.witnesses)


def test_f_mod_r_witness():
    group = PcGroup(catalog_build("F_mod_R", {"p": 3}))
    analysis = commutator_set(group)
    assert not analysis.equal
    # [a,b][c,d] = ([b,a][d,c])^-1; K is closed under inverses
    w = group.word([("[b,a]", 1), ("[d,c]", 1)])
    assert w in analysis.witnesses
    assert group.inverse(w) in analysis.witnesses
    assert analysis.width2


def test_t2_9_witness():
    group = PcGroup(t2_9(0, 0, 0))
    analysis = commutator_set(group)
    assert not analysis.equal
    assert "[v4,v1]·[v4,v3]·[v5,v2]" in [w.label() for w in analysis.witnesses]
    assert analysis.width2

    for rst in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)):
        assert commutator_set(PcGroup(t2_9(*rst))).equal


def test_is_commutator():
    group = PcGroup(catalog_build("F_mod_R", {"p": 3}))
    gamma2 = derived_subgroup(group)
    for w in list(gamma2.elements())[:20]:
        found, pair = is_commutator(group, w)
        if found:
            x, y = pair
            assert group.commutator(x, y) == w
        else:
            assert w in commutator_set(group).witnesses

    found, pair = is_commutator(group, group.identity)
    assert found and pair == (group.identity, group.identity)

    with pytest.raises(NotInDerivedSubgroupError):
        is_commutator(group, group.generator("a"))


def test_x_commutators():
    group = PcGroup(heisenberg(3))
    a, b, c = group.gens
    assert x_commutators(group, a) == {group.identity, c, group.power(c, 2)}
    assert x_commutators(group, c) == {group.identity}


def test_covering_check_preconditions():
    group = PcGroup(heisenberg(3))
    a, b, c = group.gens
    with pytest.raises(PreconditionError):
        covering_check(group, [a], closure(group, [a]))
    # one non-central element covers γ2 of the Heisenberg group
    assert covering_check(group, [a], closure(group, [c]))


def test_covering_family_phi40():
    pres = catalog_build("phi40", {"p": 5})
    group = PcGroup(pres)

    words, h_words = get_entry_by_name("phi40").covering_family({"p": 5})
    xs = [group.word(w) for w in words]
    H = closure(group, [group.word(w) for w in h_words])
    assert H.is_subgroup_of(center(group))
    assert covering_check(group, xs, H)
    assert commutator_set(group).equal


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
