#!/usr/bin/env python3
"""
Test script for pc presentations, the .pcp format and the collector.

This script tests that:
1. .pcp documents parse, serialize canonically and report syntax errors with positions
2. Weight violations are rejected at construction
3. Collection gives the expected normal forms in small groups (Heisenberg, D8, Q8)
4. Consistency checking accepts consistent presentations and names a failing overlap otherwise
5. Elements of different presentations cannot be mixed
6. Class sizes of D8 agree with sympy's dihedral group
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from loguru import logger
from sympy.combinatorics.named_groups import DihedralGroup

from catalog import catalog_build
from pgc.collector import PcGroup
from pgc.constructions import extraspecial_p3, heisenberg
from pgc.errors import ConsistencyError, MixedPresentationError, PresentationError, PresentationSyntaxError
from pgc.presentation import PcPresentation, from_relations, parse_presentation, serialize_presentation
from pgc.structure import conjugacy_classes

# Configure logger for testing
logger.remove()
logger.add(sys.stderr, level="DEBUG")

HEISENBERG_PCP = """\
format_version: 1
p: 3
ngens: 3
labels: [a, b, c]
powers:
commutators:
  (2, 1) -> [(3, 1)]
"""


def test_parse_and_serialize():
    pres = parse_presentation(HEISENBERG_PCP)
    assert pres.p == 3 and pres.n == 3
    assert pres.comm_tails == {(1, 0): ((2, 1),)}
    assert pres.labels == ("a", "b", "c")
    assert serialize_presentation(pres) == HEISENBERG_PCP
    assert pres == heisenberg(3)


def test_comments_and_blank_lines():
    text = "# exported\np: 3\n\nngens: 3   # three generators\ncommutators:\n  (2, 1) -> [(3, 1)]\n"
    assert parse_presentation(text) == heisenberg(3)


def test_syntax_errors_carry_positions():
    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation("p: 3\nngens: x\n")
    assert exc.value.line == 2

    with pytest.raises(PresentationSyntaxError) as exc:
        parse_presentation("p: 3\nngens: 2\ncommutators:\n  (2, 1) -> (1, 1)\n")
    assert exc.value.line == 4

    with pytest.raises(PresentationSyntaxError):
        parse_presentation("p: 3\n")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("p: 3\nngens: 2\ncolour: red\n")


def test_weight_violation():
    with pytest.raises(PresentationError):
        PcPresentation(3, 2, comm_tails={(1, 0): [(0, 1)]})
    with pytest.raises(PresentationError):
        parse_presentation("p: 3\nngens: 3\ncommutators:\n  (2, 1) -> [(2, 1)]\n")
    with pytest.raises(PresentationError):
        PcPresentation(3, 2, power_tails={1: [(0, 1)]})


def test_heisenberg_arithmetic():
    group = PcGroup(heisenberg(3))
    a, b, c = group.gens
    assert group.commutator(b, a) == c
    assert group.commutator(a, b) == group.power(c, 2)
    assert group.power(a, 3).is_identity()
    assert group.multiply(b, a) == group.word([("a", 1), ("b", 1), ("c", 1)])
    assert group.conjugate(b, a) == group.multiply(b, c)
    x = group.word([("a", 2), ("b", 1), ("c", 1)])
    assert group.multiply(x, group.inverse(x)).is_identity()
    assert group.element_order(x) == 3
    assert x.label() == "a^2·b·c"
    assert group.identity.label() == "1"


def test_quaternion_and_dihedral():
    q8 = PcGroup(extraspecial_p3(2, "exp_p2"))
    a, b, c = q8.gens
    assert q8.power(a, 2) == c and q8.power(b, 2) == c
    assert q8.element_order(a) == 4
    assert q8.consistency_check() is None

    d8 = PcGroup(heisenberg(2))
    a, b, c = d8.gens
    assert d8.element_order(a) == 2
    assert d8.element_order(d8.multiply(a, b)) == 4


def test_dihedral_class_sizes_match_sympy():
    group = PcGroup(heisenberg(2))
    ours = sorted(size for _, size in conjugacy_classes(group))
    oracle = sorted(len(cls) for cls in DihedralGroup(4).conjugacy_classes())
    assert ours == oracle == [1, 1, 2, 2, 2]


def test_consistency():
    for pres in (heisenberg(3), heisenberg(2), extraspecial_p3(5, "exp_p2")):
        assert PcGroup(pres).consistency_check() is None

    # a^3 = b with [b, a] = c cannot hold: a commutes with its own power
    bad = from_relations(3, ["a", "b", "c"], commutators={("b", "a"): [("c", 1)]}, powers={"a": [("b", 1)]})
    report = PcGroup(bad).consistency_check()
    assert report is not None
    assert report.left != report.right
    assert "g1" in report.overlap


def test_known_inconsistent_entry():
    pres = catalog_build("class4_p7_1", {"p": 3}, check=False)
    report = PcGroup(pres).consistency_check()
    assert report is not None
    with pytest.raises(ConsistencyError) as exc:
        catalog_build("class4_p7_1", {"p": 3})
    assert exc.value.report == report


def test_mixed_presentations():
    g3 = PcGroup(heisenberg(3))
    g5 = PcGroup(heisenberg(5))
    with pytest.raises(MixedPresentationError):
        g3.multiply(g3.gens[0], g5.gens[0])
    # same relations, separate objects: elements are compatible
    other = PcGroup(heisenberg(3))
    assert g3.multiply(g3.gens[0], other.gens[1]) == other.multiply(other.gens[0], other.gens[1])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
