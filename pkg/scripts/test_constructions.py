#!/usr/bin/env python3
"""
Test script for group builders, central quotients and central products.

This script tests that:
1. Builders produce groups of the advertised order and shape
2. central_quotient rejects non-central and out-of-socle words, and reproduces the explicit F/R1 relations
3. central_product amalgamates socle generators and rejects bad amalgamations
4. Commutator equality does not pass through central products: F/R has K != γ2 while F/R ∘ E has K = γ2
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from loguru import logger

from catalog import catalog_build
from pgc.collector import PcGroup
from pgc.commutators import commutator_set
from pgc.constructions import (
    central_product,
    central_quotient,
    direct_product,
    elementary_abelian,
    free_class2,
    heisenberg,
    socle_positions,
    t2_9,
)
from pgc.errors import AmalgamationError, NotCentralError, NotInSocleError, PresentationError
from pgc.presentation import from_relations
from pgc.structure import center, derived_subgroup, nilpotency_class

# Configure logger for testing
logger.remove()
logger.add(sys.stderr, level="DEBUG")


def test_builders():
    free = free_class2(4, 3)
    assert free.n == 10
    assert free.labels[4] == "[x2,x1]" and free.labels[-1] == "[x4,x3]"
    assert socle_positions(free) == list(range(4, 10))
    assert socle_positions(heisenberg(5)) == [2]
    assert socle_positions(elementary_abelian(3, 5)) == [0, 1, 2]

    group = PcGroup(t2_9(0, 0, 0))
    assert group.order == 2**9
    assert center(group) == derived_subgroup(group)

    with pytest.raises(PresentationError):
        free_class2(3, 3, labels=["a", "b"])


def test_central_quotient_checks():
    with pytest.raises(NotCentralError):
        central_quotient(heisenberg(3), [[("a", 1)]])

    # C4 = <x | x^2 = y>: x is central but y is the whole socle
    c4 = from_relations(2, ["x", "y"], powers={"x": [("y", 1)]})
    assert socle_positions(c4) == [1]
    with pytest.raises(NotInSocleError):
        central_quotient(c4, [[("x", 1)]])

    assert central_quotient(heisenberg(3), []) == heisenberg(3)
    assert central_quotient(heisenberg(3), [[("c", 1)]]).n == 2


def test_quotient_matches_explicit_relations():
    for p in (3, 5):
        assert catalog_build("NY18_type_1_p3", {"p": p}) == catalog_build("F_mod_R1", {"p": p})
    pres = catalog_build("F_mod_R", {"p": 3})
    assert pres.labels == ("a", "b", "c", "d", "[b,a]", "[c,a]", "[c,b]", "[d,c]")


def test_central_product_of_heisenberg_groups():
    product = central_product(heisenberg(3), heisenberg(3), {"c": [("c", 1)]})
    group = PcGroup(product)
    assert group.order == 3**5
    assert center(group).order == 3
    assert nilpotency_class(group) == 2
    assert PcGroup(product).consistency_check() is None


def test_direct_product():
    product = direct_product(heisenberg(3), heisenberg(3))
    assert product.labels == ("a", "b", "a'", "b'", "c", "c'")
    group = PcGroup(product)
    assert group.order == 3**6
    assert center(group).order == 9
    assert commutator_set(group).size == 9


def test_amalgamation_errors():
    with pytest.raises(AmalgamationError):
        central_product(heisenberg(3), heisenberg(5), {})
    with pytest.raises(AmalgamationError):
        central_product(heisenberg(3), heisenberg(3), {"a": [("c", 1)]})
    with pytest.raises(AmalgamationError):
        central_product(heisenberg(3), heisenberg(3), {"c": []})
    with pytest.raises(AmalgamationError):
        central_product(heisenberg(3), heisenberg(3), {"c": [("a", 1)]})
    with pytest.raises(AmalgamationError):
        central_product(elementary_abelian(2, 3), heisenberg(3), {"e1": [("c", 1)], "e2": [("c", 2)]})


def test_equality_is_not_preserved_by_central_products():
    f_mod_r = PcGroup(catalog_build("F_mod_R", {"p": 3}))
    assert not commutator_set(f_mod_r).equal

    group = PcGroup(catalog_build("FR_central_extraspecial", {"p": 3}))
    assert group.order == 3**10
    assert derived_subgroup(group).order == 3**4
    assert commutator_set(group).equal


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
