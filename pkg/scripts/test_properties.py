#!/usr/bin/env python3
"""
Property checks over random elements and catalog groups.

This script tests that:
1. Collection is associative and satisfies the Hall-Witt identity in every catalog group for p <= 5
2. The orbit-based commutator set equals the naive set of all [x, y] over Z-cosets
3. The commutation map agrees with the group on K(G) and conjugate type for class-2 entries
4. |γ2(G)| = p^4 forces b(G) >= 3
5. K(G/H) read off K(G) matches the explicit central quotient for every order-p normal H in γ2(G)
6. G and G × C_p agree on K(G) = γ2(G) and conjugate type
7. Central products of groups with K = γ2 again have K = γ2
8. The lemma suite and the catalog sweep report no failures
"""

import random
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from loguru import logger

from catalog import catalog_build, get_entry_by_name, list_catalog_entries
from pgc import config
from pgc.bilinear import conjugate_type_from_B, extract_bilinear, image
from pgc.collector import PcGroup
from pgc.commutators import commutator_set
from pgc.constructions import (
    central_product,
    central_quotient,
    direct_product,
    elementary_abelian,
    extraspecial_p3,
    free_class2,
    heisenberg,
    t2_9,
)
from pgc.schemas import LemmaStatus
from pgc.services import VerificationSweep
from pgc.structure import center, conjugacy_classes, conjugate_type, derived_subgroup, group_breadth
from pgc.verifier import central_subgroups_of_order_p, commutators_cover_mod, lemma_suite

# Configure logger for testing
logger.remove()
logger.add(sys.stderr, level="DEBUG")

PROPERTY_PRIMES = (2, 3, 5)
FAST_ORDER = 5**6

SMALL_GROUPS = [
    ("heisenberg", {"p": 3}),
    ("extraspecial_p3", {"p": 2, "kind": "exp_p2"}),
    ("F_mod_R", {"p": 3}),
    ("class3_p7_4", {"p": 3}),
    ("phi23", {"p": 5}),
    ("T2_9", {"r": 0, "s": 1, "t": 0}),
]

CLASS2_GROUPS = [
    ("heisenberg", {"p": 5}),
    ("free_class2_expp", {"p": 3, "n": 3}),
    ("F_mod_R", {"p": 3}),
    ("F_mod_R1", {"p": 3}),
    ("T2_9", {}),
    ("T2_9", {"r": 1, "s": 1, "t": 1}),
]


def _groups(specs):
    return [PcGroup(catalog_build(name, params)) for name, params in specs]


def _catalog_cases(primes=PROPERTY_PRIMES, first_only=False):
    for name in list_catalog_entries():
        entry = get_entry_by_name(name)
        if entry.known_inconsistent:
            continue
        valid = [p for p in primes if entry.valid_for(p)]
        for p in valid[:1] if first_only else valid:
            yield pytest.param(name, p, id=f"{name}-p{p}")


def _comm3(group, x, y, z):
    return group.commutator(group.commutator(x, y), z)


def _check_identities(group, rng, associativity, hall_witt):
    for k in range(associativity):
        x, y, z = (group.random_element(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert (x * x.inverse()).is_identity()
        if k >= hall_witt:
            continue
        # [x, y^-1, z]^y [y, z^-1, x]^z [z, x^-1, y]^x = 1
        factors = [
            group.conjugate(_comm3(group, x, y.inverse(), z), y),
            group.conjugate(_comm3(group, y, z.inverse(), x), z),
            group.conjugate(_comm3(group, z, x.inverse(), y), x),
        ]
        assert group.product(factors).is_identity()


@pytest.mark.parametrize("name,p", _catalog_cases())
def test_associativity_and_hall_witt(name, p):
    group = PcGroup(catalog_build(name, {"p": p}))
    _check_identities(group, random.Random(config.RANDOM_SEED + p), associativity=500, hall_witt=50)


@pytest.mark.slow
@pytest.mark.skipif(not config.SLOW_TESTS, reason="set PGC_SLOW_TESTS=1")
@pytest.mark.parametrize("name,p", _catalog_cases())
def test_associativity_and_hall_witt_full(name, p):
    group = PcGroup(catalog_build(name, {"p": p}))
    _check_identities(group, random.Random(config.RANDOM_SEED + p), associativity=10**4, hall_witt=10**3)


def test_class_equation():
    for group in _groups(SMALL_GROUPS):
        classes = conjugacy_classes(group)
        assert sum(size for _, size in classes) == group.order
        assert sum(1 for _, size in classes if size == 1) == center(group).order


def test_commutator_set_matches_naive_enumeration():
    for group in _groups(SMALL_GROUPS[:4]) + [PcGroup(free_class2(4, 3))]:
        transversal = list(center(group).transversal())
        naive = {group.commutator(x, y).exponents for x in transversal for y in transversal}
        assert naive == set(commutator_set(group).K)


def test_commutation_map_agrees_with_group():
    for group in _groups(CLASS2_GROUPS):
        B = extract_bilinear(group)
        assert len(image(B)) == commutator_set(group).size
        assert conjugate_type_from_B(B) == conjugate_type(group)


def test_derived_order_p4_forces_breadth_three():
    specs = [("F_mod_R", {"p": 3}), ("F_mod_R1", {"p": 3}), ("phi23", {"p": 5}), ("class3_p7_2", {"p": 3})]
    for group in _groups(specs):
        assert derived_subgroup(group).log_order == 4
        assert group_breadth(group) >= 3


def test_quotient_shortcut_matches_central_quotient():
    pres = catalog_build("F_mod_R", {"p": 3})
    group = PcGroup(pres)
    subgroups = central_subgroups_of_order_p(group)
    assert len(subgroups) == (3**4 - 1) // 2
    for H in subgroups:
        quotient = PcGroup(central_quotient(pres, [H.pcgs[0]]))
        assert quotient.order * 3 == group.order
        assert derived_subgroup(quotient).log_order == 3
        explicit = commutator_set(quotient).equal
        assert commutators_cover_mod(group, H) == explicit
        # γ2 of order p^3 and elementary abelian: every element is a commutator
        assert explicit


def test_direct_factor_preserves_verdict():
    for name, params in (("heisenberg", {"p": 3}), ("F_mod_R", {"p": 3}), ("class3_p7_4", {"p": 3})):
        pres = catalog_build(name, params)
        p = pres.p
        product = PcGroup(direct_product(pres, elementary_abelian(1, p)))
        group = PcGroup(pres)
        assert product.order == group.order * p
        assert commutator_set(product).equal == commutator_set(group).equal
        assert conjugate_type(product) == conjugate_type(group)


def _last_label(pres):
    return pres.label(pres.n - 1)


def _central_products():
    q8 = extraspecial_p3(2, "exp_p2")
    f_mod_r1 = catalog_build("F_mod_R1", {"p": 3})
    yield "H3∘H3", heisenberg(3), heisenberg(3), {"c": [("c", 1)]}
    yield "H5∘E5", heisenberg(5), extraspecial_p3(5, "exp_p2"), {"c": [("c", 1)]}
    yield "D8∘Q8", heisenberg(2), q8, {"c": [("c", 1)]}
    yield "H3∘F_mod_R1", heisenberg(3), f_mod_r1, {"c": [(_last_label(f_mod_r1), 1)]}
    yield "class3_p7_1∘H3", catalog_build("class3_p7_1", {"p": 3}), heisenberg(3), {"γ": [("c", 1)]}
    yield "T2(1,0,0)∘Q8", t2_9(1, 0, 0), q8, {"[v5,v4]": [("c", 1)]}
    yield "T2(0,1,1)∘Q8", t2_9(0, 1, 1), q8, {"[v5,v4]": [("c", 1)]}


@pytest.mark.parametrize("label,A,B,amalgamation", [pytest.param(*case, id=case[0]) for case in _central_products()])
def test_central_products_keep_commutator_equality(label, A, B, amalgamation):
    ga, gb = PcGroup(A), PcGroup(B)
    assert commutator_set(ga).equal and commutator_set(gb).equal

    product = PcGroup(central_product(A, B, amalgamation))
    assert product.consistency_check() is None
    assert product.order * A.p ** len(amalgamation) == ga.order * gb.order
    assert commutator_set(product).equal, label


def _fast_names(p):
    names = []
    for name in list_catalog_entries():
        entry = get_entry_by_name(name)
        if entry.known_inconsistent or not entry.valid_for(p):
            continue
        if p ** catalog_build(name, {"p": p}).n <= FAST_ORDER:
            names.append(name)
    return names


def test_verify_sweep_at_p3():
    names = None if config.SLOW_TESTS else _fast_names(3)
    sweep = VerificationSweep([3], names=names)
    rows = sweep.run()
    assert rows
    assert all(row.ok for row in rows), [row.entry for row in rows if not row.ok]
    assert all(row.agree for row in rows if row.theorem is not None)


@pytest.mark.parametrize("name,p", _catalog_cases(primes=(3, 5, 2), first_only=True))
def test_lemma_suite_has_no_failures(name, p):
    entry = get_entry_by_name(name)
    params = entry.validate({"p": p})
    pres = catalog_build(name, params)
    if p**pres.n > FAST_ORDER and not config.SLOW_TESTS:
        pytest.skip(f"order {p}^{pres.n}; set PGC_SLOW_TESTS=1")
    checks = lemma_suite(pres, entry.covering_family(params))
    assert [c.lemma for c in checks if c.status is LemmaStatus.failed] == []


@pytest.mark.slow
@pytest.mark.skipif(not config.SLOW_TESTS, reason="set PGC_SLOW_TESTS=1")
def test_verify_sweep_at_p5():
    sweep = VerificationSweep([5])
    rows = sweep.run()
    assert rows
    assert all(row.ok for row in rows), [row.entry for row in rows if not row.ok]
    assert sweep.summary().skipped >= 1


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
