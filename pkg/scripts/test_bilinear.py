#!/usr/bin/env python3
"""
Test script for the commutation map of class-2 groups.

This script tests that:
1. extract_bilinear recovers B(xZ, yZ) = [x, y] and refuses groups outside its hypotheses
2. The image of B is K(G) and slice ranks give the conjugate type
3. The quadruple search finds complementary isotropic planes when they exist, and random sampling agrees
4. Pseudo-isometry separates the T2_9 variants, survives a basis change and respects budgets
"""

import random
import sys
from collections import Counter
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from loguru import logger

from catalog import catalog_build
from pgc import config
from pgc.bilinear import (
    AltBilinearMap,
    conjugate_type_from_B,
    extract_bilinear,
    hyperbolic_quadruple_search,
    image,
    isotropic_planes,
    find_pseudo_isometry,
    pseudo_isometry,
    rank_spectrum,
    slice_rank,
    v_coordinates,
    w_coordinates,
)
from pgc.collector import PcGroup
from pgc.commutators import commutator_set
from pgc.constructions import direct_product, free_class2, heisenberg, t2_9
from pgc.errors import BudgetExceededError, DimensionError, HypothesisError
from pgc.fp_linear import rank
from pgc.structure import conjugate_type, derived_subgroup

# Configure logger for testing
logger.remove()
logger.add(sys.stderr, level="DEBUG")


def test_heisenberg_map():
    group = PcGroup(heisenberg(3))
    B = extract_bilinear(group)
    assert (B.dv, B.dw) == (2, 1)
    a, b, c = group.gens
    assert B.evaluate(v_coordinates(group, B, a), v_coordinates(group, B, b)) == w_coordinates(
        derived_subgroup(group), group.commutator(a, b)
    )
    assert rank_spectrum(B) == Counter({1: 8})
    assert conjugate_type_from_B(B) == conjugate_type(group)


def test_alternating_table_validation():
    with pytest.raises(DimensionError):
        AltBilinearMap(3, 2, 1, {(1, 0): (1,)})
    with pytest.raises(DimensionError):
        AltBilinearMap(3, 2, 1, {(0, 1): (1, 0)})
    B = AltBilinearMap(3, 2, 1, {(0, 1): (1,)})
    assert B.value(1, 0) == (2,)
    assert B.evaluate((1, 0), (1, 0)) == (0,)


def test_extract_requires_class_two():
    with pytest.raises(HypothesisError):
        extract_bilinear(PcGroup(catalog_build("class3_p7_4", {"p": 3})))


def test_image_is_commutator_set():
    for pres in (free_class2(4, 3), catalog_build("F_mod_R", {"p": 3}), t2_9(0, 0, 0)):
        group = PcGroup(pres)
        B = extract_bilinear(group)
        assert len(image(B)) == commutator_set(group).size
        assert conjugate_type_from_B(B) == conjugate_type(group)


def test_slice_rank_matches_breadth():
    group = PcGroup(catalog_build("F_mod_R", {"p": 3}))
    B = extract_bilinear(group)
    d = group.generator("d")
    assert slice_rank(B, v_coordinates(group, B, d)) == 1


def test_quadruple_search():
    # H × H: a, a' and b, b' span commuting planes
    group = PcGroup(direct_product(heisenberg(3), heisenberg(3)))
    B = extract_bilinear(group)
    assert B.dv == 4
    quadruple = hyperbolic_quadruple_search(B)
    assert quadruple is not None
    v1, v2, v3, v4 = quadruple
    assert not any(B.evaluate(v1, v2)) and not any(B.evaluate(v3, v4))
    assert rank([v1, v2, v3, v4], 3) == 4

    free = extract_bilinear(PcGroup(free_class2(4, 3)))
    assert isotropic_planes(free) == []
    assert hyperbolic_quadruple_search(free) is None

    with pytest.raises(BudgetExceededError):
        hyperbolic_quadruple_search(B, budget=10)
    with pytest.raises(DimensionError):
        hyperbolic_quadruple_search(extract_bilinear(PcGroup(heisenberg(3))))


def _sampled_quadruples(B, rng, samples):
    """Random v1..v4 with B(v1, v2) = 0 = B(v3, v4) that span V."""
    hits = []
    for _ in range(samples):
        vs = [tuple(rng.randrange(B.p) for _ in range(B.dv)) for _ in range(4)]
        if any(B.evaluate(vs[0], vs[1])) or any(B.evaluate(vs[2], vs[3])):
            continue
        if rank(vs, B.p) == 4:
            hits.append(vs)
    return hits


def _check_sampler_agrees(samples):
    rng = random.Random(config.RANDOM_SEED)
    split = extract_bilinear(PcGroup(direct_product(heisenberg(3), heisenberg(3))))
    assert hyperbolic_quadruple_search(split) is not None
    assert _sampled_quadruples(split, rng, min(samples, 10**4))

    free = extract_bilinear(PcGroup(free_class2(4, 3)))
    assert hyperbolic_quadruple_search(free) is None
    assert _sampled_quadruples(free, rng, samples) == []


def test_random_quadruples_agree_with_search():
    _check_sampler_agrees(10**4)


@pytest.mark.slow
@pytest.mark.skipif(not config.SLOW_TESTS, reason="set PGC_SLOW_TESTS=1")
def test_random_quadruples_agree_with_search_full():
    _check_sampler_agrees(10**6)


def test_pseudo_isometry():
    B = extract_bilinear(PcGroup(heisenberg(3)))
    assert pseudo_isometry(B, B)
    free3 = extract_bilinear(PcGroup(free_class2(3, 3)))
    assert not pseudo_isometry(B, free3)

    model = extract_bilinear(PcGroup(t2_9(0, 0, 0)))
    other = extract_bilinear(PcGroup(t2_9(1, 0, 0)))
    assert not pseudo_isometry(model, other)
    with pytest.raises(BudgetExceededError):
        pseudo_isometry(model, other, budget=1000)


def test_pseudo_isometry_after_basis_change():
    model = extract_bilinear(PcGroup(t2_9(0, 0, 0)))
    shuffled = model.permuted([4, 3, 2, 1, 0])
    assert shuffled.value(0, 1) == model.value(4, 3)
    assert pseudo_isometry(model, shuffled)

    images = find_pseudo_isometry(model, shuffled)
    assert images is not None
    assert rank(images, 2) == 5


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
