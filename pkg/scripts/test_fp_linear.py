#!/usr/bin/env python3
"""
Test script for prime-field arithmetic and linear algebra.

This script tests that:
1. Non-prime moduli and mixed moduli are rejected
2. Row reduction, rank, nullspace and solving agree with hand computations
3. Incremental echelon bases track spans correctly
4. Quadratic residues, non-residues and quadratic equations behave as over F_p
5. Random systems over F_p^n (n <= 4, p <= 7) solve to exactly the brute-force solution sets
"""

import random
import sys
from itertools import product
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from loguru import logger

from pgc import config
from pgc.errors import FieldError
from pgc.fp_linear import (
    EchelonBasis,
    FpMatrix,
    FpScalar,
    check_prime,
    gl_order,
    inv_mod,
    is_quadratic_residue,
    nullspace,
    projective_points,
    rank,
    rref,
    smallest_nonresidue,
    solve_linear,
    solve_quadratic,
    span,
)

# Configure logger for testing
logger.remove()
logger.add(sys.stderr, level="DEBUG")


def test_check_prime():
    assert check_prime(7) == 7
    for bad in (0, 1, 4, 9, -3):
        with pytest.raises(FieldError):
            check_prime(bad)


def test_scalar_arithmetic():
    x = FpScalar(2, 5)
    assert int(x * 3) == 1
    assert int(x.inverse()) == 3
    assert int(x - 4) == 3
    assert int(x**4) == 1
    assert inv_mod(3, 7) == 5
    with pytest.raises(FieldError):
        FpScalar(1, 3) + FpScalar(1, 5)


def test_rref_rank():
    # (2, 4, 1) = 2·(1, 2, 3) mod 5
    result = rref(FpMatrix.from_rows([[2, 4, 1], [1, 2, 3]], 5))
    assert result.rank == 1
    assert result.pivots == (0,)
    assert result.reduced.tolist()[0] == [1, 2, 3]

    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]], 2) == 2
    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]], 3) == 3
    assert rank([], 3) == 0


def test_nullspace_and_solve():
    m = FpMatrix.from_rows([[1, 1, 1]], 3)
    basis = nullspace(m)
    assert len(basis) == 2
    for v in basis:
        assert sum(v) % 3 == 0

    m = FpMatrix.from_rows([[1, 2, 0], [0, 1, 1]], 5)
    x, kernel = solve_linear(m, [3, 4])
    assert (x[0] + 2 * x[1]) % 5 == 3
    assert (x[1] + x[2]) % 5 == 4
    assert len(kernel) == 1

    inconsistent = FpMatrix.from_rows([[1, 1], [2, 2]], 3)
    assert solve_linear(inconsistent, [1, 0]) is None


def test_echelon_basis():
    basis = EchelonBasis(3, 3)
    assert basis.add((1, 1, 0))
    assert basis.add((0, 1, 1))
    assert not basis.add((1, 2, 1))
    assert basis.rank == 2
    assert basis.contains((2, 1, 2))
    assert not basis.contains((0, 0, 1))
    copy = basis.copy()
    copy.add((0, 0, 1))
    assert basis.rank == 2 and copy.rank == 3


def test_enumeration_helpers():
    assert len(list(projective_points(2, 3))) == 4
    assert len(list(projective_points(4, 2))) == 15
    assert len(span([(1, 0, 1), (0, 1, 1)], 5)) == 25
    assert gl_order(2, 2) == 6
    assert gl_order(5, 2) == 9999360


def test_residues():
    assert is_quadratic_residue(4, 7)
    assert not is_quadratic_residue(3, 7)
    assert is_quadratic_residue(FpScalar(2, 7))
    with pytest.raises(FieldError):
        is_quadratic_residue(0, 5)

    assert int(smallest_nonresidue(3)) == 2
    assert int(smallest_nonresidue(5)) == 2
    assert int(smallest_nonresidue(7)) == 3
    with pytest.raises(FieldError):
        smallest_nonresidue(2)


def test_solve_quadratic():
    assert {int(x) for x in solve_quadratic(1, 0, -1, 5)} == {1, 4}
    # 2 is not a square mod 5
    assert solve_quadratic(1, 0, -2, 5) == set()
    assert {int(x) for x in solve_quadratic(1, 2, 1, 7)} == {6}
    assert {int(x) for x in solve_quadratic(0, 2, 1, 5)} == {2}
    with pytest.raises(FieldError):
        solve_quadratic(0, 0, 0, 5)
    with pytest.raises(FieldError):
        solve_quadratic(1, 0, 1, 2)


def _satisfies(rows, b, x, p):
    return all(sum(a * v for a, v in zip(row, x)) % p == t for row, t in zip(rows, b))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_random_systems_match_brute_force(p):
    rng = random.Random(config.RANDOM_SEED + p)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(rng.randint(1, 4))]
        b = [rng.randrange(p) for _ in rows]
        brute = {x for x in product(range(p), repeat=n) if _satisfies(rows, b, x, p)}
        homogeneous = [x for x in product(range(p), repeat=n) if _satisfies(rows, [0] * len(rows), x, p)]

        r = rank(rows, p, cols=n)
        assert len(span(rows, p)) == p**r
        assert len(homogeneous) == p ** (n - r)

        result = solve_linear(FpMatrix.from_rows(rows, p, cols=n), b)
        if not brute:
            assert result is None
            continue
        x, kernel = result
        assert len(kernel) == n - r
        shifts = span(kernel, p) if kernel else {(0,) * n}
        assert {tuple((a + d) % p for a, d in zip(x, k)) for k in shifts} == brute


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_euler_criterion_matches_squares(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(1, p):
        assert is_quadratic_residue(a, p) == (a in squares)
    assert not is_quadratic_residue(smallest_nonresidue(p))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_solve_quadratic_exhaustive(p):
    for a, b, c in product(range(p), repeat=3):
        if a == b == c == 0:
            continue
        expected = {x for x in range(p) if (a * x * x + b * x + c) % p == 0}
        assert {int(x) for x in solve_quadratic(a, b, c, p)} == expected, (a, b, c)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
