"""
Exact arithmetic and linear/quadratic algebra over the prime field F_p.

Residues are least non-negative representatives. Matrices are numpy int64 arrays
reduced mod p after every row operation; nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np
from sympy import isprime
from sympy.ntheory import sqrt_mod

from pgc.errors import FieldError


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise FieldError(f"modulus {p} is not prime")
    return int(p)


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise FieldError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FpScalar:
    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        return int(other)

    def __add__(self, other):
        return FpScalar(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpScalar(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FpScalar(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return FpScalar(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpScalar(pow(self.value, k, self.p), self.p)

    def inverse(self) -> FpScalar:
        return FpScalar(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        return self * FpScalar(self._coerce(other), self.p).inverse()

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


@dataclass(frozen=True)
class FpVector:
    """Vector over F_p; entries are stored as residues sharing the one modulus."""

    entries: tuple
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "entries", tuple(int(e) % self.p for e in self.entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> FpScalar:
        return FpScalar(self.entries[i], self.p)

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: FpVector) -> FpVector:
        return FpVector(tuple(a + b for a, b in zip(self.entries, other.entries)), self.p)

    def scale(self, c: int) -> FpVector:
        return FpVector(tuple(c * a for a in self.entries), self.p)

    def is_zero(self) -> bool:
        return not any(self.entries)


class FpMatrix:
    """Rectangular matrix over F_p backed by an int64 numpy array."""

    def __init__(self, data, p: int, cols: Optional[int] = None):
        self.p = check_prime(p)
        array = np.array(data, dtype=np.int64)
        if array.size == 0:
            array = np.zeros((array.shape[0] if array.ndim == 2 else 0, cols or 0), dtype=np.int64)
        if array.ndim != 2:
            raise FieldError(f"matrix data must be 2-dimensional, got shape {array.shape}")
        self.array = array % self.p

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], p: int, cols: Optional[int] = None) -> FpMatrix:
        rows = [list(r.entries) if isinstance(r, FpVector) else list(r) for r in rows]
        return cls(rows, p, cols=cols)

    @property
    def shape(self) -> tuple[int, int]:
        return tuple(self.array.shape)

    @property
    def rows(self) -> list[FpVector]:
        return [FpVector(tuple(int(x) for x in row), self.p) for row in self.array]

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.array]

    def transpose(self) -> FpMatrix:
        return FpMatrix(self.array.T.copy(), self.p)

    def __eq__(self, other):
        return isinstance(other, FpMatrix) and self.p == other.p and np.array_equal(self.array, other.array)

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.tolist()})"


@dataclass(frozen=True)
class RrefResult:
    rank: int
    reduced: FpMatrix
    pivots: tuple


def rref(m: FpMatrix) -> RrefResult:
    """Reduced row-echelon form mod p; row space is preserved."""
    p = m.p
    a = m.array.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv_mod(int(a[r, c]), p)) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - int(a[i, c]) * a[r]) % p
        pivots.append(c)
        r += 1
    return RrefResult(rank=r, reduced=FpMatrix(a, p, cols=cols), pivots=tuple(pivots))


def rank(rows: Sequence[Sequence[int]], p: int, cols: Optional[int] = None) -> int:
    if not rows:
        return 0
    return rref(FpMatrix.from_rows(rows, p, cols=cols)).rank


def nullspace(m: FpMatrix) -> list[tuple]:
    """Basis of {x : m·x = 0}."""
    result = rref(m)
    _, cols = m.shape
    reduced = result.reduced.array
    free = [c for c in range(cols) if c not in result.pivots]
    basis = []
    for f in free:
        x = [0] * cols
        x[f] = 1
        for i, c in enumerate(result.pivots):
            x[c] = int(-reduced[i, f]) % m.p
        basis.append(tuple(x))
    return basis


def solve_linear(m: FpMatrix, b: Sequence[int]) -> Optional[tuple[tuple, list[tuple]]]:
    """
    Solve m·x = b.

    Returns:
        (particular solution, nullspace basis), or None when the augmented column
        carries a pivot (inconsistent system).
    """
    p = m.p
    rows, cols = m.shape
    augmented = FpMatrix(np.hstack([m.array, np.array(b, dtype=np.int64).reshape(rows, 1)]), p)
    result = rref(augmented)
    if cols in result.pivots:
        return None
    x = [0] * cols
    for i, c in enumerate(result.pivots):
        x[c] = int(result.reduced.array[i, cols])
    return tuple(x), nullspace(m)


class EchelonBasis:
    """
    Incrementally built echelon basis of a subspace of F_p^dim, pure integers.

    Used in the hot loops of the bilinear searches where numpy call overhead dominates.
    """

    __slots__ = ("p", "dim", "rows")

    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim
        self.rows: dict[int, list[int]] = {}

    def copy(self) -> EchelonBasis:
        other = EchelonBasis(self.p, self.dim)
        other.rows = dict(self.rows)
        return other

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> list[int]:
        p = self.p
        v = [x % p for x in v]
        for pivot in sorted(self.rows):
            c = v[pivot]
            if c:
                row = self.rows[pivot]
                v = [(a - c * b) % p for a, b in zip(v, row)]
        return v

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence[int]) -> bool:
        """Insert v; returns True when it enlarged the span."""
        v = self.reduce(v)
        for lead, c in enumerate(v):
            if c:
                inv = pow(c, -1, self.p)
                self.rows[lead] = [(x * inv) % self.p for x in v]
                return True
        return False

    def reduced_rows(self) -> list[tuple]:
        """Rows of the reduced row-echelon form of the span; a canonical key for the subspace."""
        p = self.p
        pivots = sorted(self.rows)
        rows = {k: list(self.rows[k]) for k in pivots}
        for b in reversed(pivots):
            for a in pivots:
                c = rows[a][b] if a != b else 0
                if c:
                    rows[a] = [(x - c * y) % p for x, y in zip(rows[a], rows[b])]
        return [tuple(rows[k]) for k in pivots]


def all_vectors(dim: int, p: int) -> Iterator[tuple]:
    return product(range(p), repeat=dim)


def projective_points(dim: int, p: int) -> Iterator[tuple]:
    """One representative per 1-dimensional subspace: first nonzero entry is 1."""
    for lead in range(dim):
        for tail in product(range(p), repeat=dim - lead - 1):
            yield (0,) * lead + (1,) + tail


def span(basis: Sequence[Sequence[int]], p: int) -> set[tuple]:
    dim = len(basis[0]) if basis else 0
    result = set()
    for coeffs in product(range(p), repeat=len(basis)):
        v = [0] * dim
        for c, b in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, b)]
        result.add(tuple(v))
    if not basis:
        result.add(())
    return result


def gl_order(n: int, q: int) -> int:
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order


def _value(a, p: Optional[int]) -> tuple[int, int]:
    if isinstance(a, FpScalar):
        return a.value, a.p
    if p is None:
        raise FieldError("modulus required for a plain integer")
    return int(a) % check_prime(p), p


def is_quadratic_residue(a, p: Optional[int] = None) -> bool:
    """Euler's criterion: a^((p-1)/2) = 1 for nonzero squares."""
    value, p = _value(a, p)
    if value == 0:
        raise FieldError("quadratic residue test is undefined for 0")
    if p == 2:
        return True
    return pow(value, (p - 1) // 2, p) == 1


def smallest_nonresidue(p: int) -> FpScalar:
    check_prime(p)
    if p == 2:
        raise FieldError("every nonzero element of F_2 is a square")
    for nu in range(2, p):
        if not is_quadratic_residue(nu, p):
            return FpScalar(nu, p)
    raise FieldError(f"no non-residue found mod {p}")


def solve_quadratic(a, b, c, p: Optional[int] = None) -> set[FpScalar]:
    """All x in F_p with a·x² + b·x + c = 0 (p odd)."""
    moduli = {x.p for x in (a, b, c) if isinstance(x, FpScalar)}
    if len(moduli) > 1:
        raise FieldError(f"mixed moduli {sorted(moduli)}")
    p = moduli.pop() if moduli else p
    a, _ = _value(a, p)
    b, _ = _value(b, p)
    c, _ = _value(c, p)
    if p == 2:
        raise FieldError("solve_quadratic needs an odd prime")
    if a == b == c == 0:
        raise FieldError("all-zero polynomial")
    if a == 0:
        if b == 0:
            return set()
        return {FpScalar(-c * inv_mod(b, p), p)}
    disc = (b * b - 4 * a * c) % p
    inv_2a = inv_mod(2 * a, p)
    if disc == 0:
        return {FpScalar(-b * inv_2a, p)}
    if not is_quadratic_residue(disc, p):
        return set()
    return {FpScalar((-b + s) * inv_2a, p) for s in sqrt_mod(disc, p, all_roots=True)}
