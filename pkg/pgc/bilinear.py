"""
Alternating bilinear maps B: V × V -> W over F_p, the class-2 model of a p-group.

For G of class 2 with G/Z(G) and γ_2(G) elementary abelian, V = G/Z(G), W = γ_2(G)
and B(xZ, yZ) = [x, y]. Commutators then depend only on V, so K(G), class sizes and
generating-set questions become linear algebra over F_p.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from pgc import config
from pgc.collector import GroupElement, PcGroup
from pgc.errors import BudgetExceededError, DimensionError, FieldError, HypothesisError
from pgc.fp_linear import EchelonBasis, gl_order, projective_points, span
from pgc.logging_config import get_logger
from pgc.structure import (
    ConjugateType,
    Subgroup,
    center,
    derived_subgroup,
    is_elementary_abelian,
    nilpotency_class,
)

logger = get_logger("engine")

Vector = tuple[int, ...]


@dataclass
class AltBilinearMap:
    """
    Alternating map given on basis pairs: table[(i, j)] = B(e_i, e_j) for i < j.

    v_basis / w_basis hold the group elements behind the coordinates when the map
    was extracted from a group.
    """

    p: int
    dv: int
    dw: int
    table: dict[tuple[int, int], Vector]
    v_basis: list[GroupElement] = field(default_factory=list, compare=False, repr=False)
    w_basis: list[GroupElement] = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        for (i, j), value in self.table.items():
            if not 0 <= i < j < self.dv:
                raise DimensionError(f"table key ({i}, {j}) outside 0 <= i < j < {self.dv}")
            if len(value) != self.dw:
                raise DimensionError(f"B(e{i}, e{j}) has {len(value)} coordinates, expected {self.dw}")
        self.table = {k: tuple(x % self.p for x in v) for k, v in self.table.items()}
        self._ranks: dict[Vector, int] = {}

    def value(self, i: int, j: int) -> Vector:
        if i == j:
            return (0,) * self.dw
        if i < j:
            return self.table.get((i, j), (0,) * self.dw)
        return tuple((-x) % self.p for x in self.table.get((j, i), (0,) * self.dw))

    def evaluate(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        p = self.p
        result = [0] * self.dw
        for (i, j), b in self.table.items():
            c = (u[i] * v[j] - u[j] * v[i]) % p
            if c:
                result = [(r + c * x) % p for r, x in zip(result, b)]
        return tuple(result)

    def slice_columns(self, v: Sequence[int]) -> list[Vector]:
        """Columns B(v, e_k) of the linear map B(v, ·): V -> W."""
        unit = [0] * self.dv
        columns = []
        for k in range(self.dv):
            unit[k] = 1
            columns.append(self.evaluate(v, unit))
            unit[k] = 0
        return columns

    def permuted(self, order: Sequence[int]) -> AltBilinearMap:
        """The map B'(e_a, e_b) = B(e_order[a], e_order[b])."""
        table = {}
        for a in range(self.dv):
            for b in range(a + 1, self.dv):
                value = self.value(order[a], order[b])
                if any(value):
                    table[(a, b)] = value
        return AltBilinearMap(self.p, self.dv, self.dw, table)


def _v_coordinates(z: Subgroup, positions: Sequence[int], x: GroupElement) -> Vector:
    rep = z.canonical(x)
    return tuple(rep.exponents[k] for k in positions)


def w_coordinates(gamma2: Subgroup, w: GroupElement) -> Vector:
    """Coordinates of w in the pc sequence of an elementary abelian γ_2."""
    group = gamma2.group
    coords = []
    for lead, t in gamma2.table.items():
        c = w.exponents[lead]
        coords.append(c)
        if c:
            w = group.multiply(w, group.power(t, -c))
    if not w.is_identity():
        raise HypothesisError(f"{w.label()} is not in γ2")
    return tuple(coords)


def extract_bilinear(group: PcGroup) -> AltBilinearMap:
    """
    Commutation map of a class-2 group whose G/Z(G) and γ_2(G) are elementary abelian.

    V is based on the pc generators outside the lead positions of Z(G), W on the pc
    sequence of γ_2(G).

    Raises:
        HypothesisError: naming the first failed condition
    """
    c = nilpotency_class(group)
    if c != 2:
        raise HypothesisError(f"commutation map needs nilpotency class 2, got class {c}")
    gamma2 = derived_subgroup(group)
    if not is_elementary_abelian(gamma2):
        raise HypothesisError("γ2(G) is not elementary abelian")
    z = center(group)
    if not all(group.power(g, group.p) in z for g in group.gens):
        raise HypothesisError("G/Z(G) is not elementary abelian")

    positions = [k for k in range(group.n) if k not in z.table]
    v_basis = [group.gens[k] for k in positions]
    table = {}
    for i in range(len(v_basis)):
        for j in range(i + 1, len(v_basis)):
            value = w_coordinates(gamma2, group.commutator(v_basis[i], v_basis[j]))
            if any(value):
                table[(i, j)] = value
    B = AltBilinearMap(group.p, len(v_basis), gamma2.log_order, table, v_basis, gamma2.pcgs)
    logger.debug(f"Extracted commutation map: dim V = {B.dv}, dim W = {B.dw}")
    return B


def v_coordinates(group: PcGroup, B: AltBilinearMap, x: GroupElement) -> Vector:
    z = center(group)
    positions = [k for k in range(group.n) if k not in z.table]
    return _v_coordinates(z, positions, x)


def _column_span(B: AltBilinearMap, v: Sequence[int]) -> EchelonBasis:
    basis = EchelonBasis(B.p, B.dw)
    for column in B.slice_columns(v):
        basis.add(column)
    return basis


def slice_rank(B: AltBilinearMap, v: Sequence[int]) -> int:
    key = tuple(x % B.p for x in v)
    if key not in B._ranks:
        B._ranks[key] = _column_span(B, key).rank if any(key) else 0
    return B._ranks[key]


def image(B: AltBilinearMap) -> set[Vector]:
    """{B(u, v)}: the union over projective u of the column spaces of B(u, ·)."""
    result = {(0,) * B.dw}
    for u in projective_points(B.dv, B.p):
        rows = list(_column_span(B, u).rows.values())
        if rows:
            result |= span(rows, B.p)
    return result


def rank_spectrum(B: AltBilinearMap) -> Counter:
    return Counter(slice_rank(B, v) for v in product(range(B.p), repeat=B.dv) if any(v))


def conjugate_type_from_B(B: AltBilinearMap) -> ConjugateType:
    sizes = {1} | {B.p ** r for r in rank_spectrum(B)}
    return ConjugateType(tuple(sorted(sizes)))


def isotropic_planes(B: AltBilinearMap) -> list[tuple[Vector, Vector]]:
    """Every 2-dimensional subspace on which B vanishes, as a basis pair, in a fixed order."""
    p = B.p
    points = list(projective_points(B.dv, p))
    planes = {}
    for a, v1 in enumerate(points):
        for v2 in points[a + 1:]:
            if any(B.evaluate(v1, v2)):
                continue
            plane = EchelonBasis(p, B.dv)
            plane.add(v1)
            plane.add(v2)
            planes.setdefault(tuple(plane.reduced_rows()), (v1, v2))
    return [planes[k] for k in sorted(planes)]


def hyperbolic_quadruple_search(B: AltBilinearMap, budget: Optional[int] = None):
    """
    A spanning (v1, v2, v3, v4) with B(v1, v2) = 0 = B(v3, v4), or None.

    Spanning quadruples of that shape are exactly pairs of complementary planes on which B
    vanishes, so the search runs over those planes.

    Raises:
        DimensionError: dim V != 4
        BudgetExceededError: the plane enumeration is larger than the budget
    """
    if B.dv != 4:
        raise DimensionError(f"quadruple search needs dim V = 4, got {B.dv}")
    budget = config.QUADRUPLE_BUDGET if budget is None else budget
    points = sum(B.p**k for k in range(B.dv))
    required = points * points
    if required > budget:
        raise BudgetExceededError("quadruple search", required, budget)
    planes = isotropic_planes(B)
    for a, (v1, v2) in enumerate(planes):
        for v3, v4 in planes[a + 1:]:
            basis = EchelonBasis(B.p, B.dv)
            if all(basis.add(v) for v in (v1, v2, v3, v4)):
                return v1, v2, v3, v4
    return None


def pseudo_isometry(B1: AltBilinearMap, B2: AltBilinearMap, budget: Optional[int] = None) -> bool:
    """
    Is there φ in GL(V) and θ in GL(W) with θ(B1(u, v)) = B2(φu, φv)?

    φ is built row by row (images of e_1, e_2, ...); each new image fixes θ on the values
    B1(e_i, e_k), and the partial θ must stay a well-defined injective linear map.

    Raises:
        BudgetExceededError: |GL(dim V, p)| exceeds the budget
    """
    if B1.p != B2.p:
        raise FieldError(f"maps over different fields F_{B1.p} and F_{B2.p}")
    if (B1.dv, B1.dw) != (B2.dv, B2.dw):
        return False
    budget = config.PSEUDO_ISOMETRY_BUDGET if budget is None else budget
    required = gl_order(B1.dv, B1.p)
    if required > budget:
        raise BudgetExceededError("pseudo-isometry search", required, budget)
    if rank_spectrum(B1) != rank_spectrum(B2) or len(image(B1)) != len(image(B2)):
        return False
    return find_pseudo_isometry(B1, B2) is not None


def find_pseudo_isometry(B1: AltBilinearMap, B2: AltBilinearMap) -> Optional[list[Vector]]:
    """Images of the basis vectors under some pseudo-isometry φ, or None."""
    p, dv, dw = B1.p, B1.dv, B1.dw
    nonzero = [v for v in product(range(p), repeat=dv) if any(v)]
    units = [tuple(1 if k == i else 0 for k in range(dv)) for i in range(dv)]
    candidates = [[v for v in nonzero if slice_rank(B2, v) == slice_rank(B1, e)] for e in units]

    def extend(chosen, span_basis, E1, E2, E12):
        k = len(chosen)
        if k == dv:
            return list(chosen) if E1.rank == E2.rank == dw else None
        for w in candidates[k]:
            if span_basis.contains(w):
                continue
            e1, e2, e12 = E1.copy(), E2.copy(), E12.copy()
            ok = True
            for i in range(k):
                pair_sum = tuple((a + b) % p for a, b in zip(chosen[i], w))
                if slice_rank(B2, pair_sum) != slice_rank(B1, tuple(a + b for a, b in zip(units[i], units[k]))):
                    ok = False
                    break
                u = B1.value(i, k)
                u2 = B2.evaluate(chosen[i], w)
                if not (e1.add(u) == e2.add(u2) == e12.add(u + u2)):
                    ok = False
                    break
            if not ok:
                continue
            grown = span_basis.copy()
            grown.add(w)
            found = extend(chosen + [w], grown, e1, e2, e12)
            if found is not None:
                return found
        return None

    return extend([], EchelonBasis(p, dv), EchelonBasis(p, dw), EchelonBasis(p, dw), EchelonBasis(p, 2 * dw))
