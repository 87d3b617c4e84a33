"""
Subgroups and the structural invariants of a finite p-group.

Subgroups are held by an induced pc sequence: a table lead -> element whose exponent
vector starts with zeros up to `lead` and has exponent 1 there. With that table
    order       = p^len(table)
    membership  = sifting to the identity
    elements    = products t_1^e_1 ... t_m^e_m over the table in lead order
and the canonical representative of a coset xH zeroes the lead positions of x.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import log
from typing import Iterable, Iterator, Optional, Sequence

from tqdm import tqdm

from pgc import config
from pgc.collector import GroupElement, PcGroup
from pgc.errors import InvariantViolation
from pgc.fp_linear import EchelonBasis
from pgc.logging_config import get_logger

logger = get_logger("engine")


class Subgroup:
    """Subgroup of a PcGroup given by an induced pc sequence."""

    def __init__(self, group: PcGroup, table: dict[int, GroupElement], generators: Sequence[GroupElement] = ()):
        self.group = group
        self.table = dict(sorted(table.items()))
        self.generators = tuple(generators)
        self._element_set: Optional[frozenset] = None

    @property
    def leads(self) -> tuple[int, ...]:
        return tuple(self.table)

    @property
    def pcgs(self) -> list[GroupElement]:
        return list(self.table.values())

    @property
    def order(self) -> int:
        return self.group.p ** len(self.table)

    @property
    def log_order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return self.order

    def sift(self, x: GroupElement) -> GroupElement:
        """Strip x by the table; the identity is returned exactly for members."""
        group = self.group
        while True:
            lead = next((k for k, e in enumerate(x.exponents) if e), None)
            if lead is None or lead not in self.table:
                return x
            t = self.table[lead]
            x = group.multiply(group.power(t, -x.exponents[lead]), x)

    def __contains__(self, x: GroupElement) -> bool:
        return self.sift(x).is_identity()

    def canonical(self, x: GroupElement) -> GroupElement:
        """Representative of the coset xH with zeros at every lead position."""
        group = self.group
        for lead, t in self.table.items():
            e = x.exponents[lead]
            if e:
                x = group.multiply(x, group.power(t, -e))
        return x

    def transversal(self) -> Iterator[GroupElement]:
        """Canonical representatives of all cosets xH."""
        free = [k for k in range(self.group.n) if k not in self.table]
        n = self.group.n
        for values in product(range(self.group.p), repeat=len(free)):
            exps = [0] * n
            for k, v in zip(free, values):
                exps[k] = v
            yield GroupElement(self.group, exps)

    def elements(self) -> Iterator[GroupElement]:
        group = self.group
        pcgs = self.pcgs
        powers = [[group.power(t, e) for e in range(group.p)] for t in pcgs]
        for choice in product(range(group.p), repeat=len(pcgs)):
            yield group.product(powers[i][e] for i, e in enumerate(choice))

    def element_set(self) -> frozenset:
        """Exponent tuples of all elements, materialized once."""
        if self._element_set is None:
            self._element_set = frozenset(x.exponents for x in self.elements())
        return self._element_set

    def is_subgroup_of(self, other: Subgroup) -> bool:
        return all(t in other for t in self.pcgs)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.order == other.order
            and self.is_subgroup_of(other)
        )

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return f"Subgroup(order={self.group.p}^{self.log_order})"


def _order_log(order: int, p: int) -> int:
    return round(log(order, p))


# --- closures ------------------------------------------------------------------------------


def _build(group: PcGroup, gens: Iterable[GroupElement], normal: bool) -> Subgroup:
    p = group.p
    gens = list(gens)
    table: dict[int, GroupElement] = {}
    queue = list(gens)
    while queue:
        x = queue.pop()
        residue = Subgroup(group, table).sift(x)
        if residue.is_identity():
            continue
        lead = next(k for k, e in enumerate(residue.exponents) if e)
        scale = pow(residue.exponents[lead], -1, p)
        t = group.power(residue, scale)
        queue.append(group.power(t, p))
        for other in table.values():
            queue.append(group.commutator(t, other))
        if normal:
            for g in group.gens:
                queue.append(group.commutator(t, g))
        table[lead] = t
    return Subgroup(group, table, gens)


def closure(group: PcGroup, gens: Iterable[GroupElement]) -> Subgroup:
    """Smallest subgroup containing gens (trivial for an empty set)."""
    return _build(group, gens, normal=False)


def normal_closure(group: PcGroup, gens: Iterable[GroupElement]) -> Subgroup:
    return _build(group, gens, normal=True)


def whole_group(group: PcGroup) -> Subgroup:
    return Subgroup(group, {i: g for i, g in enumerate(group.gens)}, group.gens)


def trivial_subgroup(group: PcGroup) -> Subgroup:
    return Subgroup(group, {})


# --- series --------------------------------------------------------------------------------


def lower_central_series(group: PcGroup) -> list[Subgroup]:
    """γ_1 = G, γ_{k+1} = [γ_k, G], ending with the trivial subgroup."""
    if "lcs" in group.cache:
        return group.cache["lcs"]
    series = [whole_group(group)]
    while series[-1].order > 1:
        current = series[-1]
        following = normal_closure(group, (group.commutator(t, g) for t in current.pcgs for g in group.gens))
        if following.order == current.order:
            raise InvariantViolation("lower central series stalled; presentation is not nilpotent")
        series.append(following)
    group.cache["lcs"] = series
    return series


def nilpotency_class(group: PcGroup) -> int:
    return len(lower_central_series(group)) - 1


def derived_subgroup(group: PcGroup) -> Subgroup:
    series = lower_central_series(group)
    return series[1] if len(series) > 1 else series[0]


def frattini_subgroup(group: PcGroup) -> Subgroup:
    """Φ(G) = ℧_1(G)γ_2(G), generated normally by p-th powers and commutators of pc generators."""
    if "frattini" not in group.cache:
        gens = group.gens
        seeds = [group.power(g, group.p) for g in gens]
        seeds += [group.commutator(gens[j], gens[i]) for j in range(group.n) for i in range(j)]
        group.cache["frattini"] = normal_closure(group, seeds)
    return group.cache["frattini"]


def frattini_rank(group: PcGroup) -> int:
    return group.n - frattini_subgroup(group).log_order


def minimal_generators(group: PcGroup) -> list[GroupElement]:
    """Pc generators outside the lead positions of Φ(G); their images form a basis of G/Φ(G)."""
    phi = frattini_subgroup(group)
    return [group.gens[i] for i in range(group.n) if i not in phi.table]


# --- centralizers --------------------------------------------------------------------------


def centralizer_of_set(group: PcGroup, xs: Sequence[GroupElement]) -> Subgroup:
    """
    C_G(xs) by walking down the pc series G = G_0 > G_1 > ... > G_n = 1.

    The series is central, so on C_k = {g : [x, g] in G_k for all x} the map
    g -> (exponent k of [x, g])_x is a homomorphism to F_p^|xs| and C_{k+1} is its kernel.
    """
    p = group.p
    current = whole_group(group)
    if not xs:
        return current
    for k in range(group.n):
        images = {
            lead: [group.commutator(x, t).exponents[k] for x in xs] for lead, t in current.table.items()
        }
        if not any(any(v) for v in images.values()):
            continue
        basis = EchelonBasis(p, len(xs))
        carriers: dict[int, GroupElement] = {}
        kernel = []
        # descending leads: each t_lead only needs carriers from the subgroup below it
        for lead in sorted(current.table, reverse=True):
            t = current.table[lead]
            v = list(images[lead])
            for pivot in sorted(basis.rows):
                c = v[pivot]
                if c:
                    v = [(a - c * b) % p for a, b in zip(v, basis.rows[pivot])]
                    t = group.multiply(t, group.power(carriers[pivot], -c))
            if any(v):
                pivot = next(i for i, c in enumerate(v) if c)
                scale = pow(v[pivot], -1, p)
                basis.rows[pivot] = [(a * scale) % p for a in v]
                carriers[pivot] = group.power(t, scale)
            else:
                kernel.append(t)
        current = closure(group, kernel)
    return current


def centralizer(group: PcGroup, x: GroupElement) -> Subgroup:
    return centralizer_of_set(group, [x])


def center(group: PcGroup) -> Subgroup:
    if "center" not in group.cache:
        group.cache["center"] = centralizer_of_set(group, minimal_generators(group))
    return group.cache["center"]


def centralizer_scan(group: PcGroup, x: GroupElement) -> frozenset:
    """C_G(x) by direct scan over a transversal of Z(G); used to cross-check the kernel walk."""
    z = center(group)
    z_elements = list(z.elements())
    result = set()
    for t in z.transversal():
        if group.commutator(x, t).is_identity():
            result.update(group.multiply(t, c).exponents for c in z_elements)
    return frozenset(result)


def is_stem(group: PcGroup) -> bool:
    """Z(G) <= γ_2(G)."""
    return center(group).is_subgroup_of(derived_subgroup(group))


# --- conjugacy -----------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjugateType:
    sizes: tuple[int, ...]

    @classmethod
    def from_class_sizes(cls, class_sizes: Iterable[int], group_order: int, p: int) -> ConjugateType:
        class_sizes = list(class_sizes)
        if sum(class_sizes) != group_order:
            raise InvariantViolation(f"class sizes sum to {sum(class_sizes)}, expected {group_order}")
        for s in class_sizes:
            if p ** _order_log(s, p) != s:
                raise InvariantViolation(f"class size {s} is not a power of {p}")
        return cls(tuple(sorted(set(class_sizes))))

    def __contains__(self, size: int) -> bool:
        return size in self.sizes

    def as_set(self) -> set[int]:
        return set(self.sizes)


@dataclass
class Orbit:
    """Conjugacy class of `rep`, standing for `copies` classes rep·z (z central) of equal size."""

    rep: GroupElement
    elements: frozenset
    class_reps: list[GroupElement] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def copies(self) -> int:
        return len(self.class_reps)


def conjugation_orbit(group: PcGroup, x: GroupElement, track: bool = False):
    """
    Conjugacy class of x by breadth-first search under the minimal generators.

    With track=True returns {element: conjugator g with x^g = element} instead of a set.
    """
    gens = minimal_generators(group)
    inverses = [group.inverse(g) for g in gens]
    seen = {x.exponents: group.identity} if track else {x.exponents}
    frontier = [(x, group.identity)]
    while frontier:
        following = []
        for y, g in frontier:
            for s, s_inv in zip(gens, inverses):
                z = group.multiply(group.multiply(s_inv, y), s)
                if z.exponents not in seen:
                    h = group.multiply(g, s) if track else None
                    if track:
                        seen[z.exponents] = h
                    else:
                        seen.add(z.exponents)
                    following.append((z, h))
        frontier = following
    if track:
        return {GroupElement(group, e): g for e, g in seen.items()}
    return frozenset(seen)


def class_orbits(group: PcGroup) -> list[Orbit]:
    """
    One orbit per class of G/Z-cosets under conjugation.

    The class of x·z is class(x)·z for central z, so each orbit stands for
    |Z|/|S| classes with S = {z in Z : xz in class(x)}.
    """
    if "orbits" in group.cache:
        return group.cache["orbits"]
    z = center(group)
    z_elements = list(z.elements())
    visited: set = set()
    orbits = []
    total = group.order // z.order
    with tqdm(
        total=total,
        desc="class orbits",
        disable=not config.SHOW_PROGRESS or total < 5000,
        leave=False,
    ) as bar:
        for t in z.transversal():
            if t.exponents in visited:
                continue
            orbit = conjugation_orbit(group, t)
            cosets = {z.canonical(GroupElement(group, e)).exponents for e in orbit}
            visited.update(cosets)
            bar.update(len(cosets))
            t_inv = group.inverse(t)
            stabilizer = closure(
                group,
                (group.multiply(t_inv, GroupElement(group, e)) for e in orbit
                 if z.canonical(GroupElement(group, e)).exponents == t.exponents),
            )
            reps = [group.multiply(t, c) for c in z_elements if stabilizer.canonical(c) == c]
            orbits.append(Orbit(rep=t, elements=orbit, class_reps=reps))
    group.cache["orbits"] = orbits
    logger.debug(f"{len(orbits)} class orbits over {total} cosets of Z(G)")
    return orbits


def conjugacy_classes(group: PcGroup) -> list[tuple[GroupElement, int]]:
    """(representative, class size) for every conjugacy class."""
    return [(rep, orbit.size) for orbit in class_orbits(group) for rep in orbit.class_reps]


def conjugate_type(group: PcGroup) -> ConjugateType:
    if "conjugate_type" not in group.cache:
        sizes = [size for _, size in conjugacy_classes(group)]
        group.cache["conjugate_type"] = ConjugateType.from_class_sizes(sizes, group.order, group.p)
    return group.cache["conjugate_type"]


def breadth(group: PcGroup, x: GroupElement) -> int:
    return _order_log(len(conjugation_orbit(group, x)), group.p)


def group_breadth(group: PcGroup) -> int:
    return max(_order_log(o.size, group.p) for o in class_orbits(group))


# --- power structure -----------------------------------------------------------------------


def omega1(group: PcGroup, H: Subgroup) -> Subgroup:
    p = group.p
    return closure(group, (h for h in H.elements() if group.power(h, p).is_identity()))


def mho1(group: PcGroup, H: Subgroup) -> Subgroup:
    return closure(group, (group.power(h, group.p) for h in H.elements()))


def exponent(H: Subgroup) -> int:
    group = H.group
    return max((group.element_order(h) for h in H.elements()), default=1)


def group_exponent(group: PcGroup) -> int:
    if "exponent" not in group.cache:
        group.cache["exponent"] = exponent(whole_group(group))
    return group.cache["exponent"]


def is_abelian(H: Subgroup) -> bool:
    group = H.group
    pcgs = H.pcgs
    return all(group.commutator(a, b).is_identity() for i, a in enumerate(pcgs) for b in pcgs[:i])


def is_elementary_abelian(H: Subgroup) -> bool:
    group = H.group
    return is_abelian(H) and all(group.power(t, group.p).is_identity() for t in H.pcgs)
