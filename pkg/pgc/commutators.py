"""
The commutator set K(G) = {[x, y]}, per-element sets [x, G], width two and covering checks.

[x, G] = x^-1·class(x) and [xz, G] = [x, G] for central z, so K is assembled from the
class orbits over G/Z(G) and closed under conjugation ([x^g, G] = [x, G]^g).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from pgc.collector import GroupElement, PcGroup
from pgc.errors import InvariantViolation, NotInDerivedSubgroupError, PreconditionError
from pgc.logging_config import get_logger
from pgc.structure import (
    Subgroup,
    center,
    class_orbits,
    conjugation_orbit,
    derived_subgroup,
    minimal_generators,
)

logger = get_logger("engine")


@dataclass
class CommutatorAnalysis:
    K: frozenset
    gamma2: Subgroup
    witnesses: list[GroupElement] = field(default_factory=list)
    width2: bool = True

    @property
    def equal(self) -> bool:
        return len(self.K) == self.gamma2.order

    @property
    def size(self) -> int:
        return len(self.K)

    def __contains__(self, w: GroupElement) -> bool:
        return w.exponents in self.K


def _conjugation_closed(group: PcGroup, seeds: set) -> set:
    gens = minimal_generators(group)
    inverses = [group.inverse(g) for g in gens]
    result = set(seeds)
    frontier = list(seeds)
    while frontier:
        following = []
        for exps in frontier:
            x = GroupElement(group, exps)
            for s, s_inv in zip(gens, inverses):
                y = group.multiply(group.multiply(s_inv, x), s).exponents
                if y not in result:
                    result.add(y)
                    following.append(y)
        frontier = following
    return result


def commutator_set(group: PcGroup) -> CommutatorAnalysis:
    """K(G) exactly, with non-commutators of γ_2 listed in lexicographic exponent order."""
    if "commutators" in group.cache:
        return group.cache["commutators"]
    gamma2 = derived_subgroup(group)
    K: set = set()
    for orbit in class_orbits(group):
        t_inv = group.inverse(orbit.rep)
        K.update(group.multiply(t_inv, GroupElement(group, e)).exponents for e in orbit.elements)
        if len(K) == gamma2.order:
            break
    if len(K) < gamma2.order:
        K = _conjugation_closed(group, K)

    witnesses = sorted(GroupElement(group, e) for e in gamma2.element_set() - K)
    analysis = CommutatorAnalysis(K=frozenset(K), gamma2=gamma2, witnesses=witnesses)
    analysis.width2 = _width_two(group, analysis)
    logger.debug(
        f"K(G): {len(K)} of {gamma2.order} elements of γ2, {len(witnesses)} non-commutators, "
        f"width2={analysis.width2}"
    )
    group.cache["commutators"] = analysis
    return analysis


def _width_two(group: PcGroup, analysis: CommutatorAnalysis) -> bool:
    # K is inversion-closed, so w = k1·k2 iff k·w in K for some k in K
    members = [GroupElement(group, e) for e in analysis.K]
    for w in analysis.witnesses:
        if not any(group.multiply(k, w).exponents in analysis.K for k in members):
            return False
    return True


def two_commutator_width(group: PcGroup) -> bool:
    """True iff every element of γ_2 is a product of at most two commutators."""
    return commutator_set(group).width2


def x_commutators(group: PcGroup, x: GroupElement) -> set[GroupElement]:
    """[x, G] = {[x, g] : g in G} = x^-1·class(x)."""
    x_inv = group.inverse(x)
    return {group.multiply(x_inv, GroupElement(group, e)) for e in conjugation_orbit(group, x)}


def is_commutator(group: PcGroup, w: GroupElement) -> tuple[bool, Optional[tuple[GroupElement, GroupElement]]]:
    """
    Decide w in K(G) and produce a pair (x, y) with [x, y] = w.

    Raises:
        NotInDerivedSubgroupError: w is not in γ_2(G)
    """
    gamma2 = derived_subgroup(group)
    if w not in gamma2:
        raise NotInDerivedSubgroupError(f"{w.label()} is not in the derived subgroup")
    if w.is_identity():
        return True, (group.identity, group.identity)
    if w not in commutator_set(group):
        return False, None
    # y^h = y·w with y = x^g, y·w = x^g' gives h = g^-1 g'
    for orbit in class_orbits(group):
        conjugators = conjugation_orbit(group, orbit.rep, track=True)
        for y, g in conjugators.items():
            target = group.multiply(y, w)
            if target in conjugators:
                h = group.multiply(group.inverse(g), conjugators[target])
                return True, (y, h)
    raise InvariantViolation(f"{w.label()} is in K(G) but no commutator pair was found")


def covering_check(group: PcGroup, xs: Sequence[GroupElement], H: Subgroup) -> bool:
    """
    Evaluate the covering hypothesis for (xs, H):

        γ_2/H = ⋃ [x_i H, G/H]   and   H ⊆ ⋂ [x_i, G]

    and, when it holds, confirm the conclusion γ_2 = ⋃ [x_i, G] directly.

    Raises:
        PreconditionError: H is not contained in γ_2(G) ∩ Z(G)
        InvariantViolation: the hypothesis holds but the direct union misses part of γ_2
    """
    gamma2 = derived_subgroup(group)
    z = center(group)
    if not all(t in gamma2 and t in z for t in H.pcgs):
        raise PreconditionError("H must lie in the intersection of γ2(G) and Z(G)")

    per_x = [x_commutators(group, x) for x in xs]
    union = set().union(*per_x) if per_x else set()
    target_mod_h = {H.canonical(GroupElement(group, e)).exponents for e in gamma2.element_set()}
    union_mod_h = {H.canonical(c).exponents for c in union}
    h_elements = list(H.elements())
    covered = union_mod_h == target_mod_h
    contains_h = all(all(h in s for s in per_x) for h in h_elements)
    hypothesis = covered and contains_h

    direct = {c.exponents for c in union} == set(gamma2.element_set())
    logger.debug(
        f"covering check: {len(xs)} elements, quotient covered={covered}, H inside all={contains_h}, "
        f"direct union covers γ2={direct}"
    )
    if hypothesis and not direct:
        raise InvariantViolation("covering hypothesis holds but the union of [x_i, G] misses γ2")
    return hypothesis
