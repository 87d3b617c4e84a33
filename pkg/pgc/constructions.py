"""
Group builders and the two constructions used to derive new groups from old ones.

    free_class2(n, p)        relatively free class-2 group, generators x_1..x_n then x_ij = [x_j, x_i]
    heisenberg / extraspecial_p3 / elementary_abelian / t2_9
    central_quotient(P, W)   G / <W> for W inside the central socle
    central_product(A, B, φ) (A × B) / <a·φ(a)^-1>, direct product for an empty φ

The central socle of a presentation is the longest suffix of generators that occur in no
commutator relation and have trivial p-th powers. Those generators span a central
elementary abelian subgroup, so quotients by its subspaces are a change of basis followed
by truncation.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence, Union

from pgc.collector import GroupElement, PcGroup
from pgc.errors import AmalgamationError, NotCentralError, NotInSocleError, PresentationError
from pgc.fp_linear import FpMatrix, check_prime, rref
from pgc.logging_config import get_logger
from pgc.presentation import PcPresentation, Word, from_relations

logger = get_logger("engine")

KillWord = Union[GroupElement, Iterable[tuple[Union[int, str], int]]]


def socle_positions(pres: PcPresentation) -> list[int]:
    """Indices of the central socle suffix."""
    involved = set()
    for (j, i) in pres.comm_tails:
        involved.update((j, i))
    start = pres.n
    while start > 0 and start - 1 not in involved and not pres.power_tails[start - 1]:
        start -= 1
    return list(range(start, pres.n))


# --- builders ------------------------------------------------------------------------------


def elementary_abelian(n: int, p: int) -> PcPresentation:
    return PcPresentation(p, n, labels=[f"e{i + 1}" for i in range(n)])


def free_class2(n: int, p: int, labels: Optional[Sequence[str]] = None) -> PcPresentation:
    """
    Free class-2 group of exponent p on n generators (order p^(n + n(n-1)/2)).

    Derived generators follow the generators in lexicographic pair order (1,2), (1,3), ...
    and x_ij = [x_j, x_i] is labelled "[l_j,l_i]".
    """
    check_prime(p)
    if labels is None:
        labels = [f"x{i + 1}" for i in range(n)]
    if len(labels) != n:
        raise PresentationError(f"{len(labels)} labels for {n} generators")
    pairs = list(combinations(range(n), 2))
    all_labels = list(labels) + [f"[{labels[j]},{labels[i]}]" for i, j in pairs]
    comm_tails = {(j, i): [(n + k, 1)] for k, (i, j) in enumerate(pairs)}
    return PcPresentation(p, n + len(pairs), comm_tails=comm_tails, labels=all_labels)


def heisenberg(p: int) -> PcPresentation:
    """<a, b, c | [b, a] = c, c central>, exponent p for odd p and dihedral of order 8 for p = 2."""
    return from_relations(p, ["a", "b", "c"], commutators={("b", "a"): [("c", 1)]})


def extraspecial_p3(p: int, kind: str = "exp_p") -> PcPresentation:
    """
    Extraspecial group of order p^3.

    kind "exp_p" is the Heisenberg group; "exp_p2" adds a^p = c (and b^2 = c for the
    quaternion group when p = 2).
    """
    if kind == "exp_p":
        return heisenberg(p)
    if kind != "exp_p2":
        raise PresentationError(f"unknown extraspecial kind {kind!r}")
    powers = {"a": [("c", 1)]}
    if p == 2:
        powers["b"] = [("c", 1)]
    return from_relations(p, ["a", "b", "c"], commutators={("b", "a"): [("c", 1)]}, powers=powers)


# --- central quotients ---------------------------------------------------------------------


def _kill_element(group: PcGroup, word: KillWord) -> GroupElement:
    if isinstance(word, GroupElement):
        return group.element(word.exponents)
    return group.word(word)


def central_quotient(pres: PcPresentation, kill: Sequence[KillWord]) -> PcPresentation:
    """
    Presentation of G / <kill>.

    Args:
        pres: a consistent presentation
        kill: words (letters by index or label) or elements of the group on `pres`

    Raises:
        NotCentralError: a word is not central in G
        NotInSocleError: a central word has support outside the central socle
    """
    group = PcGroup(pres)
    p, n = pres.p, pres.n
    socle = socle_positions(pres)
    start = socle[0] if socle else n

    vectors = []
    for word in kill:
        x = _kill_element(group, word)
        if not all(group.commutator(x, g).is_identity() for g in group.gens):
            raise NotCentralError(f"{x.label()} is not central")
        if any(x.exponents[:start]):
            raise NotInSocleError(
                f"{x.label()} is central but not in the central socle "
                f"({', '.join(pres.label(k) for k in socle) or 'empty'})"
            )
        vectors.append(x.exponents[start:])

    if not vectors or not any(any(v) for v in vectors):
        return pres
    reduced = rref(FpMatrix.from_rows(vectors, p, cols=len(socle)))
    rows = reduced.reduced.tolist()[: reduced.rank]
    pivots = reduced.pivots

    def rewrite(tail: Word) -> list[tuple[int, int]]:
        head = [(k, e) for k, e in tail if k < start]
        v = [0] * len(socle)
        for k, e in tail:
            if k >= start:
                v[k - start] = e
        for row, c in zip(rows, pivots):
            coeff = v[c]
            if coeff:
                v = [(a - coeff * b) % p for a, b in zip(v, row)]
        return head + [(start + k, e) for k, e in enumerate(v) if e]

    dropped = {start + c for c in pivots}
    kept = [k for k in range(n) if k not in dropped]
    new_index = {k: i for i, k in enumerate(kept)}

    def remap(tail: Word) -> list[tuple[int, int]]:
        return [(new_index[k], e) for k, e in rewrite(tail)]

    power_tails = {new_index[i]: remap(t) for i, t in enumerate(pres.power_tails) if i in new_index and t}
    comm_tails = {(new_index[j], new_index[i]): remap(t) for (j, i), t in pres.comm_tails.items()}
    labels = [pres.label(k) for k in kept] if pres.labels else None
    quotient = PcPresentation(p, len(kept), power_tails, comm_tails, labels)
    logger.debug(f"Central quotient: order {p}^{n} -> {p}^{quotient.n} ({len(dropped)} generator(s) removed)")
    return quotient


# --- central products ----------------------------------------------------------------------


def _resolve_generator(pres: PcPresentation, a: Union[int, str]) -> int:
    return pres.index_of(a) if isinstance(a, str) else a


def central_product(
    A: PcPresentation,
    B: PcPresentation,
    amalgamation: Optional[Mapping[Union[int, str], KillWord]] = None,
) -> PcPresentation:
    """
    (A × B) / <a·φ(a)^-1 : a in amalgamation>, identifying socle generators of A with central
    elements of B's socle.

    Generators are laid out as A's non-socle, B's non-socle, A's socle, B's socle; a label of B
    that clashes with one of A gets a trailing prime.

    Raises:
        AmalgamationError: a key outside A's socle, an image that is trivial, non-central or
            outside B's socle, or images that are linearly dependent
    """
    if A.p != B.p:
        raise AmalgamationError(f"cannot combine groups over p = {A.p} and p = {B.p}")
    p = A.p
    amalgamation = dict(amalgamation or {})
    socle_a, socle_b = socle_positions(A), socle_positions(B)
    start_a = socle_a[0] if socle_a else A.n
    start_b = socle_b[0] if socle_b else B.n

    order = [("A", k) for k in range(start_a)] + [("B", k) for k in range(start_b)]
    order += [("A", k) for k in socle_a] + [("B", k) for k in socle_b]
    position = {key: i for i, key in enumerate(order)}

    def place(side: str, tail: Word) -> list[tuple[int, int]]:
        return sorted((position[(side, k)], e) for k, e in tail)

    power_tails = {}
    comm_tails = {}
    for side, pres in (("A", A), ("B", B)):
        for i, tail in enumerate(pres.power_tails):
            if tail:
                power_tails[position[(side, i)]] = place(side, tail)
        for (j, i), tail in pres.comm_tails.items():
            comm_tails[(position[(side, j)], position[(side, i)])] = place(side, tail)

    labels_a = [A.label(k) for k in range(A.n)]
    labels_b = []
    for k in range(B.n):
        name = B.label(k)
        while name in labels_a or name in labels_b:
            name += "'"
        labels_b.append(name)
    labels = [labels_a[k] if side == "A" else labels_b[k] for side, k in order]
    combined = PcPresentation(p, A.n + B.n, power_tails, comm_tails, labels)

    group_b = PcGroup(B)
    kills = []
    images = []
    for a, image in amalgamation.items():
        i = _resolve_generator(A, a)
        if i not in socle_a:
            raise AmalgamationError(f"{A.label(i)} is not a socle generator of the first factor")
        y = _kill_element(group_b, image)
        if y.is_identity():
            raise AmalgamationError(f"{A.label(i)} is sent to the identity")
        if any(y.exponents[:start_b]) or not all(group_b.commutator(y, g).is_identity() for g in group_b.gens):
            raise AmalgamationError(f"image {y.label()} of {A.label(i)} is not in the central socle of the second factor")
        images.append(y.exponents[start_b:])
        exps = [0] * combined.n
        exps[position[("A", i)]] = 1
        for k, e in zip(socle_b, y.exponents[start_b:]):
            exps[position[("B", k)]] = (-e) % p
        kills.append(exps)
    if images and rref(FpMatrix.from_rows(images, p, cols=len(socle_b))).rank < len(images):
        raise AmalgamationError("amalgamated images are linearly dependent")

    if not kills:
        return combined
    group = PcGroup(combined)
    product = central_quotient(combined, [group.element(v) for v in kills])
    logger.debug(f"Central product: |A| = {p}^{A.n}, |B| = {p}^{B.n}, amalgamated {p}^{len(kills)}")
    return product


def direct_product(A: PcPresentation, B: PcPresentation) -> PcPresentation:
    return central_product(A, B, None)


T2_LABELS = ["v1", "v2", "v3", "v4", "v5", "[v4,v1]", "[v4,v3]", "[v5,v2]", "[v5,v4]"]


def t2_9(r: int, s: int, t: int) -> PcPresentation:
    """
    Special 2-group of order 2^9 on v1..v5 with [v4,v2] = [v5,v1] = 1, [v1,v2] = [v3,v4]^r,
    [v2,v3] = [v3,v4]^s, [v3,v1] = [v3,v4]^t, [v3,v4] = [v3,v5] and v_i^2 = 1.

    γ2 is based on [v4,v1], [v4,v3], [v5,v2], [v5,v4].
    """
    # every commutator is an involution, so orientation does not matter
    commutators = {
        ("v2", "v1"): [("[v4,v3]", r % 2)],
        ("v3", "v1"): [("[v4,v3]", t % 2)],
        ("v3", "v2"): [("[v4,v3]", s % 2)],
        ("v4", "v1"): [("[v4,v1]", 1)],
        ("v4", "v3"): [("[v4,v3]", 1)],
        ("v5", "v2"): [("[v5,v2]", 1)],
        ("v5", "v3"): [("[v4,v3]", 1)],
        ("v5", "v4"): [("[v5,v4]", 1)],
    }
    return from_relations(2, T2_LABELS, commutators=commutators)
