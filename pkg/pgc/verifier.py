"""
Hypotheses and case predicates of the two characterizations of K(G) != γ2(G), the
prediction they make, and its cross-check against the exact commutator set.

Theorem A (p >= 3): Z(G) <= γ2(G), |γ2(G)| = p^4, exponent of γ2(G) = p. Then K(G) != γ2(G) iff
    A1  |G| = p^6, class 4, |Z(G)| = p^2
    A2  |G| = p^7, class 3, |Z(G)| = p^3
    A3a |G| = p^8, class 2, some x with |G : C_G(x)| = p
    A3b |G| = p^8, class 2, conjugate type {1, p^2, p^3}, no generating set x1..x4 with
        [x1, x2] = 1 = [x3, x4]
Theorem B (p = 2): Z(G) <= γ2(G), γ2(G) elementary abelian of order 16. Then K(G) != γ2(G) iff
    B1  G is isoclinic to T2_9(0, 0, 0)
    B2a/B2b as A3a/A3b at order 2^8 with conjugate type {1, 4, 8}
In both cases every element of γ2(G) is then a product of two commutators.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence, Union

from tqdm import tqdm

from pgc import config
from pgc.bilinear import (
    AltBilinearMap,
    extract_bilinear,
    hyperbolic_quadruple_search,
    image,
    pseudo_isometry,
    rank_spectrum,
)
from pgc.collector import GroupElement, PcGroup
from pgc.commutators import commutator_set, covering_check
from pgc.constructions import t2_9
from pgc.errors import BudgetExceededError, HypothesisError, InvariantViolation, PreconditionError
from pgc.logging_config import get_logger
from pgc.presentation import PcPresentation
from pgc.schemas import (
    HypothesisCheck,
    HypothesisRecord,
    LemmaCheck,
    LemmaStatus,
    Theorem,
    TheoremCase,
    TheoremClassification,
)
from pgc.structure import (
    Subgroup,
    center,
    centralizer,
    class_orbits,
    closure,
    conjugate_type,
    derived_subgroup,
    exponent,
    group_breadth,
    is_abelian,
    is_elementary_abelian,
    is_stem,
    minimal_generators,
    nilpotency_class,
    whole_group,
)

logger = get_logger("verify")

Target = Union[PcPresentation, PcGroup]

READING_A = "hypotheses read as |γ2(G)| = p^4, exponent of γ2(G) = p and p >= 3"
STEM_NOTE = "the characterization applies to stem groups; no isoclinic stem group is computed"
QUADRUPLE_NOTE = (
    "class 2 with Z(G) = γ2(G): commutators depend only on G/Z(G) = G/Φ(G), so the generating-set "
    "condition is decided by the quadruple search on the commutation map"
)
WITNESS_EVIDENCE = 5


def _as_group(target: Target) -> PcGroup:
    return target if isinstance(target, PcGroup) else PcGroup(target)


# --- hypotheses ----------------------------------------------------------------------------


def check_hypotheses(target: Target, theorem: Union[Theorem, str]) -> HypothesisRecord:
    """Evaluate each hypothesis of the theorem independently; failures are data, not errors."""
    group = _as_group(target)
    theorem = Theorem(theorem)
    p = group.p
    gamma2 = derived_subgroup(group)
    stem = is_stem(group)
    checks = []
    if theorem is Theorem.A:
        exp = exponent(gamma2)
        checks.append(HypothesisCheck(name="p >= 3", passed=p >= 3, value=f"p = {p}", expected="p >= 3"))
        checks.append(HypothesisCheck(name="Z(G) <= γ2(G)", passed=stem, value=str(stem).lower(), expected="true"))
        checks.append(
            HypothesisCheck(
                name="|γ2(G)| = p^4", passed=gamma2.log_order == 4, value=f"p^{gamma2.log_order}", expected="p^4"
            )
        )
        checks.append(
            HypothesisCheck(name="exponent of γ2(G) = p", passed=exp == p, value=str(exp), expected=str(p))
        )
        return HypothesisRecord(theorem=theorem, checks=checks, reading=READING_A)

    elementary = is_elementary_abelian(gamma2)
    checks.append(HypothesisCheck(name="p = 2", passed=p == 2, value=f"p = {p}", expected="p = 2"))
    checks.append(HypothesisCheck(name="Z(G) <= γ2(G)", passed=stem, value=str(stem).lower(), expected="true"))
    checks.append(
        HypothesisCheck(
            name="γ2(G) elementary abelian", passed=elementary, value=str(elementary).lower(), expected="true"
        )
    )
    checks.append(
        HypothesisCheck(name="|γ2(G)| = 16", passed=gamma2.order == 16, value=str(gamma2.order), expected="16")
    )
    return HypothesisRecord(theorem=theorem, checks=checks)


def _require(record: HypothesisRecord):
    if not record.passed:
        failed = "; ".join(f"{c.name} (got {c.value})" for c in record.failures())
        raise HypothesisError(f"Theorem {record.theorem.value} hypotheses fail: {failed}", record)


# --- case predicates -----------------------------------------------------------------------


def maximal_centralizer_element(group: PcGroup) -> Optional[GroupElement]:
    """A non-central x whose centralizer is a maximal subgroup (class size p), or None."""
    for orbit in class_orbits(group):
        if orbit.size == group.p:
            x = orbit.rep
            if centralizer(group, x).order * group.p != group.order:
                raise InvariantViolation(f"class of {x.label()} has size p but |G : C_G(x)| != p")
            return x
    return None


def _render(B: AltBilinearMap, v: Sequence[int]) -> str:
    group = B.v_basis[0].group
    x = group.product(group.power(b, c) for b, c in zip(B.v_basis, v) if c)
    return x.label()


def _quadruple_case(group: PcGroup, budget: Optional[int], evidence: list, notes: list) -> Optional[bool]:
    """True when no quadruple exists, False when one does, None when over budget."""
    B = extract_bilinear(group)
    notes.append(QUADRUPLE_NOTE)
    try:
        quadruple = hyperbolic_quadruple_search(B, budget)
    except BudgetExceededError as e:
        notes.append(f"case undetermined: {e}")
        return None
    if quadruple is None:
        evidence.append("no generating set x1..x4 with [x1, x2] = 1 = [x3, x4]")
        return True
    evidence.append("generating set with [x1, x2] = 1 = [x3, x4]: " + ", ".join(_render(B, v) for v in quadruple))
    return False


def _class2_order8_case(group: PcGroup, budget, evidence, notes, cases) -> TheoremCase:
    p = group.p
    x = maximal_centralizer_element(group)
    if x is not None:
        evidence.append(f"|G : C_G({x.label()})| = {p}")
        return cases[0]
    ctype = conjugate_type(group).as_set()
    if ctype != {1, p**2, p**3}:
        return TheoremCase.none
    verdict = _quadruple_case(group, budget, evidence, notes)
    if verdict is None:
        return TheoremCase.undetermined
    return cases[1] if verdict else TheoremCase.none


def _finish(group, theorem, record, case, evidence, notes) -> TheoremClassification:
    analysis = commutator_set(group)
    brute = not analysis.equal
    predicted = None if case is TheoremCase.undetermined else case is not TheoremCase.none
    agree = None if predicted is None else predicted == brute
    if brute:
        evidence.extend(f"non-commutator {w.label()}" for w in analysis.witnesses[:WITNESS_EVIDENCE])
        if not analysis.width2:
            notes.append("some element of γ2(G) is not a product of two commutators")
            logger.warning("width-two clause fails for a group with K(G) != γ2(G)")
    if agree is False:
        logger.warning(f"Theorem {theorem.value}: predicted unequal={predicted}, brute force unequal={brute}")
    notes.append(STEM_NOTE)
    return TheoremClassification(
        theorem=theorem,
        hypotheses=record,
        case=case,
        predicted_unequal=predicted,
        brute_force_unequal=brute,
        agree=agree,
        width2=analysis.width2,
        evidence=evidence,
        notes=notes,
    )


def classify_theorem_A(target: Target, budget: Optional[int] = None) -> TheoremClassification:
    """
    Case of Theorem A, its prediction and the brute-force verdict.

    Raises:
        HypothesisError: carrying the failed hypothesis record
    """
    group = _as_group(target)
    record = check_hypotheses(group, Theorem.A)
    _require(record)
    n, c, z = group.n, nilpotency_class(group), center(group).log_order
    evidence: list[str] = []
    notes: list[str] = []
    case = TheoremCase.none
    if n == 6 and c == 4 and z == 2:
        case = TheoremCase.A1
        evidence.append("order p^6, class 4, |Z(G)| = p^2")
    elif n == 7 and c == 3 and z == 3:
        case = TheoremCase.A2
        evidence.append("order p^7, class 3, |Z(G)| = p^3")
    elif n == 8 and c == 2:
        case = _class2_order8_case(group, budget, evidence, notes, (TheoremCase.A3a, TheoremCase.A3b))
    logger.info(f"Theorem A: order p^{n}, class {c}, |Z| = p^{z} -> case {case.value}")
    return _finish(group, Theorem.A, record, case, evidence, notes)


@lru_cache(maxsize=1)
def _t2_model() -> AltBilinearMap:
    return extract_bilinear(PcGroup(t2_9(0, 0, 0)))


def classify_theorem_B(target: Target, budget: Optional[int] = None) -> TheoremClassification:
    """
    Case of Theorem B, its prediction and the brute-force verdict.

    B1 is decided by a pseudo-isometry search against T2_9(0, 0, 0); when that search is
    over budget the case is reported as undetermined.

    Raises:
        HypothesisError: carrying the failed hypothesis record
    """
    group = _as_group(target)
    record = check_hypotheses(group, Theorem.B)
    _require(record)
    n, c = group.n, nilpotency_class(group)
    z = center(group)
    evidence: list[str] = []
    notes: list[str] = []
    case = TheoremCase.none
    if c == 2 and n - z.log_order == 5:
        B, model = extract_bilinear(group), _t2_model()
        try:
            match = pseudo_isometry(B, model, budget)
        except BudgetExceededError as e:
            notes.append(f"case undetermined: {e}")
            case = TheoremCase.undetermined
        else:
            if match:
                if rank_spectrum(B) != rank_spectrum(model) or len(image(B)) != len(image(model)):
                    raise InvariantViolation("pseudo-isometric maps with different slice ranks or images")
                case = TheoremCase.B1
                evidence.append("commutation map pseudo-isometric to that of T2_9(0, 0, 0)")
    elif c == 2 and n == 8:
        notes.append("order read as 2^8")
        case = _class2_order8_case(group, budget, evidence, notes, (TheoremCase.B2a, TheoremCase.B2b))
    logger.info(f"Theorem B: order 2^{n}, class {c}, |Z| = 2^{z.log_order} -> case {case.value}")
    return _finish(group, Theorem.B, record, case, evidence, notes)


def classify(target: Target, theorem: Union[Theorem, str], budget: Optional[int] = None) -> TheoremClassification:
    if Theorem(theorem) is Theorem.A:
        return classify_theorem_A(target, budget)
    return classify_theorem_B(target, budget)


def applicable_theorem(target: Target) -> Optional[Theorem]:
    """The theorem whose hypotheses the group meets, if any."""
    group = _as_group(target)
    theorem = Theorem.B if group.p == 2 else Theorem.A
    return theorem if check_hypotheses(group, theorem).passed else None


# --- lemma suite ---------------------------------------------------------------------------


def _check(lemma: str, passed: bool, detail: str) -> LemmaCheck:
    return LemmaCheck(lemma=lemma, status=LemmaStatus.passed if passed else LemmaStatus.failed, detail=detail)


def _not_applicable(lemma: str, detail: str) -> LemmaCheck:
    return LemmaCheck(lemma=lemma, status=LemmaStatus.not_applicable, detail=detail)


def center_in_derived(group: PcGroup) -> Subgroup:
    """Z(G) ∩ γ2(G)."""
    if "center_in_derived" not in group.cache:
        gamma2 = derived_subgroup(group)
        group.cache["center_in_derived"] = closure(group, (z for z in center(group).elements() if z in gamma2))
    return group.cache["center_in_derived"]


def central_subgroups_of_order_p(group: PcGroup) -> list[Subgroup]:
    """Normal subgroups of order p inside γ2(G); they are exactly the order-p subgroups of Z(G) ∩ γ2(G)."""
    if "order_p_normal" not in group.cache:
        seen = set()
        result = []
        for z in center_in_derived(group).elements():
            if z.is_identity() or not group.power(z, group.p).is_identity():
                continue
            H = closure(group, [z])
            key = H.element_set()
            if key not in seen:
                seen.add(key)
                result.append(H)
        group.cache["order_p_normal"] = result
    return group.cache["order_p_normal"]


def commutators_cover_mod(group: PcGroup, H: Subgroup) -> bool:
    """K(G/H) = γ2(G/H), read off K(G) since K(G/H) = K(G)H/H."""
    analysis = commutator_set(group)
    images = {H.canonical(GroupElement(group, e)).exponents for e in analysis.K}
    return len(images) * H.order == analysis.gamma2.order


def _pth_powers_central(group: PcGroup, gamma2: Subgroup) -> LemmaCheck:
    lemma = "pth_powers_central"
    p, c = group.p, nilpotency_class(group)
    if gamma2.log_order != 4 or not is_elementary_abelian(gamma2):
        return _not_applicable(lemma, "γ2(G) is not elementary abelian of order p^4")
    if p == 2 or (c > 3 and p < 5):
        return _not_applicable(lemma, f"needs p >= 3 up to class 3 and p >= 5 beyond (p = {p}, class {c})")
    z = center(group)
    for t in z.transversal():
        power = group.power(t, p)
        if power not in z:
            return _check(lemma, False, f"{t.label()}^{p} = {power.label()} is not central")
    return _check(lemma, True, "x^p is central for every x")


def _center_not_maximal(group: PcGroup, gamma2: Subgroup) -> LemmaCheck:
    lemma = "center_not_maximal_in_derived"
    c = nilpotency_class(group)
    if c < 4:
        return _not_applicable(lemma, f"class {c} < 4")
    index = gamma2.log_order - center_in_derived(group).log_order
    return _check(lemma, index != 1, f"|γ2(G) : Z(G) ∩ γ2(G)| = p^{index}")


def _breadth_at_least_three(group: PcGroup, gamma2: Subgroup) -> LemmaCheck:
    lemma = "breadth_at_least_three"
    if gamma2.log_order != 4:
        return _not_applicable(lemma, f"|γ2(G)| = p^{gamma2.log_order}")
    b = group_breadth(group)
    return _check(lemma, b >= 3, f"b(G) = {b}")


def _derived_order_p3(group: PcGroup, gamma2: Subgroup) -> LemmaCheck:
    lemma = "derived_order_p3_all_commutators"
    if not is_elementary_abelian(gamma2) or gamma2.log_order not in (3, 4):
        return _not_applicable(lemma, "γ2(G) is not elementary abelian of order p^3 or p^4")
    if gamma2.log_order == 3:
        equal = commutator_set(group).equal
        return _check(lemma, equal, f"K(G) {'=' if equal else '!='} γ2(G)")
    subgroups = central_subgroups_of_order_p(group)
    failures = [H for H in subgroups if not commutators_cover_mod(group, H)]
    if failures:
        return _check(lemma, False, f"K(G/H) != γ2(G/H) for H = <{failures[0].pcgs[0].label()}>")
    return _check(lemma, True, f"K(G/H) = γ2(G/H) for all {len(subgroups)} normal H of order p in γ2(G)")


def _quotient_width_two(group: PcGroup, gamma2: Subgroup) -> LemmaCheck:
    lemma = "quotient_width_two"
    H = next((H for H in central_subgroups_of_order_p(group) if commutators_cover_mod(group, H)), None)
    if H is None:
        return _not_applicable(lemma, "no normal H of order p in γ2(G) with K(G/H) = γ2(G/H)")
    width2 = commutator_set(group).width2
    return _check(lemma, width2, f"H = <{H.pcgs[0].label()}>, two-commutator width {'holds' if width2 else 'fails'}")


def _center_index_mod(group: PcGroup, H: Subgroup) -> int:
    """log_p |G/H : Z(G/H)|; the preimage of Z(G/H) is {x : [x, s] in H for the generators s}."""
    z = center(group)
    gens = minimal_generators(group)
    count = sum(1 for t in z.transversal() if all(group.commutator(t, s) in H for s in gens))
    return group.n - z.log_order - _log_count(count, group.p)


def _log_count(count: int, p: int) -> int:
    k = 0
    while count > 1:
        count //= p
        k += 1
    return k


def _breadth_three_criterion(group: PcGroup, gamma2: Subgroup) -> LemmaCheck:
    lemma = "breadth_three_criterion"
    p = group.p
    if p == 2 or is_abelian(whole_group(group)):
        return _not_applicable(lemma, "needs a non-abelian group and odd p")
    b = group_breadth(group)
    d, zi = gamma2.log_order, group.n - center(group).log_order
    reasons = []
    if d == 3 and zi >= 4:
        reasons.append("|γ2| = p^3 and |G : Z| >= p^4")
    if zi == 4 and d >= 4:
        reasons.append("|G : Z| = p^4 and |γ2| >= p^4")
    if not reasons and d == 4:
        subgroups = central_subgroups_of_order_p(group)
        for H in tqdm(subgroups, desc="breadth criterion", disable=not config.SHOW_PROGRESS or len(subgroups) < 50, leave=False):
            if _center_index_mod(group, H) == 3:
                reasons.append(f"|G/H : Z(G/H)| = p^3 for H = <{H.pcgs[0].label()}>")
                break
    predicted = bool(reasons)
    detail = f"b(G) = {b}; " + ("; ".join(reasons) if reasons else "no breadth-3 condition holds")
    return _check(lemma, (b == 3) == predicted, detail)


def _covering(group: PcGroup, covering) -> LemmaCheck:
    lemma = "covering_family"
    if covering is None:
        return _not_applicable(lemma, "no covering family supplied")
    words, h_words = covering
    xs = [group.word(w) for w in words]
    H = closure(group, [group.word(w) for w in h_words])
    try:
        holds = covering_check(group, xs, H)
    except PreconditionError as e:
        return _check(lemma, False, str(e))
    return _check(
        lemma, holds, f"{len(xs)} elements, H of order p^{H.log_order}: covering {'holds' if holds else 'fails'}"
    )


def _stem_condition(group: PcGroup, gamma2: Subgroup) -> LemmaCheck:
    lemma = "stem_condition"
    if gamma2.order == 1:
        return _not_applicable(lemma, "abelian group")
    z = center(group)
    stem = is_stem(group)
    return _check(lemma, stem, f"|Z(G)| = p^{z.log_order}, Z(G) {'<=' if stem else 'not <='} γ2(G)")


def lemma_suite(target: Target, covering=None) -> list[LemmaCheck]:
    """
    Evaluate every structural lemma that applies to the group.

    Args:
        target: presentation or group
        covering: optional (words, H words) from a catalog entry's covering family
    """
    group = _as_group(target)
    gamma2 = derived_subgroup(group)
    checks = [
        _pth_powers_central(group, gamma2),
        _center_not_maximal(group, gamma2),
        _breadth_at_least_three(group, gamma2),
        _derived_order_p3(group, gamma2),
        _quotient_width_two(group, gamma2),
        _breadth_three_criterion(group, gamma2),
        _covering(group, covering),
        _stem_condition(group, gamma2),
    ]
    failed = [c.lemma for c in checks if c.status is LemmaStatus.failed]
    if failed:
        logger.warning(f"Lemma checks failed: {', '.join(failed)}")
    else:
        logger.debug(f"Lemma suite: {sum(c.status is LemmaStatus.passed for c in checks)} passed")
    return checks
