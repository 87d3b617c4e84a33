"""
Analysis Service

Builds AnalysisReport documents for a single presentation and renders them as text.
"""

import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pgc.collector import GroupElement, PcGroup
from pgc.commutators import commutator_set
from pgc.errors import ConsistencyError
from pgc.logging_config import get_logger
from pgc.presentation import PcPresentation
from pgc.schemas import (
    AnalysisReport,
    CommutatorSection,
    ElementModel,
    InputIdentity,
    StructureSection,
    Theorem,
)
from pgc.structure import (
    center,
    conjugacy_classes,
    conjugate_type,
    derived_subgroup,
    exponent,
    frattini_rank,
    group_breadth,
    group_exponent,
    is_stem,
    lower_central_series,
    nilpotency_class,
)
from pgc.verifier import classify, lemma_suite

logger = get_logger("engine")


def element_model(x: GroupElement) -> ElementModel:
    return ElementModel(exponents=list(x.exponents), label=x.label())


def catalog_identity(pres: PcPresentation, name: str, params: Dict[str, Any]) -> InputIdentity:
    return InputIdentity(source="catalog", name=name, params=params, digest=pres.fingerprint, p=pres.p, ngens=pres.n)


def file_identity(pres: PcPresentation, path: Union[str, Path]) -> InputIdentity:
    return InputIdentity(source="file", path=str(path), digest=pres.fingerprint, p=pres.p, ngens=pres.n)


def structure_section(group: PcGroup) -> StructureSection:
    gamma2 = derived_subgroup(group)
    return StructureSection(
        order=group.order,
        nilpotency_class=nilpotency_class(group),
        center_order=center(group).order,
        lower_central_orders=[term.order for term in lower_central_series(group)],
        derived_order=gamma2.order,
        derived_exponent=exponent(gamma2),
        conjugate_type=list(conjugate_type(group).sizes),
        class_count=len(conjugacy_classes(group)),
        breadth=group_breadth(group),
        frattini_rank=frattini_rank(group),
        exponent=group_exponent(group),
        stem=is_stem(group),
    )


def commutator_section(group: PcGroup, witnesses: bool = False) -> CommutatorSection:
    analysis = commutator_set(group)
    return CommutatorSection(
        commutator_count=analysis.size,
        derived_order=analysis.gamma2.order,
        equal=analysis.equal,
        width2=analysis.width2,
        witness_count=len(analysis.witnesses),
        witnesses=[element_model(w) for w in analysis.witnesses] if witnesses else [],
    )


class AnalysisService:
    """Runs the analysis phases for one presentation and assembles the report."""

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget
        self.timings: Dict[str, float] = {}

    @contextmanager
    def _phase(self, name: str):
        start = time.perf_counter()
        yield
        self.timings[name] = round(time.perf_counter() - start, 6)
        logger.debug(f"Phase {name}: {self.timings[name]:.3f}s")

    def analyze(
        self,
        pres: PcPresentation,
        identity: InputIdentity,
        theorem: Optional[Theorem] = None,
        witnesses: bool = False,
        lemmas: bool = False,
        timings: bool = False,
        covering=None,
    ) -> AnalysisReport:
        """
        Analyze a presentation.

        Args:
            pres: Presentation to analyze
            identity: Where the presentation came from
            theorem: Classify under this theorem
            witnesses: List every non-commutator of γ2 in the report
            lemmas: Add the lemma suite
            timings: Add per-phase timings
            covering: Covering family for the lemma suite

        Raises:
            ConsistencyError: the presentation is inconsistent
            HypothesisError: the requested theorem's hypotheses fail
        """
        self.timings = {}
        group = PcGroup(pres)
        with self._phase("consistency"):
            failure = group.consistency_check()
        if failure is not None:
            raise ConsistencyError(failure)

        logger.info(f"Analyzing group of order {pres.p}^{pres.n} ({identity.name or identity.path})")
        with self._phase("structure"):
            structure = structure_section(group)
        with self._phase("commutators"):
            commutators = commutator_section(group, witnesses)

        classification = None
        if theorem is not None:
            with self._phase("classification"):
                classification = classify(group, theorem, self.budget)
        lemma_checks = None
        if lemmas:
            with self._phase("lemmas"):
                lemma_checks = lemma_suite(group, covering)

        return AnalysisReport(
            input=identity,
            structure=structure,
            commutators=commutators,
            classification=classification,
            lemmas=lemma_checks,
            timings=dict(self.timings) if timings else None,
        )


# --- text rendering ------------------------------------------------------------------------


def _orders(values, p: int) -> str:
    return ", ".join(_power(v, p) for v in values)


def _power(value: int, p: int) -> str:
    k = 0
    while value > 1:
        value //= p
        k += 1
    return f"{p}^{k}"


def render_text(report: AnalysisReport) -> str:
    """Human-readable rendering of the canonical report body."""
    p = report.input.p
    s = report.structure
    c = report.commutators
    source = report.input.name or report.input.path
    params = ", ".join(f"{k}={v}" for k, v in report.input.params.items())
    lines = ["=" * 60, f"{source}" + (f" ({params})" if params else "") + f"  [{report.input.digest}]", "=" * 60]
    lines.append(f"Order:               {_power(s.order, p)}")
    lines.append(f"Nilpotency class:    {s.nilpotency_class}")
    lines.append(f"|Z(G)|:              {_power(s.center_order, p)}")
    lines.append(f"Lower central |γk|:  {_orders(s.lower_central_orders, p)}")
    lines.append(f"|γ2(G)|, exponent:   {_power(s.derived_order, p)}, {s.derived_exponent}")
    lines.append(f"Conjugate type:      {{{', '.join(str(x) for x in s.conjugate_type)}}}")
    lines.append(f"Classes:             {s.class_count}")
    lines.append(f"Breadth:             {s.breadth}")
    lines.append(f"Frattini rank:       {s.frattini_rank}")
    lines.append(f"Exponent:            {s.exponent}")
    lines.append(f"Stem:                {'yes' if s.stem else 'no'}")
    lines.append("")
    lines.append(f"|K(G)| = {c.commutator_count} of |γ2(G)| = {c.derived_order}: K(G) {'=' if c.equal else '!='} γ2(G)")
    lines.append(f"Non-commutators: {c.witness_count}; product of two commutators: {'yes' if c.width2 else 'no'}")
    for w in c.witnesses:
        lines.append(f"  {w.label}  {tuple(w.exponents)}")

    t = report.classification
    if t is not None:
        lines.append("")
        lines.append(f"Theorem {t.theorem.value}: case {t.case.value}")
        for check in t.hypotheses.checks:
            lines.append(f"  [{'x' if check.passed else ' '}] {check.name}: {check.value}")
        predicted = "-" if t.predicted_unequal is None else ("unequal" if t.predicted_unequal else "equal")
        actual = "unequal" if t.brute_force_unequal else "equal"
        agree = "-" if t.agree is None else ("yes" if t.agree else "NO")
        lines.append(f"  predicted {predicted}, brute force {actual}, agree {agree}")
        for item in t.evidence:
            lines.append(f"  evidence: {item}")
        for note in t.notes:
            lines.append(f"  note: {note}")

    if report.lemmas is not None:
        lines.append("")
        lines.append("Lemma checks:")
        for check in report.lemmas:
            lines.append(f"  {check.status.value:<15} {check.lemma}: {check.detail}")

    if report.timings:
        lines.append("")
        lines.append("Timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in report.timings.items()))
    lines.append("=" * 60)
    return "\n".join(lines)
