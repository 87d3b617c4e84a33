from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from pgc import FORMAT_VERSION, __version__


class Theorem(str, Enum):
    A = "A"
    B = "B"


class TheoremCase(str, Enum):
    A1 = "A1"
    A2 = "A2"
    A3a = "A3a"
    A3b = "A3b"
    B1 = "B1"
    B2a = "B2a"
    B2b = "B2b"
    none = "none"
    undetermined = "undetermined"


class LemmaStatus(str, Enum):
    passed = "pass"
    failed = "fail"
    not_applicable = "not-applicable"


# Consistency
class FailureReport(BaseModel):
    """First failing consistency overlap, with both collected normal forms"""
    overlap: str
    generators: List[int]
    left: List[int]
    right: List[int]

    def describe(self) -> str:
        return f"overlap {self.overlap} collects to {self.left} and {self.right}"


# Report sections
class ElementModel(BaseModel):
    exponents: List[int]
    label: str


class InputIdentity(BaseModel):
    source: str
    name: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    path: Optional[str] = None
    digest: str
    p: int
    ngens: int


class StructureSection(BaseModel):
    order: int
    nilpotency_class: int
    center_order: int
    lower_central_orders: List[int]
    derived_order: int
    derived_exponent: int
    conjugate_type: List[int]
    class_count: int
    breadth: int
    frattini_rank: int
    exponent: int
    stem: bool


class CommutatorSection(BaseModel):
    commutator_count: int
    derived_order: int
    equal: bool
    width2: bool
    witness_count: int
    witnesses: List[ElementModel] = Field(default_factory=list)


class HypothesisCheck(BaseModel):
    name: str
    passed: bool
    value: str
    expected: str


class HypothesisRecord(BaseModel):
    theorem: Theorem
    checks: List[HypothesisCheck]
    reading: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[HypothesisCheck]:
        return [c for c in self.checks if not c.passed]


class TheoremClassification(BaseModel):
    theorem: Theorem
    hypotheses: HypothesisRecord
    case: TheoremCase
    predicted_unequal: Optional[bool] = None
    brute_force_unequal: bool
    agree: Optional[bool] = None
    width2: bool
    evidence: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


class LemmaCheck(BaseModel):
    lemma: str
    status: LemmaStatus
    detail: str


class AnalysisReport(BaseModel):
    """Canonical analysis record; everything except timings is deterministic for a given input"""
    format_version: int = FORMAT_VERSION
    tool_version: str = __version__
    input: InputIdentity
    structure: StructureSection
    commutators: CommutatorSection
    classification: Optional[TheoremClassification] = None
    lemmas: Optional[List[LemmaCheck]] = None
    timings: Optional[Dict[str, float]] = None

    def canonical_json(self) -> str:
        return self.model_dump_json(exclude={"timings"})


# Batch
class BatchFailure(BaseModel):
    format_version: int = FORMAT_VERSION
    file: str
    error_type: str
    error: str


class BatchSummary(BaseModel):
    kind: str = "summary"
    total: int = 0
    equal: int = 0
    unequal: int = 0
    failed: int = 0


# Catalog
class ParameterSpec(BaseModel):
    name: str
    type: str = "int"
    default: Optional[Any] = None
    description: str = ""


class CatalogEntryModel(BaseModel):
    name: str
    description: str
    reference: str
    parameters: List[ParameterSpec]
    constraints: List[str]
    notes: List[str] = Field(default_factory=list)
    known_inconsistent: bool = False


class CatalogListing(BaseModel):
    format_version: int = FORMAT_VERSION
    entries: List[CatalogEntryModel]


# Verification sweep
class VerificationRow(BaseModel):
    entry: str
    params: Dict[str, Any]
    theorem: Optional[Theorem] = None
    case: Optional[TheoremCase] = None
    equal: Optional[bool] = None
    agree: Optional[bool] = None
    lemma_failures: List[str] = Field(default_factory=list)
    claim_mismatches: List[str] = Field(default_factory=list)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return (
            self.error is None
            and self.agree is not False
            and not self.lemma_failures
            and not self.claim_mismatches
        )


class VerificationSummary(BaseModel):
    kind: str = "summary"
    rows: int = 0
    ok: int = 0
    failed: int = 0
    skipped: int = 0
