"""
Verification Service

Sweeps the catalog: every entry valid at the requested primes is built, classified under
the theorem whose hypotheses it meets, run through the lemma suite and compared with the
invariants its source states.
"""

from typing import Iterable, List, Optional

from tqdm import tqdm

from catalog import catalog_build, get_catalog_entries
from catalog.base import BaseCatalogEntry, Params
from pgc import config
from pgc.collector import PcGroup
from pgc.commutators import commutator_set
from pgc.errors import PgcError
from pgc.logging_config import get_logger
from pgc.schemas import LemmaStatus, VerificationRow, VerificationSummary
from pgc.structure import center, conjugate_type, derived_subgroup, lower_central_series, nilpotency_class
from pgc.verifier import applicable_theorem, classify, lemma_suite

logger = get_logger("verify")


def claim_mismatches(group: PcGroup, claims: dict) -> List[str]:
    """Stated invariants that the computed group does not have."""
    series = lower_central_series(group)
    computed = {
        "order_log": group.n,
        "nilpotency_class": nilpotency_class(group),
        "center_log": center(group).log_order,
        "derived_log": derived_subgroup(group).log_order,
        "gamma3_log": series[2].log_order if len(series) > 2 else 0,
        "equal": commutator_set(group).equal,
    }
    if "conjugate_type" in claims:
        computed["conjugate_type"] = list(conjugate_type(group).sizes)
    return [
        f"{key}: stated {value}, computed {computed[key]}"
        for key, value in claims.items()
        if key in computed and computed[key] != value
    ]


class VerificationSweep:
    """Classifies and cross-checks catalog groups."""

    def __init__(self, primes: Iterable[int], names: Optional[List[str]] = None, budget: Optional[int] = None):
        self.primes = sorted(set(primes))
        self.names = names
        self.budget = budget

        # Statistics
        self.stats = {"rows": 0, "ok": 0, "failed": 0, "skipped": 0}

    def _targets(self) -> List[tuple[BaseCatalogEntry, Params]]:
        targets = []
        for name, cls in get_catalog_entries().items():
            if self.names and name not in self.names:
                continue
            entry = cls()
            for p in self.primes:
                if not entry.valid_for(p):
                    continue
                if entry.known_inconsistent:
                    logger.info(f"Skipping {name} at p = {p}: known inconsistent as printed")
                    self.stats["skipped"] += 1
                    continue
                targets.extend((entry, params) for params in entry.variants(p))
        return targets

    def verify_one(self, entry: BaseCatalogEntry, params: Params) -> VerificationRow:
        row = VerificationRow(entry=entry.name, params=params)
        try:
            resolved = entry.validate(params)
            row.params = resolved
            group = PcGroup(catalog_build(entry.name, resolved))
            theorem = applicable_theorem(group)
            if theorem is not None:
                classification = classify(group, theorem, self.budget)
                row.theorem = theorem
                row.case = classification.case
                row.agree = classification.agree
            row.equal = commutator_set(group).equal
            checks = lemma_suite(group, entry.covering_family(resolved))
            row.lemma_failures = [c.lemma for c in checks if c.status is LemmaStatus.failed]
            row.claim_mismatches = claim_mismatches(group, entry.claims(resolved))
        except PgcError as e:
            logger.error(f"{entry.name} {params}: {type(e).__name__}: {e}")
            row.error = f"{type(e).__name__}: {e}"
        return row

    def run(self) -> List[VerificationRow]:
        logger.info("=" * 60)
        logger.info(f"VERIFICATION STARTED at p in {self.primes}")
        logger.info("=" * 60)

        targets = self._targets()
        rows = []
        for entry, params in tqdm(targets, desc="verify", disable=not config.SHOW_PROGRESS):
            row = self.verify_one(entry, params)
            rows.append(row)
            self.stats["rows"] += 1
            self.stats["ok" if row.ok else "failed"] += 1
            if not row.ok:
                logger.warning(f"{row.entry} {row.params}: verification failed")

        self._print_summary()
        return rows

    def summary(self) -> VerificationSummary:
        return VerificationSummary(**self.stats)

    def _print_summary(self):
        logger.info("VERIFICATION COMPLETE!")
        logger.info("=" * 60)
        logger.info(f"Groups checked: {self.stats['rows']}")
        logger.info(f"OK: {self.stats['ok']}")
        logger.info(f"Failed: {self.stats['failed']}")
        logger.info(f"Skipped (known inconsistent): {self.stats['skipped']}")
        logger.info("=" * 60)


def render_row(row: VerificationRow) -> str:
    params = ",".join(f"{k}={v}" for k, v in row.params.items())
    status = "ok" if row.ok else "FAIL"
    if row.error:
        return f"{status:<5} {row.entry:<26} {params:<18} error: {row.error}"
    theorem = row.theorem.value if row.theorem else "-"
    case = row.case.value if row.case else "-"
    equal = "K=γ2" if row.equal else "K!=γ2"
    extra = ""
    if row.lemma_failures:
        extra += " lemmas failed: " + ", ".join(row.lemma_failures)
    if row.claim_mismatches:
        extra += " claims: " + "; ".join(row.claim_mismatches)
    return f"{status:<5} {row.entry:<26} {params:<18} {theorem:<2} {case:<12} {equal}{extra}"
