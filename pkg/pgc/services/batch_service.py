"""
Batch Service

Analyzes every .pcp file of a directory and streams one JSON line per file, followed by a
summary line. A failing file becomes a BatchFailure line; the batch never aborts.
"""

from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, TextIO, Union

from tqdm import tqdm

from pgc import config
from pgc.errors import PgcError
from pgc.logging_config import get_logger
from pgc.presentation import parse_presentation
from pgc.schemas import AnalysisReport, BatchFailure, BatchSummary
from pgc.services.analysis_service import AnalysisService, file_identity

logger = get_logger("batch")

Outcome = Union[AnalysisReport, BatchFailure]


class BatchRunner:
    """Runs the analysis over a directory of presentations."""

    def __init__(self, workers: Optional[int] = None, witnesses: bool = False, budget: Optional[int] = None):
        """
        Initialize the batch runner.

        Args:
            workers: Files analyzed concurrently (PGC_BATCH_WORKERS by default)
            witnesses: Include non-commutator witnesses in each report
            budget: Search budget passed to the analysis
        """
        self.workers = max(1, workers or config.BATCH_WORKERS)
        self.witnesses = witnesses
        self.budget = budget

        # Statistics
        self.stats = {
            "files": 0,
            "equal": 0,
            "unequal": 0,
            "failed": 0,
            "errors": {},  # error type -> count
        }

    def analyze_file(self, path: Path) -> Outcome:
        try:
            pres = parse_presentation(path.read_text(encoding="utf-8"))
            return AnalysisService(self.budget).analyze(pres, file_identity(pres, path.name), witnesses=self.witnesses)
        except (PgcError, OSError, UnicodeDecodeError) as e:
            logger.error(f"{path.name}: {type(e).__name__}: {e}")
            return BatchFailure(file=path.name, error_type=type(e).__name__, error=str(e))

    def run(self, directory: Union[str, Path], out: TextIO) -> BatchSummary:
        """
        Analyze every *.pcp file of `directory` in name order and write JSONL to `out`.

        Raises:
            NotADirectoryError: `directory` is not a readable directory
        """
        directory = Path(directory)
        if not directory.is_dir():
            raise NotADirectoryError(f"{directory} is not a directory")
        files = sorted(directory.glob("*.pcp"))

        logger.info("=" * 60)
        logger.info(f"BATCH STARTED: {len(files)} file(s) in {directory} with {self.workers} worker(s)")
        logger.info("=" * 60)

        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            outcomes = pool.map(self.analyze_file, files)
            # single writer, input order
            for outcome in tqdm(outcomes, total=len(files), desc="batch", disable=not config.SHOW_PROGRESS):
                self._record(outcome)
                out.write(self._line(outcome) + "\n")

        summary = BatchSummary(
            total=self.stats["files"],
            equal=self.stats["equal"],
            unequal=self.stats["unequal"],
            failed=self.stats["failed"],
        )
        out.write(summary.model_dump_json() + "\n")
        out.flush()
        self._print_summary()
        return summary

    def _record(self, outcome: Outcome):
        self.stats["files"] += 1
        if isinstance(outcome, BatchFailure):
            self.stats["failed"] += 1
            self.stats["errors"][outcome.error_type] = self.stats["errors"].get(outcome.error_type, 0) + 1
        elif outcome.commutators.equal:
            self.stats["equal"] += 1
        else:
            self.stats["unequal"] += 1

    @staticmethod
    def _line(outcome: Outcome) -> str:
        if isinstance(outcome, BatchFailure):
            return outcome.model_dump_json()
        return outcome.canonical_json()

    def _print_summary(self):
        logger.info("BATCH COMPLETE!")
        logger.info("=" * 60)
        logger.info(f"Files: {self.stats['files']}")
        logger.info(f"K(G) = γ2(G): {self.stats['equal']}")
        logger.info(f"K(G) != γ2(G): {self.stats['unequal']}")
        logger.info(f"Failed: {self.stats['failed']}")
        for error_type, count in sorted(self.stats["errors"].items()):
            logger.info(f"  - {error_type}: {count}")
        logger.info("=" * 60)
