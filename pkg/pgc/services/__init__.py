"""Services package for pgc: single analyses, batch runs and catalog verification."""

from .analysis_service import AnalysisService, render_text
from .batch_service import BatchRunner
from .verification_service import VerificationSweep, render_row

__all__ = ["AnalysisService", "render_text", "BatchRunner", "VerificationSweep", "render_row"]
