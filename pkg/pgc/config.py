"""
Runtime configuration read from the environment (.env supported).
"""
from dotenv import load_dotenv
import os

load_dotenv()

PSEUDO_ISOMETRY_BUDGET = int(os.getenv("PGC_PSEUDO_ISOMETRY_BUDGET", "100000000"))
QUADRUPLE_BUDGET = int(os.getenv("PGC_QUADRUPLE_BUDGET", "2000000000"))
BATCH_WORKERS = int(os.getenv("PGC_BATCH_WORKERS", "1"))
SHOW_PROGRESS = os.getenv("PGC_PROGRESS", "true").lower() == "true"
RANDOM_SEED = int(os.getenv("PGC_RANDOM_SEED", "20240611"))
SLOW_TESTS = os.getenv("PGC_SLOW_TESTS", "0").lower() in ("1", "true", "yes")

LOG_LEVEL = os.getenv("PGC_LOG_LEVEL", "INFO")
LOG_DIR = os.getenv("PGC_LOG_DIR", "")
LOG_TO_FILE = os.getenv("PGC_LOG_TO_FILE", "true").lower() == "true"
