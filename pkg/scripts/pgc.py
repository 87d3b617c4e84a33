#!/usr/bin/env python3
"""
pgc launcher

Usage:
    python scripts/pgc.py analyze --catalog phi23 --p 5 --theorem A
    python scripts/pgc.py catalog list
"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

# Load environment variables BEFORE importing logging config
load_dotenv()

from pgc.cli import main

if __name__ == "__main__":
    sys.exit(main())
