#!/usr/bin/env python3
"""
Test script for the logging setup.

This script tests that:
1. The module exports only the shared logger and get_logger
2. get_logger tags records with the component that routes them to its log file
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from pgc import logging_config
from pgc.logging_config import get_logger, logger


def test_exports():
    assert set(logging_config.__all__) == {"logger", "get_logger"}


@pytest.mark.parametrize("component", ["engine", "batch", "verify"])
def test_component_binding(component):
    records = []
    sink = logger.add(lambda message: records.append(message.record), level="DEBUG")
    try:
        get_logger(component).info("component check")
        get_logger().info("plain")
    finally:
        logger.remove(sink)
    assert records[0]["extra"]["component"] == component
    assert "component" not in records[1]["extra"]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
