#!/usr/bin/env python3
"""Run the acceptance suite with per-criterion PASS/FAIL lines visible."""

import sys
from pathlib import Path

import pytest

if __name__ == "__main__":
    target = Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"
    sys.exit(pytest.main([str(target), "-s", "-v", *sys.argv[1:]]))
