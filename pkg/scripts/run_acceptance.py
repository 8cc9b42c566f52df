"""Run the acceptance suite alone; one PASS/FAIL line per criterion is printed at the end."""

import os
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))

if __name__ == "__main__":
    sys.exit(pytest.main([os.path.join(HERE, "..", "tests", "test_acceptance.py"), "-q", *sys.argv[1:]]))
