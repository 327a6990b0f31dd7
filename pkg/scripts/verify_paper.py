#!/usr/bin/env python3
"""
Published-claims verification run.

Builds every catalog algebra, computes multipliers with both engines and
compares them with the claims; writes a text report and a CSV table.

Usage:
    poetry run python scripts/verify_paper.py [--out report.txt] [--seed N]
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from superschur.cli import main


if __name__ == "__main__":
    sys.exit(main(["verify-paper", *sys.argv[1:]]))
