"""
Rollercoaster toolkit - command-line entry point.

Usage:
    python roller.py count --n 10
    python roller.py greedy --n 100 --seed 7 --validate
    python roller.py draw-cat --n 26 --format svg --output cat.svg
"""

import os
import sys

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli import main


if __name__ == "__main__":
    sys.exit(main())
