#!/usr/bin/env python3
"""
surgeon: exact surgery calculus and lens space table verification.

Usage examples:
    python scripts/surgeon.py verify dhl
    python scripts/surgeon.py --format csv verify table --id table2 --range=-4..4
    python scripts/surgeon.py family ystar --m -2 --r 0 --s -4 --b 1 --k 3
"""

import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.runner import main


if __name__ == "__main__":
    main()
