#!/usr/bin/env python3
# ============================================
# EVENTSYNC
# Run Script
# ============================================

"""
Command-line entry point.

Usage:
    python run.py modelcheck -e "select(!x,!y) | select(y,z) | select(!z) | select(x)"
    python run.py modelcheck program.txt --graph reach.txt
    python run.py demo --timeout 2000 --seed 3
    python run.py stress --tasks 200 --channels 50 --mode choose
    python run.py -v stress --guarded
"""

import sys

from eventsync.cli import main


if __name__ == "__main__":
    sys.exit(main())
