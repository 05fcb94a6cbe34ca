#!/usr/bin/env python3
"""
Run the tdsynth command-line interface from a source checkout.

Usage
-----
Synthesize a matrix with the global algorithm:
    python scripts/tdsynth.py synth --algo global --in U.json --out U.word

Check the rewrite relations:
    python scripts/tdsynth.py relations-check
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from tdsynth.cli import main

if __name__ == "__main__":
    sys.exit(main())
