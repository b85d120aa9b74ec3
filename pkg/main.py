#!/usr/bin/env python3
"""
Lorentz surfaces command line

Samples null curves and minimal Lorentz surfaces from scene files, splits and
merges surfaces, and runs the invariant verification suites.
"""

import sys

from lorentz_surfaces.cli import run

if __name__ == "__main__":
    sys.exit(run())
