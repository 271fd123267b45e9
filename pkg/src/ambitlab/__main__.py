"""
ambitlab package entry point.

Allows running with: python -m ambitlab
"""

import sys

from ambitlab.cli import main

if __name__ == "__main__":
    sys.exit(main())
