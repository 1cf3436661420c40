#!/usr/bin/env python3
"""PFAvoid - Pattern-avoiding parking functions"""

import sys
from src.app import main

if __name__ == "__main__":
    sys.exit(main())
