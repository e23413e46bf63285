#!/usr/bin/env python3
"""
Simple solver runner that can be used directly from a checkout.
"""

import os
import sys
from pathlib import Path

os.environ.setdefault("ROBUST_MST_LOG_LEVEL", "INFO")

# Add src to path
project_dir = Path(__file__).parent
sys.path.insert(0, str(project_dir / "src"))

from robust_mst.cli import main

if __name__ == "__main__":
    sys.exit(main())
