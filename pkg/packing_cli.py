#!/usr/bin/env python3
"""
S-packing coloring toolkit command line
"""
import sys
from pathlib import Path

# project root on the import path
sys.path.append(str(Path(__file__).parent))

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
