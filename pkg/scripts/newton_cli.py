"""
Newton Strata CLI Launcher

Usage:
    python scripts/newton_cli.py bgmu "gsp(n=4,d=1)" --mu 1,1,0,0
    python scripts/newton_cli.py verify "gl(n=3,d=2)" --mu 1,0,0,1,0,0 --format json
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.cli.main import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
