#!/usr/bin/env python3
"""ccalg - exact checks for conformal twisted Rota-Baxter operators."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

from ccalg.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
