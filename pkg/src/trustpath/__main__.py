"""Entry point for ``python -m trustpath``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
