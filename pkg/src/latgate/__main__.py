"""Entry point for `python -m latgate`."""

import sys

from .cli import main

sys.exit(main())
