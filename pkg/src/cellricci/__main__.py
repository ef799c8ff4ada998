"""``python -m cellricci``."""

import sys

from cellricci.cli import main

sys.exit(main())
