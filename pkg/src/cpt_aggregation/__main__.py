"""Allow ``python -m cpt_aggregation``."""

import sys

from cpt_aggregation.cli.main import main

sys.exit(main())
