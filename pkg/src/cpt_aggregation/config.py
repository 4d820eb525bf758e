"""Configuration for cpt-aggregation.

Values are read from the environment once at import; command-line flags override them
per invocation.
"""

import os

# Resource guards
MAX_MATRIX_N = int(os.getenv("CPT_AGGREGATION_MAX_MATRIX_N", "20"))
MAX_PARENT_BITS = int(os.getenv("CPT_AGGREGATION_MAX_PARENT_BITS", "24"))
MAX_EXHAUSTIVE_POOL = int(os.getenv("CPT_AGGREGATION_MAX_EXHAUSTIVE_POOL", "4"))

# Report sweeps
REPORT_WORKERS = int(os.getenv("CPT_AGGREGATION_REPORT_WORKERS", "4"))
REPORT_SCHEMA_VERSION = 1

# Logging
LOG_LEVEL = os.getenv("CPT_AGGREGATION_LOG_LEVEL", "WARNING")
LOG_FILE = os.getenv("CPT_AGGREGATION_LOG_FILE", "")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
