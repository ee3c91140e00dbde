"""Make the directory as a package directory"""

import logging

logging.basicConfig(level=logging.INFO)


EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2
EXIT_IO_ERROR = 3

STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'
STATUS_UNMET = 'hypothesis_not_satisfied'

DEFAULT_SEED = 0
DEFAULT_WORKERS = 4
DEFAULT_TOLERANCE = 1e-7
