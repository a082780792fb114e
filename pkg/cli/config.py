# cli/config.py
# Global config for the command-line runner
import os

LOG_LEVEL = "INFO"
LOG_LEVEL_ENV = "MODSEARCH_LOG_LEVEL"  # overrides LOG_LEVEL, also read from .env
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

DEFAULTS_FILE = os.path.join(os.path.dirname(__file__), "defaults.yaml")

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1  # infeasible or invalid configuration
EXIT_IO = 2  # unreadable or malformed input, unwritable output
EXIT_CAP = 3  # problem size above a brute-force cap
