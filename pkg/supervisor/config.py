# supervisor/config.py
# Global configuration for the overlap supervisor

JITTER = 0.1  # per-run init masses are scaled by exp(u), u ~ U[-JITTER, JITTER]
OMEGA_MAX_MEMBERS = 10000  # cap on the union closure of a family
DEFAULT_RUNS = 8
DEFAULT_VARTHETA = 2  # large modules have more members than this
LARGE_INIT_MODES = ("uniform", "score-weighted")
