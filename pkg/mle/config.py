# mle/config.py

# Global configuration for fuzzy covers
UNIT_MASS_TOLERANCE = 1e-9  # |sum of masses - 1| allowed in memory
LOAD_MASS_TOLERANCE = 1e-6  # looser bound for covers read from files
PRUNE_TOLERANCE = 1e-12  # masses below this are dropped and the rest renormalized
UNIFORM_COVER_MAX_NODES = 14  # n * 2^(n-1) stored entries
