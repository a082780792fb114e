# search/config.py

# Global configuration for the search algorithms
TIE_TOLERANCE = 1e-9  # values this close are tied and randomized
SHIFT_EPSILON = 1e-9  # floor added when shifting non-positive per-member scores
BRUTE_FORCE_MAX_NODES = 12  # Bell(12) ~ 4.2M partitions
ALL_SUBSETS_MAX_NODES = 14
