# scores/config.py

# Global configuration for cluster scores
TOLERANCE = 1e-9  # absolute tolerance for score comparisons
MOBIUS_MAX_NODES = 12
PARTITION_MOBIUS_MAX_NODES = 7
SUBSET_TABLE_MAX_NODES = 20
SUBSET_TABLE_CHUNK = 1 << 14  # masks per dense block in subset_values
DEFAULT_BETA = 0.5  # cubic triangle weight
