# network/config.py

# Global configuration for graph handling
COMMENT_PREFIX = "#"
DEFAULT_EDGE_WEIGHT = 1.0
WEIGHT_TOLERANCE = 1e-12  # slack when checking w in [0, 1]
