"""
SemiPrim - Configuration
"""

import os

# Element census
CENSUS_CAP = int(os.environ.get("SEMIPRIM_CENSUS_CAP", "10000000"))
CLASS_MODE_THRESHOLD = int(os.environ.get("SEMIPRIM_CLASS_MODE", "100000"))

# Coset actions
COSET_INDEX_CAP = int(os.environ.get("SEMIPRIM_COSET_CAP", "100000"))

# Base size search budget per group (seconds)
TIME_BUDGET = float(os.environ.get("SEMIPRIM_TIME_BUDGET", "600"))

# Degree from which the base-size bounds are asserted rather than informational
BASESIZE_THRESHOLD = int(os.environ.get("SEMIPRIM_BASESIZE_N1", "1"))

# Atlas generator-file cache (empty = derive on every load)
ATLAS_CACHE_DIR = os.environ.get("SEMIPRIM_ATLAS_CACHE", "")

# Output
DEFAULT_FORMAT = os.environ.get("SEMIPRIM_FORMAT", "text")
DEFAULT_SEED = int(os.environ.get("SEMIPRIM_SEED", "0"))

# Project info
PROJECT_NAME = "SemiPrim"
VERSION = "1.0.0"
