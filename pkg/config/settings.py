"""Central configuration for RomanCensus. Loads .env and defines constants."""

import os

from dotenv import load_dotenv

load_dotenv()


def _flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------
# Exhaustive enumeration walks 2^n subsets; above this order it refuses.
ORACLE_CAP = int(os.getenv("ROMAN_CENSUS_ORACLE_CAP", "24"))
# The definitional filter walks all 3^n functions.
DEFINITION_CAP = int(os.getenv("ROMAN_CENSUS_DEFINITION_CAP", "10"))

# ---------------------------------------------------------------------------
# Measure weights
# ---------------------------------------------------------------------------
# Interval and forest measures keep omega_1 = 1.
INTERVAL_OMEGA = float(os.getenv("ROMAN_CENSUS_INTERVAL_OMEGA", "0.57"))
CHORDAL_OMEGA1 = float(os.getenv("ROMAN_CENSUS_CHORDAL_OMEGA1", "0.710134"))
CHORDAL_OMEGA2 = float(os.getenv("ROMAN_CENSUS_CHORDAL_OMEGA2", "0.434799"))

# ---------------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------------
FAMILY_CAP = int(os.getenv("ROMAN_CENSUS_FAMILY_CAP", "64"))
BISECT_XTOL = float(os.getenv("ROMAN_CENSUS_BISECT_XTOL", "1e-12"))
GRID_STEP = float(os.getenv("ROMAN_CENSUS_GRID_STEP", "0.01"))
REFINE_STEP = float(os.getenv("ROMAN_CENSUS_REFINE_STEP", "1e-4"))

# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------
# DEBUG_AUDIT turns on the measure audit and the duplicate-leaf check.
DEBUG_AUDIT = _flag("ROMAN_CENSUS_DEBUG")
# STRICT_RULES makes stuck states and audit violations fatal.
STRICT_RULES = _flag("ROMAN_CENSUS_STRICT")

# ---------------------------------------------------------------------------
# Runs
# ---------------------------------------------------------------------------
DEFAULT_SEED = int(os.getenv("ROMAN_CENSUS_SEED", "0"))
DEFAULT_JOBS = int(os.getenv("ROMAN_CENSUS_JOBS", "1"))
LOG_LEVEL = os.getenv("ROMAN_CENSUS_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# ---------------------------------------------------------------------------
# Graph classes
# ---------------------------------------------------------------------------
GRAPH_CLASSES = ("auto", "split", "cobipartite", "interval", "forest", "chordal", "oracle")
# Recognizers tried by --class auto, in order; interval is never auto-selected.
AUTO_CLASS_ORDER = ("forest", "split", "cobipartite", "chordal")
OUTPUT_FORMATS = ("lines", "json", "count")
GENERATOR_FAMILIES = ("path", "cycle", "star", "p2_forest", "split_lb", "cobip_lb")
# Families whose generator also yields an interval representation.
INTERVAL_FAMILIES = ("path", "p2_forest")

# Size limit of the brute-force interval recognizer.
INTERVAL_BRUTEFORCE_MAX_N = 8
