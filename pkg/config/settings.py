"""
NumRange Toolkit - Configuration Settings
Central tolerances, computation budgets and paths for every module
"""

from pathlib import Path


class Settings:
    """Central configuration for the numerical-range toolkit"""

    # Certified computation
    DEFAULT_TOL = 1e-10  # relative to ||T||
    HERMITIAN_TOL = 1e-10  # ||H - H*||_max <= tol * ||H||_max
    SIGMA_FLOOR = 1e-12  # sigma_min below floor * ||M|| reported as [0, floor * ||M||]
    UNIT_VECTOR_TOL = 1e-12

    # Theta scan (branch-and-bound over the support function)
    BNB_INITIAL_INTERVALS = 64
    BNB_MAX_EIGENSOLVES = 10**6

    # Block constructors
    EQUALITY_MODEL_TOL = 1e-9

    # Verification harness
    SLACK_TOL = 1e-6
    POINTWISE_TOL = 1e-9
    POINTWISE_DRAWS = 1000
    SUITE_SCAN_TOL = 1e-7  # scans inside the suite; an order below SLACK_TOL
    EXAMPLE_TOL = 1e-6
    EXAMPLE_SCAN_TOL = 1e-9  # worked examples print seven decimals
    DEFAULT_TRIALS = 200
    DEFAULT_DIMS = (2, 3, 4, 8)
    DEFAULT_SEED = 42

    # Result cache
    CACHE_MAX_ENTRIES = 4096
    CACHE_COMPACTION_THRESHOLD = 0.8

    # Plotting
    SVG_VIEWPORT_PX = 600
    SVG_MARGIN = 0.10
    BOUNDARY_SAMPLES = 360

    # Observability
    LOG_LEVEL = "WARNING"
    ENABLE_TRACING = True
    ENABLE_FILE_LOG = False

    # Project Paths
    BASE_DIR = Path(__file__).resolve().parent.parent
    LOGS_DIR = BASE_DIR / "logs"

    @classmethod
    def validate(cls):
        """Validate tolerances and budgets"""
        for name in (
            "DEFAULT_TOL",
            "HERMITIAN_TOL",
            "SIGMA_FLOOR",
            "UNIT_VECTOR_TOL",
            "EQUALITY_MODEL_TOL",
            "SLACK_TOL",
            "POINTWISE_TOL",
            "SUITE_SCAN_TOL",
            "EXAMPLE_TOL",
            "EXAMPLE_SCAN_TOL",
            "SVG_MARGIN",
        ):
            if not getattr(cls, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(cls, name)!r}")

        for name in ("BNB_INITIAL_INTERVALS", "BNB_MAX_EIGENSOLVES", "POINTWISE_DRAWS", "CACHE_MAX_ENTRIES"):
            if int(getattr(cls, name)) < 1:
                raise ValueError(f"{name} must be at least 1, got {getattr(cls, name)!r}")

        if cls.BNB_INITIAL_INTERVALS < 4:
            # the interval certificate needs spacing below pi
            raise ValueError("BNB_INITIAL_INTERVALS must be at least 4")

        if cls.ENABLE_FILE_LOG:
            cls.LOGS_DIR.mkdir(exist_ok=True)

        return True
