"""Size bounds for the exhaustive routines.

Every bound is enforced with :class:`~clutterlab.errors.BoundExceeded`; nothing is
silently truncated.  ``CLUTTERLAB_MAX_N`` overrides the enumeration bound.
"""
import os

CANONICAL_MAX_N = 9
PACKING_MAX_N = 14
HILBERT_BOX_MAX_POINTS = 2_000_000
PARALLELEPIPED_MAX_POINTS = 200_000
SYMBOLIC_POWER_MAX = 3
T_UNIMODULAR_MAX_MINORS = 2_000_000
BALANCED_MAX_LINES = 40
TDI_MAX_BOX = 2_000_000
NORMALITY_MINORS_MAX_N = 10


def exhaustive_max_n() -> int:
    """Largest vertex count accepted by exhaustive enumeration."""
    value = os.environ.get("CLUTTERLAB_MAX_N")
    if value:
        return int(value)
    return 8
