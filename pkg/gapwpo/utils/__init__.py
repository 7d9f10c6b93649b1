"""
Utility functions for gapwpo.

Helper functions for component-tagged logging.
"""

from gapwpo.utils.log_helpers import log, timestamp

__all__ = [
    "log",
    "timestamp",
]
