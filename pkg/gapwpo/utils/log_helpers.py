"""
Logging helpers.

Component-tagged progress lines on standard error, so report output on
standard output stays reproducible.
"""

import sys
from datetime import datetime


def timestamp() -> str:
    """Get current timestamp string for logging."""
    return datetime.now().strftime("%H:%M:%S")


def log(component: str, message: str, quiet: bool = False) -> None:
    """
    Print a tagged log line unless quiet.

    Args:
        component: Short component tag (e.g., "Harness")
        message: Text to print
        quiet: If True, print nothing
    """
    if quiet:
        return
    print(f"[{timestamp()}] [{component}] {message}", file=sys.stderr)
