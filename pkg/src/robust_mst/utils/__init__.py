"""
Utility modules for the robust spanning tree solver.
"""

from .config import settings, get_tolerance
from .logging import logger, setup_logging, emit_trace

__all__ = [
    "settings",
    "get_tolerance",
    "logger",
    "setup_logging",
    "emit_trace",
]
