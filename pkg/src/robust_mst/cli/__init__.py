"""
Command-line interface.
"""

from .config import Algorithm, RunConfig
from .main import build_parser, main

__all__ = ["Algorithm", "RunConfig", "build_parser", "main"]
