"""
Logging configuration for the robust spanning tree solver.
"""

import json
import logging
import logging.config
from typing import Any, Optional

from .config import settings


TRACE_LOGGER_NAME = "robust_mst.trace"


def setup_logging(level: Optional[str] = None, trace: Optional[bool] = None) -> logging.Logger:
    """
    Set up logging configuration.

    Args:
        level: Log level override (defaults to settings.log_level)
        trace: Enable the structured trace sink (defaults to settings.trace_enabled)

    Returns:
        Configured package logger
    """
    log_level = (level or settings.log_level).upper()
    trace_on = settings.trace_enabled if trace is None else trace

    handlers = ["console"]
    logging_config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": settings.log_format
            },
            "detailed": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(module)s - %(funcName)s - %(message)s"
            },
            "trace": {
                "format": "%(message)s"
            }
        },
        "handlers": {
            # stdout carries reports and CSV tables
            "console": {
                "class": "logging.StreamHandler",
                "level": log_level,
                "formatter": "standard",
                "stream": "ext://sys.stderr"
            },
            "trace": {
                "class": "logging.StreamHandler",
                "level": "DEBUG",
                "formatter": "trace",
                "stream": "ext://sys.stderr"
            }
        },
        "loggers": {
            "robust_mst": {
                "level": log_level,
                "handlers": handlers,
                "propagate": False
            },
            TRACE_LOGGER_NAME: {
                "level": "DEBUG" if trace_on else "WARNING",
                "handlers": ["trace"],
                "propagate": False
            }
        },
        "root": {
            "level": "WARNING",
            "handlers": ["console"]
        }
    }

    if settings.log_file:
        logging_config["handlers"]["file"] = {
            "class": "logging.FileHandler",
            "level": log_level,
            "formatter": "detailed",
            "filename": settings.log_file,
            "mode": "a"
        }
        handlers.append("file")

    logging.config.dictConfig(logging_config)
    return logging.getLogger("robust_mst")


def emit_trace(event: str, **fields: Any) -> None:
    """Write one JSON record to the trace sink."""
    trace_logger = logging.getLogger(TRACE_LOGGER_NAME)
    if not trace_logger.isEnabledFor(logging.DEBUG):
        return
    record = {"event": event, **fields}
    trace_logger.debug(json.dumps(record, sort_keys=True, default=float))


# Global logger instance
logger = setup_logging()
