"""
Logging helpers

Thin wrapper around the standard logging module. ``log_error`` keeps the
``(message, title)`` call shape used across the code base.
"""

import logging

LOGGER_NAME = "tame_langlands"


def get_logger(name: str | None = None) -> logging.Logger:
    if not name:
        return logging.getLogger(LOGGER_NAME)
    if name.startswith(LOGGER_NAME):
        return logging.getLogger(name)
    return logging.getLogger(f"{LOGGER_NAME}.{name}")


def log_error(message: str, title: str = "tame_langlands") -> None:
    """
    Record a recoverable error

    Args:
        message: Human readable description
        title: Short subsystem label, e.g. "Table Cache"
    """
    get_logger().error("[%s] %s", title, message)


def configure_logging(verbose: bool = False) -> None:
    """Attach a stderr handler once; used by the command line entry point"""
    root = logging.getLogger(LOGGER_NAME)
    if root.handlers:
        root.setLevel(logging.DEBUG if verbose else logging.WARNING)
        return
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
