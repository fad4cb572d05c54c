"""
Logger injection for command roles.

Each role receives a standard-library logger named after the place it is
requested from, `<module>.<Class>`, so log lines can be traced back to the
role that produced them.
"""

from __future__ import annotations

import logging

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class LoggerLocation:
    """Computes logger names from the classes that request them."""

    @staticmethod
    def for_class(cls: type) -> str:
        return f"{cls.__module__}.{cls.__qualname__}"


class AutoLoggerManager:
    """Creates and configures the loggers handed to roles."""

    @staticmethod
    def logger_for(cls: type) -> logging.Logger:
        return logging.getLogger(LoggerLocation.for_class(cls))

    @staticmethod
    def configure(verbose: bool = False) -> None:
        """Send logs to stderr; DEBUG when verbose, INFO otherwise."""
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.INFO,
            format=LOG_FORMAT,
            force=True,
        )
