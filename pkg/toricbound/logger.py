"""
The format and config of logging.
"""

from copy import deepcopy
from typing import Dict, List, Optional
import logging

LOG_FORMAT = '[%(relativeCreated)7.2fs] %(levelname)7s %(name)s: %(message)s'


class LogFormatter(logging.Formatter):
    """Customized log formatter."""

    def format(self, _record: logging.LogRecord) -> str:
        """The customized formatter function

        Args:
            record: The original formatted log data

        Returns:
            The customized formatted log data
        """
        # Display the elapsed time in seconds
        record = deepcopy(_record)
        record.relativeCreated = record.relativeCreated / 1000.0
        return super(LogFormatter, self).format(record)


TORIC_LOGGERS: Dict[str, logging.Logger] = {}
LOG_FILES: List[str] = []
DEFAULT_LEVEL = 'INFO'


def _make_file_handler(file_name: str) -> logging.Handler:
    handler = logging.FileHandler(file_name)
    handler.setFormatter(LogFormatter(LOG_FORMAT))
    return handler


def get_default_logger(name: str, level: str = 'DEFAULT') -> logging.Logger:
    """Attach to the default logger"""
    global TORIC_LOGGERS

    if name in TORIC_LOGGERS:
        logger = TORIC_LOGGERS[name]
        if level != 'DEFAULT':
            logger.setLevel(level)
        return logger

    logger = logging.getLogger('toricbound.{0}'.format(name))
    logger.propagate = False
    if level != 'DEFAULT':
        logger.setLevel(level)
    else:
        logger.setLevel(DEFAULT_LEVEL)

    # Stdout is reserved for command outputs
    handler = logging.StreamHandler()
    handler.setFormatter(LogFormatter(LOG_FORMAT))
    logger.addHandler(handler)

    for file_name in LOG_FILES:
        logger.addHandler(_make_file_handler(file_name))

    TORIC_LOGGERS[name] = logger
    return logger


def attach_log_file(file_name: str) -> None:
    """Duplicate all existing and future log messages to the given file.

    Args:
        file_name: Path of the log file.
    """
    if file_name in LOG_FILES:
        return
    LOG_FILES.append(file_name)
    for logger in TORIC_LOGGERS.values():
        logger.addHandler(_make_file_handler(file_name))


def set_global_level(level: Optional[str]) -> None:
    """Apply the same level to every logger created so far.

    Args:
        level: A logging level name, or None to keep the current levels.
    """
    global DEFAULT_LEVEL

    if level is None:
        return
    DEFAULT_LEVEL = level
    for logger in TORIC_LOGGERS.values():
        logger.setLevel(level)
