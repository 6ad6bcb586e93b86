import logging
import sys
from types import FrameType
from typing import Union, cast

from loguru import logger

from src.core.config import settings


class InterceptHandler(logging.Handler):
    """Forwards stdlib records (scipy, numpy, pluggy) to loguru at their original call site."""

    @staticmethod
    def _level(record: logging.LogRecord) -> Union[str, int]:
        try:
            return logger.level(record.levelname).name
        except ValueError:
            return record.levelno

    def emit(self, record: logging.LogRecord) -> None:
        # skip frames inside the logging package itself
        frame, depth = logging.currentframe(), 2
        while frame.f_code.co_filename == logging.__file__:
            frame = cast(FrameType, frame.f_back)
            depth += 1
        logger.opt(depth=depth, exception=record.exc_info).log(self._level(record), record.getMessage())


def setup_logging(verbose: bool = False) -> None:
    # scipy/numpy warnings and anything else using stdlib logging end up here
    logging.root.handlers = [InterceptHandler()]
    logging.root.setLevel(logging.DEBUG if (settings.DEBUG or verbose) else logging.INFO)

    for name in logging.root.manager.loggerDict.keys():
        logging.getLogger(name).handlers = []
        logging.getLogger(name).propagate = True

    logger.remove()

    level = "DEBUG" if (settings.DEBUG or verbose) else "INFO"
    if settings.ENVIRONMENT == "local":
        log_format = (
            "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
            "{extra} | "  # command / action context
            "<level>{message}</level>"
        )
        logger.add(sys.stderr, level=level, format=log_format)
    else:
        # JSON lines for batch runs
        logger.add(sys.stderr, level=level, serialize=True)

    logger.debug("Logging initialized")
