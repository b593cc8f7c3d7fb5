"""Utils"""
import sys
import logging
from datetime import datetime
from typing import Union, Optional
from pathlib import Path

LOG_FORMAT = "%(asctime)-15s %(levelname)-5s %(name)-15s - %(message)s"


def setup_logger(log_level: Union[str, int], log_path: Optional[Union[str, Path]] = None, fmt: str = LOG_FORMAT):
    """Setup for the root logger.

    Records go to stderr, stdout is left to the data output.

    Args:
        log_level:
        log_path: full path of an additional log file
        fmt: message format
    """
    logger = logging.getLogger()
    formatter = logging.Formatter(fmt=fmt)
    logger.setLevel(log_level)
    logger.handlers = []
    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setFormatter(formatter)
    logger.addHandler(stderr_handler)

    if log_path is not None:
        log_path = Path(log_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(str(log_path))
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
        logger.info(f"Log at {log_path}")


def log_name(name: str) -> str:
    """Generate log name"""
    timestamp = datetime.now().strftime("%Y-%m-%dT%H:%M:%S")
    return "{}_{}.log".format(name, timestamp)
