import logging
import os
from logging.handlers import RotatingFileHandler

from evpkit.core.config import LoggingSettings

LOGGING_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(settings: LoggingSettings) -> None:
    """Configure the root logger once per process (stderr plus an optional rotating file)."""
    level = logging.getLevelName(settings.LOG_LEVEL.upper())
    if not isinstance(level, int):
        level = logging.INFO

    logging.basicConfig(level=level, format=LOGGING_FORMAT)

    if not settings.LOG_FILE:
        return

    log_dir = os.path.dirname(os.path.abspath(settings.LOG_FILE))
    if not os.path.exists(log_dir):
        os.makedirs(log_dir)

    root = logging.getLogger("")
    # one handler per file
    for handler in root.handlers:
        if isinstance(handler, RotatingFileHandler) and handler.baseFilename == os.path.abspath(settings.LOG_FILE):
            return

    file_handler = RotatingFileHandler(settings.LOG_FILE, maxBytes=10485760, backupCount=5)
    file_handler.setLevel(level)
    file_handler.setFormatter(logging.Formatter(LOGGING_FORMAT))
    root.addHandler(file_handler)
