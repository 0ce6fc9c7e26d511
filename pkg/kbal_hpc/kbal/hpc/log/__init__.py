"""Logging for kbal: campaign progress, failed replications and errors reported by the command line."""

import logging

from concurrent_log_handler import ConcurrentRotatingFileHandler


def setup_logger(
    name,
    log_file,
    level=logging.DEBUG,
    formatter=logging.Formatter("%(asctime)s - %(levelname)s - %(message)s", "%d-%m-%Y %H:%M:%S"),
):
    # worker threads of a campaign share the handler
    handler = ConcurrentRotatingFileHandler(log_file)
    handler.setFormatter(formatter)

    logger = logging.getLogger(name)
    logger.setLevel(level)
    if not any(getattr(h, "baseFilename", None) == handler.baseFilename for h in logger.handlers):
        logger.addHandler(handler)
    else:
        handler.close()

    return logger
