""" Logging """

from typing import Dict, Tuple, Union
import os
import logging

import melonet

# ANSI escape sequences for colors
COLORS: Dict[str, str] = {
    'red': '\033[31m',
    'yellow': '\033[33m',
    'blue': '\033[34m',
    'bold_red': '\033[1;31m',
}

# Default color to reset formatting
RESET = '\033[0m'

# Severity prefix and color by log-level
SEVERITIES: Dict[int, Tuple[str, str]] = {
    logging.DEBUG: ('    DEBUG: ', COLORS['blue']),
    logging.INFO: ('    INFO: ', RESET),
    logging.WARNING: ('  * WARNING: ', COLORS['yellow']),
    logging.ERROR: (' ** ERROR: ', COLORS['red']),
    logging.CRITICAL: ('*** CRITICAL: ', COLORS['bold_red']),
}


def get_level(default: int = logging.INFO) -> int:
    """ Returns the log-level named by the `MELONET_LOG_LEVEL` environment variable,
    e.g. `DEBUG`, or `default` when it is un-set or unknown.
    """
    value = os.getenv(melonet.LOG_LEVEL_VARIABLE, '').strip().upper()
    level = logging.getLevelName(value) if value else default
    return level if isinstance(level, int) else default


class SeverityFormatter(logging.Formatter):
    """ A `class` that prefixes console log records with their colored severity.
    Records created by `logger.message()` carry no prefix.
    """

    def __init__(self, name: str):
        super().__init__(fmt='[%s] %%(message)s' % (name))

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        if getattr(record, 'plain', False):
            return text
        prefix, color = SEVERITIES.get(record.levelno, ('', RESET))
        head, _, body = text.partition('] ')
        return '%s%s] %s%s%s' % (color, head, prefix, body, RESET)


class logger():
    """ A `class` that represents a named `melonet` console logger, writing to
    standard error so that standard output only carries written file paths.
    """

    def __init__(
        self,
        name: str,
        level: Union[int, None] = None
    ):
        """ Creates an instance of the console logger.

        Parameters
        ----------
        name: `str`
            The name of the logger, e.g. `ingest`. The `logging` name is `melonet.<name>`.
        level: `Union[int, None]`
            The severity of the log messages, `MELONET_LOG_LEVEL` when `None`.
        """
        self.name = name.strip()
        self.logger = logging.getLogger(name='%s.%s' % (melonet.NAME, self.name))
        self.logger.setLevel(level=get_level() if level is None else level)

        if not self.logger.handlers:
            console = logging.StreamHandler()
            console.setFormatter(fmt=SeverityFormatter(name=name))
            self.logger.addHandler(hdlr=console)

    def get(self) -> logging.Logger:
        """ Returns the `logging.Logger` instance. """
        return self.logger

    def message(self, message: str):
        """ Logs message without a severity prefix. """
        self.logger.info(message, extra={'plain': True})

    def debug(self, message: str):
        self.logger.debug(message)

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str):
        self.logger.error(message)

    def critical(self, message: str):
        self.logger.critical(message)


# Create application-loggers
def get_ingest_logger() -> logger:
    """ Get the score and network ingest console logger. """
    return logger(name='ingest')


def get_analysis_logger() -> logger:
    """ Get the network-analysis console logger. """
    return logger(name='analysis')


def get_corpus_logger() -> logger:
    """ Get the corpus console logger. """
    return logger(name='corpus')


def get_cli_logger() -> logger:
    """ Get the command-line console logger. """
    return logger(name='  cli   ')
