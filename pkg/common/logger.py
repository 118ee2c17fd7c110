"""
Console logging for the command line tools.

Library modules log through ``logging.getLogger("hecke.<module>")``;
once the CLI has created the ``Logger`` singleton those records share
its handler and format.
"""
import logging
import sys

from common.env import is_prod
from common.info import Info

LOG_FORMAT = "[%(name)s:%(levelname)s:%(asctime)s] %(message)s"


class Logger(object):
    """
    Logger singleton bound to the application name set in ``Info``.
    """

    logger = None

    def __init__(self, verbose: bool = False):
        info = Info()

        if Logger.logger is None:
            level = logging.INFO
            if not is_prod() or verbose:
                level = logging.DEBUG
            # Reports go to stdout, so logs must stay on stderr.
            logging.basicConfig(
                level=level,
                format=LOG_FORMAT,
                stream=sys.stderr,
            )
            Logger.logger = logging.getLogger(info.name())

        self.logger = Logger.logger

    def child(self, suffix: str) -> logging.Logger:
        return self.logger.getChild(suffix)

    def warning(self, msg, *args, **kwargs):
        self.logger.warning(msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        self.logger.error(msg, *args, **kwargs)

    def info(self, msg, *args, **kwargs):
        self.logger.info(msg, *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        self.logger.debug(msg, *args, **kwargs)

    def exception(self, msg, *args, **kwargs):
        self.logger.exception(msg, *args, **kwargs)
