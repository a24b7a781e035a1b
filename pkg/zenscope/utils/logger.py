"""
Logger module.
"""
import logging

# LOGGER
LOGGER = logging.getLogger("zenscope")
LOGGER.setLevel(logging.INFO)


class LogFilter(logging.Filter):
    """
    Logs filter.
    """

    def filter(self, record: logging.LogRecord) -> bool:
        """
        Keep only zenscope records.
        """
        return record.name == "zenscope"


ch = logging.StreamHandler()
ch.setLevel(logging.DEBUG)
ch.addFilter(LogFilter())

formatter = logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")
ch.setFormatter(formatter)

LOGGER.addHandler(ch)


def set_verbosity(verbose: bool = False, quiet: bool = False) -> None:
    """
    Adjust the library log level.

    Parameters
    ----------
    verbose : bool
        Emit debug records.
    quiet : bool
        Emit only warnings and errors. Ignored if verbose is set.
    """
    if verbose:
        LOGGER.setLevel(logging.DEBUG)
    elif quiet:
        LOGGER.setLevel(logging.WARNING)
    else:
        LOGGER.setLevel(logging.INFO)
