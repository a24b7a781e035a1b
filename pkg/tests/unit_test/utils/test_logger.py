import logging

from zenscope.utils.logger import LOGGER, LogFilter, set_verbosity


def test_log_filter():
    flt = LogFilter()
    assert flt.filter(logging.LogRecord("zenscope", logging.INFO, "", 0, "msg", None, None))
    assert not flt.filter(logging.LogRecord("other", logging.INFO, "", 0, "msg", None, None))


def test_set_verbosity():
    set_verbosity(verbose=True)
    assert LOGGER.level == logging.DEBUG
    set_verbosity(quiet=True)
    assert LOGGER.level == logging.WARNING
    set_verbosity(verbose=True, quiet=True)
    assert LOGGER.level == logging.DEBUG
    set_verbosity()
    assert LOGGER.level == logging.INFO
