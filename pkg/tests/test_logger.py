"""
Tests for the logging helpers.
"""

import logging

from src.utils.config import config
from src.utils.logger import SurgeonLogger, get_logger, set_log_level


def test_handlers_are_not_duplicated():
    first = get_logger('src.tests.dup')
    second = get_logger('src.tests.dup')
    assert first.logger is second.logger
    assert len(second.logger.handlers) == 1
    assert second.logger.propagate is False


def test_level_comes_from_config():
    logger = get_logger('src.tests.level')
    expected = getattr(logging, config.get('logging.level').upper())
    assert logger.logger.level == expected


def test_set_level():
    logger = SurgeonLogger('src.tests.set_level')
    logger.set_level('debug')
    assert logger.logger.level == logging.DEBUG
    assert all(h.level == logging.DEBUG for h in logger.logger.handlers)


def test_set_log_level_by_prefix():
    inside = get_logger('src.tests.prefix.inside')
    outside = get_logger('elsewhere.tests.prefix')
    outside.set_level('WARNING')
    set_log_level('ERROR', 'src.tests.prefix')
    assert inside.logger.level == logging.ERROR
    assert outside.logger.level == logging.WARNING


def test_file_handler(tmp_path):
    log_file = tmp_path / 'logs' / 'surgeon.log'
    logger = get_logger('src.tests.file', log_file=str(log_file))
    logger.set_level('INFO')
    logger.info('verified 26 rows')
    for handler in logger.logger.handlers:
        handler.flush()
    assert 'verified 26 rows' in log_file.read_text()
    for handler in list(logger.logger.handlers):
        handler.close()
        logger.logger.removeHandler(handler)
