import logging
import pytest

from melonet import logging as melonet_logging


@pytest.mark.parametrize(
    'value, level',
    [
        (None, logging.INFO),
        ('debug', logging.DEBUG),
        (' WARNING ', logging.WARNING),
        ('loud', logging.INFO)
    ]
)
def test_get_level(monkeypatch, value, level):
    monkeypatch.delenv('MELONET_LOG_LEVEL', raising=False)
    if value is not None:
        monkeypatch.setenv('MELONET_LOG_LEVEL', value)
    assert melonet_logging.get_level() == level


def test_formatter():
    formatter = melonet_logging.SeverityFormatter(name='ingest')
    record = logging.LogRecord('melonet.ingest', logging.WARNING, __file__, 1, 'grace note skipped', None, None)
    assert formatter.format(record) == '\033[33m[ingest]   * WARNING: grace note skipped\033[0m'

    record.plain = True
    assert formatter.format(record) == '[ingest] grace note skipped'


def test_logger(caplog):
    log = melonet_logging.logger(name='test', level=logging.DEBUG)
    assert log.get().name == 'melonet.test'
    with caplog.at_level(logging.DEBUG, logger='melonet.test'):
        log.debug('ensemble member 3')
        log.message('written')
    assert [record.getMessage() for record in caplog.records] == ['ensemble member 3', 'written']
    assert caplog.records[1].plain
