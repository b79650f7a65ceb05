import json
import os
import pytest

import melonet
from melonet import env
from melonet.dal import settings
from melonet.exceptions import DomainError
from melonet.struct.config import RunConfig, SUMMARY_METRICS


def test_defaults():
    config = RunConfig()
    assert config.subcommand == 'metrics'
    assert config.seed == melonet.SEED == 42
    assert config.ensemble == 100
    assert config.r2_threshold == 0.80
    assert config.resolution == 1.0
    assert config.community_seed == 0
    assert config.bins == 20
    assert config.exports == ['json']
    assert config.metrics == SUMMARY_METRICS
    assert config.small_world


@pytest.mark.parametrize(
    'values',
    [
        {'subcommand': 'plot'},
        {'exports': ['json', 'png']},
        {'ensemble': 0},
        {'bins': 0},
        {'workers': 0},
        {'r2_threshold': 1.5},
        {'resolution': 0.0}
    ]
)
def test_invalid(values):
    with pytest.raises(ValueError):
        RunConfig(**values)


def test_from_dict():
    config = RunConfig.from_dict({'subcommand': 'corpus', 'seed': '7', 'resolution': '0.5', 'ensemble': 12.0})
    assert config.subcommand == 'corpus'
    assert config.seed == 7
    assert config.resolution == 0.5
    assert config.ensemble == 12
    assert config.bins == melonet.BINS
    assert RunConfig.from_dict(config.to_dict()) == config


def test_from_dict_invalid():
    with pytest.raises(TypeError):
        RunConfig.from_dict(['seed'])
    with pytest.raises(KeyError):
        RunConfig.from_dict({'colour': 'red'})


def test_repr():
    assert json.loads(repr(RunConfig(seed=3)))['seed'] == 3


def test_settings_round_trip():
    assert not settings.exists()
    config = RunConfig(subcommand='corpus', seed=5, metrics=['sigma'])
    settings.save(config)
    assert settings.exists()
    assert settings.get_run_config() == config


def test_settings_created_with_defaults():
    assert settings.get_run_config() == RunConfig()
    assert os.path.isfile(os.path.join(settings.PATH, settings.FILE_NAME))


def test_read_partial_file(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'run': {'seed': 11, 'ensemble': 10}}), encoding='utf-8')
    config = settings.read(str(path))
    assert config.seed == 11
    assert config.ensemble == 10
    assert config.bins == melonet.BINS


def test_read_values(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'run': {'bins': 5}}), encoding='utf-8')
    assert settings.read_values(str(path)) == {'bins': 5}


def test_read_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        settings.read(str(tmp_path / 'missing.json'))


def test_echo(tmp_path):
    config = RunConfig(subcommand='build', exports=['json', 'dot'])
    path = settings.echo(config, str(tmp_path / 'out'))
    assert os.path.basename(path) == 'run_config.json'
    assert settings.read(path) == config
    assert settings.read(settings.echo(config, str(tmp_path / 'out'))) == config


def test_seed_precedence(monkeypatch):
    assert env.get_seed() == 42
    assert env.get_seed(default=8) == 8
    monkeypatch.setenv('MELONET_SEED', '17')
    assert env.get_seed(default=8) == 17
    assert env.get_seed(3) == 3
    monkeypatch.setenv('MELONET_SEED', 'seventeen')
    with pytest.raises(DomainError):
        env.get_seed()
