""" Run configuration-layer """

from typing import Union
import os
from pytensils import config
from melonet.struct.config import RunConfig, DTYPES as RUN_DTYPES
from melonet.dal import path


PATH: Union[str, os.PathLike] = path.HOME
FILE_NAME: str = 'settings.json'
RUN_FILE_NAME: str = 'run_config.json'
DTYPES: dict = {'run': RUN_DTYPES}


def exists() -> bool:
    """ Returns `True` when the settings file exists. """
    if os.path.isfile(
        os.path.abspath(os.path.join(PATH, FILE_NAME))
    ):
        return True
    else:
        return False


def create() -> config.Handler:
    """ Creates the settings file with the default run configuration and returns the
    contents as a `pytensils.config.Handler` object.
    """

    # Create the configuration-layer directory
    if not os.path.isdir(PATH):
        os.makedirs(PATH)

    # Create the configuration file
    config_ = config.Handler(
        path=PATH,
        file_name=FILE_NAME,
        create=True
    )
    config_ = config_.from_dict({'run': RunConfig().to_dict()})

    return config_


def get() -> config.Handler:
    """ Returns the contents of the settings file as a `pytensils.config.Handler` object. """

    # Read the configuration file
    config_ = config.Handler(
        path=PATH,
        file_name=FILE_NAME
    )

    # Validate
    config_.validate(DTYPES)

    return config_


def get_or_create() -> config.Handler:
    """ Creates or reads the settings file and returns the contents as a
    `pytensils.config.Handler` object.
    """
    if exists():
        return get()
    else:
        return create()


def read_values(file: Union[str, os.PathLike]) -> dict:
    """ Returns the `run` section of a run configuration file `{"run": {...}}`, holding only
    the keys present in the file.

    Parameters
    ----------
    file: `Union[str, os.PathLike]`
        The path of the configuration file.
    """
    if not os.path.isfile(file):
        raise FileNotFoundError('Configuration {%s} does not exist.' % (file))

    config_ = config.Handler(
        path=os.path.dirname(os.path.abspath(file)),
        file_name=os.path.basename(str(file))
    )
    return dict(config_.to_dict().get('run', {}))


def read(file: Union[str, os.PathLike]) -> RunConfig:
    """ Reads a run configuration file `{"run": {...}}`. Keys that are absent take their
    default values.

    Parameters
    ----------
    file: `Union[str, os.PathLike]`
        The path of the configuration file.
    """
    return RunConfig.from_dict(read_values(file))


def save(
    run: RunConfig,
    directory: Union[str, os.PathLike, None] = None,
    file_name: Union[str, None] = None
) -> config.Handler:
    """ Saves a run configuration, to `~/.melonet/settings.json` by default.

    Parameters
    ----------
    run: `melonet.struct.config.RunConfig`
        An instance of a `melonet.struct.config.RunConfig` object.
    directory: `Union[str, os.PathLike, None]`
        The directory of the configuration file.
    file_name: `Union[str, None]`
        The name of the configuration file.
    """
    directory = directory or PATH

    # Create the configuration-layer directory
    if not os.path.isdir(directory):
        os.makedirs(directory)

    # Create the configuration file
    config_ = config.Handler(
        path=directory,
        file_name=file_name or FILE_NAME,
        create=True
    )
    config_ = config_.from_dict({'run': run.to_dict()})

    return config_


def echo(run: RunConfig, directory: Union[str, os.PathLike]) -> str:
    """ Writes the effective run configuration to `<directory>/run_config.json` and
    returns the path.

    Parameters
    ----------
    run: `melonet.struct.config.RunConfig`
        An instance of a `melonet.struct.config.RunConfig` object.
    directory: `Union[str, os.PathLike]`
        The output directory.
    """
    save(run, directory, RUN_FILE_NAME)
    return os.path.join(str(directory), RUN_FILE_NAME)


def get_run_config() -> RunConfig:
    """ Returns the stored run configuration as a `melonet.struct.config.RunConfig` object. """
    return RunConfig.from_config(get_or_create())
