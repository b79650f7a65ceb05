""" Command-line utility """

from typing import List, Union
import sys
import argparse

import melonet
from melonet import env, logging
from melonet.cli import commands
from melonet.dal import settings
from melonet.exceptions import CorpusError, DomainError, InvariantError, ParseError
from melonet.struct.config import EXPORTS, RunConfig

LOGGER = logging.get_cli_logger()

# Options that map one-to-one onto `melonet.struct.config.RunConfig` fields
OPTIONS: List[str] = [
    'out',
    'ensemble',
    'r2_threshold',
    'resolution',
    'community_seed',
    'bins',
    'top',
    'workers',
    'remove_rests',
    'undirected',
    'normalize_betweenness',
    'small_world',
    'exports',
    'metrics'
]


def _list(value: str) -> List[str]:
    """ Splits a comma-separated option value. """
    return [item.strip() for item in value.split(',') if item.strip()]


def _exports(value: str) -> List[str]:
    exports = _list(value)
    unknown = [export for export in exports if export not in EXPORTS]
    if unknown:
        raise argparse.ArgumentTypeError(
            'invalid export format(s) [%s], choose from [%s]' % (', '.join(unknown), ', '.join(EXPORTS))
        )
    return exports


def _add_common_arguments(parser: argparse.ArgumentParser):
    """ Adds the input, output, configuration, seed and network options. """
    parser.add_argument('inputs', help='The input files (.mel, .musicxml, .edges, .json).', nargs='+')
    parser.add_argument('--out', help='The output directory.', type=str, default=None)
    parser.add_argument('--config', help='A run configuration file.', type=str, default=None)
    parser.add_argument(
        '--seed',
        help='The seed of every randomized stage, overrides `%s`.' % (melonet.SEED_VARIABLE),
        type=int,
        default=None
    )
    parser.add_argument(
        '--remove-rests',
        help='Removes rest nodes before the analysis.',
        dest='remove_rests',
        action='store_true',
        default=None
    )
    parser.add_argument(
        '--undirected',
        help='Analyzes the undirected projection.',
        action='store_true',
        default=None
    )


def _add_small_world_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--ensemble', help='The number of random graphs.', type=int, default=None)
    parser.add_argument(
        '--no-smallworld',
        help='Skips the small-world coefficient.',
        dest='small_world',
        action='store_false',
        default=None
    )
    parser.add_argument('--workers', help='The number of worker processes.', type=int, default=None)


def _add_community_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--resolution', help='The modularity resolution.', type=float, default=None)
    parser.add_argument(
        '--community-seed',
        help='The community visit-order seed, 0 for ascending label order.',
        dest='community_seed',
        type=int,
        default=None
    )


def parser() -> argparse.ArgumentParser:
    """
    usage: melonet [-h] {build,metrics,communities,corpus,convert} ...

    CLI application for analyzing melodies as note-transition networks.

    Execute `melonet {command} --help` for more help.
    """

    # Setup CLI argument option(s)
    _ARG_PARSER = argparse.ArgumentParser(
        prog='melonet',
        description='CLI application for analyzing melodies as note-transition networks.',
        epilog="Execute `melonet {command} --help` for more help."
    )

    # Setup command argument option(s)
    _ARG_SUBPARSER = _ARG_PARSER.add_subparsers(
        title='commands',
        prog='melonet',
        description='The `melonet` command options.',
        dest='subcommand'
    )

    # Setup `build` command CLI argument option(s)
    _BUILD_ARG_PARSER = _ARG_SUBPARSER.add_parser(
        name='build',
        help='Builds and exports note-transition networks.',
        epilog="Execute `melonet build --help` for help."
    )
    _add_common_arguments(_BUILD_ARG_PARSER)
    _BUILD_ARG_PARSER.add_argument(
        '--export',
        help='The export formats, comma-separated from [%s].' % (', '.join(EXPORTS)),
        dest='exports',
        type=_exports,
        default=None
    )
    _BUILD_ARG_PARSER.set_defaults(func=commands.build)

    # Setup `metrics` command CLI argument option(s)
    _METRICS_ARG_PARSER = _ARG_SUBPARSER.add_parser(
        name='metrics',
        help='Measures note-transition networks.',
        epilog="Execute `melonet metrics --help` for help."
    )
    _add_common_arguments(_METRICS_ARG_PARSER)
    _add_small_world_arguments(_METRICS_ARG_PARSER)
    _METRICS_ARG_PARSER.add_argument(
        '--r2-threshold',
        help='The min. log-log r-squared of a scale-free degree distribution.',
        dest='r2_threshold',
        type=float,
        default=None
    )
    _METRICS_ARG_PARSER.add_argument(
        '--normalize-betweenness',
        help='Divides betweenness by (n - 1)(n - 2).',
        dest='normalize_betweenness',
        action='store_true',
        default=None
    )
    _METRICS_ARG_PARSER.add_argument('--top', help='The length of the ranked node lists.', type=int, default=None)
    _METRICS_ARG_PARSER.set_defaults(func=commands.metrics)

    # Setup `communities` command CLI argument option(s)
    _COMMUNITIES_ARG_PARSER = _ARG_SUBPARSER.add_parser(
        name='communities',
        help='Detects communities of note-transition networks.',
        epilog="Execute `melonet communities --help` for help."
    )
    _add_common_arguments(_COMMUNITIES_ARG_PARSER)
    _add_community_arguments(_COMMUNITIES_ARG_PARSER)
    _COMMUNITIES_ARG_PARSER.set_defaults(func=commands.communities)

    # Setup `corpus` command CLI argument option(s)
    _CORPUS_ARG_PARSER = _ARG_SUBPARSER.add_parser(
        name='corpus',
        help='Analyzes a corpus and writes metric distributions.',
        epilog="Execute `melonet corpus --help` for help."
    )
    _add_common_arguments(_CORPUS_ARG_PARSER)
    _add_small_world_arguments(_CORPUS_ARG_PARSER)
    _add_community_arguments(_CORPUS_ARG_PARSER)
    _CORPUS_ARG_PARSER.add_argument('--bins', help='The number of histogram bins.', type=int, default=None)
    _CORPUS_ARG_PARSER.add_argument(
        '--metrics',
        help='The metrics to summarize, comma-separated.',
        type=_list,
        default=None
    )
    _CORPUS_ARG_PARSER.set_defaults(func=commands.corpus)

    # Setup `convert` command CLI argument option(s)
    _CONVERT_ARG_PARSER = _ARG_SUBPARSER.add_parser(
        name='convert',
        help='Converts MusicXML scores to `.mel` text.',
        epilog="Execute `melonet convert --help` for help."
    )
    _CONVERT_ARG_PARSER.add_argument('inputs', help='The input scores.', nargs='+')
    _CONVERT_ARG_PARSER.add_argument('--out', help='The output directory.', type=str, default=None)
    _CONVERT_ARG_PARSER.set_defaults(func=commands.convert)

    return _ARG_PARSER


def run_config(args: argparse.Namespace) -> RunConfig:
    """ Returns the effective run configuration. Command-line options override the
    `--config` file, which overrides the stored settings in `~/.melonet/settings.json`. The
    seed resolves `--seed`, then `MELONET_SEED`, then the configuration.

    Parameters
    ----------
    args: `argparse.Namespace`
        The parsed command-line arguments.
    """
    values = settings.get_run_config().to_dict()
    config_file = getattr(args, 'config', None)
    if config_file:
        values.update(settings.read_values(config_file))
    base = RunConfig.from_dict(values)

    values = base.to_dict()
    values['subcommand'] = args.subcommand
    values['inputs'] = list(args.inputs)
    for option in OPTIONS:
        value = getattr(args, option, None)
        if value is not None:
            values[option] = value
    values['seed'] = env.get_seed(getattr(args, 'seed', None), default=base.seed)

    return RunConfig.from_dict(values)


def main(argv: Union[List[str], None] = None) -> int:
    """ Runs a `melonet` command, prints every written path to standard output and returns
    the exit code.

    Parameters
    ----------
    argv: `Union[List[str], None]`
        The command-line arguments, `sys.argv[1:]` when `None`.
    """
    _ARG_PARSER = parser()

    # Parse arguments
    try:
        _ARGS = _ARG_PARSER.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else melonet.errors.INPUT_ERROR
    if not getattr(_ARGS, 'func', None):
        _ARG_PARSER.print_help(sys.stderr)
        return melonet.errors.INPUT_ERROR

    # Execute sub-command
    try:
        config = run_config(_ARGS)
        paths = _ARGS.func(config)
        paths.append(settings.echo(config, config.out))

    except (ParseError, DomainError, OSError) as e:
        LOGGER.error(str(e))
        return melonet.errors.INPUT_ERROR
    except CorpusError as e:
        LOGGER.error(str(e))
        return melonet.errors.CORPUS_EMPTY
    except InvariantError as e:
        LOGGER.critical(str(e))
        return melonet.errors.INTERNAL_ERROR
    except (TypeError, KeyError, ValueError) as e:
        LOGGER.error('Invalid configuration. %s' % (e))
        return melonet.errors.INPUT_ERROR

    for path in paths:
        print(path)
    return melonet.errors.OK


if __name__ == '__main__':
    sys.exit(main())
