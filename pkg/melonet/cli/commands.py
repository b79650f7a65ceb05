""" melonet commands """

from typing import List
import os

from melonet import logging
from melonet.community import detect_communities
from melonet.corpus import analyze_corpus, write_corpus
from melonet.exceptions import DomainError
from melonet.export import (
    write_assignment_csv,
    write_betweenness,
    write_community_sizes,
    write_cumulative_distribution,
    write_degree_distribution,
    write_gexf,
    write_network,
    write_report_json
)
from melonet.ingest import format_mel, read_events, read_network, track_name
from melonet.metrics import full_report
from melonet.network import remove_rests, undirected_projection
from melonet.smallworld import small_world_sigma
from melonet.struct.config import RunConfig
from melonet.struct.network import MelodyNetwork

LOGGER = logging.get_cli_logger()


def _network(path: str, config: RunConfig) -> MelodyNetwork:
    """ Reads an input and applies the rest-removal and projection options. """
    warnings: List[str] = []
    net = read_network(path, warnings)
    if config.remove_rests:
        net = remove_rests(net)
    if config.undirected:
        net = undirected_projection(net, keep_self_loops=True)
    return net


# Define melonet sub-command function(s)
def build(config: RunConfig) -> List[str]:
    """ Builds the note-transition network of every input and exports it.

    Parameters
    ----------
    config: `melonet.struct.config.RunConfig`
        The run configuration.

    Examples
    --------
    ``` console
    melonet build solo.mel --out out/ --export json,gexf
    ```
    """
    paths: List[str] = []
    for input_ in config.inputs:
        net = _network(input_, config)
        LOGGER.info('Built {%s} with %s nodes and %s edges.' % (net.name, net.node_count, net.edge_count))
        paths.extend(write_network(net, config.out, config.exports))
    return paths


def metrics(config: RunConfig) -> List[str]:
    """ Measures every input and writes its report with the degree distributions and the
    node betweenness.

    Parameters
    ----------
    config: `melonet.struct.config.RunConfig`
        The run configuration.

    Examples
    --------
    ``` console
    melonet metrics solo.mel --seed 7 --ensemble 50
    ```
    """
    paths: List[str] = []
    for input_ in config.inputs:
        net = _network(input_, config)
        report = full_report(
            net,
            r2_threshold=config.r2_threshold,
            normalize_betweenness=config.normalize_betweenness,
            top=config.top
        )
        if config.small_world:
            try:
                report.small_world = small_world_sigma(
                    net,
                    ensemble_size=config.ensemble,
                    seed=config.seed,
                    workers=config.workers
                )
                if report.small_world.undefined:
                    report.flags.append('small_world_undefined')
            except DomainError as e:
                LOGGER.warning(str(e))
                report.flags.append('small_world_undefined')
        report.config = config.to_dict()

        stem = os.path.join(config.out, net.name or track_name(input_))
        paths.extend([
            write_report_json(report, stem + '.report.json'),
            write_degree_distribution(report.degree_distribution, stem + '.degree.csv'),
            write_cumulative_distribution(report.degree_distribution, stem + '.cdf.csv'),
            write_betweenness(report.betweenness, stem + '.betweenness.csv')
        ])
    return paths


def communities(config: RunConfig) -> List[str]:
    """ Detects the communities of every input and writes the assignment, the community
    sizes and a GEXF network with a `community` node attribute.

    Parameters
    ----------
    config: `melonet.struct.config.RunConfig`
        The run configuration.

    Examples
    --------
    ``` console
    melonet communities solo.mel --remove-rests
    ```
    """
    paths: List[str] = []
    for input_ in config.inputs:
        net = _network(input_, config)
        if not net.node_count:
            raise DomainError('Invalid network {%s}. The network is empty after rest removal.' % (net.name))

        assignment = detect_communities(net, resolution=config.resolution, seed=config.community_seed)
        LOGGER.info(
            'Detected %s communities in {%s}, modularity %.4f.' % (
                assignment.community_count,
                net.name,
                assignment.modularity_q
            )
        )

        stem = os.path.join(config.out, net.name or track_name(input_))
        paths.extend([
            write_assignment_csv(assignment, stem + '.communities.csv'),
            write_community_sizes(assignment, stem + '.community_sizes.csv'),
            write_gexf(net, stem + '.communities.gexf', assignment)
        ])
    return paths


def corpus(config: RunConfig) -> List[str]:
    """ Analyzes a corpus of inputs and writes the corpus table and the metric
    distributions.

    Parameters
    ----------
    config: `melonet.struct.config.RunConfig`
        The run configuration.

    Examples
    --------
    ``` console
    melonet corpus solos/ --bins 20 --metrics avg_degree,sigma
    ```
    """
    analysis = analyze_corpus(config.inputs, config)
    if analysis.failures:
        LOGGER.warning('%s of %s inputs failed.' % (len(analysis.failures), analysis.inputs))
    return write_corpus(analysis, config.out, config.metrics, config.bins)


def convert(config: RunConfig) -> List[str]:
    """ Converts every MusicXML (or `.mel`) score to canonical `.mel` text.

    Parameters
    ----------
    config: `melonet.struct.config.RunConfig`
        The run configuration.

    Examples
    --------
    ``` console
    melonet convert solo.musicxml --out fixtures/
    ```
    """
    paths: List[str] = []
    for input_ in config.inputs:
        events = read_events(input_)
        path = os.path.join(config.out, track_name(input_) + '.mel')
        if not os.path.isdir(config.out):
            os.makedirs(config.out)
        with open(path, 'w', encoding='utf-8') as file:
            file.write(format_mel(events, header='converted from %s' % (os.path.basename(input_))))
        paths.append(path)
    return paths
