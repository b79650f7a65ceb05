""" Network, report and table exporters """

from typing import List, Mapping, Tuple, Union
import json
import os
import pandas as pd
import networkx as nx

from melonet.community import community_size_distribution
from melonet.struct.community import CommunityAssignment
from melonet.struct.metrics import DegreeDistribution, MetricsReport
from melonet.struct.network import MelodyNetwork


def _path(path: Union[str, os.PathLike]) -> str:
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.exists(directory):
        os.makedirs(directory)
    return str(path)


def write_table(
    rows: List[list],
    columns: List[str],
    path: Union[str, os.PathLike]
) -> str:
    """ Writes rows as comma-separated UTF-8 text with a header and `\\n` line endings.
    Floats are written with their shortest exact representation.

    Parameters
    ----------
    rows: `List[list]`
        The table rows, in column order.
    columns: `List[str]`
        The column names.
    path: `Union[str, os.PathLike]`
        The output file path.
    """
    pd.DataFrame(rows, columns=columns, dtype=object).to_csv(
        _path(path),
        index=False,
        encoding='utf-8',
        lineterminator='\n'
    )
    return str(path)


def to_json(net: MelodyNetwork) -> str:
    """ Returns the network document as indented json with sorted keys.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    """
    return json.dumps(net.to_dict(), indent=2, sort_keys=True)


def write_json(net: MelodyNetwork, path: Union[str, os.PathLike]) -> str:
    """ Writes the network document, readable by `melonet.ingest.load_network`.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    path: `Union[str, os.PathLike]`
        The output file path.
    """
    with open(_path(path), 'w', encoding='utf-8') as file:
        file.write(to_json(net) + '\n')
    return str(path)


def write_gexf(
    net: MelodyNetwork,
    path: Union[str, os.PathLike],
    assignment: Union[CommunityAssignment, None] = None
) -> str:
    """ Writes the network as GEXF 1.2 with `label` node attributes, `weight` edge
    attributes and, when an assignment is given, a `community` node attribute.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    path: `Union[str, os.PathLike]`
        The output file path.
    assignment: `Union[melonet.struct.community.CommunityAssignment, None]`
        The community of every node.
    """
    graph = net.to_graph()
    if assignment is not None:
        nx.set_node_attributes(
            graph,
            {node: assignment.mapping[node] for node in net.nodes if node in assignment.mapping},
            name='community'
        )
    nx.write_gexf(graph, _path(path), version='1.2draft')
    return str(path)


def _quote(text: str) -> str:
    return '"%s"' % (str(text).replace('\\', '\\\\').replace('"', '\\"'))


def to_dot(
    net: MelodyNetwork,
    assignment: Union[CommunityAssignment, None] = None
) -> str:
    """ Returns the network in DOT notation with quoted ids, `weight` and `penwidth` edge
    attributes and an optional `community` node attribute.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    assignment: `Union[melonet.struct.community.CommunityAssignment, None]`
        The community of every node.
    """
    kind, arrow = ('digraph', '->') if net.directed else ('graph', '--')
    lines = ['%s %s {' % (kind, _quote(net.name or 'melody'))]
    for node in net.nodes:
        attributes = 'label=%s' % (_quote(node))
        if assignment is not None and node in assignment.mapping:
            attributes += ', community=%s' % (assignment.mapping[node])
        lines.append('  %s [%s];' % (_quote(node), attributes))
    for (source, target), weight in net.edges.items():
        lines.append(
            '  %s %s %s [weight=%s, penwidth=%s];' % (_quote(source), arrow, _quote(target), weight, weight)
        )
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(
    net: MelodyNetwork,
    path: Union[str, os.PathLike],
    assignment: Union[CommunityAssignment, None] = None
) -> str:
    """ Writes the network in DOT notation. """
    with open(_path(path), 'w', encoding='utf-8') as file:
        file.write(to_dot(net, assignment))
    return str(path)


def write_network(
    net: MelodyNetwork,
    out: Union[str, os.PathLike],
    exports: List[str],
    assignment: Union[CommunityAssignment, None] = None
) -> List[str]:
    """ Writes the network to `<out>/<name>.<ext>` in every requested format and returns the
    written paths.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    out: `Union[str, os.PathLike]`
        The output directory.
    exports: `List[str]`
        The formats, any of ['json', 'gexf', 'dot'].
    assignment: `Union[melonet.struct.community.CommunityAssignment, None]`
        The community of every node, written to GEXF and DOT.
    """
    stem = os.path.join(out, net.name or 'network')
    paths = []
    for format_ in exports:
        if format_ == 'json':
            paths.append(write_json(net, stem + '.json'))
        elif format_ == 'gexf':
            paths.append(write_gexf(net, stem + '.gexf', assignment))
        elif format_ == 'dot':
            paths.append(write_dot(net, stem + '.dot', assignment))
        else:
            raise ValueError("Invalid export {%s}. Export must be one of ['json', 'gexf', 'dot']." % (format_))
    return paths


def write_report_json(report: MetricsReport, path: Union[str, os.PathLike]) -> str:
    """ Writes a metrics report as indented json with sorted keys. """
    with open(_path(path), 'w', encoding='utf-8') as file:
        file.write(report.to_json() + '\n')
    return str(path)


def write_degree_distribution(dist: DegreeDistribution, path: Union[str, os.PathLike]) -> str:
    """ Writes a degree distribution as `k,p` rows. """
    return write_table([[k, p] for k, p in dist.probabilities.items()], ['k', 'p'], path)


def write_cumulative_distribution(dist: DegreeDistribution, path: Union[str, os.PathLike]) -> str:
    """ Writes a cumulative degree distribution as `k,cumulative` rows. """
    return write_table([[k, p] for k, p in dist.cumulative()], ['k', 'cumulative'], path)


def write_betweenness(betweenness: Mapping[str, float], path: Union[str, os.PathLike]) -> str:
    """ Writes node betweenness as `node,betweenness` rows, sorted by label. """
    return write_table(
        [[node, value] for node, value in sorted(betweenness.items())],
        ['node', 'betweenness'],
        path
    )


def write_assignment_csv(assignment: CommunityAssignment, path: Union[str, os.PathLike]) -> str:
    """ Writes a community assignment as `node,community` rows, sorted by label. """
    return write_table(
        [[node, community] for node, community in assignment.mapping.items()],
        ['node', 'community'],
        path
    )


def write_community_sizes(assignment: CommunityAssignment, path: Union[str, os.PathLike]) -> str:
    """ Writes the community size distribution as `community,size` rows, largest first. """
    sizes: List[Tuple[int, int]] = community_size_distribution(assignment)
    return write_table([list(size) for size in sizes], ['community', 'size'], path)
