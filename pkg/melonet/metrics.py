""" Network metrics

Degree structure, density, distances, clustering and betweenness of a note-transition
network. Distances and betweenness are unweighted; clustering is measured on the simple
undirected projection.
"""

from typing import Dict, List, Literal, Tuple, Union
import math
import numpy as np
import networkx as nx

import melonet
from melonet import logging
from melonet.exceptions import DomainError
from melonet.network import undirected_projection
from melonet.struct.metrics import (
    Clustering,
    DegreeDistribution,
    DegreeRecord,
    Distances,
    MetricsReport,
    PowerLawFit
)
from melonet.struct.network import MelodyNetwork

LOGGER = logging.get_analysis_logger()


def degree_table(net: MelodyNetwork) -> List[DegreeRecord]:
    """ Returns one `melonet.struct.metrics.DegreeRecord` per node, sorted by label. Degrees
    count distinct edges, not weights. In an undirected network the in-, out- and total
    degree all equal the undirected degree, a self-loop counting twice.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    """
    graph = net.to_graph()
    if net.directed:
        return [
            DegreeRecord(
                node=node,
                in_degree=graph.in_degree(node),
                out_degree=graph.out_degree(node),
                total_degree=graph.in_degree(node) + graph.out_degree(node)
            ) for node in net.nodes
        ]
    return [
        DegreeRecord(node, graph.degree(node), graph.degree(node), graph.degree(node))
        for node in net.nodes
    ]


def degree_distribution(
    net: MelodyNetwork,
    kind: Literal['total', 'in', 'out'] = 'total'
) -> DegreeDistribution:
    """ Returns the degree distribution P(k), the fraction of nodes with degree k.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    kind: `Literal['total', 'in', 'out']`
        The degree the distribution is computed over.
    """
    if not net.node_count:
        raise DomainError('Invalid network {%s}. The network is empty.' % (net.name))
    attribute = {'total': 'total_degree', 'in': 'in_degree', 'out': 'out_degree'}[kind]
    return DegreeDistribution.from_degrees(
        [getattr(record, attribute) for record in degree_table(net)]
    )


def cumulative_distribution(dist: DegreeDistribution) -> List[Tuple[int, float]]:
    """ Returns the cumulative degree distribution as (k, P(K <= k)) pairs. """
    return dist.cumulative()


def fit_power_law(
    dist: DegreeDistribution,
    threshold: float = melonet.R2_THRESHOLD
) -> PowerLawFit:
    """ Fits P(k) ~ k^(-lambda) by least squares on (log k, log P(k)) over the degrees k >= 1
    with P(k) > 0. The distribution is flagged scale-free when r-squared reaches the threshold.

    Parameters
    ----------
    dist: `melonet.struct.metrics.DegreeDistribution`
        The degree distribution.
    threshold: `float`
        The min. r-squared of a scale-free distribution.
    """
    points = [(k, p) for k, p in dist.probabilities.items() if k >= 1 and p > 0]
    if len(points) < 3:
        return PowerLawFit(
            lambda_=None,
            r_squared=None,
            scale_free=False,
            threshold=threshold,
            support=len(points),
            insufficient_support=True
        )

    x = np.log(np.array([k for k, _ in points], dtype=float))
    y = np.log(np.array([p for _, p in points], dtype=float))
    slope, intercept = np.polyfit(x, y, 1)

    residuals = y - (slope * x + intercept)
    ss_res = float(np.sum(residuals ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))

    # A flat distribution is fitted exactly by a horizontal line
    r_squared = 1.0 if np.ptp(y) == 0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))

    return PowerLawFit(
        lambda_=float(-slope),
        r_squared=r_squared,
        scale_free=r_squared >= threshold,
        threshold=threshold,
        support=len(points)
    )


def density(net: MelodyNetwork) -> float:
    """ Returns the edge count over the potential connections of a directed network with
    self-loops, `#nodes^2`.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    """
    if not net.node_count:
        raise DomainError('Invalid network {%s}. The network is empty.' % (net.name))
    return net.edge_count / net.node_count ** 2


def _graph(net: MelodyNetwork, mode: Literal['directed', 'undirected']) -> Union[nx.Graph, nx.DiGraph]:
    if mode not in ('directed', 'undirected'):
        raise ValueError("Invalid mode {%s}. Mode must be either ['directed', 'undirected']." % (mode))
    if mode == 'undirected':
        return undirected_projection(net).to_graph()
    return net.to_graph()


def distances(
    net: MelodyNetwork,
    mode: Literal['directed', 'undirected'] = 'directed'
) -> Distances:
    """ Returns the average unweighted shortest-path length over ordered reachable pairs
    (u != v), the diameter (longest finite shortest path) and the fraction of ordered pairs
    that are reachable.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    mode: `Literal['directed', 'undirected']`
        Follows edge directions, or the undirected projection.
    """
    if net.node_count < 2:
        raise DomainError('Invalid network {%s}. Distances require >= 2 nodes.' % (net.name))

    graph = _graph(net, mode)
    total = 0
    pairs = 0
    diameter = 0
    for source in net.nodes:
        for target, length in nx.single_source_shortest_path_length(graph, source).items():
            if target == source:
                continue
            total += length
            pairs += 1
            diameter = max(diameter, length)

    if not pairs:
        raise DomainError('Invalid network {%s}. The network is fully disconnected.' % (net.name))

    return Distances(
        avg_distance=total / pairs,
        diameter=diameter,
        reachable_fraction=pairs / (net.node_count * (net.node_count - 1))
    )


def clustering(net: MelodyNetwork) -> Clustering:
    """ Returns the global clustering coefficient (closed over connected triplets) and the
    average local coefficient of the undirected projection without self-loops. Nodes with
    degree < 2 contribute 0 to the average. Networks with < 3 nodes are degenerate.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    """
    if net.node_count < 3:
        return Clustering(global_=0.0, avg_local=0.0, degenerate=True)

    graph = undirected_projection(net, keep_self_loops=False).to_graph()
    return Clustering(
        global_=float(nx.transitivity(graph)),
        avg_local=float(nx.average_clustering(graph)),
        degenerate=False
    )


def betweenness(net: MelodyNetwork, normalized: bool = False) -> Dict[str, float]:
    """ Returns the betweenness of every node over ordered pairs y != x != z, on unweighted
    shortest paths, with endpoints excluded. Undirected edges are traversed both ways.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    normalized: `bool`
        Divides by (n - 1)(n - 2) when `True`.
    """
    scores = nx.betweenness_centrality(net.to_digraph(), normalized=normalized)
    return {node: float(scores[node]) for node in net.nodes}


def _ranking(values: Dict[str, float], top: int) -> List[Tuple[str, float]]:
    return sorted(values.items(), key=lambda item: (-item[1], item[0]))[:top]


def full_report(
    net: MelodyNetwork,
    r2_threshold: float = melonet.R2_THRESHOLD,
    normalize_betweenness: bool = False,
    top: int = melonet.TOP_NODES
) -> MetricsReport:
    """ Returns the `melonet.struct.metrics.MetricsReport` of a network. Components whose
    preconditions do not hold leave their fields `None` and add a flag to the report.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    r2_threshold: `float`
        The min. r-squared of a scale-free degree distribution.
    normalize_betweenness: `bool`
        Divides betweenness by (n - 1)(n - 2) when `True`.
    top: `int`
        The length of the ranked node lists.
    """
    if not net.node_count:
        raise DomainError('Invalid network {%s}. The network is empty.' % (net.name))

    flags: List[str] = []
    records = degree_table(net)
    degrees = [record.total_degree for record in records]

    distances_: Dict[str, Union[Distances, None]] = {}
    for mode in ['directed', 'undirected']:
        try:
            distances_[mode] = distances(net, mode)
        except DomainError as e:
            LOGGER.debug(str(e))
            distances_[mode] = None
            flags.append('distances_%s_undefined' % (mode))

    clustering_ = clustering(net)
    if clustering_.degenerate:
        flags.append('clustering_degenerate')

    distribution = DegreeDistribution.from_degrees(degrees)
    power_law = fit_power_law(distribution, threshold=r2_threshold)
    if power_law.insufficient_support:
        flags.append('power_law_insufficient_support')

    betweenness_ = betweenness(net, normalized=normalize_betweenness)

    report = MetricsReport(
        name=net.name,
        length=len(net.sequence),
        node_count=net.node_count,
        edge_count=net.edge_count,
        total_weight=net.total_weight,
        avg_degree=float(np.mean(degrees)),
        max_degree=int(max(degrees)),
        median_degree=float(np.median(degrees)),
        density=density(net),
        avg_distance_directed=distances_['directed'].avg_distance if distances_['directed'] else None,
        avg_distance_undirected=distances_['undirected'].avg_distance if distances_['undirected'] else None,
        reachable_fraction_directed=distances_['directed'].reachable_fraction if distances_['directed'] else None,
        reachable_fraction_undirected=distances_['undirected'].reachable_fraction if distances_['undirected'] else None,
        diameter=distances_['directed'].diameter if distances_['directed'] else None,
        diameter_undirected=distances_['undirected'].diameter if distances_['undirected'] else None,
        clustering_global=clustering_.global_,
        clustering_avg_local=clustering_.avg_local,
        clustering_degenerate=clustering_.degenerate,
        degree_distribution=distribution,
        in_degree_distribution=DegreeDistribution.from_degrees([record.in_degree for record in records]),
        out_degree_distribution=DegreeDistribution.from_degrees([record.out_degree for record in records]),
        power_law=power_law,
        betweenness=betweenness_,
        betweenness_normalized=normalize_betweenness,
        top_nodes={
            'degree': _ranking({record.node: float(record.total_degree) for record in records}, top),
            'betweenness': _ranking(betweenness_, top)
        },
        flags=flags
    )

    if report.density is not None and not 0.0 <= report.density <= 1.0:
        flags.append('density_out_of_range')
    if (
        report.diameter is not None
        and report.avg_distance_directed is not None
        and not math.isclose(report.diameter, report.avg_distance_directed)
        and report.diameter < report.avg_distance_directed
    ):
        flags.append('diameter_below_average')

    LOGGER.debug(
        'Measured {%s}: %s nodes, %s edges, density %.4f.' % (
            net.name,
            report.node_count,
            report.edge_count,
            report.density
        )
    )
    return report
