""" Weighted modularity and Louvain community detection

Detection runs on the undirected weighted projection with self-loops kept. A node is moved
to the neighbouring community with the largest positive modularity gain until no move
improves, then communities are aggregated into super-nodes and the process repeats on the
aggregated graph.

Seed 0 visits nodes in ascending label order, which `networkx.community.louvain_communities`
cannot do since it always shuffles them. Any other seed runs the networkx implementation.
"""

from typing import Dict, Hashable, List, Mapping, Tuple, Union
import random
import networkx as nx

import melonet
from melonet import logging
from melonet.exceptions import DomainError, InvariantError
from melonet.network import undirected_projection
from melonet.struct.community import CommunityAssignment
from melonet.struct.network import MelodyNetwork

LOGGER = logging.get_analysis_logger()

# The min. gain of a single move, below which float noise could make moves cycle
MOVE_TOLERANCE: float = 1e-12


def _mapping(assignment: Union[CommunityAssignment, Mapping[str, int]]) -> Mapping[str, int]:
    if isinstance(assignment, CommunityAssignment):
        return assignment.mapping
    return assignment


def modularity_of(
    net: MelodyNetwork,
    assignment: Union[CommunityAssignment, Mapping[str, int]],
    resolution: float = 1.0
) -> float:
    """ Returns the weighted modularity Q of a partition. A self-loop of weight w adds 2w to
    the degree of its node. Directed networks are projected first, self-loops kept. Q is 0 by
    convention when the network carries no weight.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network, normally an undirected projection.
    assignment: `Union[melonet.struct.community.CommunityAssignment, Mapping[str, int]]`
        The community of every node.
    resolution: `float`
        The modularity resolution.
    """
    mapping = _mapping(assignment)

    missing = [node for node in net.nodes if node not in mapping]
    if missing:
        raise DomainError(
            'Invalid assignment. The assignment is missing the following nodes [%s].' % (
                ', '.join(missing)
            )
        )
    unknown = sorted(set(mapping) - set(net.nodes))
    if unknown:
        raise DomainError(
            'Invalid assignment. The following nodes are not in the network [%s].' % (
                ', '.join(unknown)
            )
        )

    graph = (undirected_projection(net, keep_self_loops=True) if net.directed else net).to_graph()
    if graph.size(weight='weight') == 0:
        return 0.0

    communities: Dict[int, set] = {}
    for node in net.nodes:
        communities.setdefault(mapping[node], set()).add(node)

    return float(
        nx.community.modularity(
            graph,
            list(communities.values()),
            weight='weight',
            resolution=resolution
        )
    )


def _one_level(
    graph: nx.Graph,
    order: List[Hashable],
    node2com: Dict[Hashable, Hashable],
    m: float,
    resolution: float
) -> Tuple[Dict[Hashable, Hashable], bool]:
    """ Moves single nodes, in visit order, to the neighbouring community with the largest
    positive modularity gain, until a full pass moves nothing.
    """
    node2com = dict(node2com)
    degrees = dict(graph.degree(weight='weight'))
    totals: Dict[Hashable, float] = {}
    for node, community in node2com.items():
        totals[community] = totals.get(community, 0) + degrees[node]
    neighbours = {
        node: {neighbour: data['weight'] for neighbour, data in graph[node].items() if neighbour != node}
        for node in graph
    }

    improved = False
    moved = True
    while moved:
        moved = False
        for node in order:
            current = node2com[node]
            degree = degrees[node]

            weights: Dict[Hashable, float] = {}
            for neighbour, weight in neighbours[node].items():
                community = node2com[neighbour]
                weights[community] = weights.get(community, 0) + weight

            totals[current] -= degree
            remove_cost = -weights.get(current, 0) / m + resolution * totals[current] * degree / (2 * m ** 2)

            best, best_gain = current, 0.0
            for community, weight in weights.items():
                gain = remove_cost + weight / m - resolution * totals[community] * degree / (2 * m ** 2)
                if gain > best_gain + MOVE_TOLERANCE:
                    best, best_gain = community, gain

            totals[best] += degree
            if best != current:
                node2com[node] = best
                moved = True
                improved = True

    return node2com, improved


def _aggregate(
    graph: nx.Graph,
    node2com: Dict[Hashable, Hashable]
) -> Tuple[nx.Graph, Dict[Hashable, int]]:
    """ Returns the graph of communities, and the super-node of every node. Super-nodes are
    numbered by their smallest member. Edge weights between communities are summed; weights
    inside a community become a self-loop.
    """
    communities: Dict[Hashable, List[Hashable]] = {}
    for node in graph:
        communities.setdefault(node2com[node], []).append(node)

    ids: Dict[Hashable, int] = {}
    for id_, members in enumerate(sorted(communities.values(), key=min)):
        for node in members:
            ids[node] = id_

    aggregated = nx.Graph()
    aggregated.add_nodes_from(range(len(communities)))
    for u, v, weight in graph.edges(data='weight'):
        a, b = ids[u], ids[v]
        if aggregated.has_edge(a, b):
            weight = aggregated[a][b]['weight'] + weight
        aggregated.add_edge(a, b, weight=weight)

    return aggregated, ids


def _relabel(mapping: Mapping[str, Hashable]) -> Dict[str, int]:
    """ Returns the mapping with dense community ids, ordered by smallest member label. """
    communities: Dict[Hashable, List[str]] = {}
    for node, community in mapping.items():
        communities.setdefault(community, []).append(node)
    return {
        node: id_
        for id_, members in enumerate(sorted(communities.values(), key=min))
        for node in members
    }


def _ordered_levels(
    projection: MelodyNetwork,
    graph: nx.Graph,
    m: float,
    resolution: float,
    baseline: float
) -> Tuple[Dict[str, Hashable], float]:
    """ Runs Louvain levels that visit nodes in ascending label order and returns the best
    partition with its modularity.
    """
    best: Dict[str, Hashable] = {node: node for node in projection.nodes}
    best_q = baseline

    # Original node -> node of the current level
    membership: Dict[str, Hashable] = dict(best)
    level = graph
    while True:
        node2com, improved = _one_level(level, sorted(level.nodes), {node: node for node in level}, m, resolution)
        if not improved:
            break
        level, ids = _aggregate(level, node2com)
        membership = {node: ids[membership[node]] for node in membership}

        q = modularity_of(projection, membership, resolution)
        gain = q - best_q
        if gain > 0:
            best, best_q = dict(membership), q
        LOGGER.debug('Level with %s communities, Q %.6f.' % (level.number_of_nodes(), q))
        if gain < melonet.MODULARITY_THRESHOLD:
            break

    return best, best_q


def detect_communities(
    net: MelodyNetwork,
    resolution: float = melonet.RESOLUTION,
    seed: int = 0
) -> CommunityAssignment:
    """ Detects communities by greedy modularity optimization (Louvain). Levels repeat until
    the modularity gain falls below `melonet.MODULARITY_THRESHOLD`, then a last pass of
    single-node moves runs on the projection itself. Communities are numbered by their
    smallest member label.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network. Detection runs on its undirected projection, self-loops kept.
    resolution: `float`
        The modularity resolution.
    seed: `int`
        The visit-order seed. 0 visits nodes in ascending label order, any other value
            is passed to `networkx.community.louvain_communities` and shuffles the final
            pass of single-node moves.
    """
    if not net.node_count:
        raise DomainError('Invalid network {%s}. The network is empty.' % (net.name))

    projection = undirected_projection(net, keep_self_loops=True)
    graph = projection.to_graph()
    m = graph.size(weight='weight')
    singletons = {node: id_ for id_, node in enumerate(net.nodes)}

    if m == 0:
        LOGGER.warning('Degenerate network {%s}. The network has no edges, Q is 0.' % (net.name))
        return CommunityAssignment(
            mapping=singletons,
            modularity_q=0.0,
            resolution=resolution,
            seed=seed,
            degenerate=True
        )

    baseline = modularity_of(projection, singletons, resolution)
    if seed:
        partition = nx.community.louvain_communities(
            graph,
            weight='weight',
            resolution=resolution,
            threshold=melonet.MODULARITY_THRESHOLD,
            seed=seed
        )
        best = {node: id_ for id_, members in enumerate(partition) for node in members}
        best_q = modularity_of(projection, best, resolution)
        if best_q < baseline:
            best, best_q = dict(singletons), baseline
        refinement_order = sorted(graph.nodes)
        random.Random(seed).shuffle(refinement_order)
    else:
        best, best_q = _ordered_levels(projection, graph, m, resolution, baseline)
        refinement_order = sorted(graph.nodes)

    node2com, improved = _one_level(graph, refinement_order, best, m, resolution)
    if improved:
        q = modularity_of(projection, node2com, resolution)
        if q > best_q:
            best, best_q = node2com, q

    mapping = _relabel(best)
    modularity_q = modularity_of(projection, mapping, resolution)
    if modularity_q < baseline:
        mapping, modularity_q = singletons, baseline

    if sorted(set(mapping.values())) != list(range(len(set(mapping.values())))):
        raise InvariantError('Community ids of {%s} are not contiguous.' % (net.name))

    assignment = CommunityAssignment(
        mapping=mapping,
        modularity_q=modularity_q,
        resolution=resolution,
        seed=seed
    )
    LOGGER.debug(
        'Detected %s communities in {%s}, Q %.6f.' % (
            assignment.community_count,
            net.name,
            modularity_q
        )
    )
    return assignment


def community_size_distribution(
    assignment: Union[CommunityAssignment, Mapping[str, int]]
) -> List[Tuple[int, int]]:
    """ Returns (community id, size) pairs sorted by descending size, ties by ascending id.

    Parameters
    ----------
    assignment: `Union[melonet.struct.community.CommunityAssignment, Mapping[str, int]]`
        The community of every node.
    """
    sizes: Dict[int, int] = {}
    for community in _mapping(assignment).values():
        sizes[community] = sizes.get(community, 0) + 1
    return sorted(sizes.items(), key=lambda item: (-item[1], item[0]))
