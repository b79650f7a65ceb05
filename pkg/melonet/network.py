""" Note-transition network construction """

from typing import Dict, List, Tuple

from melonet import logging
from melonet.exceptions import DomainError, InvariantError
from melonet.struct.network import MelodyNetwork, is_rest, label
from melonet.struct.score import MelodyEvent, has_consecutive_positions

LOGGER = logging.get_analysis_logger()


def build_labels(labels: List[str], name: str = '') -> MelodyNetwork:
    """ Builds the network of a label sequence. Every unseen label becomes a node, every
    repeated consecutive pair increases the weight of its edge and every new pair creates an
    edge of weight 1. Self-loops are kept.

    Parameters
    ----------
    labels: `List[str]`
        The node label of every score element, in score order.
    name: `str`
        The track identifier.
    """
    if not labels:
        raise DomainError('Invalid melody {%s}. The melody is empty.' % (name))

    nodes: Dict[str, None] = {}
    edges: Dict[Tuple[str, str], int] = {}
    previous = None
    for current in labels:
        if current not in nodes:
            nodes[current] = None
        if previous is not None:
            edges[(previous, current)] = edges.get((previous, current), 0) + 1
        previous = current

    network = MelodyNetwork(name=name, nodes=tuple(nodes), edges=edges, sequence=tuple(labels))

    # Weight conservation
    if network.total_weight != len(labels) - 1:
        raise InvariantError(
            'Weight conservation failed for {%s}: %s != %s.' % (name, network.total_weight, len(labels) - 1)
        )

    return network


def build_network(events: List[MelodyEvent], name: str = '') -> MelodyNetwork:
    """ Builds the weighted directed note-transition network of a melody.

    Parameters
    ----------
    events: `List[melonet.struct.score.MelodyEvent]`
        The score elements with consecutive positions from 0.
    name: `str`
        The track identifier.
    """
    if not events:
        raise DomainError('Invalid melody {%s}. The melody is empty.' % (name))
    if not has_consecutive_positions(events):
        raise DomainError('Invalid melody {%s}. Event positions must be consecutive from 0.' % (name))

    network = build_labels([label(event) for event in events], name=name)
    LOGGER.debug(
        'Built {%s} with %s nodes and %s edges from %s events.' % (
            name,
            network.node_count,
            network.edge_count,
            len(events)
        )
    )
    return network


def reconstruct_events(net: MelodyNetwork) -> List[str]:
    """ Returns the stored label order of the score the network was built from.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        A network built from a score.
    """
    if not net.sequence:
        raise DomainError('Invalid network {%s}. No sequence stored.' % (net.name))
    return list(net.sequence)


def remove_rests(net: MelodyNetwork) -> MelodyNetwork:
    """ Returns the network without rest nodes and their incident edges. Neighbours of a
    removed rest are not bridged, so the result may be disconnected. The sequence is cleared.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    """
    return MelodyNetwork(
        name=net.name,
        nodes=tuple(node for node in net.nodes if not is_rest(node)),
        edges={
            (source, target): weight
            for (source, target), weight in net.edges.items()
            if not is_rest(source) and not is_rest(target)
        },
        sequence=(),
        directed=net.directed
    )


def undirected_projection(net: MelodyNetwork, keep_self_loops: bool = False) -> MelodyNetwork:
    """ Returns the undirected projection of the network. Each unordered pair {u, v} gets one
    edge weighted w(u -> v) + w(v -> u). The sequence is kept.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    keep_self_loops: `bool`
        Keeps self-loops when `True`.
    """
    edges: Dict[Tuple[str, str], int] = {}
    for (source, target), weight in net.edges.items():
        if source == target and not keep_self_loops:
            continue
        key = (source, target) if source <= target else (target, source)
        edges[key] = edges.get(key, 0) + weight

    return MelodyNetwork(
        name=net.name,
        nodes=net.nodes,
        edges=edges,
        sequence=net.sequence,
        directed=False
    )
