""" Generic weighted edge-list reader """

from typing import Dict, List, TextIO, Tuple, Union
import io
import math

from melonet import logging
from melonet.exceptions import ParseError
from melonet.struct.network import MelodyNetwork

LOGGER = logging.get_ingest_logger()


def _parse_weight(text: str, line: int, source: Union[str, None]) -> Union[int, float]:
    try:
        weight = float(text)
    except ValueError:
        raise ParseError('Non-numeric weight {%s}.' % (text), line=line, source=source)
    if not math.isfinite(weight) or weight <= 0:
        raise ParseError('Non-positive weight {%s}. Weights must be > 0.' % (text), line=line, source=source)
    return int(weight) if weight.is_integer() else weight


def parse_edge_list(
    input: Union[TextIO, str],
    name: str = '',
    source: Union[str, None] = None
) -> MelodyNetwork:
    """ Parses whitespace-separated `source target weight` lines into a directed network.
    Repeated pairs sum their weights. The network stores no event sequence, so it cannot be
    reconstructed.

    Parameters
    ----------
    input: `Union[TextIO, str]`
        A text stream, or the text content itself.
    name: `str`
        The network name.
    source: `Union[str, None]`
        The name of the input, used in error messages.
    """
    stream = io.StringIO(input) if isinstance(input, str) else input

    nodes: List[str] = []
    edges: Dict[Tuple[str, str], Union[int, float]] = {}
    for number, line in enumerate(stream, start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 3:
            raise ParseError(
                'Malformed edge. Expected `source target weight`, found %s fields.' % (len(tokens)),
                line=number,
                source=source
            )
        source_, target, weight = tokens
        nodes.extend([source_, target])
        edges[(source_, target)] = edges.get((source_, target), 0) + _parse_weight(weight, number, source)

    LOGGER.debug('Parsed %s edges from {%s}.' % (len(edges), source or '<stream>'))
    return MelodyNetwork(name=name, nodes=tuple(nodes), edges=edges)
