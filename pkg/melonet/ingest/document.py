""" Network JSON document reader """

from typing import TextIO, Union
import io
import os
import json

from melonet.exceptions import DomainError, ParseError
from melonet.struct.network import MelodyNetwork


def parse_network_json(
    input: Union[TextIO, str],
    source: Union[str, None] = None
) -> MelodyNetwork:
    """ Parses a network document `{name, nodes, edges: [{source, target, weight}], sequence}`
    written by `melonet.export.write_json`.

    Parameters
    ----------
    input: `Union[TextIO, str]`
        A text stream, or the document itself.
    source: `Union[str, None]`
        The name of the input, used in error messages.
    """
    stream = io.StringIO(input) if isinstance(input, str) else input

    try:
        document = json.load(stream)
    except json.JSONDecodeError as e:
        raise ParseError('Malformed JSON. %s' % (e.msg), line=e.lineno, source=source) from e

    try:
        return MelodyNetwork.from_dict(document)
    except (TypeError, KeyError, ValueError, DomainError) as e:
        raise ParseError('Invalid network document. %s' % (e), source=source) from e


def load_network(path: Union[str, os.PathLike]) -> MelodyNetwork:
    """ Reads a network document from a file.

    Parameters
    ----------
    path: `Union[str, os.PathLike]`
        The path of the network document.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError('Input {%s} does not exist.' % (path))
    with open(path, 'r', encoding='utf-8') as stream:
        return parse_network_json(stream, source=os.path.basename(str(path)))
