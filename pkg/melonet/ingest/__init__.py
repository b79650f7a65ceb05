""" Score-ingest """

from typing import List, Union
import os

from melonet.ingest import mel, musicxml, edgelist, document
from melonet.ingest.mel import parse_mel_text, format_mel
from melonet.ingest.musicxml import parse_musicxml
from melonet.ingest.edgelist import parse_edge_list
from melonet.ingest.document import parse_network_json, load_network
from melonet.exceptions import ParseError
from melonet.network import build_network
from melonet.struct.network import MelodyNetwork
from melonet.struct.score import MelodyEvent

__all__ = [
    'mel',
    'musicxml',
    'edgelist',
    'document',
    'parse_mel_text',
    'format_mel',
    'parse_musicxml',
    'parse_edge_list',
    'parse_network_json',
    'load_network',
    'read_input',
    'read_events',
    'read_network',
    'is_supported',
    'track_name'
]

# Input formats by file extension
FORMATS: dict = {
    '.mel': 'mel',
    '.xml': 'musicxml',
    '.musicxml': 'musicxml',
    '.edges': 'edgelist',
    '.edgelist': 'edgelist',
    '.txt': 'edgelist',
    '.json': 'json'
}


def input_format(path: Union[str, os.PathLike]) -> Union[str, None]:
    """ Returns the input format of a path from its extension, `None` when unknown. """
    return FORMATS.get(os.path.splitext(str(path))[1].lower())


def is_supported(path: Union[str, os.PathLike]) -> bool:
    """ Returns `True` when the file extension is a supported input format. """
    return input_format(path) is not None


def track_name(path: Union[str, os.PathLike]) -> str:
    """ Returns the track identifier of an input path (its file name without extension). """
    return os.path.splitext(os.path.basename(str(path)))[0]


def read_input(
    path: Union[str, os.PathLike],
    warnings: Union[List[str], None] = None
) -> Union[List[MelodyEvent], MelodyNetwork]:
    """ Reads a score into events, or an edge list / network document into a network.

    Parameters
    ----------
    path: `Union[str, os.PathLike]`
        The input file path.
    warnings: `Union[List[str], None]`
        A list that collects the parse warnings.
    """
    format_ = input_format(path)
    source = os.path.basename(os.path.normpath(str(path)))
    if os.path.isdir(path):
        raise ParseError('The input is a directory, not a file.', source=source)
    if format_ is None:
        raise ParseError(
            'Unsupported input format. Supported extensions are [%s].' % (', '.join(FORMATS.keys())),
            source=source
        )
    if not os.path.isfile(path):
        raise FileNotFoundError('Input {%s} does not exist.' % (path))

    try:
        with open(path, 'r', encoding='utf-8') as stream:
            if format_ == 'mel':
                return parse_mel_text(stream, source=source)
            if format_ == 'musicxml':
                return parse_musicxml(stream, source=source, warnings=warnings)
            if format_ == 'edgelist':
                return parse_edge_list(stream, name=track_name(path), source=source)
            return parse_network_json(stream, source=source)
    except UnicodeDecodeError as e:
        raise ParseError('Invalid UTF-8 text at byte %s.' % (e.start), source=source)


def read_events(
    path: Union[str, os.PathLike],
    warnings: Union[List[str], None] = None
) -> List[MelodyEvent]:
    """ Reads a `.mel` or MusicXML score into events. """
    result = read_input(path, warnings)
    if isinstance(result, MelodyNetwork):
        raise ParseError('The input is a network, not a score.', source=os.path.basename(str(path)))
    return result


def read_network(
    path: Union[str, os.PathLike],
    warnings: Union[List[str], None] = None
) -> MelodyNetwork:
    """ Reads any supported input into a network. Scores are built into note-transition
    networks named after their file.

    Parameters
    ----------
    path: `Union[str, os.PathLike]`
        The input file path.
    warnings: `Union[List[str], None]`
        A list that collects the parse warnings.
    """
    result = read_input(path, warnings)
    if isinstance(result, MelodyNetwork):
        return result
    return build_network(result, name=track_name(path))
