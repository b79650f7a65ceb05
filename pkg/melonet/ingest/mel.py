""" Canonical `.mel` melody-event text format

One event per line,

    note <PITCH> <OCTAVE> <NUM>/<DEN>
    rest <NUM>/<DEN>
    chord <PITCH>/<OCT>[,<PITCH>/<OCT>...] <NUM>/<DEN>

`#` begins a comment. Pitch names are case-insensitive; a `b` suffix is a flat and a
`#` suffix a sharp.
"""

from typing import List, TextIO, Tuple, Union
import io

from melonet import logging
from melonet.exceptions import DomainError, ParseError
from melonet.struct.score import ACCIDENTALS, Duration, MelodyEvent, Pitch

LOGGER = logging.get_ingest_logger()


def _split_pitch(name: str) -> Tuple[str, int]:
    """ Splits a pitch name into its step and alteration, e.g. `Db` -> (`D`, -1). """
    step, accidental = name[:1], name[1:]
    if accidental.lower() == 'b':
        accidental = 'b'
    if not step or accidental not in ACCIDENTALS:
        raise DomainError('Unknown pitch name {%s}.' % (name))
    return step, ACCIDENTALS[accidental]


def _parse_octave(text: str) -> int:
    if not text.strip().isdigit():
        raise DomainError('Invalid octave {%s}. Octave must be an integer.' % (text))
    return int(text)


def _parse_pitch(name: str, octave: str) -> Pitch:
    step, alter = _split_pitch(name.strip())
    return Pitch.from_spelling(step, alter, _parse_octave(octave))


def parse_line(line: str, position: int) -> Union[MelodyEvent, None]:
    """ Parses one `.mel` line and returns a `melonet.struct.score.MelodyEvent`, or `None`
    for a blank or comment-only line. Raises `melonet.exceptions.DomainError` on malformed
    content.

    Parameters
    ----------
    line: `str`
        The line content.
    position: `int`
        The position assigned to the event.
    """
    # `#` also marks a sharp, so only a `#` that starts a token begins a comment
    tokens = []
    for token in line.split():
        if token.startswith('#'):
            break
        tokens.append(token)

    if not tokens:
        return None

    kind = tokens[0].lower()
    if kind == 'note':
        if len(tokens) != 4:
            raise DomainError('Malformed note. Expected `note <PITCH> <OCTAVE> <NUM>/<DEN>`.')
        return MelodyEvent.note(
            _parse_pitch(tokens[1], tokens[2]),
            Duration.parse(tokens[3]),
            position
        )

    if kind == 'rest':
        if len(tokens) != 2:
            raise DomainError('Malformed rest. Expected `rest <NUM>/<DEN>`.')
        return MelodyEvent.rest(Duration.parse(tokens[1]), position)

    if kind == 'chord':
        if len(tokens) != 3:
            raise DomainError('Malformed chord. Expected `chord <PITCH>/<OCT>[,<PITCH>/<OCT>...] <NUM>/<DEN>`.')
        pitches = []
        for member in tokens[1].split(','):
            name, sep, octave = member.partition('/')
            if not sep:
                raise DomainError('Malformed chord member {%s}. Expected `<PITCH>/<OCT>`.' % (member))
            pitches.append(_parse_pitch(name, octave))
        if len(pitches) < 2:
            raise DomainError('Malformed chord. A chord has two or more pitches.')
        if len(set(pitches)) != len(pitches):
            raise DomainError('Malformed chord. Duplicate pitches [%s].' % (tokens[1]))
        return MelodyEvent.chord(pitches, Duration.parse(tokens[2]), position)

    raise DomainError('Unknown event kind {%s}. Kind must be one of [note, rest, chord].' % (tokens[0]))


def parse_mel_text(
    input: Union[TextIO, str],
    source: Union[str, None] = None
) -> List[MelodyEvent]:
    """ Parses `.mel` text and returns the events in file order with positions 0..n-1.

    Parameters
    ----------
    input: `Union[TextIO, str]`
        A text stream, or the text content itself.
    source: `Union[str, None]`
        The name of the input, used in error messages.
    """
    stream = io.StringIO(input) if isinstance(input, str) else input

    events: List[MelodyEvent] = []
    for number, line in enumerate(stream, start=1):
        try:
            event = parse_line(line, len(events))
        except DomainError as e:
            raise ParseError(str(e), line=number, source=source) from e
        if event is not None:
            events.append(event)

    LOGGER.debug('Parsed %s events from {%s}.' % (len(events), source or '<stream>'))
    return events


def format_event(event: MelodyEvent) -> str:
    """ Returns the canonical `.mel` line of an event. """
    if event.kind == 'rest':
        return 'rest %s' % (event.duration)
    if event.kind == 'note':
        pitch = event.pitches[0]
        return 'note %s %s %s' % (pitch.pitch_class.name, pitch.octave, event.duration)
    return 'chord %s %s' % (
        ','.join('%s/%s' % (pitch.pitch_class.name, pitch.octave) for pitch in event.pitches),
        event.duration
    )


def format_mel(events: List[MelodyEvent], header: Union[str, None] = None) -> str:
    """ Serializes events to canonical `.mel` text, one event per line.

    Parameters
    ----------
    events: `List[melonet.struct.score.MelodyEvent]`
        The events to serialize.
    header: `Union[str, None]`
        An optional comment written as the first line.
    """
    lines = ['# %s' % (header)] if header else []
    lines.extend(format_event(event) for event in events)
    return '\n'.join(lines) + '\n'
