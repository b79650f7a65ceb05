""" MusicXML (score-partwise) subset reader """

from typing import Dict, List, TextIO, Union
from fractions import Fraction
import io
import xml.etree.ElementTree as ET

from melonet import logging
from melonet.exceptions import DomainError, ParseError
from melonet.struct.score import Duration, MelodyEvent, Pitch

LOGGER = logging.get_ingest_logger()

# Note-type values as fractions of a whole note
TYPE_RATIOS: Dict[str, Fraction] = {
    'maxima': Fraction(8, 1),
    'long': Fraction(4, 1),
    'breve': Fraction(2, 1),
    'whole': Fraction(1, 1),
    'half': Fraction(1, 2),
    'quarter': Fraction(1, 4),
    'eighth': Fraction(1, 8),
    '16th': Fraction(1, 16),
    '32nd': Fraction(1, 32),
    '64th': Fraction(1, 64),
    '128th': Fraction(1, 128)
}


def _warn(message: str, warnings: Union[List[str], None]):
    LOGGER.warning(message)
    if warnings is not None:
        warnings.append(message)


def _local(tag: str) -> str:
    """ Returns the tag name without its namespace. """
    return tag.rsplit('}', 1)[-1]


def _strip_namespaces(root: ET.Element) -> ET.Element:
    for element in root.iter():
        element.tag = _local(element.tag)
    return root


def _note_duration(
    note: ET.Element,
    divisions: int,
    where: str,
    warnings: Union[List[str], None]
) -> Fraction:
    """ Returns the notated duration of a `<note>` as a fraction of a whole note, from
    `<type>`, `<dot>` and `<time-modification>`. Falls back to `<duration>` / `<divisions>`
    when `<type>` is absent.
    """
    type_ = note.findtext('type')
    if type_ is not None:
        type_ = type_.strip()
        if type_ not in TYPE_RATIOS:
            raise DomainError(
                'Unsupported <type> value {%s} in %s. Supported values are [%s].' % (
                    type_,
                    where,
                    ', '.join(TYPE_RATIOS.keys())
                )
            )
        value = TYPE_RATIOS[type_]

        # Each augmentation dot adds half of the previous increment
        dots = len(note.findall('dot'))
        value = value * (2 - Fraction(1, 2 ** dots))

    else:
        duration = note.findtext('duration')
        if duration is None or not duration.strip().isdigit():
            raise DomainError('Missing <type> and <duration> in %s.' % (where))
        value = Fraction(int(duration.strip()), 4 * divisions)
        _warn('Missing <type> in %s, the duration is derived from <duration>.' % (where), warnings)
        return value

    modification = note.find('time-modification')
    if modification is not None:
        actual = modification.findtext('actual-notes')
        normal = modification.findtext('normal-notes')
        if actual and normal and actual.strip().isdigit() and normal.strip().isdigit():
            value = value * Fraction(int(normal), int(actual))

    return value


def _parse_pitch(pitch: ET.Element, where: str) -> Pitch:
    step = pitch.findtext('step')
    octave = pitch.findtext('octave')
    if step is None or octave is None or not octave.strip().isdigit():
        raise DomainError('Malformed <pitch> in %s. <step> and <octave> are required.' % (where))
    alter = pitch.findtext('alter') or '0'
    try:
        alter_ = float(alter)
    except ValueError:
        raise DomainError('Malformed <alter> value {%s} in %s.' % (alter, where))
    return Pitch.from_spelling(step, alter_, int(octave))


def parse_musicxml(
    input: Union[TextIO, str],
    source: Union[str, None] = None,
    warnings: Union[List[str], None] = None
) -> List[MelodyEvent]:
    """ Parses a score-partwise MusicXML document and returns the events of its first part.

    Each `<note>` maps to one event and `<rest>` elements map to rests. Consecutive notes
    marked `<chord/>` merge into the preceding note. Grace notes are skipped, ties are not
    merged, and only the first voice found in the part is read.

    Parameters
    ----------
    input: `Union[TextIO, str]`
        A text stream, or the document itself.
    source: `Union[str, None]`
        The name of the input, used in error messages.
    warnings: `Union[List[str], None]`
        A list that collects the parse warnings.
    """
    stream = io.StringIO(input) if isinstance(input, str) else input

    try:
        root = _strip_namespaces(ET.fromstring(stream.read()))
    except ET.ParseError as e:
        raise ParseError('Malformed XML. %s' % (e), line=e.position[0], source=source) from e

    if root.tag != 'score-partwise':
        raise ParseError(
            'Unsupported document {<%s>}. Only <score-partwise> documents are supported.' % (root.tag),
            source=source
        )

    parts = root.findall('part')
    if not parts:
        raise ParseError('The document contains no <part>.', source=source)
    if len(parts) > 1:
        _warn(
            'The document contains %s parts, only the first part {%s} is read.' % (
                len(parts),
                parts[0].get('id', '')
            ),
            warnings
        )

    divisions = 1
    voice: Union[str, None] = None
    skipped_voices = set()

    # Each item is [kind, pitches, duration]
    items: List[list] = []

    for index, measure in enumerate(parts[0].findall('measure'), start=1):
        where = 'measure %s' % (measure.get('number', index))

        for element in measure:
            if element.tag == 'attributes':
                divisions_ = element.findtext('divisions')
                if divisions_ is not None and divisions_.strip().isdigit() and int(divisions_) > 0:
                    divisions = int(divisions_)
                continue

            if element.tag != 'note':
                continue

            try:
                if element.find('grace') is not None:
                    _warn('Grace note skipped in %s.' % (where), warnings)
                    continue

                voice_ = element.findtext('voice')
                if voice_ is not None:
                    voice_ = voice_.strip()
                    if voice is None:
                        voice = voice_
                    elif voice_ != voice:
                        if voice_ not in skipped_voices:
                            skipped_voices.add(voice_)
                            _warn('Voice {%s} skipped from %s, only voice {%s} is read.' % (voice_, where, voice), warnings)
                        continue

                is_chord = element.find('chord') is not None
                duration = _note_duration(element, divisions, where, warnings)

                if element.find('rest') is not None:
                    if is_chord:
                        raise DomainError('A <rest> cannot be part of a <chord/> in %s.' % (where))
                    items.append(['rest', [], duration])
                    continue

                pitch_ = element.find('pitch')
                if pitch_ is None:
                    raise DomainError('Missing <pitch> on a non-rest note in %s.' % (where))
                pitch = _parse_pitch(pitch_, where)

                if not is_chord:
                    items.append(['note', [pitch], duration])
                    continue

                if not items or items[-1][0] == 'rest':
                    raise DomainError('A <chord/> note without a preceding note in %s.' % (where))
                if items[-1][2] != duration:
                    raise DomainError(
                        'Chord notes with differing durations {%s, %s} in %s.' % (items[-1][2], duration, where)
                    )
                if pitch in items[-1][1]:
                    _warn('Duplicate chord pitch {%s} dropped in %s.' % (pitch, where), warnings)
                    continue
                items[-1][0] = 'chord'
                items[-1][1].append(pitch)

            except DomainError as e:
                raise ParseError(str(e), source=source) from e

    events: List[MelodyEvent] = []
    for position, (kind, pitches, duration) in enumerate(items):
        try:
            duration_ = Duration.from_fraction(duration)
        except DomainError as e:
            raise ParseError(str(e), source=source) from e
        if kind == 'rest':
            events.append(MelodyEvent.rest(duration_, position))
        elif kind == 'note':
            events.append(MelodyEvent.note(pitches[0], duration_, position))
        else:
            events.append(MelodyEvent.chord(pitches, duration_, position))

    LOGGER.debug('Parsed %s events from {%s}.' % (len(events), source or '<stream>'))
    return events
