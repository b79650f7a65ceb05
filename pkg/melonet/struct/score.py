""" Score elements """

from __future__ import annotations
from typing import Literal, List, Tuple, Union
from dataclasses import dataclass, field
from fractions import Fraction
import functools
import json

import melonet
from melonet.exceptions import DomainError


PITCH_CLASSES: List[str] = ['C', 'C#', 'D', 'D#', 'E', 'F', 'F#', 'G', 'G#', 'A', 'A#', 'B']
STEPS: dict = {'C': 0, 'D': 2, 'E': 4, 'F': 5, 'G': 7, 'A': 9, 'B': 11}
ACCIDENTALS: dict = {'': 0, '#': 1, 'b': -1}
KINDS: List[str] = ['note', 'rest', 'chord']
MIN_OCTAVE: int = 0
MAX_OCTAVE: int = 9


@dataclass(frozen=True)
class PitchClass():
    """ A `class` that represents one of the twelve Western pitch classes.

    Attributes
    ----------
    name: `str`
        The sharp spelling of the pitch class, e.g. `C#`.
    """
    name: str

    def __post_init__(self):
        if self.name not in PITCH_CLASSES:
            raise DomainError(
                'Invalid pitch class {%s}. Pitch class must be one of [%s].' % (
                    self.name,
                    ', '.join(PITCH_CLASSES)
                )
            )

    @property
    def index(self) -> int:
        """ Returns the index of the pitch class, C=0 ... B=11. """
        return PITCH_CLASSES.index(self.name)

    def from_index(index: int) -> PitchClass:
        """ Returns a `melonet.struct.score.PitchClass` object from its index.

        Parameters
        ----------
        index: `int`
            The index of the pitch class, wrapped modulo 12.
        """
        return PitchClass(PITCH_CLASSES[int(index) % 12])

    def __str__(self):
        return self.name


@functools.total_ordering
@dataclass(frozen=True)
class Pitch():
    """ A `class` that represents a pitch class at a given octave.

    Attributes
    ----------
    pitch_class: `melonet.struct.score.PitchClass`
        The pitch class.
    octave: `int`
        The octave, from 0 to 9. C4 is middle C.
    """
    pitch_class: PitchClass
    octave: int

    def __post_init__(self):
        if not MIN_OCTAVE <= self.octave <= MAX_OCTAVE:
            raise DomainError(
                'Invalid octave {%s}. Octave must be within [%s, %s].' % (
                    self.octave,
                    MIN_OCTAVE,
                    MAX_OCTAVE
                )
            )

    @property
    def number(self) -> int:
        """ Returns the absolute semitone number of the pitch (C0 = 0). """
        return self.octave * 12 + self.pitch_class.index

    def from_number(number: int) -> Pitch:
        """ Returns a `melonet.struct.score.Pitch` object from an absolute semitone number.

        Parameters
        ----------
        number: `int`
            The absolute semitone number (C0 = 0).
        """
        return Pitch(PitchClass.from_index(number % 12), number // 12)

    def from_spelling(step: str, alter: Union[int, float], octave: int) -> Pitch:
        """ Returns a `melonet.struct.score.Pitch` object from a notated spelling. Flats
        normalize to the sharp-equivalent pitch class, moving the octave when the spelling
        crosses the B / C boundary (Cb4 = B3, B#4 = C5).

        Parameters
        ----------
        step: `str`
            The diatonic step, one of A to G (case-insensitive).
        alter: `Union[int, float]`
            The chromatic alteration in semitones, e.g. -1 for a flat.
        octave: `int`
            The notated octave.
        """
        step_ = step.strip().upper()
        if step_ not in STEPS:
            raise DomainError(
                'Invalid pitch step {%s}. Step must be one of [%s].' % (
                    step,
                    ', '.join(STEPS.keys())
                )
            )
        if float(alter) != int(alter):
            raise DomainError(
                'Invalid alteration {%s}. Microtonal alterations are not supported.' % (alter)
            )

        number = int(octave) * 12 + STEPS[step_] + int(alter)
        if number < 0:
            raise DomainError(
                'Invalid pitch {%s%s}. The pitch is below C0.' % (step_, octave)
            )
        return Pitch.from_number(number)

    def __lt__(self, compare: Pitch):
        return (self.octave, self.pitch_class.index) < (compare.octave, compare.pitch_class.index)

    def __str__(self):
        return '%s%s' % (self.pitch_class.name, self.octave)


@dataclass(frozen=True)
class Duration():
    """ A `class` that represents the relative duration of a score element as an exact
    fraction of a whole note (a dotted quarter is 3/8, a triplet eighth is 1/12).

    Attributes
    ----------
    numerator: `int`
        The numerator of the duration, in lowest terms.
    denominator: `int`
        The denominator of the duration, in lowest terms.
    """
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0 or self.numerator <= 0:
            raise DomainError(
                'Invalid duration {%s/%s}. Duration must be positive.' % (
                    self.numerator,
                    self.denominator
                )
            )

        value = Fraction(self.numerator, self.denominator)
        if value > melonet.MAX_DURATION:
            raise DomainError(
                'Invalid duration {%s}. Duration must not exceed %s whole notes.' % (
                    value,
                    melonet.MAX_DURATION
                )
            )

        # Store in lowest terms
        object.__setattr__(self, 'numerator', value.numerator)
        object.__setattr__(self, 'denominator', value.denominator)

    @property
    def fraction(self) -> Fraction:
        """ Returns the duration as a `fractions.Fraction`. """
        return Fraction(self.numerator, self.denominator)

    def from_fraction(value: Fraction) -> Duration:
        """ Returns a `melonet.struct.score.Duration` object from a `fractions.Fraction`. """
        return Duration(value.numerator, value.denominator)

    def parse(text: str) -> Duration:
        """ Returns a `melonet.struct.score.Duration` object from `<NUM>/<DEN>` or `<NUM>`.

        Parameters
        ----------
        text: `str`
            The duration text.
        """
        parts = text.strip().split('/')
        if len(parts) not in (1, 2) or not all(part.strip().lstrip('-').isdigit() for part in parts):
            raise DomainError('Invalid duration {%s}. Expected `<NUM>/<DEN>`.' % (text))
        numerator = int(parts[0])
        denominator = int(parts[1]) if len(parts) == 2 else 1
        return Duration(numerator, denominator)

    def __str__(self):
        return '%s/%s' % (self.numerator, self.denominator)


@dataclass(frozen=True)
class MelodyEvent():
    """ A `class` that represents one score element: a pitched note, a rest or a chord.

    Attributes
    ----------
    kind: `Literal['note', 'rest', 'chord']`
        The kind of score element.
    pitches: `Tuple[melonet.struct.score.Pitch, ...]`
        The pitches of the element. Empty for a rest, exactly one for a note and two
            or more, sorted ascending and distinct, for a chord.
    duration: `melonet.struct.score.Duration`
        The relative duration of the element.
    position: `int`
        The 0-based index of the element in the score sequence.
    """
    kind: Literal['note', 'rest', 'chord']
    pitches: Tuple[Pitch, ...]
    duration: Duration
    position: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, 'pitches', tuple(self.pitches))

        if self.kind not in KINDS:
            raise DomainError(
                'Invalid event kind {%s}. Kind must be one of [%s].' % (self.kind, ', '.join(KINDS))
            )
        if self.kind == 'rest' and self.pitches:
            raise DomainError('Invalid rest. A rest has no pitches.')
        if self.kind == 'note' and len(self.pitches) != 1:
            raise DomainError('Invalid note. A note has exactly one pitch.')
        if self.kind == 'chord':
            if len(self.pitches) < 2:
                raise DomainError('Invalid chord. A chord has two or more pitches.')
            if list(self.pitches) != sorted(set(self.pitches)):
                raise DomainError('Invalid chord. Chord pitches must be sorted and distinct.')
        if self.position < 0:
            raise DomainError('Invalid position {%s}. Position must be >= 0.' % (self.position))

    def note(pitch: Pitch, duration: Duration, position: int = 0) -> MelodyEvent:
        """ Returns a note `melonet.struct.score.MelodyEvent`. """
        return MelodyEvent('note', (pitch,), duration, position)

    def rest(duration: Duration, position: int = 0) -> MelodyEvent:
        """ Returns a rest `melonet.struct.score.MelodyEvent`. """
        return MelodyEvent('rest', (), duration, position)

    def chord(pitches: List[Pitch], duration: Duration, position: int = 0) -> MelodyEvent:
        """ Returns a chord `melonet.struct.score.MelodyEvent` with sorted, distinct pitches.
        A chord that collapses to a single distinct pitch is returned as a note.
        """
        pitches_ = sorted(set(pitches))
        if len(pitches_) == 1:
            return MelodyEvent.note(pitches_[0], duration, position)
        return MelodyEvent('chord', tuple(pitches_), duration, position)

    def from_dict(dict_object: dict) -> MelodyEvent:
        """ Returns a `melonet.struct.score.MelodyEvent` object from a `dict`.

        Parameters
        ----------
        dict_object : `dict`
            The dictionary object to convert to a `melonet.struct.score.MelodyEvent` object.
        """

        # Assert object type
        if not isinstance(dict_object, dict):
            raise TypeError('Object must be a `dict`.')

        # Assert keys
        missing_keys = [
            key for key in ['kind', 'pitches', 'duration', 'position']
            if key not in dict_object
        ]
        if missing_keys:
            raise KeyError(
                'Missing keys. The `dict` object is missing the following required keys [%s].' % (
                    ','.join(["'%s'" % (key) for key in missing_keys])
                )
            )

        return MelodyEvent(
            kind=dict_object['kind'],
            pitches=tuple(
                Pitch(PitchClass(name), int(octave)) for name, octave in dict_object['pitches']
            ),
            duration=Duration.parse(dict_object['duration']),
            position=int(dict_object['position'])
        )

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.score.MelodyEvent` object as a `dict`. """
        return {
            'kind': self.kind,
            'pitches': [[pitch.pitch_class.name, pitch.octave] for pitch in self.pitches],
            'duration': str(self.duration),
            'position': self.position
        }

    def __repr__(self):
        """ Returns the `melonet.struct.score.MelodyEvent` object as a json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2)


def has_consecutive_positions(events: List[MelodyEvent]) -> bool:
    """ Returns `True` when the event positions are 0, 1, ..., n-1. """
    return all(event.position == position for position, event in enumerate(events))
