import os
import pytest

from melonet import ingest
from melonet.exceptions import ParseError
from melonet.network import build_network
from melonet.struct.network import NodeLabel, label
from melonet.struct.score import Duration, MelodyEvent, Pitch, PitchClass


def test_mel_figure1(figure1_events, figure1_labels):
    assert [label(event) for event in figure1_events] == figure1_labels
    assert [event.position for event in figure1_events] == list(range(9))
    assert figure1_events[6].kind == 'rest'


def test_mel_comments_and_blank_lines():
    events = ingest.parse_mel_text('# header\n\nnote C# 4 1/8  # sharp, then a comment\nrest 1/4\n')
    assert [label(event) for event in events] == ['C#4:1/8', 'R:1/4']


def test_mel_flats_normalize_to_sharps():
    events = ingest.parse_mel_text('note Db 4 1/4\nnote Cb 4 1/4\nnote B# 4 1/4\n')
    assert [label(event) for event in events] == ['C#4:1/4', 'B3:1/4', 'C5:1/4']


def test_mel_durations_in_lowest_terms():
    events = ingest.parse_mel_text('note A 4 2/8\nnote A 4 1/12\nnote A 4 3/8\n')
    assert [str(event.duration) for event in events] == ['1/4', '1/12', '3/8']


def test_mel_chord():
    events = ingest.parse_mel_text('chord G/4,C/4,E/4 1/2\n')
    assert events[0].kind == 'chord'
    assert label(events[0]) == 'C4+E4+G4:1/2'


def test_mel_empty_text():
    assert ingest.parse_mel_text('# nothing but a comment\n') == []


@pytest.mark.parametrize(
    'text, line',
    [
        ('note C 4 1/8\nnote H 4 1/8\n', 2),
        ('note C 4 0/8\n', 1),
        ('rest\n', 1),
        ('note C 4 1/8\nnote C 4 1/8\nslide C 4 1/8\n', 3),
        ('chord C/4 1/4\n', 1),
        ('chord C/4,C/4 1/4\n', 1),
        ('note C x 1/4\n', 1),
        ('note C 4 9/1\n', 1)
    ]
)
def test_mel_malformed(text, line):
    with pytest.raises(ParseError) as e:
        ingest.parse_mel_text(text, source='bad.mel')
    assert e.value.line == line
    assert e.value.source == 'bad.mel'
    assert str(e.value).startswith('bad.mel:%s: ' % (line))


def test_format_mel_reparses(random_melody):
    events = random_melody(7, length=60)
    events.append(MelodyEvent.chord([Pitch(PitchClass('E'), 4), Pitch(PitchClass('C'), 4)], Duration(1, 2), 60))
    text = ingest.format_mel(events, header='generated')
    assert text.startswith('# generated\n')
    assert ingest.parse_mel_text(text) == events


def test_musicxml_matches_mel(fixtures, figure1_events):
    events = ingest.read_events(os.path.join(fixtures, 'figure1.musicxml'))
    assert events == figure1_events


def test_musicxml_chords_dots_and_tuplets():
    document = """<?xml version="1.0" encoding="UTF-8"?>
<score-partwise version="3.1">
  <part id="P1">
    <measure number="1">
      <attributes><divisions>6</divisions></attributes>
      <note><pitch><step>C</step><octave>4</octave></pitch><duration>9</duration><type>quarter</type><dot/></note>
      <note><chord/><pitch><step>E</step><alter>-1</alter><octave>4</octave></pitch><duration>9</duration><type>quarter</type><dot/></note>
      <note><pitch><step>D</step><octave>4</octave></pitch><duration>2</duration><type>eighth</type>
        <time-modification><actual-notes>3</actual-notes><normal-notes>2</normal-notes></time-modification></note>
      <note><grace/><pitch><step>B</step><octave>3</octave></pitch><type>eighth</type></note>
      <note><rest/><duration>6</duration><type>quarter</type></note>
    </measure>
  </part>
</score-partwise>
"""
    warnings = []
    events = ingest.parse_musicxml(document, source='chord.musicxml', warnings=warnings)
    assert [label(event) for event in events] == ['C4+D#4:3/8', 'D4:1/12', 'R:1/4']
    assert any('Grace' in warning for warning in warnings)


def test_musicxml_only_first_part_and_voice():
    document = """<score-partwise>
  <part id="P1">
    <measure number="1">
      <note><pitch><step>A</step><octave>4</octave></pitch><voice>1</voice><type>half</type></note>
      <note><pitch><step>F</step><octave>3</octave></pitch><voice>2</voice><type>half</type></note>
    </measure>
  </part>
  <part id="P2">
    <measure number="1">
      <note><pitch><step>G</step><octave>2</octave></pitch><type>whole</type></note>
    </measure>
  </part>
</score-partwise>
"""
    warnings = []
    events = ingest.parse_musicxml(document, warnings=warnings)
    assert [label(event) for event in events] == ['A4:1/2']
    assert len(warnings) == 2


@pytest.mark.parametrize(
    'document',
    [
        '<score-partwise><part id="P1">',
        '<score-timewise><part id="P1"/></score-timewise>',
        '<score-partwise></score-partwise>',
        '<score-partwise><part id="P1"><measure><note><type>quarter</type></note></measure></part></score-partwise>',
        '<score-partwise><part id="P1"><measure><note><chord/><pitch><step>C</step><octave>4</octave></pitch>'
        '<type>quarter</type></note></measure></part></score-partwise>'
    ]
)
def test_musicxml_malformed(document):
    with pytest.raises(ParseError):
        ingest.parse_musicxml(document, source='bad.musicxml')


def test_edge_list():
    net = ingest.parse_edge_list('a b 2\n# comment\nb a 1.5\na b 1\n\nb b 1\n', name='edges')
    assert net.nodes == ('a', 'b')
    assert dict(net.edges) == {('a', 'b'): 3, ('b', 'a'): 1.5, ('b', 'b'): 1}
    assert net.sequence == ()
    assert net.directed


@pytest.mark.parametrize(
    'text, line',
    [
        ('a b 1\na b\n', 2),
        ('a b x\n', 1),
        ('a b 0\n', 1),
        ('a b -2\n', 1),
        ('a b 1 2\n', 1)
    ]
)
def test_edge_list_malformed(text, line):
    with pytest.raises(ParseError) as e:
        ingest.parse_edge_list(text, source='bad.edges')
    assert e.value.line == line


def test_network_json_reads_back(figure1):
    from melonet.export import to_json

    assert ingest.parse_network_json(to_json(figure1)) == figure1


def test_network_json_malformed():
    with pytest.raises(ParseError):
        ingest.parse_network_json('{"name": "x", ')
    with pytest.raises(ParseError):
        ingest.parse_network_json('{"name": "x"}')


def test_read_network_by_extension(fixtures, figure1):
    assert ingest.read_network(os.path.join(fixtures, 'figure1.mel')) == figure1
    assert ingest.read_network(os.path.join(fixtures, 'figure1.musicxml')) == figure1
    assert ingest.read_network(os.path.join(fixtures, 'two_cliques.edges')).node_count == 8


def test_read_input_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        ingest.read_input(str(tmp_path / 'missing.mel'))
    with pytest.raises(ParseError):
        ingest.read_input(str(tmp_path / 'score.mid'))
    with pytest.raises(ParseError):
        ingest.read_events(os.path.join(os.path.dirname(__file__), 'fixtures', 'two_cliques.edges'))


def test_read_input_undecodable(tmp_path):
    path = tmp_path / 'latin.mel'
    path.write_bytes(b'note C 4 1/8\n# caf\xe9\n')
    with pytest.raises(ParseError) as error:
        ingest.read_input(str(path))
    assert error.value.source == 'latin.mel'
    assert 'Invalid UTF-8' in str(error.value)


def test_read_input_directory(tmp_path):
    (tmp_path / 'solos').mkdir()
    with pytest.raises(ParseError) as error:
        ingest.read_input(str(tmp_path / 'solos') + '/')
    assert str(error.value) == 'solos: The input is a directory, not a file.'


def test_track_name_and_support():
    assert ingest.track_name('/corpus/Solo One.musicxml') == 'Solo One'
    assert ingest.is_supported('x.MEL')
    assert not ingest.is_supported('x.mid')


def test_node_label_parse():
    for text in ['C4:1/8', 'R:3/8', 'C4+E4+G4:1/2', 'A#3:1/12']:
        assert str(NodeLabel.parse(text)) == text
    assert NodeLabel.parse('D4:1/8').to_event(3) == MelodyEvent.note(Pitch(PitchClass('D'), 4), Duration(1, 8), 3)


def test_build_from_musicxml_and_mel_agree(fixtures):
    mel = ingest.read_events(os.path.join(fixtures, 'figure1.mel'))
    xml = ingest.read_events(os.path.join(fixtures, 'figure1.musicxml'))
    assert build_network(mel, 'x') == build_network(xml, 'x')
