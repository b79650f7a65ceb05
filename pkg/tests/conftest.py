""" Shared fixtures and seeded generators """

from typing import Callable, List
import os
import random
import pytest

from melonet import ingest
from melonet.network import build_network
from melonet.struct.network import MelodyNetwork
from melonet.struct.score import Duration, MelodyEvent, Pitch, PitchClass

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')

FIGURE1_LABELS: List[str] = [
    'C4:1/8',
    'D4:1/8',
    'D4:1/8',
    'C4:1/8',
    'D4:1/8',
    'G4:1/8',
    'R:1/8',
    'G4:1/4',
    'G5:1/4'
]


def _random_melody(seed: int, length: int = 40, rests: float = 0.1) -> List[MelodyEvent]:
    """ Returns a seeded random melody drawn from a small pitch and duration vocabulary. """
    generator = random.Random(seed)
    durations = [Duration(1, 8), Duration(1, 4), Duration(3, 8), Duration(1, 2)]
    events = []
    for position in range(length):
        duration = generator.choice(durations)
        if generator.random() < rests:
            events.append(MelodyEvent.rest(duration, position))
        else:
            pitch = Pitch(PitchClass.from_index(generator.randrange(12)), generator.randint(3, 5))
            events.append(MelodyEvent.note(pitch, duration, position))
    return events


def _random_network(
    seed: int,
    n: int = 10,
    p: float = 0.3,
    directed: bool = True,
    weighted: bool = False,
    self_loops: bool = False
) -> MelodyNetwork:
    """ Returns a seeded random network on nodes `n00` to `n<n-1>`, each ordered (or
    unordered) pair linked with probability p.
    """
    generator = random.Random(seed)
    nodes = ['n%02d' % (i) for i in range(n)]
    edges = {}
    for i, source in enumerate(nodes):
        for j, target in enumerate(nodes):
            if i == j and not self_loops:
                continue
            if not directed and j < i:
                continue
            if generator.random() < p:
                edges[(source, target)] = generator.randint(1, 5) if weighted else 1
    return MelodyNetwork(name='random-%s' % (seed), nodes=tuple(nodes), edges=edges, directed=directed)


@pytest.fixture
def fixtures() -> str:
    return FIXTURES


@pytest.fixture
def figure1_path() -> str:
    return os.path.join(FIXTURES, 'figure1.mel')


@pytest.fixture
def figure1_events(figure1_path) -> List[MelodyEvent]:
    return ingest.read_events(figure1_path)


@pytest.fixture
def figure1(figure1_events) -> MelodyNetwork:
    return build_network(figure1_events, name='figure1')


@pytest.fixture
def two_cliques() -> MelodyNetwork:
    return ingest.read_network(os.path.join(FIXTURES, 'two_cliques.edges'))


@pytest.fixture
def random_melody() -> Callable[..., List[MelodyEvent]]:
    return _random_melody


@pytest.fixture
def random_network() -> Callable[..., MelodyNetwork]:
    return _random_network


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch, tmp_path):
    """ Keeps the seed variable and the settings directory out of every test. """
    from melonet.dal import settings

    monkeypatch.delenv('MELONET_SEED', raising=False)
    monkeypatch.setattr(settings, 'PATH', str(tmp_path / '.melonet'))


@pytest.fixture
def figure1_labels() -> List[str]:
    return list(FIGURE1_LABELS)
