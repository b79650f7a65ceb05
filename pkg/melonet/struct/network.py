""" Note-transition network """

from __future__ import annotations
from typing import Dict, Literal, Tuple, Union
from dataclasses import dataclass, field
from types import MappingProxyType
import json
import re
import networkx as nx

from melonet.exceptions import DomainError
from melonet.struct.score import Duration, MelodyEvent, Pitch, PitchClass


REST_PREFIX: str = 'R'
_PITCH_PATTERN = re.compile(r'^([A-G]#?)(\d)$')


@dataclass(frozen=True)
class NodeLabel():
    """ A `class` that represents the canonical identity of a network node.

    The canonical text forms are,
        - note: `<PITCH><OCTAVE>:<NUM>/<DEN>`, e.g. `D4:1/8`
        - rest: `R:<NUM>/<DEN>`, e.g. `R:1/8`
        - chord: `<P1><O1>+<P2><O2>+...:<NUM>/<DEN>`, e.g. `C4+E4+G4:1/2`

    Attributes
    ----------
    kind: `Literal['note', 'rest', 'chord']`
        The kind of score element.
    pitches: `Tuple[melonet.struct.score.Pitch, ...]`
        The sorted pitches of the element.
    duration: `melonet.struct.score.Duration`
        The relative duration of the element.
    """
    kind: Literal['note', 'rest', 'chord']
    pitches: Tuple[Pitch, ...]
    duration: Duration

    def from_event(event: MelodyEvent) -> NodeLabel:
        """ Returns the `melonet.struct.network.NodeLabel` of a `melonet.struct.score.MelodyEvent`. """
        return NodeLabel(event.kind, tuple(event.pitches), event.duration)

    def parse(text: str) -> NodeLabel:
        """ Returns a `melonet.struct.network.NodeLabel` object from its canonical text.

        Parameters
        ----------
        text: `str`
            The canonical label text.
        """
        head, sep, duration = text.partition(':')
        if not sep:
            raise DomainError('Invalid node label {%s}. Expected `<BODY>:<NUM>/<DEN>`.' % (text))
        duration_ = Duration.parse(duration)

        if head == REST_PREFIX:
            return NodeLabel('rest', (), duration_)

        pitches = []
        for part in head.split('+'):
            match = _PITCH_PATTERN.match(part)
            if not match:
                raise DomainError('Invalid node label {%s}. Unknown pitch {%s}.' % (text, part))
            pitches.append(Pitch(PitchClass(match.group(1)), int(match.group(2))))

        if len(pitches) == 1:
            return NodeLabel('note', tuple(pitches), duration_)
        if pitches != sorted(set(pitches)):
            raise DomainError('Invalid node label {%s}. Chord pitches must be sorted and distinct.' % (text))
        return NodeLabel('chord', tuple(pitches), duration_)

    def to_event(self, position: int = 0) -> MelodyEvent:
        """ Returns the `melonet.struct.score.MelodyEvent` shape of the label at a position. """
        return MelodyEvent(self.kind, self.pitches, self.duration, position)

    def __str__(self):
        if self.kind == 'rest':
            return '%s:%s' % (REST_PREFIX, self.duration)
        return '%s:%s' % ('+'.join(str(pitch) for pitch in self.pitches), self.duration)


def label(event: MelodyEvent) -> str:
    """ Returns the canonical node label text of a score element. """
    return str(NodeLabel.from_event(event))


def is_rest(node: str) -> bool:
    """ Returns `True` when the node label text is a rest label. """
    return node.startswith('%s:' % (REST_PREFIX))


@dataclass(frozen=True)
class MelodyNetwork():
    """ A `class` that represents a weighted note-transition network.

    Attributes
    ----------
    name: `str`
        The track identifier.
    nodes: `Tuple[str, ...]`
        The node labels, sorted ascending.
    edges: `Dict[Tuple[str, str], int]`
        The read-only map from (source, target) to the positive transition count (edge lists
            may carry real weights). Undirected networks key each edge by its endpoints in
            ascending order.
    sequence: `Tuple[str, ...]`
        The full label order of the score, empty when the network cannot be reconstructed.
    directed: `bool`
        `False` for undirected projections and random graphs.
    """
    name: str
    nodes: Tuple[str, ...]
    edges: Dict[Tuple[str, str], int]
    sequence: Tuple[str, ...] = field(default=())
    directed: bool = field(default=True)

    def __post_init__(self):
        nodes = tuple(sorted(set(self.nodes)))
        edges = {}
        for (source, target), weight in sorted(self.edges.items()):
            if not self.directed and target < source:
                source, target = target, source
            if weight <= 0:
                raise DomainError(
                    'Invalid edge weight {%s -> %s: %s}. Weights must be positive.' % (source, target, weight)
                )
            edges[(source, target)] = edges.get((source, target), 0) + weight

        members = set(nodes)
        missing = sorted(
            {node for edge in edges for node in edge if node not in members}
            | {node for node in self.sequence if node not in members}
        )
        if missing:
            raise DomainError(
                'Invalid network {%s}. Unknown nodes [%s].' % (self.name, ', '.join(missing))
            )

        object.__setattr__(self, 'nodes', nodes)
        object.__setattr__(self, 'edges', MappingProxyType(dict(sorted(edges.items()))))
        object.__setattr__(self, 'sequence', tuple(self.sequence))

    @property
    def node_count(self) -> int:
        """ Returns the number of nodes as an `int`. """
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        """ Returns the number of distinct edges as an `int`. """
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        """ Returns the sum of all edge weights as an `int`. """
        return sum(self.edges.values())

    def weight(self, source: str, target: str) -> int:
        """ Returns the weight of an edge, 0 when the edge does not exist. """
        if not self.directed and target < source:
            source, target = target, source
        return self.edges.get((source, target), 0)

    def to_graph(self) -> Union[nx.DiGraph, nx.Graph]:
        """ Returns a new `networkx.DiGraph` (or `networkx.Graph` when undirected) with
        `weight` edge attributes and `label` node attributes.
        """
        graph = nx.DiGraph(name=self.name) if self.directed else nx.Graph(name=self.name)
        graph.add_nodes_from((node, {'label': node}) for node in self.nodes)
        graph.add_weighted_edges_from(
            (source, target, weight) for (source, target), weight in self.edges.items()
        )
        return graph

    def to_digraph(self) -> nx.DiGraph:
        """ Returns a new `networkx.DiGraph`; undirected edges become reciprocal arcs. """
        graph = self.to_graph()
        return graph if self.directed else graph.to_directed()

    def from_graph(
        graph: Union[nx.Graph, nx.DiGraph],
        name: str = '',
        weight: str = 'weight'
    ) -> MelodyNetwork:
        """ Returns a `melonet.struct.network.MelodyNetwork` from a `networkx` graph. Node ids
        are converted to `str`; missing weights count as 1.

        Parameters
        ----------
        graph: `Union[networkx.Graph, networkx.DiGraph]`
            The graph to convert.
        name: `str`
            The track identifier.
        weight: `str`
            The edge attribute holding the weight.
        """
        if graph.is_multigraph():
            raise DomainError('Invalid graph. Multigraphs are not supported.')
        return MelodyNetwork(
            name=name or str(graph.name or ''),
            nodes=tuple(str(node) for node in graph.nodes),
            edges={
                (str(source), str(target)): _as_weight(data.get(weight, 1))
                for source, target, data in graph.edges(data=True)
            },
            directed=graph.is_directed()
        )

    def from_dict(dict_object: dict) -> MelodyNetwork:
        """ Returns a `melonet.struct.network.MelodyNetwork` object from a `dict`.

        Parameters
        ----------
        dict_object : `dict`
            The dictionary object to convert to a `melonet.struct.network.MelodyNetwork` object.
        """

        # Assert object type
        if not isinstance(dict_object, dict):
            raise TypeError('Object must be a `dict`.')

        # Assert keys
        missing_keys = [
            key for key in ['name', 'nodes', 'edges', 'sequence']
            if key not in dict_object
        ]
        if missing_keys:
            raise KeyError(
                'Missing keys. The `dict` object is missing the following required keys [%s].' % (
                    ','.join(["'%s'" % (key) for key in missing_keys])
                )
            )

        edges: Dict[Tuple[str, str], int] = {}
        for edge in dict_object['edges']:
            key = (str(edge['source']), str(edge['target']))
            edges[key] = edges.get(key, 0) + _as_weight(edge['weight'])

        return MelodyNetwork(
            name=str(dict_object['name']),
            nodes=tuple(str(node) for node in dict_object['nodes']),
            edges=edges,
            sequence=tuple(str(node) for node in dict_object['sequence']),
            directed=bool(dict_object.get('directed', True))
        )

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.network.MelodyNetwork` object as a `dict`. """
        return {
            'name': self.name,
            'directed': self.directed,
            'nodes': list(self.nodes),
            'edges': [
                {'source': source, 'target': target, 'weight': weight}
                for (source, target), weight in self.edges.items()
            ],
            'sequence': list(self.sequence)
        }

    def __repr__(self):
        """ Returns the `melonet.struct.network.MelodyNetwork` object as a json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2)

    def __eq__(self, compare):
        """ Returns `True` when compare holds the same nodes, edges and sequence.

        Parameters
        ----------
        compare: `melonet.struct.network.MelodyNetwork`
            An instance of a `melonet.struct.network.MelodyNetwork` object.
        """
        if isinstance(compare, MelodyNetwork):
            return (
                self.nodes == compare.nodes
                and dict(self.edges) == dict(compare.edges)
                and self.sequence == compare.sequence
                and self.directed == compare.directed
            )
        return False

    def __hash__(self):
        return hash((self.name, self.nodes, tuple(self.edges.items()), self.sequence, self.directed))


def _as_weight(value) -> Union[int, float]:
    value = float(value)
    return int(value) if value.is_integer() else value


def empty(name: str = '', directed: bool = True) -> MelodyNetwork:
    """ Returns an empty `melonet.struct.network.MelodyNetwork`. """
    return MelodyNetwork(name=name, nodes=(), edges={}, directed=directed)
