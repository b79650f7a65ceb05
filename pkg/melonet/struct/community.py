""" Community assignment """

from __future__ import annotations
from typing import Dict, List, Set
from dataclasses import dataclass, field
import json


@dataclass(frozen=True)
class CommunityAssignment():
    """ A `class` that represents a partition of network nodes into communities.

    Attributes
    ----------
    mapping: `Dict[str, int]`
        The map from node label to community id. Ids are dense, from 0.
    modularity_q: `float`
        The weighted modularity of the partition.
    resolution: `float`
        The modularity resolution used by the detector.
    seed: `int`
        The visit-order seed used by the detector; 0 means ascending label order.
    degenerate: `bool`
        `True` when the network carries no edge weight and Q is 0 by convention.
    """
    mapping: Dict[str, int]
    modularity_q: float
    resolution: float = field(default=1.0)
    seed: int = field(default=0)
    degenerate: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, 'mapping', dict(sorted(self.mapping.items())))

    @property
    def community_count(self) -> int:
        """ Returns the number of communities as an `int`. """
        return len(set(self.mapping.values()))

    @property
    def community_sizes(self) -> List[int]:
        """ Returns the size of each community, indexed by community id. """
        sizes = [0] * self.community_count
        for community in self.mapping.values():
            sizes[community] += 1
        return sizes

    def communities(self) -> List[Set[str]]:
        """ Returns the member sets of each community, indexed by community id. """
        members: List[Set[str]] = [set() for _ in range(self.community_count)]
        for node, community in self.mapping.items():
            members[community].add(node)
        return members

    def from_dict(dict_object: dict) -> CommunityAssignment:
        """ Returns a `melonet.struct.community.CommunityAssignment` object from a `dict`.

        Parameters
        ----------
        dict_object : `dict`
            The dictionary object to convert to a `melonet.struct.community.CommunityAssignment` object.
        """

        # Assert object type
        if not isinstance(dict_object, dict):
            raise TypeError('Object must be a `dict`.')

        # Assert keys
        missing_keys = [
            key for key in ['mapping', 'modularity_q']
            if key not in dict_object
        ]
        if missing_keys:
            raise KeyError(
                'Missing keys. The `dict` object is missing the following required keys [%s].' % (
                    ','.join(["'%s'" % (key) for key in missing_keys])
                )
            )

        return CommunityAssignment(
            mapping={str(node): int(community) for node, community in dict_object['mapping'].items()},
            modularity_q=float(dict_object['modularity_q']),
            resolution=float(dict_object.get('resolution', 1.0)),
            seed=int(dict_object.get('seed', 0)),
            degenerate=bool(dict_object.get('degenerate', False))
        )

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.community.CommunityAssignment` object as a `dict`. """
        return {
            'mapping': dict(self.mapping),
            'modularity_q': self.modularity_q,
            'community_sizes': self.community_sizes,
            'resolution': self.resolution,
            'seed': self.seed,
            'degenerate': self.degenerate
        }

    def __repr__(self):
        """ Returns the `melonet.struct.community.CommunityAssignment` object as a json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2)
