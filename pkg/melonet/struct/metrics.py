""" Network metrics """

from __future__ import annotations
from typing import Dict, List, NamedTuple, Tuple, Union
from dataclasses import dataclass, field
import json

from melonet.struct.smallworld import SmallWorldResult


@dataclass(frozen=True)
class DegreeRecord():
    """ A `class` that represents the degree of one node, counting distinct edges.

    Attributes
    ----------
    node: `str`
        The node label.
    in_degree: `int`
        The number of distinct edges entering the node.
    out_degree: `int`
        The number of distinct edges leaving the node.
    total_degree: `int`
        The sum of the in- and out-degree. A self-loop contributes 1 to each.
    """
    node: str
    in_degree: int
    out_degree: int
    total_degree: int

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.metrics.DegreeRecord` object as a `dict`. """
        return {
            'node': self.node,
            'in_degree': self.in_degree,
            'out_degree': self.out_degree,
            'total_degree': self.total_degree
        }


@dataclass(frozen=True)
class DegreeDistribution():
    """ A `class` that represents a degree distribution P(k).

    Attributes
    ----------
    probabilities: `Dict[int, float]`
        The map from degree k to the fraction of nodes with degree k, sorted by k.
    """
    probabilities: Dict[int, float]

    def __post_init__(self):
        object.__setattr__(
            self,
            'probabilities',
            {int(k): float(p) for k, p in sorted(self.probabilities.items()) if p > 0}
        )

    def from_degrees(degrees: List[int]) -> DegreeDistribution:
        """ Returns the `melonet.struct.metrics.DegreeDistribution` of a list of node degrees. """
        counts: Dict[int, int] = {}
        for degree in degrees:
            counts[degree] = counts.get(degree, 0) + 1
        return DegreeDistribution({k: count / len(degrees) for k, count in counts.items()})

    @property
    def support(self) -> List[int]:
        """ Returns the degrees with positive probability, ascending. """
        return list(self.probabilities.keys())

    def cumulative(self) -> List[Tuple[int, float]]:
        """ Returns the cumulative distribution as (k, P(K <= k)) pairs. The last fraction is
        pinned to 1.
        """
        pairs = []
        running = 0.0
        for k, p in self.probabilities.items():
            running += p
            pairs.append((k, running))
        if pairs:
            pairs[-1] = (pairs[-1][0], 1.0)
        return pairs

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.metrics.DegreeDistribution` object as a `dict`. """
        return {str(k): p for k, p in self.probabilities.items()}


@dataclass(frozen=True)
class PowerLawFit():
    """ A `class` that represents a log-log least-squares fit of P(k) ~ k^(-lambda).

    Attributes
    ----------
    lambda_: `Union[float, None]`
        The fitted exponent (the negated slope), `None` with insufficient support.
    r_squared: `Union[float, None]`
        The coefficient of determination of the fit, `None` with insufficient support.
    scale_free: `bool`
        `True` when `r_squared >= threshold`.
    threshold: `float`
        The r-squared threshold applied.
    support: `int`
        The number of degrees with positive probability used by the fit.
    insufficient_support: `bool`
        `True` when fewer than three support points were available.
    """
    lambda_: Union[float, None]
    r_squared: Union[float, None]
    scale_free: bool
    threshold: float
    support: int
    insufficient_support: bool = field(default=False)

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.metrics.PowerLawFit` object as a `dict`. """
        return {
            'lambda': self.lambda_,
            'r_squared': self.r_squared,
            'scale_free': self.scale_free,
            'threshold': self.threshold,
            'support': self.support,
            'insufficient_support': self.insufficient_support
        }


class Distances(NamedTuple):
    """ Unweighted shortest-path summary over ordered reachable pairs. """
    avg_distance: float
    diameter: int
    reachable_fraction: float


class Clustering(NamedTuple):
    """ Clustering coefficients of the simple undirected projection. """
    global_: float
    avg_local: float
    degenerate: bool


@dataclass
class MetricsReport():
    """ A `class` that represents every scalar metric and distribution of one network.

    Fields that could not be computed for the network (for example distances on a
    single node) are `None` and the reason is listed in `flags`.
    """
    name: str
    length: int
    node_count: int
    edge_count: int
    total_weight: int
    avg_degree: Union[float, None]
    max_degree: Union[int, None]
    median_degree: Union[float, None]
    density: Union[float, None]
    avg_distance_directed: Union[float, None]
    avg_distance_undirected: Union[float, None]
    reachable_fraction_directed: Union[float, None]
    reachable_fraction_undirected: Union[float, None]
    diameter: Union[int, None]
    diameter_undirected: Union[int, None]
    clustering_global: Union[float, None]
    clustering_avg_local: Union[float, None]
    clustering_degenerate: bool
    degree_distribution: DegreeDistribution
    in_degree_distribution: DegreeDistribution
    out_degree_distribution: DegreeDistribution
    power_law: PowerLawFit
    betweenness: Dict[str, float]
    betweenness_normalized: bool
    top_nodes: Dict[str, List[Tuple[str, float]]]
    small_world: Union[SmallWorldResult, None] = field(default=None)
    flags: List[str] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.metrics.MetricsReport` object as a `dict`. """
        return {
            'name': self.name,
            'length': self.length,
            'node_count': self.node_count,
            'edge_count': self.edge_count,
            'total_weight': self.total_weight,
            'avg_degree': self.avg_degree,
            'max_degree': self.max_degree,
            'median_degree': self.median_degree,
            'density': self.density,
            'avg_distance_directed': self.avg_distance_directed,
            'avg_distance_undirected': self.avg_distance_undirected,
            'reachable_fraction_directed': self.reachable_fraction_directed,
            'reachable_fraction_undirected': self.reachable_fraction_undirected,
            'diameter': self.diameter,
            'diameter_undirected': self.diameter_undirected,
            'clustering_global': self.clustering_global,
            'clustering_avg_local': self.clustering_avg_local,
            'clustering_degenerate': self.clustering_degenerate,
            'degree_distribution': self.degree_distribution.to_dict(),
            'in_degree_distribution': self.in_degree_distribution.to_dict(),
            'out_degree_distribution': self.out_degree_distribution.to_dict(),
            'power_law': self.power_law.to_dict(),
            'betweenness': dict(sorted(self.betweenness.items())),
            'betweenness_normalized': self.betweenness_normalized,
            'top_nodes': {
                key: [{'node': node, 'value': value} for node, value in ranking]
                for key, ranking in self.top_nodes.items()
            },
            'small_world': self.small_world.to_dict() if self.small_world else None,
            'flags': list(self.flags),
            'config': dict(self.config)
        }

    def to_json(self) -> str:
        """ Returns the report as a stable-key, json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __repr__(self):
        """ Returns the `melonet.struct.metrics.MetricsReport` object as a json-formatted `str`. """
        return self.to_json()
