""" Small-world coefficient """

from __future__ import annotations
from typing import Union
from dataclasses import dataclass, field
import json


@dataclass(frozen=True)
class SmallWorldResult():
    """ A `class` that represents the small-world comparison of a network against an
    ensemble of G(n, m) random graphs of the same size.

    Attributes
    ----------
    cc: `float`
        The average local clustering coefficient of the undirected projection.
    cc_rg: `float`
        The ensemble mean of the average local clustering coefficient.
    l: `float`
        The average shortest-path distance of the undirected projection.
    l_rg: `float`
        The ensemble mean of the average shortest-path distance, each member measured
            over its largest connected component.
    sigma: `Union[float, None]`
        (cc / cc_rg) / (l / l_rg), `None` when `cc_rg` is 0.
    ensemble_size: `int`
        The number of random graphs.
    seed: `int`
        The base seed. Member `i` is drawn with `seed + i`.
    n: `int`
        The number of nodes of the projection.
    m: `int`
        The number of edges of the projection.
    cc_rg_sd: `float`
        The ensemble standard deviation of the clustering coefficient.
    l_rg_sd: `float`
        The ensemble standard deviation of the average distance.
    undefined: `bool`
        `True` when sigma is undefined because `cc_rg` is 0.
    l_rg_scope: `str`
        The component over which random-graph distances are measured.
    """
    cc: float
    cc_rg: float
    l: float  # noqa: E741
    l_rg: float
    sigma: Union[float, None]
    ensemble_size: int
    seed: int
    n: int
    m: int
    cc_rg_sd: float = field(default=0.0)
    l_rg_sd: float = field(default=0.0)
    undefined: bool = field(default=False)
    l_rg_scope: str = field(default='largest_component')

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.smallworld.SmallWorldResult` object as a `dict`. """
        return {
            'cc': self.cc,
            'cc_rg': self.cc_rg,
            'l': self.l,
            'l_rg': self.l_rg,
            'sigma': self.sigma,
            'ensemble_size': self.ensemble_size,
            'seed': self.seed,
            'n': self.n,
            'm': self.m,
            'cc_rg_sd': self.cc_rg_sd,
            'l_rg_sd': self.l_rg_sd,
            'undefined': self.undefined,
            'l_rg_scope': self.l_rg_scope
        }

    def __repr__(self):
        """ Returns the `melonet.struct.smallworld.SmallWorldResult` object as a json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2)
