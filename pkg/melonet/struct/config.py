""" Run configuration """

from __future__ import annotations
from typing import List, Literal
from dataclasses import dataclass, field
import json
from pytensils import config, utils

import melonet


SUBCOMMANDS: List[str] = ['build', 'metrics', 'communities', 'corpus', 'convert']
EXPORTS: List[str] = ['json', 'gexf', 'dot']
SUMMARY_METRICS: List[str] = [
    'length',
    'node_count',
    'edge_count',
    'avg_degree',
    'max_degree',
    'median_degree',
    'density',
    'avg_distance_undirected',
    'diameter',
    'clustering_avg_local',
    'sigma',
    'modularity_q'
]


@dataclass
class RunConfig():
    """ A `class` that represents the configuration of one `melonet` run.

    Attributes
    ----------
    subcommand: `Literal['build', 'metrics', 'communities', 'corpus', 'convert']`
        The pipeline stage.
    inputs: `List[str]`
        The input score, network or corpus paths.
    out: `str`
        The output directory.
    seed: `int`
        The seed of every randomized stage.
    ensemble: `int`
        The number of random graphs in the small-world ensemble.
    r2_threshold: `float`
        The min. log-log r-squared for a scale-free degree distribution.
    resolution: `float`
        The modularity resolution.
    community_seed: `int`
        The community visit-order seed, 0 for ascending label order.
    bins: `int`
        The number of histogram bins for corpus distributions.
    top: `int`
        The length of the ranked node lists of a metrics report.
    workers: `int`
        The number of worker processes for corpus and ensemble stages.
    remove_rests: `bool`
        Removes rest nodes before the analysis.
    undirected: `bool`
        Analyzes the undirected projection instead of the directed network.
    normalize_betweenness: `bool`
        Divides betweenness by (n - 1)(n - 2).
    small_world: `bool`
        Computes the small-world coefficient.
    exports: `List[str]`
        The network export formats.
    metrics: `List[str]`
        The corpus metrics to summarize.
    """
    subcommand: Literal['build', 'metrics', 'communities', 'corpus', 'convert'] = field(default='metrics')
    inputs: List[str] = field(default_factory=list)
    out: str = field(default='.')
    seed: int = field(default=melonet.SEED)
    ensemble: int = field(default=melonet.ENSEMBLE_SIZE)
    r2_threshold: float = field(default=melonet.R2_THRESHOLD)
    resolution: float = field(default=melonet.RESOLUTION)
    community_seed: int = field(default=0)
    bins: int = field(default=melonet.BINS)
    top: int = field(default=melonet.TOP_NODES)
    workers: int = field(default=1)
    remove_rests: bool = field(default=False)
    undirected: bool = field(default=False)
    normalize_betweenness: bool = field(default=False)
    small_world: bool = field(default=True)
    exports: List[str] = field(default_factory=lambda: ['json'])
    metrics: List[str] = field(default_factory=lambda: list(SUMMARY_METRICS))

    def __post_init__(self):
        """ Validates the configuration. """
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(
                "Invalid subcommand {%s}. Subcommand must be one of [%s]." % (
                    self.subcommand,
                    ', '.join(SUBCOMMANDS)
                )
            )
        unknown = [export for export in self.exports if export not in EXPORTS]
        if unknown:
            raise ValueError(
                "Invalid export formats [%s]. Formats must be within [%s]." % (
                    ', '.join(unknown),
                    ', '.join(EXPORTS)
                )
            )
        if self.ensemble < 1:
            raise ValueError("Invalid ensemble size {%s}. Ensemble size must be >= 1." % (self.ensemble))
        if self.bins < 1:
            raise ValueError("Invalid bin count {%s}. Bin count must be >= 1." % (self.bins))
        if self.workers < 1:
            raise ValueError("Invalid worker count {%s}. Worker count must be >= 1." % (self.workers))
        if not 0.0 <= self.r2_threshold <= 1.0:
            raise ValueError("Invalid r-squared threshold {%s}. Threshold must be within [0, 1]." % (self.r2_threshold))
        if self.resolution <= 0:
            raise ValueError("Invalid resolution {%s}. Resolution must be > 0." % (self.resolution))

    def from_dict(dict_object: dict) -> RunConfig:
        """ Returns a `melonet.struct.config.RunConfig` object from a `dict`. Missing keys
        take their default values.

        Parameters
        ----------
        dict_object : `dict`
            The dictionary object to convert to a `melonet.struct.config.RunConfig` object.
        """

        # Assert object type
        if not isinstance(dict_object, dict):
            raise TypeError('Object must be a `dict`.')

        # Assert keys
        unknown_keys = [
            key for key in dict_object
            if key not in RunConfig.__dataclass_fields__
        ]
        if unknown_keys:
            raise KeyError(
                'Unknown keys. The `dict` object contains the following unsupported keys [%s].' % (
                    ','.join(["'%s'" % (key) for key in unknown_keys])
                )
            )

        # Convert datatypes
        dict_object = dict(dict_object)
        for key, dtype in DTYPES.items():
            if key not in dict_object or dtype == 'list':
                continue
            if isinstance(dict_object[key], str):
                dict_object[key] = utils.as_type(dict_object[key], dtype)
            else:
                dict_object[key] = CASTS[dtype](dict_object[key])
        for key in ['inputs', 'exports', 'metrics']:
            if key in dict_object:
                dict_object[key] = [str(value) for value in dict_object[key]]

        return RunConfig(**dict_object)

    def from_config(config: config.Handler) -> RunConfig:
        """ Returns a `melonet.struct.config.RunConfig` object from a `pytensils.config.Handler` object.

        Parameters
        ----------
        config: `pytensils.config.Handler`
            An instance of a `pytensils.config.Handler` object.
        """
        return RunConfig.from_dict(config.to_dict()['run'])

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.config.RunConfig` object as a `dict`. """
        return {
            'subcommand': self.subcommand,
            'inputs': list(self.inputs),
            'out': self.out,
            'seed': self.seed,
            'ensemble': self.ensemble,
            'r2_threshold': self.r2_threshold,
            'resolution': self.resolution,
            'community_seed': self.community_seed,
            'bins': self.bins,
            'top': self.top,
            'workers': self.workers,
            'remove_rests': self.remove_rests,
            'undirected': self.undirected,
            'normalize_betweenness': self.normalize_betweenness,
            'small_world': self.small_world,
            'exports': list(self.exports),
            'metrics': list(self.metrics)
        }

    def __repr__(self):
        """ Returns the `melonet.struct.config.RunConfig` object as a json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2)

    def __eq__(self, compare):
        """ Returns `True` when compare is an instance of self.

        Parameters
        ----------
        compare: `melonet.struct.config.RunConfig`
            An instance of a `melonet.struct.config.RunConfig` object.
        """
        if isinstance(compare, RunConfig):
            return self.to_dict() == compare.to_dict()
        return False


DTYPES: dict = {
    'subcommand': 'str',
    'inputs': 'list',
    'out': 'str',
    'seed': 'int',
    'ensemble': 'int',
    'r2_threshold': 'float',
    'resolution': 'float',
    'community_seed': 'int',
    'bins': 'int',
    'top': 'int',
    'workers': 'int',
    'remove_rests': 'bool',
    'undirected': 'bool',
    'normalize_betweenness': 'bool',
    'small_world': 'bool',
    'exports': 'list',
    'metrics': 'list'
}
CASTS: dict = {
    'str': str,
    'int': int,
    'float': float,
    'bool': bool
}
