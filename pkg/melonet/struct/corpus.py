""" Corpus analysis """

from __future__ import annotations
from typing import List, Tuple, Union
from dataclasses import dataclass, field, fields
import json


@dataclass(frozen=True)
class CorpusRow():
    """ A `class` that represents the analysis of one successfully parsed track.

    Metric attributes mirror `melonet.struct.metrics.MetricsReport`; `None` marks a
    metric that is undefined for the track.
    """
    track: str
    path: str
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
    diameter: Union[int, None]
    clustering_global: Union[float, None]
    clustering_avg_local: Union[float, None]
    power_law_lambda: Union[float, None]
    power_law_r_squared: Union[float, None]
    scale_free: bool
    sigma: Union[float, None]
    modularity_q: Union[float, None]
    communities: Union[int, None]
    warnings: int = field(default=0)

    def columns() -> List[str]:
        """ Returns the stable column order of a corpus table. """
        return [field_.name for field_ in fields(CorpusRow)]

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.corpus.CorpusRow` object as a `dict` in column order. """
        return {column: getattr(self, column) for column in CorpusRow.columns()}

    def __repr__(self):
        """ Returns the `melonet.struct.corpus.CorpusRow` object as a json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class CorpusFailure():
    """ A `class` that represents an input that could not be analyzed.

    Attributes
    ----------
    path: `str`
        The path of the input.
    reason: `str`
        The error message.
    """
    path: str
    reason: str

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.corpus.CorpusFailure` object as a `dict`. """
        return {'path': self.path, 'reason': self.reason}


@dataclass(frozen=True)
class CorpusAnalysis():
    """ A `class` that represents the analysis of a corpus.

    Attributes
    ----------
    rows: `List[melonet.struct.corpus.CorpusRow]`
        One row per analyzed track, sorted by track name.
    failures: `List[melonet.struct.corpus.CorpusFailure]`
        One entry per input that could not be analyzed, sorted by path.
    """
    rows: List[CorpusRow]
    failures: List[CorpusFailure] = field(default_factory=list)

    @property
    def inputs(self) -> int:
        """ Returns the number of inputs, analyzed or failed. """
        return len(self.rows) + len(self.failures)


@dataclass(frozen=True)
class DistributionSummary():
    """ A `class` that represents the density and cumulative distribution of one metric
    across a corpus.

    Attributes
    ----------
    metric: `str`
        The metric name.
    histogram: `List[Tuple[float, float, float]]`
        Equal-width bins as (lower edge, width, density); densities integrate to 1.
    cdf: `List[Tuple[float, float]]`
        The empirical cumulative distribution as (value, fraction <= value), non-decreasing
            and ending at 1.
    n: `int`
        The number of samples.
    """
    metric: str
    histogram: List[Tuple[float, float, float]]
    cdf: List[Tuple[float, float]]
    n: int

    def to_dict(self) -> dict:
        """ Returns the `melonet.struct.corpus.DistributionSummary` object as a `dict`. """
        return {
            'metric': self.metric,
            'histogram': [list(bin_) for bin_ in self.histogram],
            'cdf': [list(point) for point in self.cdf],
            'n': self.n
        }

    def __repr__(self):
        """ Returns the `melonet.struct.corpus.DistributionSummary` object as a json-formatted `str`. """
        return json.dumps(self.to_dict(), indent=2)
