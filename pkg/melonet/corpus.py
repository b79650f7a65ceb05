""" Corpus analysis

Runs the track pipeline (parse, build, metrics, small-world coefficient, communities) over
every input of a corpus, then summarizes per-track metrics as density and cumulative
distributions.
"""

from typing import List, Tuple, Union
from multiprocessing import Pool
import math
import os
import numpy as np

import melonet
from melonet import logging
from melonet.community import detect_communities
from melonet.exceptions import CorpusError, DomainError, ParseError
from melonet.export import write_table
from melonet.ingest import is_supported, read_network, track_name
from melonet.metrics import full_report
from melonet.network import remove_rests, undirected_projection
from melonet.smallworld import small_world_sigma
from melonet.struct.config import RunConfig
from melonet.struct.corpus import CorpusAnalysis, CorpusFailure, CorpusRow, DistributionSummary

LOGGER = logging.get_corpus_logger()


def expand_inputs(paths: List[Union[str, os.PathLike]]) -> List[str]:
    """ Returns the input files of a corpus. Directories expand to their supported files,
    sorted and non-recursive; files are kept as given.

    Parameters
    ----------
    paths: `List[Union[str, os.PathLike]]`
        Files and directories.
    """
    inputs: List[str] = []
    for path in paths:
        if os.path.isdir(path):
            inputs.extend(
                os.path.join(str(path), name)
                for name in sorted(os.listdir(path))
                if os.path.isfile(os.path.join(str(path), name)) and is_supported(name)
            )
        else:
            inputs.append(str(path))
    return inputs


def analyze_track(path: str, config: RunConfig) -> Union[CorpusRow, CorpusFailure]:
    """ Runs the track pipeline on one input and returns its row, or its failure when the
    input cannot be read or analyzed.

    Parameters
    ----------
    path: `str`
        The input file path.
    config: `melonet.struct.config.RunConfig`
        The run configuration.
    """
    warnings: List[str] = []
    try:
        net = read_network(path, warnings)
        if config.remove_rests:
            net = remove_rests(net)
        if config.undirected:
            net = undirected_projection(net, keep_self_loops=True)

        report = full_report(
            net,
            r2_threshold=config.r2_threshold,
            normalize_betweenness=config.normalize_betweenness,
            top=config.top
        )
        assignment = detect_communities(net, resolution=config.resolution, seed=config.community_seed)
    except (ParseError, DomainError, OSError, UnicodeDecodeError) as e:
        LOGGER.warning('Failed {%s}: %s' % (path, e))
        return CorpusFailure(path=str(path), reason=str(e))

    sigma = None
    if config.small_world:
        try:
            sigma = small_world_sigma(net, ensemble_size=config.ensemble, seed=config.seed).sigma
        except DomainError as e:
            LOGGER.debug(str(e))

    LOGGER.info('Analyzed {%s}: %s nodes, %s edges.' % (path, report.node_count, report.edge_count))
    return CorpusRow(
        track=track_name(path),
        path=str(path),
        length=report.length,
        node_count=report.node_count,
        edge_count=report.edge_count,
        total_weight=report.total_weight,
        avg_degree=report.avg_degree,
        max_degree=report.max_degree,
        median_degree=report.median_degree,
        density=report.density,
        avg_distance_directed=report.avg_distance_directed,
        avg_distance_undirected=report.avg_distance_undirected,
        diameter=report.diameter,
        clustering_global=report.clustering_global,
        clustering_avg_local=report.clustering_avg_local,
        power_law_lambda=report.power_law.lambda_,
        power_law_r_squared=report.power_law.r_squared,
        scale_free=report.power_law.scale_free,
        sigma=sigma,
        modularity_q=assignment.modularity_q,
        communities=assignment.community_count,
        warnings=len(warnings)
    )


def _analyze_track(job: Tuple[str, RunConfig]) -> Union[CorpusRow, CorpusFailure]:
    return analyze_track(*job)


def analyze_corpus(
    paths: List[Union[str, os.PathLike]],
    config: Union[RunConfig, None] = None
) -> CorpusAnalysis:
    """ Analyzes every input of a corpus. Inputs that fail are listed separately; rows are
    sorted by track name and failures by path.

    Parameters
    ----------
    paths: `List[Union[str, os.PathLike]]`
        Files and directories.
    config: `Union[melonet.struct.config.RunConfig, None]`
        The run configuration, defaults when `None`.
    """
    config = config or RunConfig(subcommand='corpus')

    inputs = expand_inputs(paths)
    if not inputs:
        raise CorpusError('Invalid corpus. The corpus has no inputs.')

    jobs = [(path, config) for path in inputs]
    if config.workers > 1 and len(jobs) > 1:
        with Pool(processes=min(config.workers, len(jobs))) as pool:
            results = pool.map(_analyze_track, jobs)
    else:
        results = [_analyze_track(job) for job in jobs]

    rows = sorted(
        [result for result in results if isinstance(result, CorpusRow)],
        key=lambda row: (row.track, row.path)
    )
    failures = sorted(
        [result for result in results if isinstance(result, CorpusFailure)],
        key=lambda failure: failure.path
    )
    if not rows:
        raise CorpusError('Invalid corpus. None of the %s inputs could be analyzed.' % (len(inputs)))

    LOGGER.info('Analyzed %s of %s inputs.' % (len(rows), len(inputs)))
    return CorpusAnalysis(rows=rows, failures=failures)


def summarize(rows: List[CorpusRow], metric: str, bins: int = melonet.BINS) -> DistributionSummary:
    """ Returns the equal-width histogram over [min, max] and the empirical cumulative
    distribution of one metric. A constant sample has a single bin [v, v + 1) of density 1.

    Parameters
    ----------
    rows: `List[melonet.struct.corpus.CorpusRow]`
        The corpus rows.
    metric: `str`
        A `melonet.struct.corpus.CorpusRow` column.
    bins: `int`
        The number of bins, >= 1.
    """
    numeric = [column for column in CorpusRow.columns() if column not in ('track', 'path')]
    if metric not in numeric:
        raise DomainError(
            'Invalid metric {%s}. Metric must be one of [%s].' % (metric, ', '.join(numeric))
        )
    if bins < 1:
        raise DomainError('Invalid bin count {%s}. Bin count must be >= 1.' % (bins))

    values = np.array(
        [
            float(getattr(row, metric)) for row in rows
            if getattr(row, metric) is not None and math.isfinite(float(getattr(row, metric)))
        ],
        dtype=float
    )
    if not values.size:
        raise DomainError('Invalid metric {%s}. The metric has no finite values.' % (metric))

    lower, upper = float(values.min()), float(values.max())
    if lower == upper:
        histogram = [(lower, 1.0, 1.0)]
    else:
        counts, edges = np.histogram(values, bins=bins, range=(lower, upper))
        width = (upper - lower) / bins
        histogram = [
            (float(edges[i]), width, float(count) / (values.size * width))
            for i, count in enumerate(counts)
        ]

    unique, counts = np.unique(values, return_counts=True)
    fractions = np.cumsum(counts) / values.size
    cdf = [(float(value), float(fraction)) for value, fraction in zip(unique, fractions)]
    cdf[-1] = (cdf[-1][0], 1.0)

    return DistributionSummary(metric=metric, histogram=histogram, cdf=cdf, n=int(values.size))


def write_corpus(
    analysis: CorpusAnalysis,
    out: Union[str, os.PathLike],
    metrics: List[str],
    bins: int = melonet.BINS
) -> List[str]:
    """ Writes `corpus.csv`, `failures.csv` and, per metric, `dist_<metric>.csv` and
    `cdf_<metric>.csv`. Returns the written paths.

    Parameters
    ----------
    analysis: `melonet.struct.corpus.CorpusAnalysis`
        The corpus analysis.
    out: `Union[str, os.PathLike]`
        The output directory.
    metrics: `List[str]`
        The metrics to summarize. Metrics without values are skipped with a warning.
    bins: `int`
        The number of histogram bins.
    """
    columns = CorpusRow.columns()
    paths = [
        write_table(
            [[getattr(row, column) for column in columns] for row in analysis.rows],
            columns,
            os.path.join(out, 'corpus.csv')
        ),
        write_table(
            [[failure.path, failure.reason] for failure in analysis.failures],
            ['path', 'reason'],
            os.path.join(out, 'failures.csv')
        )
    ]

    for metric in metrics:
        try:
            summary = summarize(analysis.rows, metric, bins)
        except DomainError as e:
            LOGGER.warning(str(e))
            continue
        paths.append(
            write_table(
                [list(bin_) for bin_ in summary.histogram],
                ['lower', 'width', 'density'],
                os.path.join(out, 'dist_%s.csv' % (metric))
            )
        )
        paths.append(
            write_table(
                [list(point) for point in summary.cdf],
                ['value', 'cumulative'],
                os.path.join(out, 'cdf_%s.csv' % (metric))
            )
        )

    return paths
