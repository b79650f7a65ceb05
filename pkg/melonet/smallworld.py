""" Small-world coefficient against a G(n, m) random-graph ensemble """

from typing import List, Tuple
from multiprocessing import Pool
import numpy as np
import networkx as nx

import melonet
from melonet import logging
from melonet.exceptions import DomainError
from melonet.network import undirected_projection
from melonet.struct.network import MelodyNetwork
from melonet.struct.smallworld import SmallWorldResult

LOGGER = logging.get_analysis_logger()


def random_graph(n: int, m: int, seed: int = melonet.SEED) -> MelodyNetwork:
    """ Returns a simple undirected graph drawn uniformly from the graphs with exactly `n`
    nodes and `m` edges. Nodes are labelled `0` to `n - 1` and every edge has weight 1.

    Parameters
    ----------
    n: `int`
        The number of nodes.
    m: `int`
        The number of edges, 0 <= m <= n(n - 1)/2.
    seed: `int`
        The random seed.
    """
    if n < 0:
        raise DomainError('Invalid node count {%s}. The node count must be >= 0.' % (n))
    if not 0 <= m <= n * (n - 1) // 2:
        raise DomainError(
            'Invalid edge count {%s}. The edge count must be within [0, %s] for %s nodes.' % (
                m,
                n * (n - 1) // 2,
                n
            )
        )
    graph = nx.gnm_random_graph(n, m, seed=seed)
    return MelodyNetwork(
        name='gnm-%s-%s-%s' % (n, m, seed),
        nodes=tuple(str(node) for node in graph.nodes),
        edges={(str(u), str(v)): 1 for u, v in graph.edges},
        directed=False
    )


def _summary(graph: nx.Graph) -> Tuple[float, float]:
    """ Returns the average local clustering of an undirected graph and its average distance,
    the distance measured over its largest connected component. Of several largest components
    the one holding the first node is used.
    """
    component = graph.subgraph(max(nx.connected_components(graph), key=len))
    return (
        float(nx.average_clustering(graph)),
        float(nx.average_shortest_path_length(component))
    )


def _member(job: Tuple[int, int, int]) -> Tuple[float, float]:
    """ Returns the clustering and average distance of one ensemble member. """
    n, m, seed = job
    return _summary(nx.gnm_random_graph(n, m, seed=seed))


def small_world_sigma(
    net: MelodyNetwork,
    ensemble_size: int = melonet.ENSEMBLE_SIZE,
    seed: int = melonet.SEED,
    workers: int = 1
) -> SmallWorldResult:
    """ Compares the clustering and average distance of the network's undirected projection
    (self-loops dropped) with the means over an ensemble of G(n, m) random graphs of the same
    size, sigma = (cc / cc_rg) / (l / l_rg). Member `i` is drawn with seed `seed + i`. The
    network and every member measure l over their largest connected component.

    Parameters
    ----------
    net: `melonet.struct.network.MelodyNetwork`
        The network.
    ensemble_size: `int`
        The number of random graphs, >= 1.
    seed: `int`
        The base seed.
    workers: `int`
        The number of worker processes. Results are merged in member order.
    """
    if ensemble_size < 1:
        raise DomainError('Invalid ensemble size {%s}. The ensemble size must be >= 1.' % (ensemble_size))

    projection = undirected_projection(net, keep_self_loops=False)
    n = projection.node_count
    m = projection.edge_count
    if n < 3 or m < 1:
        raise DomainError(
            'Invalid network {%s}. The small-world coefficient requires >= 3 nodes and >= 1 edge, found %s nodes and %s edges.' % (
                net.name,
                n,
                m
            )
        )

    cc, l = _summary(projection.to_graph())  # noqa: E741

    jobs = [(n, m, seed + i) for i in range(ensemble_size)]
    if workers > 1 and ensemble_size > 1:
        with Pool(processes=min(workers, ensemble_size)) as pool:
            members: List[Tuple[float, float]] = pool.map(_member, jobs)
    else:
        members = [_member(job) for job in jobs]

    clustering = np.array([cc_ for cc_, _ in members])
    lengths = np.array([l_ for _, l_ in members])
    cc_rg = float(np.mean(clustering))
    l_rg = float(np.mean(lengths))
    ddof = 1 if ensemble_size > 1 else 0

    if cc_rg == 0:
        LOGGER.warning(
            'Undefined small-world coefficient for {%s}. The ensemble clustering is 0.' % (net.name)
        )
        sigma = None
    else:
        sigma = (cc / cc_rg) / (l / l_rg)

    return SmallWorldResult(
        cc=cc,
        cc_rg=cc_rg,
        l=l,
        l_rg=l_rg,
        sigma=sigma,
        ensemble_size=ensemble_size,
        seed=seed,
        n=n,
        m=m,
        cc_rg_sd=float(np.std(clustering, ddof=ddof)),
        l_rg_sd=float(np.std(lengths, ddof=ddof)),
        undefined=sigma is None
    )
