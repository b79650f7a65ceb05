from collections import deque
from fractions import Fraction
import math
import pytest

from melonet import metrics
from melonet.exceptions import DomainError
from melonet.network import build_labels, remove_rests, undirected_projection
from melonet.struct.metrics import DegreeDistribution
from melonet.struct.network import MelodyNetwork


def _adjacency(net: MelodyNetwork) -> dict:
    adjacency = {node: set() for node in net.nodes}
    for source, target in net.edges:
        if source == target:
            continue
        adjacency[source].add(target)
        if not net.directed:
            adjacency[target].add(source)
    return adjacency


def _floyd_warshall(net: MelodyNetwork) -> dict:
    adjacency = _adjacency(net)
    distance = {
        (u, v): 0 if u == v else (1 if v in adjacency[u] else math.inf)
        for u in net.nodes for v in net.nodes
    }
    for w in net.nodes:
        for u in net.nodes:
            for v in net.nodes:
                if distance[(u, w)] + distance[(w, v)] < distance[(u, v)]:
                    distance[(u, v)] = distance[(u, w)] + distance[(w, v)]
    return distance


def _betweenness(net: MelodyNetwork) -> dict:
    """ Counts shortest paths from every source by breadth-first search. """
    adjacency = _adjacency(net)
    sigma, distance = {}, {}
    for source in net.nodes:
        sigma[source] = {source: 1}
        distance[source] = {source: 0}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for neighbour in sorted(adjacency[node]):
                if neighbour not in distance[source]:
                    distance[source][neighbour] = distance[source][node] + 1
                    sigma[source][neighbour] = 0
                    queue.append(neighbour)
                if distance[source][neighbour] == distance[source][node] + 1:
                    sigma[source][neighbour] += sigma[source][node]

    scores = {node: Fraction(0) for node in net.nodes}
    for s in net.nodes:
        for t in net.nodes:
            if s == t or t not in distance[s]:
                continue
            for v in net.nodes:
                if v in (s, t) or v not in distance[s] or t not in distance[v]:
                    continue
                if distance[s][v] + distance[v][t] == distance[s][t]:
                    scores[v] += Fraction(sigma[s][v] * sigma[v][t], sigma[s][t])
    return scores


def test_figure1_degrees(figure1):
    table = {record.node: record for record in metrics.degree_table(figure1)}
    assert (table['D4:1/8'].in_degree, table['D4:1/8'].out_degree, table['D4:1/8'].total_degree) == (2, 3, 5)
    assert table['G5:1/4'].total_degree == 1
    assert sum(record.in_degree for record in table.values()) == figure1.edge_count
    assert sum(record.out_degree for record in table.values()) == figure1.edge_count


def test_figure1_degree_distribution(figure1):
    dist = metrics.degree_distribution(figure1)
    assert dist.probabilities == pytest.approx({1: 1 / 6, 2: 4 / 6, 5: 1 / 6})
    cumulative = metrics.cumulative_distribution(dist)
    assert [k for k, _ in cumulative] == [1, 2, 5]
    assert [p for _, p in cumulative] == pytest.approx([1 / 6, 5 / 6, 1.0])
    assert cumulative[-1][1] == 1.0
    assert metrics.degree_distribution(figure1, 'in').probabilities == pytest.approx({1: 5 / 6, 2: 1 / 6})
    assert metrics.degree_distribution(figure1, 'out').probabilities == pytest.approx({0: 1 / 6, 1: 4 / 6, 3: 1 / 6})


def test_directed_star_distribution():
    net = MelodyNetwork(
        name='star',
        nodes=('c', 'l1', 'l2', 'l3', 'l4'),
        edges={('c', leaf): 1 for leaf in ['l1', 'l2', 'l3', 'l4']}
    )
    assert metrics.degree_distribution(net).probabilities == pytest.approx({1: 4 / 5, 4: 1 / 5})


def test_undirected_degrees_count_self_loops_twice(figure1):
    projection = undirected_projection(figure1, keep_self_loops=True)
    table = {record.node: record for record in metrics.degree_table(projection)}
    assert table['D4:1/8'].total_degree == 4
    assert table['D4:1/8'].in_degree == table['D4:1/8'].out_degree == 4


def test_degree_distribution_empty():
    with pytest.raises(DomainError):
        metrics.degree_distribution(remove_rests(build_labels(['R:1/4'])))


def test_density(figure1):
    assert metrics.density(figure1) == pytest.approx(7 / 36)
    assert metrics.density(build_labels(['A4:1/4'] * 3)) == 1.0
    with pytest.raises(DomainError):
        metrics.density(remove_rests(build_labels(['R:1/4'])))


def test_density_bounds(random_network):
    for seed in range(25):
        net = random_network(seed, n=9, p=0.4, self_loops=True)
        assert 0.0 <= metrics.density(net) <= 1.0


def test_figure1_distances(figure1):
    directed = metrics.distances(figure1, 'directed')
    assert directed.avg_distance == pytest.approx(2.25)
    assert directed.diameter == 5
    assert directed.reachable_fraction == pytest.approx(16 / 30)

    undirected = metrics.distances(figure1, 'undirected')
    assert undirected.avg_distance == pytest.approx(7 / 3)
    assert undirected.diameter == 5
    assert undirected.reachable_fraction == 1.0


def test_directed_path_distances():
    net = build_labels(['A4:1/4', 'B4:1/4', 'C5:1/4'])
    result = metrics.distances(net)
    assert result.avg_distance == pytest.approx(4 / 3)
    assert result.diameter == 2
    assert result.reachable_fraction == pytest.approx(0.5)


def test_distances_undefined():
    with pytest.raises(DomainError):
        metrics.distances(build_labels(['A4:1/4']))
    with pytest.raises(DomainError):
        metrics.distances(MelodyNetwork(name='pair', nodes=('a', 'b'), edges={}))
    with pytest.raises(ValueError):
        metrics.distances(build_labels(['A4:1/4', 'B4:1/4']), 'weighted')


@pytest.mark.parametrize('mode', ['directed', 'undirected'])
def test_distances_match_floyd_warshall(random_network, mode):
    for seed in range(25):
        net = random_network(seed, n=8, p=0.2)
        graph = net if mode == 'directed' else undirected_projection(net)
        distance = _floyd_warshall(graph)
        finite = [d for (u, v), d in distance.items() if u != v and d != math.inf]
        if not finite:
            with pytest.raises(DomainError):
                metrics.distances(net, mode)
            continue
        result = metrics.distances(net, mode)
        assert result.avg_distance == pytest.approx(sum(finite) / len(finite))
        assert result.diameter == max(finite)
        assert result.reachable_fraction == pytest.approx(len(finite) / (8 * 7))


def test_figure1_clustering(figure1):
    result = metrics.clustering(figure1)
    assert result.global_ == 0.0
    assert result.avg_local == 0.0
    assert not result.degenerate


def test_clustering_triangle():
    net = build_labels(['A4:1/4', 'B4:1/4', 'C5:1/4', 'A4:1/4', 'A4:1/4'])
    result = metrics.clustering(net)
    assert result.global_ == pytest.approx(1.0)
    assert result.avg_local == pytest.approx(1.0)


def test_clustering_degenerate():
    result = metrics.clustering(build_labels(['A4:1/4', 'B4:1/4', 'A4:1/4']))
    assert result.degenerate
    assert result.global_ == 0.0


def test_clustering_matches_triplet_count(random_network):
    for seed in range(25):
        net = random_network(seed, n=9, p=0.35, self_loops=True)
        adjacency = _adjacency(undirected_projection(net))

        triangles = 0
        triplets = 0
        local = []
        for node, neighbours in adjacency.items():
            neighbours = sorted(neighbours)
            pairs = len(neighbours) * (len(neighbours) - 1) // 2
            links = sum(
                1 for i, u in enumerate(neighbours) for w in neighbours[i + 1:] if w in adjacency[u]
            )
            triangles += links
            triplets += pairs
            local.append(links / pairs if pairs else 0.0)

        result = metrics.clustering(net)
        assert result.global_ == pytest.approx(triangles / triplets if triplets else 0.0)
        assert result.avg_local == pytest.approx(sum(local) / len(local))
        assert 0.0 <= result.global_ <= 1.0


def test_figure1_betweenness(figure1):
    result = metrics.betweenness(figure1)
    assert result == pytest.approx({
        'C4:1/8': 0.0,
        'D4:1/8': 4.0,
        'G4:1/4': 4.0,
        'G4:1/8': 6.0,
        'G5:1/4': 0.0,
        'R:1/8': 6.0
    })
    normalized = metrics.betweenness(figure1, normalized=True)
    assert normalized['G4:1/8'] == pytest.approx(6 / 20)


def test_star_betweenness():
    leaves = ['l%s' % (i) for i in range(5)]
    net = MelodyNetwork(
        name='star',
        nodes=tuple(['c'] + leaves),
        edges={('c', leaf): 1 for leaf in leaves},
        directed=False
    )
    result = metrics.betweenness(net)
    assert result['c'] == pytest.approx(20.0)
    assert all(result[leaf] == 0.0 for leaf in leaves)
    assert metrics.betweenness(net, normalized=True)['c'] == pytest.approx(1.0)


@pytest.mark.parametrize('directed, factor', [(True, 1), (False, 2)])
def test_path_betweenness(directed, factor):
    nodes = ['p%s' % (i) for i in range(6)]
    net = MelodyNetwork(
        name='path',
        nodes=tuple(nodes),
        edges={(nodes[i], nodes[i + 1]): 1 for i in range(5)},
        directed=directed
    )
    result = metrics.betweenness(net)
    for i, node in enumerate(nodes):
        assert result[node] == pytest.approx(factor * i * (5 - i))


def test_betweenness_matches_path_counting(random_network):
    for seed in range(10):
        net = random_network(seed, n=3 + seed % 6, p=0.35, self_loops=True)
        expected = _betweenness(net)
        result = metrics.betweenness(net)
        for node in net.nodes:
            assert result[node] == pytest.approx(float(expected[node]), abs=1e-9)


def test_power_law_exact():
    dist = DegreeDistribution({k: 0.5 * k ** -2.0 for k in range(1, 9)})
    fit = metrics.fit_power_law(dist)
    assert fit.lambda_ == pytest.approx(2.0, abs=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    assert fit.scale_free
    assert fit.support == 8


def test_power_law_flat():
    fit = metrics.fit_power_law(DegreeDistribution({1: 0.25, 2: 0.25, 3: 0.25, 4: 0.25}))
    assert abs(fit.lambda_) < 1e-9
    assert fit.r_squared == 1.0


def test_power_law_insufficient_support(figure1):
    fit = metrics.fit_power_law(DegreeDistribution({0: 0.5, 1: 0.25, 2: 0.25}))
    assert fit.insufficient_support
    assert fit.lambda_ is None
    assert fit.support == 2
    assert not fit.scale_free

    fit = metrics.fit_power_law(metrics.degree_distribution(figure1), threshold=0.99)
    assert fit.support == 3
    assert 0.0 <= fit.r_squared <= 1.0
    assert fit.scale_free == (fit.r_squared >= 0.99)


def test_figure1_report(figure1):
    report = metrics.full_report(figure1, top=3)
    assert report.length == 9
    assert report.node_count == 6
    assert report.edge_count == 7
    assert report.total_weight == 8
    assert report.max_degree == 5
    assert report.median_degree == 2.0
    assert report.avg_degree == pytest.approx(14 / 6)
    assert report.density == pytest.approx(7 / 36)
    assert report.diameter == 5
    assert report.avg_distance_undirected == pytest.approx(7 / 3)
    assert report.top_nodes['degree'][0] == ('D4:1/8', 5.0)
    assert [node for node, _ in report.top_nodes['betweenness']] == ['G4:1/8', 'R:1/8', 'D4:1/8']
    assert report.flags == []

    document = report.to_dict()
    assert document['density'] == pytest.approx(7 / 36)
    assert document['power_law']['support'] == 3
    assert document['small_world'] is None


def test_report_flags_single_node():
    report = metrics.full_report(build_labels(['A4:1/4', 'A4:1/4']))
    assert report.avg_distance_directed is None
    assert report.diameter is None
    assert 'distances_directed_undefined' in report.flags
    assert 'distances_undirected_undefined' in report.flags
    assert 'clustering_degenerate' in report.flags
    assert 'power_law_insufficient_support' in report.flags


def test_report_empty():
    with pytest.raises(DomainError):
        metrics.full_report(remove_rests(build_labels(['R:1/4'])))
