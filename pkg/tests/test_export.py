import json
import os
import pandas as pd
import networkx as nx

from melonet import export, ingest
from melonet.community import detect_communities
from melonet.metrics import full_report
from melonet.network import undirected_projection


def test_json_document(figure1, tmp_path):
    path = export.write_json(figure1, str(tmp_path / 'net' / 'figure1.json'))
    assert os.path.isfile(path)
    assert ingest.load_network(path) == figure1

    with open(path, 'r', encoding='utf-8') as file:
        document = json.load(file)
    assert document['nodes'] == list(figure1.nodes)
    assert {'source': 'C4:1/8', 'target': 'D4:1/8', 'weight': 2} in document['edges']
    assert document['sequence'][0] == 'C4:1/8'


def test_json_is_stable(figure1):
    assert export.to_json(figure1) == export.to_json(ingest.parse_network_json(export.to_json(figure1)))


def test_gexf_with_communities(two_cliques, tmp_path):
    assignment = detect_communities(two_cliques)
    path = export.write_gexf(two_cliques, str(tmp_path / 'cliques.gexf'), assignment)

    graph = nx.read_gexf(path)
    assert graph.is_directed()
    assert graph.number_of_nodes() == 8
    assert graph.number_of_edges() == 13
    assert graph.nodes['a1']['community'] == 0
    assert graph.nodes['b4']['community'] == 1
    assert graph['a4']['b1']['weight'] == 1


def test_gexf_undirected(figure1, tmp_path):
    path = export.write_gexf(undirected_projection(figure1), str(tmp_path / 'figure1.gexf'))
    graph = nx.read_gexf(path)
    assert not graph.is_directed()
    assert graph.number_of_edges() == 5


def test_dot(figure1):
    text = export.to_dot(figure1)
    lines = text.splitlines()
    assert lines[0] == 'digraph "figure1" {'
    assert lines[-1] == '}'
    assert '  "C4:1/8" [label="C4:1/8"];' in lines
    assert '  "C4:1/8" -> "D4:1/8" [weight=2, penwidth=2];' in lines
    assert len([line for line in lines if '->' in line]) == 7


def test_dot_undirected_with_communities(two_cliques):
    assignment = detect_communities(two_cliques)
    text = export.to_dot(undirected_projection(two_cliques), assignment)
    assert text.startswith('graph "two_cliques" {\n')
    assert '  "a4" -- "b1" [weight=1, penwidth=1];' in text
    assert '  "b2" [label="b2", community=1];' in text


def test_write_network(figure1, tmp_path):
    paths = export.write_network(figure1, str(tmp_path), ['json', 'gexf', 'dot'])
    assert [os.path.basename(path) for path in paths] == ['figure1.json', 'figure1.gexf', 'figure1.dot']
    assert all(os.path.isfile(path) for path in paths)


def test_tables(figure1, tmp_path):
    report = full_report(figure1)

    path = export.write_degree_distribution(report.degree_distribution, str(tmp_path / 'degree.csv'))
    table = pd.read_csv(path)
    assert list(table.columns) == ['k', 'p']
    assert table['k'].tolist() == [1, 2, 5]
    assert abs(table['p'].sum() - 1.0) < 1e-12

    path = export.write_cumulative_distribution(report.degree_distribution, str(tmp_path / 'cdf.csv'))
    assert pd.read_csv(path)['cumulative'].tolist()[-1] == 1.0

    path = export.write_betweenness(report.betweenness, str(tmp_path / 'betweenness.csv'))
    table = pd.read_csv(path)
    assert table['node'].tolist() == list(figure1.nodes)
    assert table.set_index('node')['betweenness']['G4:1/8'] == 6.0


def test_community_tables(two_cliques, tmp_path):
    assignment = detect_communities(two_cliques)

    path = export.write_assignment_csv(assignment, str(tmp_path / 'communities.csv'))
    with open(path, 'r', encoding='utf-8') as file:
        assert file.read().splitlines()[:2] == ['node,community', 'a1,0']

    path = export.write_community_sizes(assignment, str(tmp_path / 'sizes.csv'))
    with open(path, 'rb') as file:
        assert file.read() == b'community,size\n0,4\n1,4\n'


def test_report_json(figure1, tmp_path):
    path = export.write_report_json(full_report(figure1), str(tmp_path / 'figure1.report.json'))
    with open(path, 'r', encoding='utf-8') as file:
        document = json.load(file)
    assert document['density'] == 7 / 36
    assert document['betweenness']['R:1/8'] == 6.0
    assert document['degree_distribution'] == {'1': 1 / 6, '2': 4 / 6, '5': 1 / 6}
